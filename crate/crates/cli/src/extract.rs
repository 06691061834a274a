use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use gce_core::{extract, CandidateClass, Extraction, GceConfig};
use serde_json::json;

pub struct Options<'a> {
    pub snapshot: &'a Path,
    pub out: Option<&'a Path>,
    pub explain: bool,
    pub dump_grid: Option<&'a Path>,
}

/// Returns whether extraction succeeded.
pub fn run(opts: &Options, cfg: &GceConfig) -> Result<bool> {
    let snapshot = crate::corpus::read_snapshot(opts.snapshot)?;
    let ex = extract(&snapshot, cfg)
        .with_context(|| format!("extracting {}", opts.snapshot.display()))?;

    if opts.explain {
        explain(&ex, &mut std::io::stderr().lock())?;
    }
    if let Some(path) = opts.dump_grid {
        let dump = json!({
            "grid": ex.grid,
            "mask": ex.grid.as_ref().map(|g| g.mask_string().lines().map(str::to_owned).collect::<Vec<_>>()),
            "centers": ex.centers,
            "seeds": ex.seeds,
        });
        let text = serde_json::to_string_pretty(&dump)? + "\n";
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }

    let text = ex.result.to_json() + "\n";
    match opts.out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(!ex.result.failed)
}

fn explain(ex: &Extraction, w: &mut impl Write) -> Result<()> {
    let chosen = ex.result.main_node_id;
    if let (Some(grid), Some(c)) = (&ex.grid, &ex.centers) {
        writeln!(
            w,
            "grid {}x{} cells of {:.1}x{:.1}, {} included",
            grid.n_rows,
            grid.cols,
            grid.cell_w,
            grid.cell_h,
            grid.included_count()
        )?;
        for (k, p) in c.points().iter().enumerate() {
            writeln!(w, "C{} = ({:.1}, {:.1})", k + 1, p.x, p.y)?;
        }
    }
    if let Some(reason) = ex.result.reason {
        writeln!(w, "failed: {reason:?}")?;
    }
    writeln!(
        w,
        "{:<6} {:<6} {:<6} {:>8} {:<10} {:>10} {:<6}",
        "center", "seed", "rule", "node", "tag", "d_t", "class"
    )?;
    let page = ex.page.as_ref();
    for choice in ex.choices.iter().rev() {
        let seed = ex
            .seeds
            .map(|s| s.as_array()[choice.center_index as usize - 1]);
        for c in &choice.scored {
            let tag = page
                .and_then(|p| p.node(c.node_id))
                .map_or("?", |n| n.tag());
            let d_t = c.d_t.map_or("-".to_string(), |d| format!("{d:.4}"));
            let picked = match c.class {
                CandidateClass::Best => choice.best.map(|b| b.node_id) == Some(c.node_id),
                CandidateClass::Nobest => choice.nobest.map(|b| b.node_id) == Some(c.node_id),
            };
            writeln!(
                w,
                "{:<6} {:<6} {:<6} {:>8} {:<10} {:>10} {:<6}{}{}",
                choice.center_index,
                seed.map_or("-".to_string(), |s| s.to_string()),
                c.rule,
                c.node_id,
                tag,
                d_t,
                c.class,
                if picked { " *" } else { "" },
                if Some(c.node_id) == chosen {
                    " <= result"
                } else {
                    ""
                },
            )?;
        }
    }
    Ok(())
}
