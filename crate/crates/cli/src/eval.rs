use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use gce_core::{
    block_match_scores, lcs_scores, run_gce, subtree_text, Error as CoreError, GceConfig, Measure,
    NodeId, PageSnapshot, ScoreReport, TextLeafSet,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{self, Entry, Page};

/// Where the extracted content being scored comes from.
#[derive(Debug, Clone)]
pub enum Source {
    Gce(GceConfig),
    /// The whole body of every page.
    Body,
    /// Output of another extractor: `<page>.json` with text leaf ids and/or
    /// `<page>.txt` with the extracted text.
    External(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Row {
    pub page: String,
    pub measure: Measure,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub f05: f64,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub truncated: bool,
}

impl Row {
    fn new(page: &str, s: ScoreReport) -> Self {
        Row {
            page: page.to_owned(),
            measure: s.measure,
            precision: s.precision,
            recall: s.recall,
            f1: s.f1,
            f05: s.f05,
            truncated: s.truncated,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PageError {
    pub page: String,
    pub error: String,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub pages: usize,
    pub rows: Vec<Row>,
    pub means: Vec<Row>,
    /// Pages where the extractor produced nothing; scored as zero.
    pub failed: Vec<String>,
    pub missing_truth: Vec<String>,
    pub errors: Vec<PageError>,
}

impl Report {
    pub fn is_clean(&self) -> bool {
        self.missing_truth.is_empty() && self.errors.is_empty()
    }
}

struct Extracted {
    text: String,
    ids: Vec<NodeId>,
    failed: bool,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ExternalIds {
    List(Vec<NodeId>),
    Result {
        #[serde(rename = "textLeafIds", default)]
        text_leaf_ids: Vec<NodeId>,
        #[serde(default)]
        text: Option<String>,
    },
}

fn external(dir: &Path, name: &str) -> Result<Extracted> {
    let json_path = dir.join(format!("{name}.json"));
    let txt_path = dir.join(format!("{name}.txt"));
    let (mut ids, mut text) = (Vec::new(), None);
    if json_path.is_file() {
        let bytes = std::fs::read(&json_path)
            .with_context(|| format!("reading {}", json_path.display()))?;
        match serde_json::from_slice(&bytes)
            .with_context(|| format!("parsing {}", json_path.display()))?
        {
            ExternalIds::List(v) => ids = v,
            ExternalIds::Result {
                text_leaf_ids,
                text: t,
            } => {
                ids = text_leaf_ids;
                text = t;
            }
        }
    }
    if txt_path.is_file() {
        text = Some(
            std::fs::read_to_string(&txt_path)
                .with_context(|| format!("reading {}", txt_path.display()))?,
        );
    }
    let text = text.map(|t| {
        t.lines()
            .map(gce_core::snapshot::normalize_block)
            .filter(|b| !b.is_empty())
            .collect::<Vec<_>>()
            .join("\n")
    });
    let failed = ids.is_empty() && text.as_deref().unwrap_or("").is_empty();
    Ok(Extracted {
        text: text.unwrap_or_default(),
        ids,
        failed,
    })
}

fn preprocessed(s: &PageSnapshot) -> Result<Option<PageSnapshot>> {
    match s.preprocess() {
        Ok(p) => Ok(Some(p)),
        Err(CoreError::EmptyDocument) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn score_page(page: &Page, source: &Source) -> Result<(Vec<Row>, bool)> {
    let clean = preprocessed(&page.snapshot)?;
    let truth_id = page.truth.truth_node_id;
    let (truth_text, truth_ids) = match &clean {
        Some(p) if p.contains(truth_id) => (
            subtree_text(p, truth_id)?,
            TextLeafSet::under(&page.truth.snapshot, p, truth_id),
        ),
        _ => (
            String::new(),
            TextLeafSet::new(&page.truth.snapshot, Vec::new()),
        ),
    };
    let got = match source {
        Source::Gce(cfg) => {
            let r = run_gce(&page.snapshot, cfg)?;
            Extracted {
                text: r.text,
                ids: r.text_leaf_ids,
                failed: r.failed,
            }
        }
        Source::Body => match &clean {
            Some(p) => Extracted {
                text: subtree_text(p, p.root().id)?,
                ids: p.text_leaves().map(|n| n.id).collect(),
                failed: false,
            },
            None => Extracted {
                text: String::new(),
                ids: Vec::new(),
                failed: true,
            },
        },
        Source::External(dir) => external(dir, &page.name)?,
    };
    let (lcs, block) = if got.failed {
        (
            ScoreReport::zero(Measure::Lcs),
            ScoreReport::zero(Measure::Block),
        )
    } else {
        (
            lcs_scores(&got.text, &truth_text),
            block_match_scores(&TextLeafSet::new(&page.name, got.ids), &truth_ids)?,
        )
    };
    Ok((
        vec![Row::new(&page.name, lcs), Row::new(&page.name, block)],
        got.failed,
    ))
}

fn mean_rows(rows: &[Row]) -> Vec<Row> {
    [Measure::Lcs, Measure::Block]
        .into_iter()
        .filter_map(|m| {
            let of: Vec<&Row> = rows.iter().filter(|r| r.measure == m).collect();
            if of.is_empty() {
                return None;
            }
            let n = of.len() as f64;
            let avg = |f: fn(&Row) -> f64| of.iter().map(|r| f(r)).sum::<f64>() / n;
            Some(Row {
                page: "mean".into(),
                measure: m,
                precision: avg(|r| r.precision),
                recall: avg(|r| r.recall),
                f1: avg(|r| r.f1),
                f05: avg(|r| r.f05),
                truncated: of.iter().any(|r| r.truncated),
            })
        })
        .collect()
}

pub fn evaluate(entries: &[Entry], source: &Source, jobs: usize) -> Result<Report> {
    let pool = corpus::thread_pool(jobs)?;
    let outcomes: Vec<Result<(Vec<Row>, bool)>> = pool.install(|| {
        entries
            .par_iter()
            .filter(|e| e.truth.is_some())
            .map(|e| e.load().and_then(|page| score_page(&page, source)))
            .collect()
    });

    let mut report = Report {
        pages: 0,
        rows: Vec::new(),
        means: Vec::new(),
        failed: Vec::new(),
        missing_truth: entries
            .iter()
            .filter(|e| e.truth.is_none())
            .map(|e| e.name.clone())
            .collect(),
        errors: Vec::new(),
    };
    for (entry, outcome) in entries.iter().filter(|e| e.truth.is_some()).zip(outcomes) {
        match outcome {
            Ok((rows, failed)) => {
                report.pages += 1;
                report.rows.extend(rows);
                if failed {
                    report.failed.push(entry.name.clone());
                }
            }
            Err(e) => report.errors.push(PageError {
                page: entry.name.clone(),
                error: format!("{e:#}"),
            }),
        }
    }
    report.means = mean_rows(&report.rows);
    Ok(report)
}

#[derive(Serialize)]
struct CsvRow<'a> {
    page: &'a str,
    measure: Measure,
    #[serde(rename = "P")]
    precision: f64,
    #[serde(rename = "R")]
    recall: f64,
    #[serde(rename = "F1")]
    f1: f64,
    #[serde(rename = "F05")]
    f05: f64,
}

pub fn to_csv(report: &Report) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in report.rows.iter().chain(&report.means) {
        w.serialize(CsvRow {
            page: &r.page,
            measure: r.measure,
            precision: r.precision,
            recall: r.recall,
            f1: r.f1,
            f05: r.f05,
        })?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn write(report: &Report, out: Option<&Path>) -> Result<()> {
    let json = serde_json::to_string_pretty(report)? + "\n";
    match out {
        Some(dir) => {
            std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            std::fs::write(dir.join("report.json"), json)?;
            std::fs::write(dir.join("report.csv"), to_csv(report)?)?;
        }
        None => print!("{json}"),
    }
    Ok(())
}
