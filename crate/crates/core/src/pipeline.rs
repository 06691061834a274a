//! End-to-end extraction.

use serde::{Deserialize, Serialize};

use crate::centering::{compute_centers, BandMode, Centers, SeedLeaves};
use crate::error::{Error, Result};
use crate::expanding::{
    collect_candidates, rank_center, select_from_choices, CenterChoice, SelectionOrder,
};
use crate::grid::{build_fba_grid, mask_cells, FbaGrid, GridConfig};
use crate::link_density::{label_text_leaves, LeafLabels, LinkAnalysis};
use crate::snapshot::{ExtractionResult, FailureReason, PageSnapshot};

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GceConfig {
    pub grid: GridConfig,
    pub band_mode: BandMode,
    pub selection_order: SelectionOrder,
}

impl GceConfig {
    pub fn validate(&self) -> Result<()> {
        self.grid.validate()?;
        if self.selection_order.0.is_empty() {
            return Err(Error::InvalidConfig("selection order is empty".into()));
        }
        Ok(())
    }
}

/// Extraction result plus the intermediate state that produced it.
///
/// Fields after `result` are filled as far as the pipeline got.
#[derive(Debug, Clone)]
pub struct Extraction {
    pub result: ExtractionResult,
    pub page: Option<PageSnapshot>,
    pub labels: Option<LeafLabels>,
    pub grid: Option<FbaGrid>,
    pub centers: Option<Centers>,
    pub seeds: Option<SeedLeaves>,
    pub choices: Vec<CenterChoice>,
}

impl Extraction {
    fn failed(reason: FailureReason) -> Self {
        Extraction {
            result: ExtractionResult::failure(reason),
            page: None,
            labels: None,
            grid: None,
            centers: None,
            seeds: None,
            choices: Vec::new(),
        }
    }
}

/// Runs every stage on a raw snapshot.
///
/// Page-level failures (nothing visible, no low-density text, no usable
/// candidate) come back as a failed result; only configuration problems are
/// errors.
pub fn extract(raw: &PageSnapshot, cfg: &GceConfig) -> Result<Extraction> {
    cfg.validate()?;
    let page = match raw.preprocess() {
        Ok(p) => p,
        Err(Error::EmptyDocument) => return Ok(Extraction::failed(FailureReason::EmptyDocument)),
        Err(e) => return Err(e),
    };
    let links = LinkAnalysis::new(&page);
    let labels = label_text_leaves(&page, &links, cfg.grid.beta);

    let mut out = Extraction::failed(FailureReason::NoTextLeaves);
    let grid = build_fba_grid(&cfg.grid, &page)?;
    let grid = mask_cells(&grid, &page, &links, &cfg.grid);
    let centers = compute_centers(&grid, &page, cfg.band_mode);
    out.grid = Some(grid);
    out.centers = Some(centers);

    let seeds = match SeedLeaves::find(&page, &labels, &centers) {
        Ok(seeds) => seeds,
        Err(Error::NoTextLeaves) => {
            out.page = Some(page);
            out.labels = Some(labels);
            return Ok(out);
        }
        Err(e) => return Err(e),
    };

    let mut choices = Vec::with_capacity(3);
    for (i, seed) in seeds.as_array().into_iter().enumerate() {
        let set = collect_candidates(&page, i as u8 + 1, seed, cfg.grid.width_ratio)?;
        choices.push(rank_center(&page, &labels, &set));
    }
    out.result = select_from_choices(&choices, &page, &cfg.selection_order);
    out.seeds = Some(seeds);
    out.choices = choices;
    out.page = Some(page);
    out.labels = Some(labels);
    Ok(out)
}

/// [`extract`] without the intermediate state.
pub fn run_gce(raw: &PageSnapshot, cfg: &GceConfig) -> Result<ExtractionResult> {
    extract(raw, cfg).map(|e| e.result)
}
