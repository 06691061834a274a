use anyhow::Result;
use gce_core::{band_diagnostics, BandMode};
use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::{self, Entry};
use crate::eval::PageError;

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PageHit {
    pub page: String,
    pub midpoint_hit: bool,
    pub band_overlap: bool,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Summary {
    pub pages: usize,
    pub midpoint_hits: usize,
    pub band_overlaps: usize,
    pub midpoint_hit_rate: f64,
    pub band_overlap_rate: f64,
    pub per_page: Vec<PageHit>,
    pub missing_truth: Vec<String>,
    pub errors: Vec<PageError>,
}

impl Summary {
    pub fn is_clean(&self) -> bool {
        self.missing_truth.is_empty() && self.errors.is_empty()
    }

    pub fn text(&self) -> String {
        let pct = |k: usize| {
            if self.pages == 0 {
                0.0
            } else {
                100.0 * k as f64 / self.pages as f64
            }
        };
        format!(
            "pages: {}\nmidpoint hit: {}/{} ({:.1}%)\nband overlap: {}/{} ({:.1}%)\n",
            self.pages,
            self.midpoint_hits,
            self.pages,
            pct(self.midpoint_hits),
            self.band_overlaps,
            self.pages,
            pct(self.band_overlaps),
        )
    }
}

pub fn run(entries: &[Entry], mode: BandMode, jobs: usize) -> Result<Summary> {
    let pool = corpus::thread_pool(jobs)?;
    let outcomes: Vec<Result<PageHit>> = pool.install(|| {
        entries
            .par_iter()
            .filter(|e| e.truth.is_some())
            .map(|e| {
                let page = e.load()?;
                let hit = band_diagnostics(&page.snapshot, &page.truth, mode)?;
                Ok(PageHit {
                    page: page.name,
                    midpoint_hit: hit.midpoint_hit,
                    band_overlap: hit.band_overlap,
                })
            })
            .collect()
    });
    let mut per_page = Vec::new();
    let mut errors = Vec::new();
    for (entry, outcome) in entries.iter().filter(|e| e.truth.is_some()).zip(outcomes) {
        match outcome {
            Ok(hit) => per_page.push(hit),
            Err(e) => errors.push(PageError {
                page: entry.name.clone(),
                error: format!("{e:#}"),
            }),
        }
    }
    let pages = per_page.len();
    let midpoint_hits = per_page.iter().filter(|h| h.midpoint_hit).count();
    let band_overlaps = per_page.iter().filter(|h| h.band_overlap).count();
    let rate = |k: usize| {
        if pages == 0 {
            0.0
        } else {
            k as f64 / pages as f64
        }
    };
    Ok(Summary {
        pages,
        midpoint_hits,
        band_overlaps,
        midpoint_hit_rate: rate(midpoint_hits),
        band_overlap_rate: rate(band_overlaps),
        per_page,
        missing_truth: entries
            .iter()
            .filter(|e| e.truth.is_none())
            .map(|e| e.name.clone())
            .collect(),
        errors,
    })
}
