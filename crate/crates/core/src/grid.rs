//! The FBA grid: a checkerboard over the first browsing area.
//!
//! The first browsing area is the window, extended downwards to at most
//! `alpha` window heights (never past the document bottom). Cells are sized
//! by dividing the window by the configured rows and columns; the grid then
//! grows by whole rows until it covers the area.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{union_area_within, Point, Rect, Size};
use crate::link_density::LinkAnalysis;
use crate::snapshot::PageSnapshot;

/// How the configured grid adapts to a snapshot whose window differs from
/// [`GridConfig::window`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CellSizing {
    /// Always `base_rows × cols` cells over the snapshot window.
    #[default]
    Proportional,
    /// Keep the cell pixel size of the reference window and adjust the
    /// number of rows and columns instead.
    FixedPixels,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GridConfig {
    pub base_rows: usize,
    pub cols: usize,
    /// Scrolling threshold α.
    pub alpha: f64,
    /// Link-density threshold β.
    pub beta: f64,
    /// Fraction of a cell that dense-link regions must cover to exclude it.
    pub gamma: f64,
    /// Width-increase ratio r used while expanding.
    pub width_ratio: f64,
    /// Reference window the row/column counts were tuned for.
    pub window: Size,
    pub cell_sizing: CellSizing,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            base_rows: 7,
            cols: 8,
            alpha: 2.0,
            beta: 0.5,
            gamma: 0.5,
            width_ratio: 1.7,
            window: Size::new(1920.0, 1080.0),
            cell_sizing: CellSizing::Proportional,
        }
    }
}

impl GridConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.base_rows < 3 || self.cols < 3 {
            return bad(format!(
                "grid must be at least 3x3, got {}x{}",
                self.base_rows, self.cols
            ));
        }
        if !(self.alpha >= 1.0 && self.alpha.is_finite()) {
            return bad(format!("alpha must be >= 1, got {}", self.alpha));
        }
        if !(self.beta > 0.0 && self.beta.is_finite()) {
            return bad(format!("beta must be positive, got {}", self.beta));
        }
        if !(self.gamma > 0.0 && self.gamma <= 1.0) {
            return bad(format!("gamma must be in (0, 1], got {}", self.gamma));
        }
        if !(self.width_ratio > 1.0 && self.width_ratio.is_finite()) {
            return bad(format!("width_ratio must be > 1, got {}", self.width_ratio));
        }
        if !(self.window.w > 0.0 && self.window.h > 0.0) {
            return bad("reference window must be positive".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FbaGrid {
    pub cell_w: f64,
    pub cell_h: f64,
    pub base_rows: usize,
    pub n_rows: usize,
    pub cols: usize,
    /// Row-major, `n_rows × cols`.
    pub excluded: Vec<bool>,
}

impl FbaGrid {
    pub fn cell_rect(&self, row: usize, col: usize) -> Rect {
        Rect::new(
            col as f64 * self.cell_w,
            row as f64 * self.cell_h,
            self.cell_w,
            self.cell_h,
        )
    }

    pub fn is_excluded(&self, row: usize, col: usize) -> bool {
        self.excluded[row * self.cols + col]
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n_rows).flat_map(move |r| (0..self.cols).map(move |c| (r, c)))
    }

    /// Centers of the cells that survived exclusion (V_a).
    pub fn included_centers(&self) -> Vec<Point> {
        self.cells()
            .filter(|&(r, c)| !self.is_excluded(r, c))
            .map(|(r, c)| self.cell_rect(r, c).center())
            .collect()
    }

    pub fn included_count(&self) -> usize {
        self.excluded.iter().filter(|e| !**e).count()
    }

    /// Height covered by the grid.
    pub fn height(&self) -> f64 {
        self.n_rows as f64 * self.cell_h
    }

    /// `#` for excluded cells, `.` for included ones, one line per row.
    pub fn mask_string(&self) -> String {
        let mut out = String::with_capacity(self.n_rows * (self.cols + 1));
        for r in 0..self.n_rows {
            for c in 0..self.cols {
                out.push(if self.is_excluded(r, c) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

/// ceil(min(α·h₀, h₁) / h_c) with h_c = h₀ / base_rows, tolerant of the
/// rounding error in the division.
pub fn row_count(base_rows: usize, alpha: f64, window_h: f64, document_h: f64) -> usize {
    if window_h >= document_h {
        return base_rows;
    }
    let cell_h = window_h / base_rows as f64;
    let q = (alpha * window_h).min(document_h) / cell_h;
    let nearest = q.round();
    let n = if (q - nearest).abs() <= 1e-9 * q.max(1.0) {
        nearest
    } else {
        q.ceil()
    };
    (n as usize).max(base_rows)
}

/// Lays out the grid over the first browsing area. No cell is excluded yet.
pub fn build_fba_grid(cfg: &GridConfig, s: &PageSnapshot) -> Result<FbaGrid> {
    cfg.validate()?;
    let window = s.window();
    let degenerate = || Error::DegenerateWindow {
        w: window.w,
        h: window.h,
    };
    let (base_rows, cols) = match cfg.cell_sizing {
        CellSizing::Proportional => (cfg.base_rows, cfg.cols),
        CellSizing::FixedPixels => {
            let ref_w = cfg.window.w / cfg.cols as f64;
            let ref_h = cfg.window.h / cfg.base_rows as f64;
            if window.w < ref_w || window.h < ref_h {
                return Err(degenerate());
            }
            (
                ((window.h / ref_h).round() as usize).max(3),
                ((window.w / ref_w).round() as usize).max(3),
            )
        }
    };
    let cell_w = window.w / cols as f64;
    let cell_h = window.h / base_rows as f64;
    if !(cell_w > 0.0 && cell_h > 0.0 && cell_w.is_finite() && cell_h.is_finite()) {
        return Err(degenerate());
    }
    let n_rows = row_count(base_rows, cfg.alpha, window.h, s.document().h);
    Ok(FbaGrid {
        cell_w,
        cell_h,
        base_rows,
        n_rows,
        cols,
        excluded: vec![false; n_rows * cols],
    })
}

/// Applies the exclusion rules without failing when nothing is left.
///
/// Excluded: perimeter cells, cells starting at or below the document
/// bottom, and cells whose area is covered at least `gamma` by the union of
/// elements with link density above `beta`.
pub fn mask_cells(
    grid: &FbaGrid,
    s: &PageSnapshot,
    links: &LinkAnalysis,
    cfg: &GridConfig,
) -> FbaGrid {
    let mut out = grid.clone();
    let doc_bottom = s.document().h;
    let dense: Vec<Rect> = s
        .nodes()
        .iter()
        .filter(|n| n.is_element() && links.density(n.id) > cfg.beta)
        .map(|n| n.rect)
        .collect();

    for (r, c) in grid.cells() {
        let edge = r == 0 || c == 0 || r + 1 == grid.n_rows || c + 1 == grid.cols;
        let cell = grid.cell_rect(r, c);
        let below = cell.y >= doc_bottom;
        let covered = || union_area_within(&cell, &dense) / cell.area() >= cfg.gamma;
        out.excluded[r * grid.cols + c] = edge || below || covered();
    }
    out
}

pub fn exclude_cells(
    grid: &FbaGrid,
    s: &PageSnapshot,
    links: &LinkAnalysis,
    cfg: &GridConfig,
) -> Result<FbaGrid> {
    let out = mask_cells(grid, s, links, cfg);
    if out.included_count() == 0 {
        return Err(Error::AllCellsExcluded);
    }
    Ok(out)
}
