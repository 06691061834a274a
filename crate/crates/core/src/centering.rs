//! Center points and seed leaves.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Point, Rect};
use crate::grid::FbaGrid;
use crate::link_density::LeafLabels;
use crate::snapshot::{GroundTruth, NodeId, PageSnapshot};

/// How the extraction band is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BandMode {
    /// Full-width strip between the window-center and document-center heights.
    #[default]
    Centers,
    /// Zero-width segment from (0, min(h₀, h₁)) to (0, max(h₀, h₁)).
    Literal,
}

impl std::str::FromStr for BandMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "centers" => Ok(BandMode::Centers),
            "literal" => Ok(BandMode::Literal),
            other => Err(Error::InvalidConfig(format!("unknown band mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Centers {
    pub c1: Point,
    pub c2: Point,
    pub c3: Point,
    pub midpoint: Point,
    pub band: Rect,
}

impl Centers {
    pub fn points(&self) -> [Point; 3] {
        [self.c1, self.c2, self.c3]
    }
}

/// Midpoint between the window center and the document center.
pub fn midpoint(s: &PageSnapshot) -> Point {
    let (w, d) = (s.window(), s.document());
    Point::new((w.w + d.w) / 4.0, (w.h + d.h) / 4.0)
}

pub fn extraction_band(s: &PageSnapshot, mode: BandMode) -> Rect {
    let (w, d) = (s.window(), s.document());
    match mode {
        BandMode::Centers => {
            let (lo, hi) = (w.h.min(d.h) / 2.0, w.h.max(d.h) / 2.0);
            Rect::new(0.0, lo, w.w.max(d.w), hi - lo)
        }
        BandMode::Literal => {
            let (lo, hi) = (w.h.min(d.h), w.h.max(d.h));
            Rect::new(0.0, lo, 0.0, hi - lo)
        }
    }
}

/// C₁ is the centroid of the included cell centers V_a, C₂ adds the window
/// center and C₃ adds both the window and document centers. Every point
/// weighs one. With no included cell, V_a falls back to the window center.
pub fn compute_centers(grid: &FbaGrid, s: &PageSnapshot, mode: BandMode) -> Centers {
    let cw = s.window_center();
    let cd = s.document_center();
    let mut points = grid.included_centers();
    if points.is_empty() {
        points.push(cw);
    }
    let c1 = Point::centroid(&points).expect("non-empty");
    points.push(cw);
    let c2 = Point::centroid(&points).expect("non-empty");
    points.push(cd);
    let c3 = Point::centroid(&points).expect("non-empty");
    Centers {
        c1,
        c2,
        c3,
        midpoint: midpoint(s),
        band: extraction_band(s, mode),
    }
}

/// Low-density text leaf whose box is nearest to `p`; ties go to the
/// earlier leaf in document order.
pub fn nearest_leaf(s: &PageSnapshot, labels: &LeafLabels, p: Point) -> Result<NodeId> {
    let mut best: Option<(f64, NodeId)> = None;
    for leaf in s.text_leaves() {
        if !labels.is_low(leaf.id) {
            continue;
        }
        let d = leaf.rect.distance_sq(p);
        if best.is_none_or(|(bd, _)| d < bd) {
            best = Some((d, leaf.id));
        }
    }
    best.map(|(_, id)| id).ok_or(Error::NoTextLeaves)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedLeaves {
    pub e1: NodeId,
    pub e2: NodeId,
    pub e3: NodeId,
}

impl SeedLeaves {
    pub fn find(s: &PageSnapshot, labels: &LeafLabels, centers: &Centers) -> Result<Self> {
        Ok(SeedLeaves {
            e1: nearest_leaf(s, labels, centers.c1)?,
            e2: nearest_leaf(s, labels, centers.c2)?,
            e3: nearest_leaf(s, labels, centers.c3)?,
        })
    }

    pub fn as_array(&self) -> [NodeId; 3] {
        [self.e1, self.e2, self.e3]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BandHit {
    pub midpoint_hit: bool,
    pub band_overlap: bool,
}

/// Whether the midpoint falls inside the ground-truth box and whether the
/// extraction band overlaps it.
///
/// A band with positive area must overlap with positive area. A degenerate
/// band (segment or point) only has to touch a truth box of positive area.
pub fn band_diagnostics(s: &PageSnapshot, truth: &GroundTruth, mode: BandMode) -> Result<BandHit> {
    let target = s.get(truth.truth_node_id)?.rect;
    let band = extraction_band(s, mode);
    let band_overlap = if band.is_empty() {
        !target.is_empty() && target.intersection(&band).is_some()
    } else {
        band.overlap_area(&target) > 0.0
    };
    Ok(BandHit {
        midpoint_hit: target.contains(midpoint(s)),
        band_overlap,
    })
}
