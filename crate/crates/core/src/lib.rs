//! Main-content extraction from rendered page snapshots.
//!
//! The extractor works purely on layout: every node of a [`PageSnapshot`]
//! carries its rendered box, and the pipeline never looks at words, so it
//! behaves the same for Latin, CJK and Arabic pages.
//!
//! The pipeline has three geometric steps:
//!
//! 1. **Grid**: a checkerboard over the first browsing area (the window,
//!    extended downwards by the scrolling threshold). Perimeter cells, cells
//!    below the document and cells covered by link-dense regions are masked.
//! 2. **Centering**: three centroids are derived from the remaining cells,
//!    the window center and the document center. Each centroid picks its
//!    nearest low-link-density text leaf.
//! 3. **Expanding**: from each seed leaf the tree is ascended, recording the
//!    first `<article>`, the first node whose id/class mentions
//!    "article"/"content", and the first sudden width increase. Candidates
//!    are ranked by text-area density and one node is chosen.
//!
//! ```
//! use gce_core::{run_gce, GceConfig, PageSnapshot};
//!
//! let json = br#"{
//!   "version": "1",
//!   "window": {"w": 1920, "h": 1080},
//!   "document": {"w": 1920, "h": 1080},
//!   "nodes": [
//!     {"id": 0, "kind": "element", "tag": "body", "rect": {"x": 0, "y": 0, "w": 1920, "h": 1080}},
//!     {"id": 1, "parent": 0, "kind": "element", "tag": "article",
//!      "rect": {"x": 460, "y": 100, "w": 1000, "h": 800}},
//!     {"id": 2, "parent": 1, "kind": "text", "text": "Hello world",
//!      "rect": {"x": 480, "y": 120, "w": 900, "h": 700}}
//!   ]
//! }"#;
//! let snapshot = PageSnapshot::from_json(json).unwrap();
//! let result = run_gce(&snapshot, &GceConfig::default()).unwrap();
//! assert_eq!(result.main_node_id.map(|id| id.0), Some(1));
//! ```

pub mod centering;
pub mod error;
pub mod expanding;
pub mod geometry;
pub mod grid;
pub mod link_density;
pub mod metrics;
pub mod pipeline;
pub mod snapshot;

pub use centering::{
    band_diagnostics, compute_centers, nearest_leaf, BandHit, BandMode, Centers, SeedLeaves,
};
pub use error::{Error, Result};
pub use expanding::{
    collect_candidates, rank_center, select_main_content, text_area_density, CandidateClass,
    CandidateSet, CenterChoice, ScoredCandidate, SelectionOrder, SelectionSlot,
};
pub use geometry::{Point, Rect, Size};
pub use grid::{build_fba_grid, exclude_cells, CellSizing, FbaGrid, GridConfig};
pub use link_density::{
    label_text_leaves, link_area_density, mark_link_containers, DensityMap, LeafLabels,
    LinkAnalysis, LinkLabel, LinkLevel,
};
pub use metrics::{block_match_scores, lcs_length, lcs_scores, Measure, ScoreReport, TextLeafSet};
pub use pipeline::{extract, run_gce, Extraction, GceConfig};
pub use snapshot::{
    subtree_text, CandidateRule, ExtractionResult, FailureReason, GroundTruth, NodeId, NodeKind,
    PageSnapshot, Provenance, SnapshotBuilder, SnapshotNode,
};
