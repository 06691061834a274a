use thiserror::Error;

use crate::snapshot::NodeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed snapshot json: {0}")]
    MalformedJson(#[source] serde_json::Error),

    /// The first field that violates the snapshot or ground-truth schema.
    #[error("schema violation at `{path}`: {message}")]
    SchemaViolation { path: String, message: String },

    #[error("node {0} references a parent that does not appear earlier")]
    DanglingParent(NodeId),

    #[error("duplicate node id {0}")]
    DuplicateId(NodeId),

    #[error("unknown node {0}")]
    UnknownNode(NodeId),

    #[error("no visible text node remains after preprocessing")]
    EmptyDocument,

    #[error("node {0} has zero area")]
    ZeroArea(NodeId),

    #[error("window {w}x{h} cannot hold a single grid cell")]
    DegenerateWindow { w: f64, h: f64 },

    #[error("every grid cell was excluded")]
    AllCellsExcluded,

    #[error("no low link density text leaf found")]
    NoTextLeaves,

    #[error("cannot compare text leaves of snapshot {extracted:?} with those of {truth:?}")]
    CrossSnapshotIds { extracted: String, truth: String },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

impl Error {
    pub(crate) fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::SchemaViolation {
            path: path.into(),
            message: message.into(),
        }
    }
}
