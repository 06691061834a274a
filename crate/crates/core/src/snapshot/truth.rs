use serde::{Deserialize, Serialize};

use super::{NodeId, PageSnapshot};
use crate::error::{Error, Result};

/// Annotated main-content wrapper for one snapshot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GroundTruth {
    /// Identifier of the snapshot, usually its file stem.
    pub snapshot: String,
    pub truth_node_id: NodeId,
}

impl GroundTruth {
    pub fn from_json(bytes: &[u8]) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_slice(bytes).map_err(Error::MalformedJson)?;
        serde_path_to_error::deserialize(value).map_err(|e| {
            let path = e.path().to_string();
            Error::schema(path, e.into_inner().to_string())
        })
    }

    /// Checks that the truth node exists in `s` and is an element.
    pub fn validate(&self, s: &PageSnapshot) -> Result<()> {
        let node = s.get(self.truth_node_id)?;
        if !node.is_element() {
            return Err(Error::schema(
                "truthNodeId",
                "ground truth must be an element",
            ));
        }
        Ok(())
    }
}
