use std::fmt;

use serde::{Deserialize, Serialize};

use super::{subtree_text, NodeId, PageSnapshot};
use crate::error::Result;

/// Ascent rule that produced a candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CandidateRule {
    Tag,
    Attr,
    Diff,
}

impl CandidateRule {
    pub const ALL: [CandidateRule; 3] =
        [CandidateRule::Tag, CandidateRule::Attr, CandidateRule::Diff];
}

impl fmt::Display for CandidateRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CandidateRule::Tag => "tag",
            CandidateRule::Attr => "attr",
            CandidateRule::Diff => "diff",
        })
    }
}

/// `Best` candidates have a defined text-area density; `Nobest` ones are the
/// body element or shorter than half the window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CandidateClass {
    Best,
    Nobest,
}

impl fmt::Display for CandidateClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CandidateClass::Best => "best",
            CandidateClass::Nobest => "nobest",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    /// 1, 2 or 3.
    pub center: u8,
    pub rule: CandidateRule,
    pub class: CandidateClass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum FailureReason {
    EmptyDocument,
    NoTextLeaves,
    /// Every candidate was the body element, or no rule fired at all.
    NoCandidate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ExtractionResult {
    pub main_node_id: Option<NodeId>,
    pub failed: bool,
    pub provenance: Option<Provenance>,
    pub text: String,
    pub text_leaf_ids: Vec<NodeId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<FailureReason>,
}

impl ExtractionResult {
    pub fn failure(reason: FailureReason) -> Self {
        ExtractionResult {
            main_node_id: None,
            failed: true,
            provenance: None,
            text: String::new(),
            text_leaf_ids: Vec::new(),
            reason: Some(reason),
        }
    }

    /// Result rooted at `node`, with its text and text leaves taken from `s`.
    pub fn for_node(
        s: &PageSnapshot,
        node: NodeId,
        provenance: Option<Provenance>,
    ) -> Result<Self> {
        let text = subtree_text(s, node)?;
        let text_leaf_ids = s
            .subtree(node)
            .filter(|n| n.is_text())
            .map(|n| n.id)
            .collect();
        Ok(ExtractionResult {
            main_node_id: Some(node),
            failed: false,
            provenance,
            text,
            text_leaf_ids,
            reason: None,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result serialization is infallible")
    }
}
