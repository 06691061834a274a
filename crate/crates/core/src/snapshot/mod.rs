//! Rendered-page snapshot model.
//!
//! A snapshot is a flat list of nodes in pre-order, each pointing at its
//! parent by id. Every node carries its rendered box in document
//! coordinates. [`PageSnapshot`] validates the list once and keeps a few
//! index tables so later stages can walk the tree without hashing.

mod builder;
mod parse;
mod preprocess;
mod result;
mod text;
mod truth;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Point, Rect, Size};

pub use builder::SnapshotBuilder;
pub use parse::SNAPSHOT_VERSION;
pub use result::{CandidateClass, CandidateRule, ExtractionResult, FailureReason, Provenance};
pub use text::{normalize_block, subtree_text};
pub use truth::GroundTruth;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(pub u32);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Element,
    Text,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SnapshotNode {
    pub id: NodeId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parent: Option<NodeId>,
    pub kind: NodeKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<String>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub attr_id: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub attr_class: String,
    pub rect: Rect,
    #[serde(default = "default_true")]
    pub visible: bool,
    #[serde(default, rename = "fixed")]
    pub position_fixed: bool,
    #[serde(default)]
    pub is_link: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
}

fn default_true() -> bool {
    true
}

impl SnapshotNode {
    pub fn element(id: NodeId, parent: Option<NodeId>, tag: &str, rect: Rect) -> Self {
        SnapshotNode {
            id,
            parent,
            kind: NodeKind::Element,
            tag: Some(tag.to_ascii_lowercase()),
            attr_id: String::new(),
            attr_class: String::new(),
            rect,
            visible: true,
            position_fixed: false,
            is_link: false,
            text: None,
        }
    }

    pub fn text_node(id: NodeId, parent: NodeId, rect: Rect, text: &str) -> Self {
        SnapshotNode {
            id,
            parent: Some(parent),
            kind: NodeKind::Text,
            tag: None,
            attr_id: String::new(),
            attr_class: String::new(),
            rect,
            visible: true,
            position_fixed: false,
            is_link: false,
            text: Some(text.to_owned()),
        }
    }

    pub fn is_element(&self) -> bool {
        self.kind == NodeKind::Element
    }

    pub fn is_text(&self) -> bool {
        self.kind == NodeKind::Text
    }

    /// Lowercase tag name, empty for text nodes.
    pub fn tag(&self) -> &str {
        self.tag.as_deref().unwrap_or("")
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tag.as_deref() == Some(tag)
    }
}

/// A validated snapshot. Immutable once built.
#[derive(Debug, Clone)]
pub struct PageSnapshot {
    version: String,
    window: Size,
    document: Size,
    nodes: Vec<SnapshotNode>,
    index: HashMap<NodeId, usize>,
    parents: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    // node indices in document order; each subtree is a contiguous run
    order: Vec<usize>,
    rank: Vec<usize>,
    subtree_len: Vec<usize>,
}

impl PartialEq for PageSnapshot {
    fn eq(&self, other: &Self) -> bool {
        self.version == other.version
            && self.window == other.window
            && self.document == other.document
            && self.nodes == other.nodes
    }
}

impl PageSnapshot {
    /// Validates `nodes` and builds the tree indexes.
    pub fn new(
        version: impl Into<String>,
        window: Size,
        document: Size,
        nodes: Vec<SnapshotNode>,
    ) -> Result<Self> {
        parse::validate(version.into(), window, document, nodes)
    }

    pub fn from_json(bytes: &[u8]) -> Result<Self> {
        parse::parse_snapshot(bytes)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("snapshot serialization is infallible")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("snapshot serialization is infallible")
    }

    pub fn version(&self) -> &str {
        &self.version
    }

    /// Browser window size (w₀, h₀).
    pub fn window(&self) -> Size {
        self.window
    }

    /// Rendered document size (w₁, h₁).
    pub fn document(&self) -> Size {
        self.document
    }

    pub fn window_center(&self) -> Point {
        self.window.center()
    }

    pub fn document_center(&self) -> Point {
        self.document.center()
    }

    /// Nodes in serialization order.
    pub fn nodes(&self) -> &[SnapshotNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> &SnapshotNode {
        &self.nodes[self.order[0]]
    }

    pub fn node(&self, id: NodeId) -> Option<&SnapshotNode> {
        self.index.get(&id).map(|&i| &self.nodes[i])
    }

    pub fn get(&self, id: NodeId) -> Result<&SnapshotNode> {
        self.node(id).ok_or(Error::UnknownNode(id))
    }

    pub fn contains(&self, id: NodeId) -> bool {
        self.index.contains_key(&id)
    }

    pub fn parent(&self, id: NodeId) -> Option<&SnapshotNode> {
        let i = *self.index.get(&id)?;
        self.parents[i].map(|p| &self.nodes[p])
    }

    pub fn children(&self, id: NodeId) -> impl Iterator<Item = &SnapshotNode> + '_ {
        let kids: &[usize] = self.index.get(&id).map_or(&[], |&i| &self.children[i]);
        kids.iter().map(move |&c| &self.nodes[c])
    }

    /// Strict ancestors, nearest first.
    pub fn ancestors(&self, id: NodeId) -> impl Iterator<Item = &SnapshotNode> + '_ {
        let mut cur = self.index.get(&id).and_then(|&i| self.parents[i]);
        std::iter::from_fn(move || {
            let i = cur?;
            cur = self.parents[i];
            Some(&self.nodes[i])
        })
    }

    /// `id` and all its descendants in document order.
    pub fn subtree(&self, id: NodeId) -> impl Iterator<Item = &SnapshotNode> + '_ {
        let run: &[usize] = self
            .index
            .get(&id)
            .map_or(&[], |&i| self.subtree_indices(i));
        run.iter().map(move |&i| &self.nodes[i])
    }

    /// All nodes in document (pre-)order.
    pub fn in_document_order(&self) -> impl Iterator<Item = &SnapshotNode> + '_ {
        self.order.iter().map(move |&i| &self.nodes[i])
    }

    /// Text nodes in document order.
    pub fn text_leaves(&self) -> impl Iterator<Item = &SnapshotNode> + '_ {
        self.in_document_order().filter(|n| n.is_text())
    }

    /// Position of `id` in document order.
    pub fn doc_rank(&self, id: NodeId) -> Option<usize> {
        self.index.get(&id).map(|&i| self.rank[i])
    }

    /// True when `ancestor` is a strict ancestor of `node`.
    pub fn is_ancestor(&self, ancestor: NodeId, node: NodeId) -> bool {
        match (self.index.get(&ancestor), self.index.get(&node)) {
            (Some(&a), Some(&n)) => {
                let (ra, rn) = (self.rank[a], self.rank[n]);
                rn > ra && rn < ra + self.subtree_len[a]
            }
            _ => false,
        }
    }

    /// Copy with every coordinate, the window and the document scaled by `k`.
    pub fn scaled(&self, k: f64) -> PageSnapshot {
        let mut out = self.clone();
        out.window = Size::new(self.window.w * k, self.window.h * k);
        out.document = Size::new(self.document.w * k, self.document.h * k);
        for n in &mut out.nodes {
            n.rect = n.rect.scaled(k);
        }
        out
    }

    pub(crate) fn at(&self, idx: usize) -> &SnapshotNode {
        &self.nodes[idx]
    }

    pub(crate) fn parent_idx(&self, idx: usize) -> Option<usize> {
        self.parents[idx]
    }

    pub(crate) fn children_idx(&self, idx: usize) -> &[usize] {
        &self.children[idx]
    }

    pub(crate) fn subtree_indices(&self, idx: usize) -> &[usize] {
        let start = self.rank[idx];
        &self.order[start..start + self.subtree_len[idx]]
    }

    pub(crate) fn order_indices(&self) -> &[usize] {
        &self.order
    }
}
