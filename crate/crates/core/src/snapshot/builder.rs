use super::{NodeId, PageSnapshot, SnapshotNode, SNAPSHOT_VERSION};
use crate::error::Result;
use crate::geometry::{Rect, Size};

/// Incremental construction of synthetic snapshots.
///
/// Nodes may be appended in any order as long as the parent already exists;
/// [`build`](Self::build) re-sorts them into pre-order. Ids are assigned
/// sequentially starting with the body element at 0.
#[derive(Debug, Clone)]
pub struct SnapshotBuilder {
    window: Size,
    document: Size,
    nodes: Vec<SnapshotNode>,
}

impl SnapshotBuilder {
    pub fn new(window: Size, document: Size) -> Self {
        let body = SnapshotNode::element(
            NodeId(0),
            None,
            "body",
            Rect::new(0.0, 0.0, document.w, document.h),
        );
        SnapshotBuilder {
            window,
            document,
            nodes: vec![body],
        }
    }

    pub fn root(&self) -> NodeId {
        NodeId(0)
    }

    fn next_id(&self, parent: NodeId) -> NodeId {
        assert!(
            (parent.0 as usize) < self.nodes.len(),
            "parent {parent} has not been added"
        );
        NodeId(self.nodes.len() as u32)
    }

    pub fn element(&mut self, parent: NodeId, tag: &str, rect: Rect) -> NodeId {
        let id = self.next_id(parent);
        self.nodes
            .push(SnapshotNode::element(id, Some(parent), tag, rect));
        id
    }

    pub fn text(&mut self, parent: NodeId, rect: Rect, text: &str) -> NodeId {
        let id = self.next_id(parent);
        self.nodes
            .push(SnapshotNode::text_node(id, parent, rect, text));
        id
    }

    /// An `<a href>` spanning `rect` with a single text child of the same box.
    pub fn link(&mut self, parent: NodeId, rect: Rect, text: &str) -> NodeId {
        let a = self.element(parent, "a", rect);
        self.node_mut(a).is_link = true;
        self.text(a, rect, text);
        a
    }

    /// Panics if `id` was not produced by this builder.
    pub fn node_mut(&mut self, id: NodeId) -> &mut SnapshotNode {
        &mut self.nodes[id.0 as usize]
    }

    pub fn class(&mut self, id: NodeId, class: &str) -> &mut Self {
        self.node_mut(id).attr_class = class.to_owned();
        self
    }

    pub fn id_attr(&mut self, id: NodeId, value: &str) -> &mut Self {
        self.node_mut(id).attr_id = value.to_owned();
        self
    }

    /// Resizes the document and the body box together.
    pub fn set_document(&mut self, document: Size) -> &mut Self {
        self.document = document;
        self.nodes[0].rect = Rect::new(0.0, 0.0, document.w, document.h);
        self
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn build(self) -> Result<PageSnapshot> {
        let n = self.nodes.len();
        let mut children = vec![Vec::new(); n];
        for node in &self.nodes[1..] {
            let p = node.parent.expect("non-root nodes have parents").0 as usize;
            children[p].push(node.id.0 as usize);
        }
        let mut slots: Vec<Option<SnapshotNode>> = self.nodes.into_iter().map(Some).collect();
        let mut ordered = Vec::with_capacity(n);
        let mut stack = vec![0usize];
        while let Some(i) = stack.pop() {
            ordered.push(slots[i].take().expect("each node visited once"));
            stack.extend(children[i].iter().rev());
        }
        PageSnapshot::new(SNAPSHOT_VERSION, self.window, self.document, ordered)
    }
}
