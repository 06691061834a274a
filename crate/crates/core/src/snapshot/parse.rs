use std::collections::HashMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{NodeKind, PageSnapshot, SnapshotNode};
use crate::error::{Error, Result};
use crate::geometry::Size;

/// Format version written by this crate. Readers accept any `1` or `1.x`.
pub const SNAPSHOT_VERSION: &str = "1";

#[derive(Deserialize)]
struct SnapshotDoc {
    version: String,
    window: Size,
    document: Size,
    nodes: Vec<SnapshotNode>,
}

#[derive(Serialize)]
struct SnapshotDocRef<'a> {
    version: &'a str,
    window: Size,
    document: Size,
    nodes: &'a [SnapshotNode],
}

impl Serialize for PageSnapshot {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SnapshotDocRef {
            version: &self.version,
            window: self.window,
            document: self.document,
            nodes: &self.nodes,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PageSnapshot {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = SnapshotDoc::deserialize(deserializer)?;
        validate(doc.version, doc.window, doc.document, doc.nodes).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn parse_snapshot(bytes: &[u8]) -> Result<PageSnapshot> {
    let value: serde_json::Value = serde_json::from_slice(bytes).map_err(Error::MalformedJson)?;
    let doc: SnapshotDoc = serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        Error::schema(path, e.into_inner().to_string())
    })?;
    validate(doc.version, doc.window, doc.document, doc.nodes)
}

fn check_size(path: &str, size: Size) -> Result<()> {
    if !(size.w.is_finite() && size.w > 0.0) {
        return Err(Error::schema(format!("{path}.w"), "must be positive"));
    }
    if !(size.h.is_finite() && size.h > 0.0) {
        return Err(Error::schema(format!("{path}.h"), "must be positive"));
    }
    Ok(())
}

pub(crate) fn validate(
    version: String,
    window: Size,
    document: Size,
    mut nodes: Vec<SnapshotNode>,
) -> Result<PageSnapshot> {
    if version != "1" && !version.starts_with("1.") {
        return Err(Error::schema(
            "version",
            format!("unsupported version {version:?}"),
        ));
    }
    check_size("window", window)?;
    check_size("document", document)?;
    if nodes.is_empty() {
        return Err(Error::schema(
            "nodes",
            "at least the body element is required",
        ));
    }

    let (dw, dh) = (document.w, document.h);
    let mut index = HashMap::with_capacity(nodes.len());
    let mut parents = Vec::with_capacity(nodes.len());
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];

    for (i, node) in nodes.iter_mut().enumerate() {
        let at = |field: &str| format!("nodes[{i}].{field}");

        if index.insert(node.id, i).is_some() {
            return Err(Error::DuplicateId(node.id));
        }

        match node.kind {
            NodeKind::Element => {
                match node.tag.as_mut() {
                    Some(tag) if !tag.is_empty() => tag.make_ascii_lowercase(),
                    _ => return Err(Error::schema(at("tag"), "elements need a tag")),
                }
                if node.text.is_some() {
                    return Err(Error::schema(at("text"), "elements carry no text"));
                }
            }
            NodeKind::Text => {
                if node.tag.is_some() {
                    return Err(Error::schema(at("tag"), "text nodes carry no tag"));
                }
                if node.text.is_none() {
                    return Err(Error::schema(at("text"), "text nodes need text"));
                }
            }
        }

        let r = node.rect;
        for (field, v) in [("x", r.x), ("y", r.y), ("w", r.w), ("h", r.h)] {
            if !v.is_finite() {
                return Err(Error::schema(
                    at(&format!("rect.{field}")),
                    "must be finite",
                ));
            }
        }
        if r.w < 0.0 {
            return Err(Error::schema(at("rect.w"), "must be non-negative"));
        }
        if r.h < 0.0 {
            return Err(Error::schema(at("rect.h"), "must be non-negative"));
        }
        if r.x < -dw || r.right() > 2.0 * dw {
            return Err(Error::schema(at("rect.x"), "box lies outside [-w1, 2*w1]"));
        }
        if r.y < -dh || r.bottom() > 2.0 * dh {
            return Err(Error::schema(at("rect.y"), "box lies outside [-h1, 2*h1]"));
        }

        match node.parent {
            None if i == 0 => {
                if !node.has_tag("body") {
                    return Err(Error::schema(at("tag"), "root must be the body element"));
                }
                parents.push(None);
            }
            None => return Err(Error::schema(at("parent"), "only the root may omit parent")),
            Some(pid) => {
                // the node itself is already indexed, so a self-reference is dangling too
                let p = match index.get(&pid) {
                    Some(&p) if p < i => p,
                    _ => return Err(Error::DanglingParent(node.id)),
                };
                parents.push(Some(p));
                children[p].push(i);
            }
        }
    }

    for (i, node) in nodes.iter().enumerate() {
        if node.is_text() && !children[i].is_empty() {
            let child = children[i][0];
            return Err(Error::schema(
                format!("nodes[{child}].parent"),
                "text nodes cannot have children",
            ));
        }
    }

    let n = nodes.len();
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        order.push(i);
        stack.extend(children[i].iter().rev());
    }
    debug_assert_eq!(order.len(), n);

    let mut rank = vec![0; n];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    let mut subtree_len = vec![1usize; n];
    for &i in order.iter().rev() {
        if let Some(p) = parents[i] {
            subtree_len[p] += subtree_len[i];
        }
    }

    Ok(PageSnapshot {
        version,
        window,
        document,
        nodes,
        index,
        parents,
        children,
        order,
        rank,
        subtree_len,
    })
}

#[cfg(test)]
pub(crate) use tests::arb as arb_snapshot;
