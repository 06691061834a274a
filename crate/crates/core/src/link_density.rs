//! Link containers and link-area density.
//!
//! Density is measured in pixels rather than characters: an element's score
//! is the fraction of its box covered by link containers. This catches
//! image links and short CJK menu labels that character counts miss.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::snapshot::{NodeId, PageSnapshot};

fn container_flags(s: &PageSnapshot) -> Vec<bool> {
    let mut flags = vec![false; s.len()];
    for &i in s.order_indices().iter().rev() {
        let node = s.at(i);
        // the body element is never a link container
        if !node.is_element() || s.parent_idx(i).is_none() {
            continue;
        }
        flags[i] = node.has_tag("a") || matches!(s.children_idx(i), [only] if flags[*only]);
    }
    flags
}

/// Every `<a>` element, plus (recursively) every element below the body whose
/// only child is a link container.
pub fn mark_link_containers(s: &PageSnapshot) -> BTreeSet<NodeId> {
    container_flags(s)
        .iter()
        .enumerate()
        .filter(|(_, &c)| c)
        .map(|(i, _)| s.at(i).id)
        .collect()
}

/// D_l(e): area of the maximal link containers strictly below `e`, divided
/// by the area of `e`. Containers nested in a counted container add nothing.
pub fn link_area_density(
    s: &PageSnapshot,
    containers: &BTreeSet<NodeId>,
    e: NodeId,
) -> Result<f64> {
    let node = s.get(e)?;
    let area = node.rect.area();
    if area <= 0.0 {
        return Err(Error::ZeroArea(e));
    }
    let mut covered = 0.0;
    let mut stack: Vec<NodeId> = s.children(e).map(|c| c.id).collect();
    while let Some(id) = stack.pop() {
        if containers.contains(&id) {
            covered += s.get(id)?.rect.area();
        } else {
            stack.extend(s.children(id).map(|c| c.id));
        }
    }
    Ok(covered / area)
}

/// D_l for every element; zero for elements without link descendants.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct DensityMap {
    pub entries: BTreeMap<NodeId, f64>,
}

impl DensityMap {
    pub fn get(&self, id: NodeId) -> f64 {
        self.entries.get(&id).copied().unwrap_or(0.0)
    }
}

/// Link containers and densities of one (preprocessed) snapshot.
#[derive(Debug, Clone)]
pub struct LinkAnalysis {
    pub containers: BTreeSet<NodeId>,
    pub densities: DensityMap,
    is_container: Vec<bool>,
    density: Vec<f64>,
}

impl LinkAnalysis {
    /// Single bottom-up pass: A_l(e) sums, over the children of `e`, either
    /// the child's area (when it is a container) or the child's own A_l.
    pub fn new(s: &PageSnapshot) -> Self {
        let is_container = container_flags(s);
        let mut link_area = vec![0.0f64; s.len()];
        let mut density = vec![0.0f64; s.len()];
        for &i in s.order_indices().iter().rev() {
            let node = s.at(i);
            if !node.is_element() {
                continue;
            }
            link_area[i] = s
                .children_idx(i)
                .iter()
                .map(|&c| {
                    if is_container[c] {
                        s.at(c).rect.area()
                    } else {
                        link_area[c]
                    }
                })
                .sum();
            let area = node.rect.area();
            if area > 0.0 {
                density[i] = (link_area[i] / area).max(0.0);
            }
        }
        let entries = s
            .order_indices()
            .iter()
            .filter(|&&i| s.at(i).is_element())
            .map(|&i| (s.at(i).id, density[i]))
            .collect();
        let containers = is_container
            .iter()
            .enumerate()
            .filter(|(_, &c)| c)
            .map(|(i, _)| s.at(i).id)
            .collect();
        LinkAnalysis {
            containers,
            densities: DensityMap { entries },
            is_container,
            density,
        }
    }

    pub fn density(&self, id: NodeId) -> f64 {
        self.densities.get(id)
    }

    pub fn is_container(&self, id: NodeId) -> bool {
        self.containers.contains(&id)
    }

    pub(crate) fn density_at(&self, idx: usize) -> f64 {
        self.density[idx]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LinkLevel {
    High,
    Low,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LinkLabel {
    pub node_id: NodeId,
    pub label: LinkLevel,
}

/// Link-density label of every text leaf, in document order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LeafLabels {
    labels: Vec<LinkLabel>,
    by_id: BTreeMap<NodeId, LinkLevel>,
}

impl LeafLabels {
    pub fn as_slice(&self) -> &[LinkLabel] {
        &self.labels
    }

    pub fn level(&self, id: NodeId) -> Option<LinkLevel> {
        self.by_id.get(&id).copied()
    }

    pub fn is_low(&self, id: NodeId) -> bool {
        self.level(id) == Some(LinkLevel::Low)
    }

    pub fn low_leaves(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.labels
            .iter()
            .filter(|l| l.label == LinkLevel::Low)
            .map(|l| l.node_id)
    }

    pub fn count(&self, level: LinkLevel) -> usize {
        self.labels.iter().filter(|l| l.label == level).count()
    }
}

/// A text leaf is `High` when it sits inside a link container or below any
/// element whose density exceeds `beta`.
pub fn label_text_leaves(s: &PageSnapshot, links: &LinkAnalysis, beta: f64) -> LeafLabels {
    // dense[i]: some ancestor-or-self of element i is a container or exceeds beta
    let mut dense = vec![false; s.len()];
    let mut labels = Vec::new();
    for &i in s.order_indices() {
        let node = s.at(i);
        let inherited = s.parent_idx(i).is_some_and(|p| dense[p]);
        if node.is_element() {
            dense[i] = inherited || links.is_container[i] || links.density_at(i) > beta;
        } else {
            labels.push(LinkLabel {
                node_id: node.id,
                label: if inherited {
                    LinkLevel::High
                } else {
                    LinkLevel::Low
                },
            });
        }
    }
    let by_id = labels.iter().map(|l| (l.node_id, l.label)).collect();
    LeafLabels { labels, by_id }
}
