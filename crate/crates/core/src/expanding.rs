//! Tree ascent from the seed leaves and final candidate selection.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::link_density::LeafLabels;
use crate::snapshot::{ExtractionResult, FailureReason, NodeId, PageSnapshot, Provenance};

pub use crate::snapshot::{CandidateClass, CandidateRule};

/// First ancestors of one seed leaf that matched each ascent rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CandidateSet {
    pub center_index: u8,
    pub seed: NodeId,
    pub m_tag: Option<NodeId>,
    pub m_attr: Option<NodeId>,
    pub m_diff: Option<NodeId>,
}

impl CandidateSet {
    pub fn get(&self, rule: CandidateRule) -> Option<NodeId> {
        match rule {
            CandidateRule::Tag => self.m_tag,
            CandidateRule::Attr => self.m_attr,
            CandidateRule::Diff => self.m_diff,
        }
    }

    /// Present slots in rule priority order (tag, attr, diff).
    pub fn slots(&self) -> impl Iterator<Item = (CandidateRule, NodeId)> + '_ {
        CandidateRule::ALL
            .into_iter()
            .filter_map(|rule| self.get(rule).map(|id| (rule, id)))
    }

    pub fn is_empty(&self) -> bool {
        self.slots().next().is_none()
    }
}

fn mentions_content(value: &str) -> bool {
    let v = value.to_lowercase();
    v.contains("article") || v.contains("content")
}

/// Walks from `leaf` up to the body element. At each step, with `N` the
/// current node and `P` its parent, the first `P` that is an `<article>`,
/// the first `P` whose id or class contains "article" or "content", and the
/// first `P` wider than `width(N) · r` are recorded. Each slot is written at
/// most once and the walk always continues to the body.
pub fn collect_candidates(
    s: &PageSnapshot,
    center_index: u8,
    leaf: NodeId,
    width_ratio: f64,
) -> Result<CandidateSet> {
    let mut set = CandidateSet {
        center_index,
        seed: leaf,
        m_tag: None,
        m_attr: None,
        m_diff: None,
    };
    let mut n = s.get(leaf)?;
    while !n.has_tag("body") {
        let Some(p) = s.parent(n.id) else { break };
        if set.m_tag.is_none() && p.has_tag("article") {
            set.m_tag = Some(p.id);
        }
        if set.m_attr.is_none() && (mentions_content(&p.attr_id) || mentions_content(&p.attr_class))
        {
            set.m_attr = Some(p.id);
        }
        if set.m_diff.is_none() && p.rect.w > n.rect.w * width_ratio {
            set.m_diff = Some(p.id);
        }
        n = p;
    }
    Ok(set)
}

/// D_t(e): summed box area of the low-link-density text leaves under `e`
/// over the area of `e`. `None` for the body element and for elements
/// shorter than half the window height.
pub fn text_area_density(s: &PageSnapshot, labels: &LeafLabels, e: NodeId) -> Result<Option<f64>> {
    let node = s.get(e)?;
    if node.has_tag("body") || node.rect.h < s.window().h / 2.0 {
        return Ok(None);
    }
    let area = node.rect.area();
    if area <= 0.0 {
        return Err(Error::ZeroArea(e));
    }
    let text_area: f64 = s
        .subtree(e)
        .filter(|n| n.is_text() && labels.is_low(n.id))
        .map(|n| n.rect.area())
        .sum();
    Ok(Some(text_area / area))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ScoredCandidate {
    pub node_id: NodeId,
    pub rule: CandidateRule,
    pub d_t: Option<f64>,
    pub class: CandidateClass,
}

fn score(
    s: &PageSnapshot,
    labels: &LeafLabels,
    rule: CandidateRule,
    id: NodeId,
) -> ScoredCandidate {
    // zero-area boxes only survive in unpreprocessed input; they cannot be best
    let d_t = text_area_density(s, labels, id).ok().flatten();
    ScoredCandidate {
        node_id: id,
        rule,
        d_t,
        class: if d_t.is_some() {
            CandidateClass::Best
        } else {
            CandidateClass::Nobest
        },
    }
}

/// Outcome of ranking one center's candidates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CenterChoice {
    pub center_index: u8,
    pub scored: Vec<ScoredCandidate>,
    pub best: Option<ScoredCandidate>,
    pub nobest: Option<ScoredCandidate>,
}

/// Best candidate: highest D_t, then smaller box, then earlier in document
/// order. Without any best candidate, the nobest fallback prefers non-body
/// nodes in rule order tag, attr, diff.
pub fn rank_center(s: &PageSnapshot, labels: &LeafLabels, set: &CandidateSet) -> CenterChoice {
    let scored: Vec<ScoredCandidate> = set
        .slots()
        .map(|(rule, id)| score(s, labels, rule, id))
        .collect();
    let area = |c: &ScoredCandidate| s.node(c.node_id).map_or(0.0, |n| n.rect.area());
    let rank = |c: &ScoredCandidate| s.doc_rank(c.node_id).unwrap_or(usize::MAX);

    let mut best: Option<ScoredCandidate> = None;
    for c in scored.iter().filter(|c| c.d_t.is_some()) {
        let better = match best {
            None => true,
            Some(b) => {
                let ord = c
                    .d_t
                    .partial_cmp(&b.d_t)
                    .unwrap_or(Ordering::Equal)
                    .then_with(|| area(&b).total_cmp(&area(c)))
                    .then_with(|| rank(&b).cmp(&rank(c)));
                ord == Ordering::Greater
            }
        };
        if better {
            best = Some(*c);
        }
    }

    let nobest = if best.is_some() {
        None
    } else {
        let body = s.root().id;
        scored
            .iter()
            .find(|c| c.node_id != body)
            .or_else(|| scored.first())
            .copied()
    };

    CenterChoice {
        center_index: set.center_index,
        scored,
        best,
        nobest,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SelectionSlot {
    pub center: u8,
    pub class: CandidateClass,
}

impl fmt::Display for SelectionSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.center, self.class)
    }
}

impl FromStr for SelectionSlot {
    type Err = Error;

    fn from_str(v: &str) -> Result<Self> {
        let bad =
            || Error::InvalidConfig(format!("bad selection slot {v:?}, expected e.g. \"3best\""));
        let (center, class) = v.split_at_checked(1).ok_or_else(bad)?;
        let center: u8 = center.parse().map_err(|_| bad())?;
        if !(1..=3).contains(&center) {
            return Err(bad());
        }
        let class = match class {
            "best" => CandidateClass::Best,
            "nobest" => CandidateClass::Nobest,
            _ => return Err(bad()),
        };
        Ok(SelectionSlot { center, class })
    }
}

impl Serialize for SelectionSlot {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SelectionSlot {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let v = String::deserialize(deserializer)?;
        v.parse().map_err(serde::de::Error::custom)
    }
}

/// Priority in which per-center candidates are taken.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SelectionOrder(pub Vec<SelectionSlot>);

impl Default for SelectionOrder {
    fn default() -> Self {
        use CandidateClass::{Best, Nobest};
        SelectionOrder(
            [
                (3, Best),
                (2, Best),
                (1, Best),
                (3, Nobest),
                (2, Nobest),
                (1, Nobest),
            ]
            .into_iter()
            .map(|(center, class)| SelectionSlot { center, class })
            .collect(),
        )
    }
}

impl FromStr for SelectionOrder {
    type Err = Error;

    fn from_str(v: &str) -> Result<Self> {
        let slots = v
            .split(',')
            .map(|p| p.trim().parse())
            .collect::<Result<Vec<_>>>()?;
        Ok(SelectionOrder(slots))
    }
}

/// Picks the first candidate in `order` that exists and is not the body
/// element. Fails when every candidate is the body or no rule fired.
pub fn select_main_content(
    sets: &[CandidateSet],
    s: &PageSnapshot,
    labels: &LeafLabels,
    order: &SelectionOrder,
) -> ExtractionResult {
    let choices: Vec<CenterChoice> = sets.iter().map(|set| rank_center(s, labels, set)).collect();
    select_from_choices(&choices, s, order)
}

pub(crate) fn select_from_choices(
    choices: &[CenterChoice],
    s: &PageSnapshot,
    order: &SelectionOrder,
) -> ExtractionResult {
    let body = s.root().id;
    for slot in &order.0 {
        let Some(choice) = choices.iter().find(|c| c.center_index == slot.center) else {
            continue;
        };
        let pick = match slot.class {
            CandidateClass::Best => choice.best,
            CandidateClass::Nobest => choice.nobest,
        };
        let Some(pick) = pick.filter(|p| p.node_id != body) else {
            continue;
        };
        let provenance = Provenance {
            center: slot.center,
            rule: pick.rule,
            class: pick.class,
        };
        if let Ok(result) = ExtractionResult::for_node(s, pick.node_id, Some(provenance)) {
            return result;
        }
    }
    ExtractionResult::failure(FailureReason::NoCandidate)
}
