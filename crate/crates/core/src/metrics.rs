//! Extraction quality measures.
//!
//! Two views of the same result: a character-level LCS between extracted
//! and true text, and set overlap between extracted and true text leaves.
//! Both report precision, recall, F₁ and F₀.₅.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::snapshot::{NodeId, PageSnapshot};

/// Longest input, in characters, that the LCS measure looks at.
pub const MAX_LCS_CHARS: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Lcs,
    Block,
}

impl std::fmt::Display for Measure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Measure::Lcs => "lcs",
            Measure::Block => "block",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScoreReport {
    pub measure: Measure,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub f05: f64,
    /// Set when an LCS operand was cut at [`MAX_LCS_CHARS`].
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub truncated: bool,
}

pub fn f1(precision: f64, recall: f64) -> f64 {
    let denom = precision + recall;
    if denom > 0.0 {
        2.0 * precision * recall / denom
    } else {
        0.0
    }
}

pub fn f05(precision: f64, recall: f64) -> f64 {
    let denom = 0.25 * precision + recall;
    if denom > 0.0 {
        1.25 * precision * recall / denom
    } else {
        0.0
    }
}

fn ratio(num: usize, den: usize) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

impl ScoreReport {
    pub fn from_pr(measure: Measure, precision: f64, recall: f64) -> Self {
        ScoreReport {
            measure,
            precision,
            recall,
            f1: f1(precision, recall),
            f05: f05(precision, recall),
            truncated: false,
        }
    }

    /// All-zero scores, used for failed extractions.
    pub fn zero(measure: Measure) -> Self {
        ScoreReport::from_pr(measure, 0.0, 0.0)
    }
}

/// Exact LCS length over Unicode scalar values.
///
/// Bit-parallel: one bit per character of the shorter operand, one
/// word-wide add per character of the longer one.
pub fn lcs_length(a: &[char], b: &[char]) -> usize {
    let (pattern, text) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let m = pattern.len();
    if m == 0 {
        return 0;
    }
    let words = m.div_ceil(64);
    let mut masks: HashMap<char, Vec<u64>> = HashMap::new();
    for (i, &c) in pattern.iter().enumerate() {
        masks.entry(c).or_insert_with(|| vec![0; words])[i / 64] |= 1u64 << (i % 64);
    }

    let mut v = vec![u64::MAX; words];
    for c in text {
        let Some(pm) = masks.get(c) else { continue };
        let mut carry = 0u64;
        for (vk, &mk) in v.iter_mut().zip(pm) {
            let u = *vk & mk;
            let (s1, o1) = vk.overflowing_add(u);
            let (sum, o2) = s1.overflowing_add(carry);
            carry = (o1 | o2) as u64;
            // u ⊆ v, so v - u never borrows
            *vk = sum | (*vk & !u);
        }
    }

    let full_words = m / 64;
    let mut zeros: usize = v[..full_words]
        .iter()
        .map(|w| w.count_zeros() as usize)
        .sum();
    let rest = m % 64;
    if rest > 0 {
        let mask = (1u64 << rest) - 1;
        zeros += rest - (v[full_words] & mask).count_ones() as usize;
    }
    zeros
}

/// LCS precision/recall of `extracted` against `truth`.
pub fn lcs_scores(extracted: &str, truth: &str) -> ScoreReport {
    let mut truncated = false;
    let mut chars = |s: &str| {
        let mut v: Vec<char> = s.chars().take(MAX_LCS_CHARS + 1).collect();
        if v.len() > MAX_LCS_CHARS {
            v.truncate(MAX_LCS_CHARS);
            truncated = true;
        }
        v
    };
    let (e, t) = (chars(extracted), chars(truth));
    let l = lcs_length(&e, &t);
    ScoreReport {
        truncated,
        ..ScoreReport::from_pr(Measure::Lcs, ratio(l, e.len()), ratio(l, t.len()))
    }
}

/// Text-leaf ids tagged with the snapshot they were taken from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TextLeafSet {
    pub snapshot: String,
    pub ids: BTreeSet<NodeId>,
}

impl TextLeafSet {
    pub fn new(snapshot: impl Into<String>, ids: impl IntoIterator<Item = NodeId>) -> Self {
        TextLeafSet {
            snapshot: snapshot.into(),
            ids: ids.into_iter().collect(),
        }
    }

    /// Text leaves under `node` in `s` (empty when `node` is absent).
    pub fn under(snapshot: impl Into<String>, s: &PageSnapshot, node: NodeId) -> Self {
        TextLeafSet::new(
            snapshot,
            s.subtree(node).filter(|n| n.is_text()).map(|n| n.id),
        )
    }
}

/// Node-identity overlap. Every leaf weighs the same; ids unknown to the
/// snapshot simply never match.
pub fn block_match_scores(extracted: &TextLeafSet, truth: &TextLeafSet) -> Result<ScoreReport> {
    if extracted.snapshot != truth.snapshot {
        return Err(Error::CrossSnapshotIds {
            extracted: extracted.snapshot.clone(),
            truth: truth.snapshot.clone(),
        });
    }
    let matches = extracted.ids.intersection(&truth.ids).count();
    Ok(ScoreReport::from_pr(
        Measure::Block,
        ratio(matches, extracted.ids.len()),
        ratio(matches, truth.ids.len()),
    ))
}
