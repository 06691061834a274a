use super::{NodeId, PageSnapshot};
use crate::error::Result;

/// Collapses whitespace runs to a single space and trims both ends.
pub fn normalize_block(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for word in text.split_whitespace() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(word);
    }
    out
}

/// Text of every text node under `root`, one normalized block per line.
///
/// Blocks that normalize to the empty string are dropped.
pub fn subtree_text(s: &PageSnapshot, root: NodeId) -> Result<String> {
    s.get(root)?;
    let mut out = String::new();
    for node in s.subtree(root).filter(|n| n.is_text()) {
        let block = normalize_block(node.text.as_deref().unwrap_or_default());
        if block.is_empty() {
            continue;
        }
        if !out.is_empty() {
            out.push('\n');
        }
        out.push_str(&block);
    }
    Ok(out)
}
