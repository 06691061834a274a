use super::PageSnapshot;
use crate::error::{Error, Result};

impl PageSnapshot {
    /// Drops fixed-position boilerplate and everything that is not rendered.
    ///
    /// Removes each `position: fixed` element, each node flagged invisible and
    /// each node with a zero-area box, together with its subtree. Sticky
    /// elements are not treated as fixed. The body element always survives.
    pub fn preprocess(&self) -> Result<PageSnapshot> {
        let root = self.order_indices()[0];
        let mut removed = vec![false; self.len()];
        for &i in self.order_indices() {
            if i == root {
                continue;
            }
            let node = self.at(i);
            let parent_gone = self.parent_idx(i).is_some_and(|p| removed[p]);
            removed[i] = parent_gone
                || (node.is_element() && node.position_fixed)
                || !node.visible
                || node.rect.area() <= 0.0;
        }

        let kept: Vec<_> = self
            .nodes()
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed[*i])
            .map(|(_, n)| n.clone())
            .collect();
        if !kept.iter().any(|n| n.is_text()) {
            return Err(Error::EmptyDocument);
        }
        PageSnapshot::new(self.version(), self.window(), self.document(), kept)
    }
}
