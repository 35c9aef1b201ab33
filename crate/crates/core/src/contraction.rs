//! Node contraction.
//!
//! Contracting `v` replaces `S = {v} ∪ N(v)` by a single new node `v'`.
//! Edges among the survivors `V \ S` are kept, every edge from a survivor
//! into `S` is redirected to `v'` (parallel copies collapse), and edges
//! inside `S` disappear. The result has `n - deg(v)` nodes.
//!
//! Survivors are renumbered in ascending old-id order from 0 and `v'` takes
//! the largest new id.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionResult {
    pub graph: Graph,
    /// New id of the merged node `v'`; always `graph.order() - 1`.
    pub merged_into: NodeId,
    /// `old_to_new[x]` is the new id of old node `x`. Nodes absorbed into
    /// `v'` map to `merged_into`.
    pub old_to_new: Vec<NodeId>,
}

impl ContractionResult {
    /// New id of a node that survived contraction, `None` if it was absorbed.
    pub fn survivor(&self, old: NodeId) -> Option<NodeId> {
        self.old_to_new
            .get(old)
            .copied()
            .filter(|&new| new != self.merged_into)
    }
}

pub fn contract(g: &Graph, v: NodeId) -> Result<ContractionResult> {
    let n = g.order();
    let neighbors = g.neighbors(v)?;
    if n < 2 {
        return Err(Error::DegenerateOrder);
    }

    let mut absorbed = vec![false; n];
    absorbed[v] = true;
    for &u in neighbors {
        absorbed[u] = true;
    }

    let survivors = n - neighbors.len() - 1;
    let merged = survivors;
    let mut old_to_new = vec![merged; n];
    let mut next = 0;
    for (x, slot) in old_to_new.iter_mut().enumerate() {
        if !absorbed[x] {
            *slot = next;
            next += 1;
        }
    }

    let mut sets = vec![BTreeSet::new(); survivors + 1];
    for (x, y) in g.edges() {
        let (a, b) = (old_to_new[x], old_to_new[y]);
        if a != b {
            sets[a].insert(b);
            sets[b].insert(a);
        }
    }

    Ok(ContractionResult {
        graph: Graph::from_sets(sets),
        merged_into: merged,
        old_to_new,
    })
}
