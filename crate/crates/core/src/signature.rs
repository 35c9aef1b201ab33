//! Isomorphism-invariant fingerprint of a connected graph.
//!
//! The signature is the sorted multiset of `(degree, sorted distance row)`
//! over all nodes. Isomorphic graphs always share a signature. The converse
//! fails in general, but the families generated in this crate are told
//! apart by it, which is all contraction checks need.

use alloc::vec::Vec;

use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature(Vec<(usize, Vec<u32>)>);

pub fn signature(g: &Graph) -> Result<Signature> {
    let mut rows = Vec::with_capacity(g.order());
    for v in 0..g.order() {
        let mut dist = g.bfs_distances(v)?.dist;
        dist.sort_unstable();
        rows.push((g.degree(v)?, dist));
    }
    rows.sort();
    Ok(Signature(rows))
}
