//! Simple undirected graphs over dense ids `0..n`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};

pub type NodeId = usize;

/// Simple undirected graph with sorted adjacency lists.
///
/// Invariants: `n >= 1`, no self-loops, no parallel edges, and
/// `u ∈ adj(v) ⇔ v ∈ adj(u)`. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
}

/// Hop distances from one source; `dist[source] == 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: NodeId,
    pub dist: Vec<u32>,
}

/// Sum of `d(u, v)` over ordered pairs `u != v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DistanceSum(pub u64);

impl DistanceSum {
    pub fn total(self) -> u64 {
        self.0
    }
}

impl Graph {
    /// Builds a graph from undirected edges.
    ///
    /// With `order = None` the order is `1 + max id`. Self-loops, repeated
    /// edges (in either orientation) and ids `>= order` are rejected with
    /// the index of the offending edge.
    pub fn from_edge_list(edges: &[(NodeId, NodeId)], order: Option<usize>) -> Result<Self> {
        let n = match order {
            Some(0) => return Err(Error::ZeroOrder),
            Some(n) => n,
            None => edges
                .iter()
                .map(|&(u, v)| u.max(v) + 1)
                .max()
                .ok_or(Error::EmptyGraph)?,
        };
        let mut sets: Vec<BTreeSet<NodeId>> = vec![BTreeSet::new(); n];
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(Error::SelfLoop { index, node: u });
            }
            for id in [u, v] {
                if id >= n {
                    return Err(Error::IdOutOfRange {
                        index,
                        id,
                        order: n,
                    });
                }
            }
            if !sets[u].insert(v) {
                return Err(Error::DuplicateEdge { index, u, v });
            }
            sets[v].insert(u);
        }
        Ok(Graph {
            adjacency: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    /// Builds a graph from adjacency sets that are already symmetric and
    /// loop-free. Used by generators and contraction, which construct valid
    /// adjacency directly.
    pub(crate) fn from_sets(sets: Vec<BTreeSet<NodeId>>) -> Self {
        debug_assert!(!sets.is_empty());
        let g = Graph {
            adjacency: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        };
        debug_assert!(g.check_invariants());
        g
    }

    /// The single-node graph.
    pub fn singleton() -> Self {
        Graph {
            adjacency: vec![Vec::new()],
        }
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: NodeId) -> Result<&[NodeId]> {
        self.adjacency
            .get(v)
            .map(Vec::as_slice)
            .ok_or(Error::NodeOutOfRange {
                node: v,
                order: self.order(),
            })
    }

    pub fn degree(&self, v: NodeId) -> Result<usize> {
        self.neighbors(v).map(<[NodeId]>::len)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.adjacency
            .get(u)
            .is_some_and(|adj| adj.binary_search(&v).is_ok())
    }

    /// Edges as `(min, max)` pairs in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, adj)| adj.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    fn reach(&self, source: NodeId) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap_or_default();
            for &y in &self.adjacency[x] {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// First node not reachable from node 0, if any.
    pub fn first_unreachable(&self) -> Option<NodeId> {
        self.reach(0).iter().position(Option::is_none)
    }

    pub fn is_connected(&self) -> bool {
        self.first_unreachable().is_none()
    }

    pub fn ensure_connected(&self) -> Result<()> {
        match self.first_unreachable() {
            Some(unreachable) => Err(Error::Disconnected { unreachable }),
            None => Ok(()),
        }
    }

    /// Exact hop distances from `source`.
    pub fn bfs_distances(&self, source: NodeId) -> Result<DistanceRow> {
        if source >= self.order() {
            return Err(Error::NodeOutOfRange {
                node: source,
                order: self.order(),
            });
        }
        let reach = self.reach(source);
        let mut dist = Vec::with_capacity(reach.len());
        for (v, d) in reach.into_iter().enumerate() {
            dist.push(d.ok_or(Error::Disconnected { unreachable: v })?);
        }
        Ok(DistanceRow { source, dist })
    }

    /// Σ d(u, v) over ordered pairs. Requires a connected graph with at
    /// least two nodes.
    pub fn distance_sum(&self) -> Result<DistanceSum> {
        if self.order() < 2 {
            return Err(Error::DegenerateOrder);
        }
        self.ensure_connected()?;
        let mut total: u64 = 0;
        for s in 0..self.order() {
            let row = self.bfs_distances(s)?;
            for d in row.dist {
                total = total
                    .checked_add(d as u64)
                    .ok_or(Error::Overflow { node: None })?;
            }
        }
        Ok(DistanceSum(total))
    }

    /// Canonical text form: one `min max` pair per line, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub(crate) fn check_invariants(&self) -> bool {
        let n = self.order();
        n >= 1
            && self.adjacency.iter().enumerate().all(|(u, adj)| {
                adj.windows(2).all(|w| w[0] < w[1])
                    && adj.iter().all(|&v| v < n && v != u && self.has_edge(v, u))
            })
    }
}
