//! Agglomeration, average path length and contraction importance.

use alloc::vec::Vec;

use crate::contraction::contract;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImcEntry {
    pub node: NodeId,
    pub imc: Rational,
    /// Order of the contracted graph `G'(node)`.
    pub contracted_order: usize,
}

/// Graph-level values plus one entry per node, sorted by importance
/// descending and node id ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub phi: Rational,
    pub avg_path_length: Rational,
    pub entries: Vec<ImcEntry>,
}

impl RankReport {
    /// Sorts `entries` into ranking order.
    pub fn from_entries(
        phi: Rational,
        avg_path_length: Rational,
        mut entries: Vec<ImcEntry>,
    ) -> Self {
        entries.sort_by(|a, b| b.imc.cmp(&a.imc).then(a.node.cmp(&b.node)));
        RankReport {
            phi,
            avg_path_length,
            entries,
        }
    }

    /// Importance of `node`, looked up by id.
    pub fn imc_of(&self, node: NodeId) -> Option<Rational> {
        self.entries.iter().find(|e| e.node == node).map(|e| e.imc)
    }
}

/// `L(G) = Σd / (n(n-1))`.
pub fn average_path_length(g: &Graph) -> Result<Rational> {
    let sum = g.distance_sum()?.total();
    let n = g.order() as i128;
    Rational::from_i128(sum as i128, n * (n - 1))
}

/// `φ(G) = (n-1) / Σd`, and 1 for the single-node graph.
pub fn phi(g: &Graph) -> Result<Rational> {
    if g.order() == 1 {
        return Ok(Rational::ONE);
    }
    let sum = g.distance_sum()?.total();
    Rational::from_i128(g.order() as i128 - 1, sum as i128)
}

/// `IMC(v) = 1 - φ(G) / φ(G'(v))`.
pub fn imc(g: &Graph, v: NodeId) -> Result<ImcEntry> {
    if v >= g.order() {
        return Err(Error::NodeOutOfRange {
            node: v,
            order: g.order(),
        });
    }
    if g.order() < 2 {
        return Err(Error::DegenerateOrder);
    }
    let phi_g = phi(g).map_err(|e| at_node(e, v))?;
    imc_with_phi(g, phi_g, v)
}

/// Same as [`imc`] with `φ(G)` already known. `g` must be connected with at
/// least two nodes.
pub fn imc_with_phi(g: &Graph, phi_g: Rational, v: NodeId) -> Result<ImcEntry> {
    let contracted = contract(g, v)?;
    let value = phi(&contracted.graph)
        .and_then(|phi_c| phi_g.checked_div(phi_c))
        .and_then(|ratio| Rational::ONE.checked_sub(ratio))
        .map_err(|e| at_node(e, v))?;
    Ok(ImcEntry {
        node: v,
        imc: value,
        contracted_order: contracted.graph.order(),
    })
}

/// Importance of every node, in ranking order.
pub fn imc_all(g: &Graph) -> Result<RankReport> {
    let (phi_g, apl) = graph_values(g)?;
    let entries = (0..g.order())
        .map(|v| imc_with_phi(g, phi_g, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(RankReport::from_entries(phi_g, apl, entries))
}

/// `(φ, L)` for a connected graph with at least two nodes.
pub fn graph_values(g: &Graph) -> Result<(Rational, Rational)> {
    if g.order() < 2 {
        return Err(Error::DegenerateOrder);
    }
    let sum = g.distance_sum()?.total() as i128;
    let n = g.order() as i128;
    Ok((
        Rational::from_i128(n - 1, sum)?,
        Rational::from_i128(sum, n * (n - 1))?,
    ))
}

fn at_node(e: Error, v: NodeId) -> Error {
    match e {
        Error::Overflow { node: None } => Error::Overflow { node: Some(v) },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(&edges, Some(n)).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(&edges, Some(n)).unwrap()
    }

    fn star(s: usize) -> Graph {
        let edges: Vec<_> = (1..=s).map(|i| (0, i)).collect();
        Graph::from_edge_list(&edges, None).unwrap()
    }

    fn comet_3_4() -> Graph {
        Graph::from_edge_list(&[(0, 1), (1, 2), (2, 3), (3, 4), (3, 5), (3, 6)], None).unwrap()
    }

    #[test]
    fn average_path_lengths() {
        assert_eq!(average_path_length(&path(4)), Ok(r(5, 3)));
        assert_eq!(average_path_length(&complete(5)), Ok(Rational::ONE));
        assert_eq!(average_path_length(&comet_3_4()), Ok(r(46, 21)));
        assert_eq!(
            average_path_length(&Graph::singleton()),
            Err(Error::DegenerateOrder)
        );
    }

    #[test]
    fn phis() {
        assert_eq!(phi(&path(4)), Ok(r(3, 20)));
        assert_eq!(phi(&Graph::singleton()), Ok(Rational::ONE));
        for s in 1..8 {
            assert_eq!(phi(&star(s)), Ok(r(1, 2 * s as i64)));
        }
        let disconnected = Graph::from_edge_list(&[(0, 1), (2, 3)], None).unwrap();
        assert_eq!(
            phi(&disconnected),
            Err(Error::Disconnected { unreachable: 2 })
        );
    }

    #[test]
    fn imc_values() {
        assert_eq!(imc(&path(4), 0).unwrap().imc, r(2, 5));
        assert_eq!(imc(&path(4), 1).unwrap().imc, r(7, 10));
        assert_eq!(imc(&path(2), 0).unwrap().imc, r(1, 2));
        let c = imc(&comet_3_4(), 3).unwrap();
        assert_eq!(c.imc, r(17, 23));
        assert_eq!(c.contracted_order, 3);
        assert_eq!(
            imc(&path(4), 4),
            Err(Error::NodeOutOfRange { node: 4, order: 4 })
        );
        assert_eq!(imc(&Graph::singleton(), 0), Err(Error::DegenerateOrder));
    }

    #[test]
    fn ranking_order() {
        let report = imc_all(&path(4)).unwrap();
        let nodes: Vec<_> = report.entries.iter().map(|e| e.node).collect();
        assert_eq!(nodes, vec![1, 2, 0, 3]);

        let report = imc_all(&comet_3_4()).unwrap();
        let got: Vec<_> = report.entries.iter().map(|e| (e.node, e.imc)).collect();
        assert_eq!(
            got,
            vec![
                (3, r(17, 23)),
                (1, r(11, 23)),
                (2, r(11, 23)),
                (0, r(31, 115)),
                (4, r(19, 115)),
                (5, r(19, 115)),
                (6, r(19, 115)),
            ]
        );
        assert_eq!(report.phi, r(3, 46));

        let report = imc_all(&complete(4)).unwrap();
        assert!(report.entries.iter().all(|e| e.imc == r(3, 4)));
        assert_eq!(
            report.entries.iter().map(|e| e.node).collect::<Vec<_>>(),
            vec![0, 1, 2, 3]
        );
    }
}
