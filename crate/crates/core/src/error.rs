use core::fmt;

use crate::graph::NodeId;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Edge `index` of the input list joins a node to itself.
    SelfLoop {
        index: usize,
        node: NodeId,
    },
    /// Edge `index` repeats an earlier undirected edge.
    DuplicateEdge {
        index: usize,
        u: NodeId,
        v: NodeId,
    },
    /// Edge `index` mentions an id not below the declared order.
    IdOutOfRange {
        index: usize,
        id: NodeId,
        order: usize,
    },
    /// No edges and no explicit order.
    EmptyGraph,
    /// The declared order was zero.
    ZeroOrder,
    NodeOutOfRange {
        node: NodeId,
        order: usize,
    },
    Disconnected {
        unreachable: NodeId,
    },
    /// The operation needs at least two nodes.
    DegenerateOrder,
    /// Checked integer arithmetic overflowed. `node` names the node being
    /// evaluated when the overflow happened inside an importance computation.
    Overflow {
        node: Option<NodeId>,
    },
    DivisionByZero,
    /// Family parameters violate the family definition.
    InvalidSpec {
        family: &'static str,
        bound: &'static str,
    },
    /// Parameters are valid for the family but outside the hypothesis of
    /// the closed-form statement being evaluated.
    OutOfHypothesis {
        family: &'static str,
        bound: &'static str,
    },
    /// The node class does not belong to the family being evaluated.
    ClassMismatch {
        family: &'static str,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SelfLoop { index, node } => {
                write!(f, "edge {index}: self-loop on node {node}")
            }
            Error::DuplicateEdge { index, u, v } => {
                write!(f, "edge {index}: duplicate edge {u}-{v}")
            }
            Error::IdOutOfRange { index, id, order } => {
                write!(
                    f,
                    "edge {index}: node id {id} is not below the order {order}"
                )
            }
            Error::EmptyGraph => f.write_str("graph has no edges and no explicit order"),
            Error::ZeroOrder => f.write_str("graph order must be at least 1"),
            Error::NodeOutOfRange { node, order } => {
                write!(f, "node {node} out of range for order {order}")
            }
            Error::Disconnected { unreachable } => {
                write!(
                    f,
                    "graph is disconnected: node {unreachable} is unreachable from node 0"
                )
            }
            Error::DegenerateOrder => f.write_str("operation requires at least two nodes"),
            Error::Overflow { node: Some(v) } => {
                write!(f, "integer overflow while evaluating node {v}")
            }
            Error::Overflow { node: None } => f.write_str("integer overflow"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::InvalidSpec { family, bound } => {
                write!(f, "invalid {family} parameters: requires {bound}")
            }
            Error::OutOfHypothesis { family, bound } => {
                write!(f, "{family} closed form only holds for {bound}")
            }
            Error::ClassMismatch { family } => {
                write!(f, "node class does not belong to the {family} family")
            }
        }
    }
}

impl core::error::Error for Error {}
