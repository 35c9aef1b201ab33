//! Generators for paths, comets, double comets and lollipops.
//!
//! Node ids follow the conventional labeling of each family:
//!
//! * path `P_n`: `0..n` along the path;
//! * comet `C_{s,t}`: `v_1..v_{t-1}`, then the center `c`, then the star
//!   leaves `u_1..u_s`;
//! * double comet `DC(n,a,b)`: leaves `v_1..v_a` (on `w_1`), leaves
//!   `u_1..u_b` (on `w_k`), then the spine `w_1..w_k` with `k = n - a - b`;
//! * lollipop `L_{n,d}`: path `v_1..v_d` (with `v_d` the junction), then the
//!   clique `u_1..u_{n-d}`.
//!
//! This numbering is stable; closed-form checks and figures rely on it.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    Path { n: usize },
    Comet { s: usize, t: usize },
    DoubleComet { n: usize, a: usize, b: usize },
    Lollipop { n: usize, d: usize },
}

impl FamilySpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Comet { .. } => "comet",
            FamilySpec::DoubleComet { .. } => "double-comet",
            FamilySpec::Lollipop { .. } => "lollipop",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |bound| {
            Err(Error::InvalidSpec {
                family: self.family_name(),
                bound,
            })
        };
        match *self {
            FamilySpec::Path { n } if n < 2 => fail("n >= 2"),
            FamilySpec::Comet { s, .. } if s < 1 => fail("s >= 1"),
            FamilySpec::Comet { t, .. } if t < 1 => fail("t >= 1"),
            FamilySpec::DoubleComet { a, .. } if a < 1 => fail("a >= 1"),
            FamilySpec::DoubleComet { b, .. } if b < 1 => fail("b >= 1"),
            FamilySpec::DoubleComet { n, a, b } if n < a + b + 2 => fail("n - a - b >= 2"),
            FamilySpec::Lollipop { d, .. } if d < 2 => fail("d >= 2"),
            FamilySpec::Lollipop { n, d } if n < d + 1 => fail("n - d >= 1"),
            _ => Ok(()),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path { n } => n,
            FamilySpec::Comet { s, t } => s + t,
            FamilySpec::DoubleComet { n, .. } => n,
            FamilySpec::Lollipop { n, .. } => n,
        }
    }

    /// Node classes occurring in this family, in label order.
    pub fn classes(&self) -> &'static [NodeClass] {
        use NodeClass::*;
        match self {
            FamilySpec::Path { .. } => &[PathEnd, PathInner],
            FamilySpec::Comet { .. } => &[CometPathEnd, CometPathInner, CometCenter, CometStarLeaf],
            FamilySpec::DoubleComet { .. } => &[DcLeafA, DcLeafB, DcEndA, DcEndB, DcInner],
            FamilySpec::Lollipop { .. } => &[LpPathEnd, LpPathInner, LpJunction, LpClique],
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path { n } => write!(f, "path(n={n})"),
            FamilySpec::Comet { s, t } => write!(f, "comet(s={s},t={t})"),
            FamilySpec::DoubleComet { n, a, b } => write!(f, "double-comet(n={n},a={a},b={b})"),
            FamilySpec::Lollipop { n, d } => write!(f, "lollipop(n={n},d={d})"),
        }
    }
}

/// Structural role of a node inside a generated family graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeClass {
    PathEnd,
    PathInner,
    /// `v_1`
    CometPathEnd,
    /// `v_i`, `2 <= i <= t-1`
    CometPathInner,
    /// `c`
    CometCenter,
    /// `u_j`
    CometStarLeaf,
    /// `v_i`, pendant on `w_1`
    DcLeafA,
    /// `u_j`, pendant on `w_k`
    DcLeafB,
    /// `w_1`
    DcEndA,
    /// `w_k`
    DcEndB,
    /// `w_t`, `2 <= t <= k-1`
    DcInner,
    /// `v_1`
    LpPathEnd,
    /// `v_i`, `2 <= i <= d-1`
    LpPathInner,
    /// `v_d`
    LpJunction,
    /// `u_j`
    LpClique,
}

impl NodeClass {
    pub const ALL: [NodeClass; 15] = [
        NodeClass::PathEnd,
        NodeClass::PathInner,
        NodeClass::CometPathEnd,
        NodeClass::CometPathInner,
        NodeClass::CometCenter,
        NodeClass::CometStarLeaf,
        NodeClass::DcLeafA,
        NodeClass::DcLeafB,
        NodeClass::DcEndA,
        NodeClass::DcEndB,
        NodeClass::DcInner,
        NodeClass::LpPathEnd,
        NodeClass::LpPathInner,
        NodeClass::LpJunction,
        NodeClass::LpClique,
    ];

    /// Name used in edge-list class comments and reports.
    pub fn name(self) -> &'static str {
        match self {
            NodeClass::PathEnd => "path-end",
            NodeClass::PathInner => "path-inner",
            NodeClass::CometPathEnd => "comet-path-end",
            NodeClass::CometPathInner => "comet-path-inner",
            NodeClass::CometCenter => "comet-center",
            NodeClass::CometStarLeaf => "comet-star-leaf",
            NodeClass::DcLeafA => "dc-leaf-a",
            NodeClass::DcLeafB => "dc-leaf-b",
            NodeClass::DcEndA => "dc-end-a",
            NodeClass::DcEndB => "dc-end-b",
            NodeClass::DcInner => "dc-inner",
            NodeClass::LpPathEnd => "lp-path-end",
            NodeClass::LpPathInner => "lp-path-inner",
            NodeClass::LpJunction => "lp-junction",
            NodeClass::LpClique => "lp-clique",
        }
    }
}

impl fmt::Display for NodeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownClass;

impl fmt::Display for UnknownClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown node class")
    }
}

impl core::error::Error for UnknownClass {}

impl FromStr for NodeClass {
    type Err = UnknownClass;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        NodeClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or(UnknownClass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub classes: Vec<NodeClass>,
    pub spec: FamilySpec,
}

impl LabeledGraph {
    pub fn class_of(&self, v: NodeId) -> Result<NodeClass> {
        self.classes.get(v).copied().ok_or(Error::NodeOutOfRange {
            node: v,
            order: self.classes.len(),
        })
    }

    /// Ids of all nodes carrying `class`, ascending.
    pub fn nodes_of(&self, class: NodeClass) -> Vec<NodeId> {
        (0..self.classes.len())
            .filter(|&v| self.classes[v] == class)
            .collect()
    }
}

pub fn class_of(lg: &LabeledGraph, v: NodeId) -> Result<NodeClass> {
    lg.class_of(v)
}

struct Builder {
    sets: Vec<BTreeSet<NodeId>>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder {
            sets: vec![BTreeSet::new(); n],
        }
    }

    fn edge(&mut self, u: NodeId, v: NodeId) {
        self.sets[u].insert(v);
        self.sets[v].insert(u);
    }

    fn path(&mut self, ids: impl IntoIterator<Item = NodeId>) {
        let mut prev = None;
        for v in ids {
            if let Some(u) = prev {
                self.edge(u, v);
            }
            prev = Some(v);
        }
    }

    fn finish(self) -> Graph {
        Graph::from_sets(self.sets)
    }
}

pub fn generate(spec: FamilySpec) -> Result<LabeledGraph> {
    use NodeClass::*;
    spec.validate()?;
    let order = spec.order();
    let mut b = Builder::new(order);
    let mut classes = Vec::with_capacity(order);
    match spec {
        FamilySpec::Path { n } => {
            b.path(0..n);
            classes.extend((0..n).map(|i| {
                if i == 0 || i == n - 1 {
                    PathEnd
                } else {
                    PathInner
                }
            }));
        }
        FamilySpec::Comet { s, t } => {
            let c = t - 1;
            b.path(0..t);
            for j in 0..s {
                b.edge(c, t + j);
            }
            classes.extend((0..c).map(|i| if i == 0 { CometPathEnd } else { CometPathInner }));
            classes.push(CometCenter);
            classes.extend(core::iter::repeat_n(CometStarLeaf, s));
        }
        FamilySpec::DoubleComet { n, a, b: bb } => {
            let k = n - a - bb;
            let w = |i: usize| a + bb + i;
            b.path((0..k).map(w));
            for i in 0..a {
                b.edge(i, w(0));
            }
            for j in 0..bb {
                b.edge(a + j, w(k - 1));
            }
            classes.extend(core::iter::repeat_n(DcLeafA, a));
            classes.extend(core::iter::repeat_n(DcLeafB, bb));
            classes.extend((0..k).map(|i| match i {
                0 => DcEndA,
                i if i == k - 1 => DcEndB,
                _ => DcInner,
            }));
        }
        FamilySpec::Lollipop { n, d } => {
            b.path(0..d);
            let junction = d - 1;
            for u in d..n {
                b.edge(junction, u);
                for x in u + 1..n {
                    b.edge(u, x);
                }
            }
            classes.extend((0..d).map(|i| match i {
                0 => LpPathEnd,
                i if i == junction => LpJunction,
                _ => LpPathInner,
            }));
            classes.extend(core::iter::repeat_n(LpClique, n - d));
        }
    }
    Ok(LabeledGraph {
        graph: b.finish(),
        classes,
        spec,
    })
}
