//! Edge-list text format.
//!
//! One edge per line as two whitespace-separated decimal ids. Blank lines
//! and lines starting with `#` are skipped, except for two recognised
//! comments:
//!
//! ```text
//! # n=7                 fixes the order (allows isolated nodes)
//! # class 3 comet-center
//! ```
//!
//! Output is canonical: header, class lines by id, then edges sorted by
//! `(min, max)`.

use std::fmt::Write;

use agglo_core::{Error as GraphError, Graph, NodeClass, NodeId};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected two non-negative integer ids, found {0:?}")]
    MalformedEdge(String),
    #[error("malformed order header {0:?}")]
    MalformedHeader(String),
    #[error("order declared twice")]
    DuplicateHeader,
    #[error("malformed class comment {0:?}")]
    MalformedClass(String),
    #[error("class for node {0} given twice")]
    DuplicateClass(NodeId),
    #[error("class given for node {id}, but the order is {order}")]
    ClassOutOfRange { id: NodeId, order: usize },
    #[error("self-loop on node {0}")]
    SelfLoop(NodeId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(NodeId, NodeId),
    #[error("node id {id} is not below the declared order {order}")]
    IdOutOfRange { id: NodeId, order: usize },
    #[error("no edges and no \"# n=<order>\" header")]
    Empty,
    #[error("order must be at least 1")]
    ZeroOrder,
}

/// A parsed file: the graph plus any class labels it carried.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListFile {
    pub graph: Graph,
    /// Per-node class, `None` where the file gave no label.
    pub classes: Vec<Option<NodeClass>>,
}

impl EdgeListFile {
    pub fn class_of(&self, v: NodeId) -> Option<NodeClass> {
        self.classes.get(v).copied().flatten()
    }
}

pub fn parse(text: &str) -> Result<EdgeListFile, ParseError> {
    let mut order: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    let mut class_lines: Vec<(usize, NodeId, NodeClass)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(value) = comment.strip_prefix("n=") {
                let n: usize = value.trim().parse().map_err(|_| ParseError {
                    line,
                    kind: ParseErrorKind::MalformedHeader(raw.into()),
                })?;
                if order.is_some() {
                    return Err(ParseError {
                        line,
                        kind: ParseErrorKind::DuplicateHeader,
                    });
                }
                order = Some((n, line));
            } else if let Some(rest) = comment.strip_prefix("class") {
                if !rest.starts_with(char::is_whitespace) {
                    continue;
                }
                let bad = || ParseError {
                    line,
                    kind: ParseErrorKind::MalformedClass(raw.into()),
                };
                let mut parts = rest.split_whitespace();
                let id: NodeId = parts.next().and_then(|x| x.parse().ok()).ok_or_else(bad)?;
                let class: NodeClass = parts.next().and_then(|x| x.parse().ok()).ok_or_else(bad)?;
                if parts.next().is_some() {
                    return Err(bad());
                }
                class_lines.push((line, id, class));
            }
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        let parsed = match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => u.parse::<NodeId>().ok().zip(v.parse::<NodeId>().ok()),
            _ => None,
        };
        let edge = parsed.ok_or_else(|| ParseError {
            line,
            kind: ParseErrorKind::MalformedEdge(raw.into()),
        })?;
        edges.push(edge);
        edge_lines.push(line);
    }

    let header_line = order.map(|(_, l)| l).unwrap_or(1);
    let graph = Graph::from_edge_list(&edges, order.map(|(n, _)| n)).map_err(|e| {
        let (line, kind) = match e {
            GraphError::SelfLoop { index, node } => {
                (edge_lines[index], ParseErrorKind::SelfLoop(node))
            }
            GraphError::DuplicateEdge { index, u, v } => {
                (edge_lines[index], ParseErrorKind::DuplicateEdge(u, v))
            }
            GraphError::IdOutOfRange { index, id, order } => (
                edge_lines[index],
                ParseErrorKind::IdOutOfRange { id, order },
            ),
            GraphError::ZeroOrder => (header_line, ParseErrorKind::ZeroOrder),
            _ => (1, ParseErrorKind::Empty),
        };
        ParseError { line, kind }
    })?;

    let mut classes = vec![None; graph.order()];
    for (line, id, class) in class_lines {
        let slot = classes.get_mut(id).ok_or(ParseError {
            line,
            kind: ParseErrorKind::ClassOutOfRange {
                id,
                order: graph.order(),
            },
        })?;
        if slot.replace(class).is_some() {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::DuplicateClass(id),
            });
        }
    }
    Ok(EdgeListFile { graph, classes })
}

/// Canonical file text with the `# n=` header and any class labels.
pub fn render(graph: &Graph, classes: &[Option<NodeClass>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# n={}", graph.order());
    for (id, class) in classes.iter().enumerate() {
        if let Some(class) = class {
            let _ = writeln!(out, "# class {id} {class}");
        }
    }
    out.push_str(&graph.to_edge_list());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use agglo_core::{generate, FamilySpec};
    use proptest::prelude::*;

    fn kind(text: &str) -> (usize, ParseErrorKind) {
        let e = parse(text).unwrap_err();
        (e.line, e.kind)
    }

    #[test]
    fn parses_comments_and_blanks() {
        let f = parse("# a path\n\n0 1\n  1   2  \n# trailing\n").unwrap();
        assert_eq!(f.graph.order(), 3);
        assert_eq!(f.graph.degrees(), vec![1, 2, 1]);
        assert!(f.classes.iter().all(Option::is_none));
    }

    #[test]
    fn header_fixes_order() {
        let f = parse("# n=4\n0 1\n1 2\n").unwrap();
        assert_eq!(f.graph.order(), 4);
        assert!(!f.graph.is_connected());
        let single = parse("# n=1\n").unwrap();
        assert_eq!(single.graph.order(), 1);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(kind("0 1\n\n2 2\n"), (3, ParseErrorKind::SelfLoop(2)));
        assert_eq!(
            kind("0 1\n1 2\n# x\n1 0\n"),
            (4, ParseErrorKind::DuplicateEdge(1, 0))
        );
        assert_eq!(
            kind("# n=3\n0 1\n1 3\n"),
            (3, ParseErrorKind::IdOutOfRange { id: 3, order: 3 })
        );
        assert_eq!(
            kind("0 1\n1 x\n"),
            (2, ParseErrorKind::MalformedEdge("1 x".into()))
        );
        assert_eq!(
            kind("0 1 2\n"),
            (1, ParseErrorKind::MalformedEdge("0 1 2".into()))
        );
        assert_eq!(
            kind("0 -1\n"),
            (1, ParseErrorKind::MalformedEdge("0 -1".into()))
        );
        assert_eq!(
            kind("# n=x\n"),
            (1, ParseErrorKind::MalformedHeader("# n=x".into()))
        );
        assert_eq!(kind("# n=2\n# n=3\n"), (2, ParseErrorKind::DuplicateHeader));
        assert_eq!(kind("# n=0\n"), (1, ParseErrorKind::ZeroOrder));
        assert_eq!(kind("# nothing\n"), (1, ParseErrorKind::Empty));
        assert_eq!(
            kind("0 1\n# class 0 hub\n"),
            (2, ParseErrorKind::MalformedClass("# class 0 hub".into()))
        );
        assert_eq!(
            kind("0 1\n# class 5 path-end\n"),
            (2, ParseErrorKind::ClassOutOfRange { id: 5, order: 2 })
        );
        assert_eq!(
            kind("0 1\n# class 0 path-end\n# class 0 path-end\n"),
            (3, ParseErrorKind::DuplicateClass(0))
        );
    }

    #[test]
    fn renders_labelled_family() {
        let lg = generate(FamilySpec::Path { n: 4 }).unwrap();
        let classes: Vec<_> = lg.classes.iter().copied().map(Some).collect();
        let text = render(&lg.graph, &classes);
        assert_eq!(
            text,
            "# n=4\n# class 0 path-end\n# class 1 path-inner\n# class 2 path-inner\n# class 3 path-end\n0 1\n1 2\n2 3\n"
        );
        let back = parse(&text).unwrap();
        assert_eq!(back.graph, lg.graph);
        assert_eq!(back.classes, classes);
    }

    #[test]
    fn single_node_render() {
        assert_eq!(render(&Graph::singleton(), &[None]), "# n=1\n");
    }

    proptest! {
        #[test]
        fn render_parse_identity(n in 1usize..10, mask in any::<u64>()) {
            let mut edges = Vec::new();
            let mut bit = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask >> (bit % 64) & 1 == 1 {
                        edges.push((u, v));
                    }
                    bit += 1;
                }
            }
            let g = Graph::from_edge_list(&edges, Some(n)).unwrap();
            let text = render(&g, &vec![None; n]);
            prop_assert_eq!(parse(&text).unwrap().graph, g);
        }
    }
}
