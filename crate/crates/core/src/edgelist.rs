//! Plain edge-list files as exchanged by Graph Golf tooling.
//!
//! One edge per line as `u v` (decimal, 0-indexed, `u < v`), sorted
//! ascending, with a trailing newline. Lines starting with `#` are
//! comments. A `# order: N` comment fixes the order when trailing vertices
//! are isolated; otherwise the order is one more than the largest id.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

const ORDER_TAG: &str = "order:";

/// Canonical text for `g`. The order header is only written when the edge
/// list alone would not reproduce the order.
pub fn emit_edge_list(g: &Graph) -> String {
    emit_with_comments(g, &[])
}

/// Like [`emit_edge_list`] with leading `#` comment lines.
pub fn emit_with_comments(g: &Graph, comments: &[&str]) -> String {
    let mut out = String::with_capacity(g.num_edges() * 8);
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let implied = g.edges().map(|(_, v)| v + 1).max().unwrap_or(0);
    if implied != g.order() {
        let _ = writeln!(out, "# {ORDER_TAG} {}", g.order());
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses an edge list. `explicit_order` takes precedence over an order
/// header in the text.
pub fn parse_edge_list(text: &str, explicit_order: Option<usize>) -> Result<Graph> {
    let mut header_order = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(value) = comment.trim().strip_prefix(ORDER_TAG) {
                let n = value
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| parse_error(lineno, format!("bad order header {value:?}")))?;
                header_order = Some(n);
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let mut id = || -> Result<usize> {
            let tok = tokens
                .next()
                .ok_or_else(|| parse_error(lineno, "expected two vertex ids"))?;
            tok.parse()
                .map_err(|_| parse_error(lineno, format!("{tok:?} is not a vertex id")))
        };
        let (u, v) = (id()?, id()?);
        if tokens.next().is_some() {
            return Err(parse_error(lineno, "expected exactly two vertex ids"));
        }
        if u == v {
            return Err(parse_error(lineno, format!("self-loop at vertex {u}")));
        }
        edges.push((lineno, u, v));
    }
    let order = match explicit_order.or(header_order) {
        Some(n) => {
            if let Some(&(lineno, u, v)) = edges.iter().find(|&&(_, u, v)| u.max(v) >= n) {
                return Err(parse_error(
                    lineno,
                    format!("edge ({u}, {v}) exceeds order {n}"),
                ));
            }
            n
        }
        None => edges
            .iter()
            .map(|&(_, u, v)| u.max(v) + 1)
            .max()
            .unwrap_or(0),
    };
    if order == 0 {
        return Err(parse_error(0, "no edges and no order given"));
    }
    Graph::from_edges(order, edges.into_iter().map(|(_, u, v)| (u, v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::complete;

    #[test]
    fn emit_small() {
        assert_eq!(emit_edge_list(&complete(3).unwrap()), "0 1\n0 2\n1 2\n");
        assert_eq!(emit_edge_list(&complete(2).unwrap()), "0 1\n");
    }

    #[test]
    fn parse_small() {
        let g = parse_edge_list("0 1\n1 2\n", None).unwrap();
        assert_eq!((g.order(), g.num_edges()), (3, 2));
        let g = parse_edge_list("# comment\n0 1\n", None).unwrap();
        assert_eq!((g.order(), g.num_edges()), (2, 1));
        let g = parse_edge_list("  2\t0 \n\n0   1\n1 0\n", None).unwrap();
        assert_eq!(g.num_edges(), 2);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            parse_edge_list("0 0\n", None),
            Err(Error::Parse {
                line: 1,
                msg: "self-loop at vertex 0".into()
            })
        );
        assert!(matches!(
            parse_edge_list("0 1\nx 2\n", None),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1\n1\n", None),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1\n1 5\n", Some(4)),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_edge_list("0 1 2\n", None).is_err());
        assert!(parse_edge_list("", None).is_err());
    }

    #[test]
    fn isolated_tail_round_trips() {
        let g = Graph::from_edges(5, [(0, 1)]).unwrap();
        let text = emit_edge_list(&g);
        assert_eq!(text, "# order: 5\n0 1\n");
        assert_eq!(parse_edge_list(&text, None).unwrap(), g);
        let lone = Graph::from_edges(1, []).unwrap();
        assert_eq!(parse_edge_list(&emit_edge_list(&lone), None).unwrap(), lone);
    }

    #[test]
    fn explicit_order_wins() {
        let g = parse_edge_list("# order: 3\n0 1\n", Some(6)).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn comments_are_prefixed() {
        let text = emit_with_comments(&complete(2).unwrap(), &["kkg8 4 8"]);
        assert_eq!(text, "# kkg8 4 8\n0 1\n");
    }
}
