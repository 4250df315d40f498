//! Plain-text edge lists.
//!
//! ```text
//! n 4          # optional header, first non-comment line
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! Vertex tokens are nonnegative integers or bare-word labels. If any token
//! is not an integer, every token is treated as a label and indices are
//! assigned in order of first appearance.

use std::collections::HashMap;
use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut pairs: Vec<(usize, &str, &str)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(parse_err(line_no, "expected two tokens per line"));
        }
        if tokens[0] == "n" && declared.is_none() && pairs.is_empty() {
            let count = tokens[1]
                .parse()
                .map_err(|_| parse_err(line_no, "vertex count must be a nonnegative integer"))?;
            declared = Some(count);
            continue;
        }
        pairs.push((line_no, tokens[0], tokens[1]));
    }

    let numeric = pairs
        .iter()
        .all(|(_, a, b)| a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok());

    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::with_capacity(pairs.len());
    if numeric {
        for &(line_no, a, b) in &pairs {
            let (u, v) = (a.parse::<usize>().unwrap(), b.parse::<usize>().unwrap());
            if u == v {
                return Err(parse_err(line_no, &format!("self-loop at vertex {u}")));
            }
            edges.push((u, v));
        }
    } else {
        let mut index: HashMap<&str, usize> = HashMap::new();
        for &(line_no, a, b) in &pairs {
            if a == b {
                return Err(parse_err(line_no, &format!("self-loop at vertex {a}")));
            }
            let mut ends = [0usize; 2];
            for (slot, t) in ends.iter_mut().zip([a, b]) {
                *slot = *index.entry(t).or_insert_with(|| {
                    labels.push(t.to_string());
                    labels.len() - 1
                });
            }
            edges.push((ends[0], ends[1]));
        }
    }

    let used = if numeric {
        edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0)
    } else {
        labels.len()
    };
    let n = match declared {
        Some(n) if n < used => {
            return Err(parse_err(1, &format!("header declares {n} vertices but {used} are used")));
        }
        Some(n) => n,
        None => used,
    };
    if n == 0 {
        return Err(parse_err(1, "graph has no vertices"));
    }
    let g = Graph::from_edge_list(n, &edges).map_err(|e| parse_err(0, &e.to_string()))?;
    if numeric {
        Ok(g)
    } else {
        labels.extend((labels.len()..n).map(|i| i.to_string()));
        Ok(g.with_labels(labels))
    }
}

/// Serialize with an `n` header followed by one `u v` line per edge.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn parse_err(line: usize, message: &str) -> Error {
    Error::Parse {
        line,
        message: message.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    #[test]
    fn triangle_with_header() {
        assert_eq!(parse_edge_list("n 3\n0 1\n1 2\n0 2").unwrap(), complete(3).unwrap());
    }

    #[test]
    fn comments_ignored() {
        let g = parse_edge_list("# a triangle\n0 1 # first\n\n1 2\n# more\n0 2\n").unwrap();
        assert_eq!(g, complete(3).unwrap());
    }

    #[test]
    fn self_loop_rejected() {
        assert!(matches!(
            parse_edge_list("n 2\n0 1\n1 1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn header_allows_isolated_vertices() {
        let g = parse_edge_list("n 4\n0 1\n").unwrap();
        assert_eq!((g.n(), g.m()), (4, 1));
        assert!(parse_edge_list("n 1\n0 1\n").is_err());
    }

    #[test]
    fn labels_indexed_by_first_appearance() {
        let g = parse_edge_list("b a\na c\nc b\n").unwrap();
        assert_eq!(g.labels().unwrap(), &["b", "a", "c"]);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && g.has_edge(0, 2));
    }

    #[test]
    fn malformed_line() {
        assert!(matches!(
            parse_edge_list("0 1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn writer_round_trips() {
        let g = Graph::from_edge_list(5, &[(0, 4), (1, 2), (3, 2)]).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}
