//! Text formats for graphs and threshold assignments.
//!
//! Graph file: UTF-8 text, lines starting with `#` (and blank lines)
//! ignored. First data line `<n> <m>`, then exactly m lines `<u> <v>` with
//! 0 ≤ u < v < n. Threshold file: one line `<v> <t>` per vertex, every
//! vertex exactly once.

use std::fmt::Write as _;

use super::{Graph, ThresholdAssignment};
use crate::error::{Error, Result};

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(line: usize, token: &str, what: &str) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("bad {what} token `{token}`"),
    })
}

/// Parses the edge-list graph format.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing `<n> <m>` header".into(),
    })?;
    let mut it = header.split_whitespace();
    let (a, b) = (it.next(), it.next());
    if it.next().is_some() || b.is_none() {
        return Err(Error::Parse {
            line: header_line,
            msg: format!("header must be `<n> <m>`, got `{header}`"),
        });
    }
    let n = parse_usize(header_line, a.unwrap(), "vertex count")?;
    let m = parse_usize(header_line, b.unwrap(), "edge count")?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    let mut last_line = header_line;
    for (line, text) in lines {
        if edges.len() == m {
            return Err(Error::Parse {
                line,
                msg: format!("declared {m} edges, found more"),
            });
        }
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line,
                msg: format!("edge line must be `<u> <v>`, got `{text}`"),
            });
        }
        let u = parse_usize(line, tokens[0], "endpoint")?;
        let v = parse_usize(line, tokens[1], "endpoint")?;
        if u >= v {
            return Err(Error::Parse {
                line,
                msg: format!("edge must satisfy u < v, got {u} {v}"),
            });
        }
        if v >= n {
            return Err(Error::Parse {
                line,
                msg: format!("endpoint {v} out of range for {n} vertices"),
            });
        }
        if !seen.insert((u, v)) {
            return Err(Error::Parse {
                line,
                msg: format!("duplicate edge {u} {v}"),
            });
        }
        edges.push((u, v));
        last_line = line;
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: last_line,
            msg: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

/// Canonical text form: header, then edges sorted with u < v.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses a threshold file for a graph on `n` vertices.
pub fn parse_thresholds(text: &str, n: usize) -> Result<ThresholdAssignment> {
    let mut t = vec![None; n];
    for (line, text) in data_lines(text) {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line,
                msg: format!("threshold line must be `<v> <t>`, got `{text}`"),
            });
        }
        let v = parse_usize(line, tokens[0], "vertex")?;
        let tv = parse_usize(line, tokens[1], "threshold")?;
        if v >= n {
            return Err(Error::Parse {
                line,
                msg: format!("vertex {v} out of range for {n} vertices"),
            });
        }
        if tv == 0 {
            return Err(Error::Parse {
                line,
                msg: format!("threshold of vertex {v} must be at least 1"),
            });
        }
        if t[v].replace(tv).is_some() {
            return Err(Error::Parse {
                line,
                msg: format!("vertex {v} assigned twice"),
            });
        }
    }
    if let Some(v) = t.iter().position(Option::is_none) {
        return Err(Error::Parse {
            line: 0,
            msg: format!("vertex {v} has no threshold"),
        });
    }
    ThresholdAssignment::from_vec(t.into_iter().map(Option::unwrap).collect())
}

pub fn serialize_thresholds(t: &ThresholdAssignment) -> String {
    let mut out = String::new();
    for (v, tv) in t.values().iter().enumerate() {
        let _ = writeln!(out, "{v} {tv}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangle() {
        let g = parse_graph("3 3\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn comments_ignored() {
        let g = parse_graph("# comment\n2 1\n0 1\n").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
    }

    #[test]
    fn edge_count_mismatch() {
        let err = parse_graph("3 2\n0 1\n").unwrap_err();
        assert!(err.to_string().contains("declared 2 edges, found 1"), "{err}");
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("3\n").is_err());
        assert!(parse_graph("3 1\n0 x\n").is_err());
        assert!(parse_graph("3 1\n1 0\n").is_err()); // must be u < v
        assert!(parse_graph("3 1\n0 1\n1 2\n").is_err()); // too many
        assert!(parse_graph("3 2\n0 1\n0 1\n").is_err()); // duplicate
        let err = parse_graph("2 1\n0 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn round_trip() {
        let g = crate::graph::generators::gp(7, 2).unwrap();
        let text = serialize_graph(&g);
        let back = parse_graph(&text).unwrap();
        assert_eq!(g, back);
        assert_eq!(text, serialize_graph(&back));
    }

    #[test]
    fn thresholds_file() {
        let t = parse_thresholds("1 2\n0 1\n# c\n2 3\n", 3).unwrap();
        assert_eq!(t.values(), &[1, 2, 3]);
        assert!(parse_thresholds("0 1\n", 2).is_err()); // vertex 1 missing
        assert!(parse_thresholds("0 1\n0 2\n", 1).is_err()); // duplicate
        assert!(parse_thresholds("0 0\n", 1).is_err()); // zero threshold
        let t = ThresholdAssignment::from_vec(vec![2, 1]).unwrap();
        let text = serialize_thresholds(&t);
        assert_eq!(parse_thresholds(&text, 2).unwrap(), t);
    }
}
