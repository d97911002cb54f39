//! Edge-list text format: first line `n <order>`, then one `u v` pair per
//! line, 0-indexed, whitespace-separated. `#` starts a comment; blank lines
//! are ignored.

use thiserror::Error;

use super::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected header 'n <order>'")]
    MissingHeader { line: usize },
    #[error("line {line}: malformed: {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: loop edge at vertex {vertex}")]
    LoopEdge { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: endpoint {endpoint} out of range for order {order}")]
    OutOfRange {
        line: usize,
        endpoint: usize,
        order: usize,
    },
    #[error("line {line}: order must be at least 1")]
    BadOrder { line: usize },
}

pub fn parse_edge_list(src: &str) -> Result<Graph, ParseError> {
    let mut order: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let mut parts = text.split_whitespace();
        match order {
            None => {
                if parts.next() != Some("n") {
                    return Err(ParseError::MissingHeader { line });
                }
                let n: usize = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or(ParseError::Malformed {
                        line,
                        text: text.to_string(),
                    })?;
                if parts.next().is_some() {
                    return Err(ParseError::Malformed {
                        line,
                        text: text.to_string(),
                    });
                }
                if n == 0 {
                    return Err(ParseError::BadOrder { line });
                }
                order = Some(n);
            }
            Some(n) => {
                let malformed = || ParseError::Malformed {
                    line,
                    text: text.to_string(),
                };
                let u: usize = parts.next().and_then(|t| t.parse().ok()).ok_or_else(malformed)?;
                let v: usize = parts.next().and_then(|t| t.parse().ok()).ok_or_else(malformed)?;
                if parts.next().is_some() {
                    return Err(malformed());
                }
                if u == v {
                    return Err(ParseError::LoopEdge { line, vertex: u });
                }
                let e = (u.min(v), u.max(v));
                if e.1 >= n {
                    return Err(ParseError::OutOfRange {
                        line,
                        endpoint: e.1,
                        order: n,
                    });
                }
                if !seen.insert(e) {
                    return Err(ParseError::DuplicateEdge { line, u: e.0, v: e.1 });
                }
                edges.push(e);
            }
        }
    }
    let order = order.ok_or(ParseError::MissingHeader { line: 1 })?;
    Ok(Graph::new(order, edges).expect("validated above"))
}

/// Deterministic emission: header then edges ascending, one per line.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_k2() {
        let g = parse_edge_list("n 2\n0 1\n").unwrap();
        assert_eq!(g, Graph::complete(2).unwrap());
    }

    #[test]
    fn duplicate_edge_reports_line() {
        let err = parse_edge_list("n 3\n0 1\n0 1\n").unwrap_err();
        assert_eq!(err, ParseError::DuplicateEdge { line: 3, u: 0, v: 1 });
        // reversed orientation is the same edge
        let err = parse_edge_list("n 3\n0 1\n1 0\n").unwrap_err();
        assert_eq!(err, ParseError::DuplicateEdge { line: 3, u: 0, v: 1 });
    }

    #[test]
    fn out_of_range_reported() {
        let err = parse_edge_list("n 2\n0 2\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::OutOfRange {
                line: 2,
                endpoint: 2,
                order: 2
            }
        );
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let g = parse_edge_list("# a triangle\nn 3\n\n0 1 # first\n1 2\n0 2\n").unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
    }

    #[test]
    fn loops_and_malformed_lines_rejected() {
        assert_eq!(
            parse_edge_list("n 3\n1 1\n").unwrap_err(),
            ParseError::LoopEdge { line: 2, vertex: 1 }
        );
        assert!(matches!(
            parse_edge_list("n 3\n0 x\n").unwrap_err(),
            ParseError::Malformed { line: 2, .. }
        ));
        assert!(matches!(
            parse_edge_list("3\n0 1\n").unwrap_err(),
            ParseError::MissingHeader { line: 1 }
        ));
        assert!(matches!(
            parse_edge_list("").unwrap_err(),
            ParseError::MissingHeader { .. }
        ));
    }

    #[test]
    fn round_trip() {
        for g in [
            Graph::petersen(),
            Graph::path(5).unwrap(),
            Graph::empty(3).unwrap(),
            Graph::star(4),
        ] {
            assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        }
    }
}
