//! Line-oriented graph and chain text formats.
//!
//! Edge lists describe undirected multigraphs:
//!
//! ```text
//! # comment lines are ignored, as are blank lines
//! vertices N
//! absorb i [j ...]
//! i j [m]
//! ```
//!
//! Ids are 1-based. Edge lines default to multiplicity 1. The writer emits
//! edges sorted by (min id, max id) and omits the multiplicity when it is 1,
//! so output is byte-stable for a given graph.
//!
//! Raw transition matrices use a `matrix N` header followed by N rows of N
//! probabilities (integers or `p/q` fractions). This is the entry point for
//! chains that are not the walk of any undirected graph; `solve`
//! distinguishes the two formats by their first directive.

use std::fmt::Write as _;

use num::BigInt;

use crate::chain::TransitionMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::rational::Rational;

fn parse_id(token: &str, line: usize) -> Result<VertexId> {
    let raw: usize = token.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a vertex id, got {token:?}"),
    })?;
    VertexId::from_one_based(raw).ok_or(Error::Parse {
        line,
        msg: "vertex ids are 1-based".into(),
    })
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut vertex_count: Option<usize> = None;
    let mut absorbing: Option<Vec<VertexId>> = None;
    let mut edges: Vec<(VertexId, VertexId, u64)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if vertex_count.is_none() {
            match tokens.as_slice() {
                ["vertices", n] => {
                    let n: usize = n.parse().map_err(|_| Error::Parse {
                        line: line_no,
                        msg: format!("expected a vertex count, got {:?}", tokens[1]),
                    })?;
                    vertex_count = Some(n);
                    continue;
                }
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "expected `vertices N` as the first directive".into(),
                    })
                }
            }
        }
        if absorbing.is_none() {
            match tokens.as_slice() {
                ["absorb", ids @ ..] if !ids.is_empty() => {
                    let parsed: Result<Vec<VertexId>> =
                        ids.iter().map(|t| parse_id(t, line_no)).collect();
                    absorbing = Some(parsed?);
                    continue;
                }
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "expected `absorb i [j ...]` after the vertices line".into(),
                    })
                }
            }
        }
        match tokens.as_slice() {
            [u, v] => edges.push((parse_id(u, line_no)?, parse_id(v, line_no)?, 1)),
            [u, v, m] => {
                let m: u64 = m.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("expected a multiplicity, got {m:?}"),
                })?;
                edges.push((parse_id(u, line_no)?, parse_id(v, line_no)?, m));
            }
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "expected an edge line `i j [m]`".into(),
                })
            }
        }
    }

    let vertex_count = vertex_count.ok_or(Error::Parse {
        line: text.lines().count() + 1,
        msg: "missing `vertices N` line".into(),
    })?;
    let absorbing = absorbing.ok_or(Error::Parse {
        line: text.lines().count() + 1,
        msg: "missing `absorb` line".into(),
    })?;
    Graph::build(vertex_count, &edges, &absorbing)
}

fn parse_rational(token: &str, line: usize) -> Result<Rational> {
    let bad = || Error::Parse {
        line,
        msg: format!("expected an integer or p/q fraction, got {token:?}"),
    };
    if let Some((p, q)) = token.split_once('/') {
        let p: BigInt = p.parse().map_err(|_| bad())?;
        let q: BigInt = q.parse().map_err(|_| bad())?;
        if q == BigInt::from(0) {
            return Err(bad());
        }
        Ok(Rational::new(p, q))
    } else {
        let p: BigInt = token.parse().map_err(|_| bad())?;
        Ok(Rational::from_integer(p))
    }
}

/// Parses a raw transition matrix (`matrix N` header, then N stochastic
/// rows of N entries).
pub fn parse_matrix(text: &str) -> Result<TransitionMatrix> {
    let mut order: Option<usize> = None;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match order {
            None => match tokens.as_slice() {
                ["matrix", n] => {
                    order = Some(n.parse().map_err(|_| Error::Parse {
                        line: line_no,
                        msg: format!("expected a matrix order, got {:?}", tokens[1]),
                    })?);
                }
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "expected `matrix N` as the first directive".into(),
                    })
                }
            },
            Some(n) => {
                if tokens.len() != n {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected {n} entries, got {}", tokens.len()),
                    });
                }
                let row: Result<Vec<Rational>> =
                    tokens.iter().map(|t| parse_rational(t, line_no)).collect();
                rows.push(row?);
            }
        }
    }
    let order = order.ok_or(Error::Parse {
        line: text.lines().count() + 1,
        msg: "missing `matrix N` line".into(),
    })?;
    if rows.len() != order {
        return Err(Error::Parse {
            line: text.lines().count() + 1,
            msg: format!("expected {order} rows, got {}", rows.len()),
        });
    }
    TransitionMatrix::from_rows(rows)
}

/// True when the first directive of the file is `matrix`, meaning
/// [`parse_matrix`] should handle it rather than [`parse_graph`].
pub fn looks_like_matrix(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.split_whitespace().next() == Some("matrix"))
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "vertices {}", g.vertex_count());
    let ids: Vec<String> = g.absorbing().iter().map(|a| a.one_based().to_string()).collect();
    let _ = writeln!(out, "absorb {}", ids.join(" "));
    for (u, v, m) in g.edges() {
        if m == 1 {
            let _ = writeln!(out, "{} {}", u.one_based(), v.one_based());
        } else {
            let _ = writeln!(out, "{} {} {}", u.one_based(), v.one_based(), m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vid;

    #[test]
    fn round_trip() {
        let g = Graph::build(
            4,
            &[(vid(1), vid(2), 1), (vid(2), vid(3), 3), (vid(3), vid(4), 1)],
            &[vid(4), vid(1)],
        )
        .unwrap();
        let text = format_graph(&g);
        assert_eq!(text, "vertices 4\nabsorb 1 4\n1 2\n2 3 3\n3 4\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let text = "# a graph\n\nvertices 2\n# the absorber\nabsorb 2\n1 2\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert!(g.is_absorbing(vid(2)));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            parse_graph("absorb 1\nvertices 2\n"),
            Err(Error::Parse {
                line: 1,
                msg: "expected `vertices N` as the first directive".into()
            })
        );
        assert!(matches!(
            parse_graph("vertices 2\nabsorb 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("vertices 2\nabsorb 2\n1 2 x\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn build_errors_surface() {
        assert!(matches!(
            parse_graph("vertices 2\nabsorb 2\n1 3\n"),
            Err(Error::IdOutOfRange { .. })
        ));
        assert!(matches!(
            parse_graph("vertices 2\nabsorb 2\n1 1\n"),
            Err(Error::SelfLoop(_))
        ));
    }

    #[test]
    fn matrix_parsing() {
        let text = "# tiny chain\nmatrix 2\n1/2 1/2\n0 1\n";
        assert!(looks_like_matrix(text));
        assert!(!looks_like_matrix("vertices 2\nabsorb 2\n1 2\n"));
        let tm = parse_matrix(text).unwrap();
        assert_eq!(tm.order(), 2);
        let t = crate::solve_asua(&tm).unwrap();
        assert_eq!(t.value_or_zero(vid(1)), crate::rational::integer(2));

        assert!(matches!(
            parse_matrix("matrix 2\n1/2 1/2\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_matrix("matrix 2\n1/2 1/2 0\n0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_matrix("matrix 2\n1/0 1\n0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_matrix("matrix 2\n2/3 1/2\n0 1\n"),
            Err(Error::NotStochastic { row: 1 })
        ));
    }
}
