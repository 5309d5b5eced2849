//! DIMACS-style edge lists: `p edge <n> <m>` followed by `m` lines
//! `e <u> <v>` with 1-based endpoints. Lines starting with `c` are comments.

use std::fmt::Write;

use crate::error::ParseError;
use crate::graph::Graph;

pub fn read_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut fields = line.split_ascii_whitespace();
        match fields.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(ParseError::at_line(line_no, "second problem line"));
                }
                let kind = fields.next();
                if kind != Some("edge") && kind != Some("col") {
                    return Err(ParseError::at_line(line_no, "expected `p edge <n> <m>`"));
                }
                let n = number(fields.next(), line_no)?;
                let m = number(fields.next(), line_no)?;
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(ParseError::at_line(line_no, "edge before problem line"));
                };
                let u = number(fields.next(), line_no)?;
                let v = number(fields.next(), line_no)?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(ParseError::at_line(line_no, format!("endpoint outside 1..={n}")));
                }
                if u == v {
                    return Err(ParseError::at_line(line_no, format!("self-loop at {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(ParseError::at_line(line_no, format!("unknown line type `{other}`")));
            }
            None => unreachable!("blank lines are skipped"),
        }
        if fields.next().is_some() {
            return Err(ParseError::at_line(line_no, "trailing fields"));
        }
    }
    let (n, m) = header.ok_or_else(|| ParseError::at_line(0, "missing `p edge` line"))?;
    if edges.len() != m {
        return Err(ParseError::at_line(
            0,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Graph::new(n, edges).expect("endpoints validated above"))
}

fn number(field: Option<&str>, line_no: usize) -> Result<usize, ParseError> {
    let field = field.ok_or_else(|| ParseError::at_line(line_no, "missing field"))?;
    field
        .parse()
        .map_err(|_| ParseError::at_line(line_no, format!("`{field}` is not a non-negative integer")))
}

/// Writes edges in ascending order, one per line.
pub fn write_dimacs(graph: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", graph.vertex_count(), graph.edge_count()).unwrap();
    for (u, v) in graph.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
