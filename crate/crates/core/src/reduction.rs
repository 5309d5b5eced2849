//! List coloring to vertex coloring: `H_G` is `G` plus a clique on `p` new
//! vertices, where clique vertex `i` stands for color `i` and is joined to
//! every original vertex that may not use color `i`.

use std::fmt::Write;

use crate::error::{Error, ParseError, Result};
use crate::graph::{self, read_dimacs, write_dimacs, Color, Coloring, Graph, Vertex, VertexSet};
use crate::instance::UtpInstance;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedGraph {
    graph: Graph,
    palette: Color,
    clique: Vec<Vertex>,
    original_count: usize,
}

impl ReducedGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn palette(&self) -> Color {
        self.palette
    }

    /// `clique()[i - 1]` is the vertex standing for color `i`.
    pub fn clique(&self) -> &[Vertex] {
        &self.clique
    }

    pub fn original_count(&self) -> usize {
        self.original_count
    }

    pub fn is_clique_vertex(&self, v: Vertex) -> bool {
        v >= self.original_count
    }

    /// Colors still available to original vertex `v`.
    pub fn list(&self, v: Vertex) -> Vec<Color> {
        (1..=self.palette)
            .filter(|&i| !self.graph.has_edge(v, self.clique[i as usize - 1]))
            .collect()
    }

    /// Lifts a list coloring of `G` to `H_G`, giving clique vertex `i` color `i`.
    pub fn lift(&self, coloring: &Coloring) -> Result<Coloring> {
        if coloring.len() != self.original_count {
            return Err(Error::LengthMismatch {
                got: coloring.len(),
                expected: self.original_count,
            });
        }
        let mut colors = coloring.as_slice().to_vec();
        colors.extend(1..=self.palette);
        Coloring::new(colors, self.palette)
    }
}

/// Builds `H_G`. Original vertices keep their ids; clique vertices are
/// appended in color order.
pub fn build_reduced(graph: &Graph, palette: Color, lists: &[Vec<Color>]) -> Result<ReducedGraph> {
    if palette == 0 {
        return Err(Error::EmptyPalette);
    }
    let n = graph.vertex_count();
    if lists.len() != n {
        return Err(Error::ListCount {
            got: lists.len(),
            expected: n,
        });
    }
    let p = palette as usize;
    let clique: Vec<Vertex> = (n..n + p).collect();
    let mut edges: Vec<(Vertex, Vertex)> = graph.edges().collect();
    for (i, &u) in clique.iter().enumerate() {
        edges.extend(clique[i + 1..].iter().map(|&v| (u, v)));
    }
    for (v, list) in lists.iter().enumerate() {
        if list.is_empty() {
            return Err(Error::EmptyList(v));
        }
        let mut allowed = vec![false; p];
        for &c in list {
            if c == 0 || c > palette {
                return Err(Error::ColorOutOfRange { color: c, palette });
            }
            allowed[c as usize - 1] = true;
        }
        edges.extend(
            allowed
                .iter()
                .enumerate()
                .filter(|(_, &ok)| !ok)
                .map(|(i, _)| (v, clique[i])),
        );
    }
    Ok(ReducedGraph {
        graph: Graph::new(n + p, edges).expect("reduction edges are valid"),
        palette,
        clique,
        original_count: n,
    })
}

pub fn reduce_instance(inst: &UtpInstance) -> Result<ReducedGraph> {
    build_reduced(inst.conflicts(), inst.timeslots() as Color, inst.availability())
}

/// Vertices whose color is forced once the clique colors are fixed: those
/// with exactly `p - 1` clique neighbors. Every clique vertex qualifies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedSet(VertexSet);

impl FixedSet {
    pub fn as_set(&self) -> &VertexSet {
        &self.0
    }

    pub fn members(&self) -> &[Vertex] {
        self.0.members()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn fixed_set(reduced: &ReducedGraph) -> FixedSet {
    let g = &reduced.graph;
    let target = reduced.palette as usize - 1;
    let mask = g
        .vertices()
        .map(|v| {
            let clique_neighbors = g
                .neighbors(v)
                .iter()
                .filter(|&&w| reduced.is_clique_vertex(w))
                .count();
            clique_neighbors == target
        })
        .collect();
    FixedSet(VertexSet::from_mask(mask))
}

/// Renames colors so clique vertex `i` gets color `i`, then restricts to the
/// original vertices. The result is a list coloring of `G`.
pub fn project_coloring(reduced: &ReducedGraph, coloring: &Coloring) -> Result<Coloring> {
    graph::require_proper(&reduced.graph, coloring)?;
    let p = reduced.palette;
    let mut rename = vec![0 as Color; coloring.palette().max(p) as usize + 1];
    for (i, &v) in reduced.clique.iter().enumerate() {
        rename[coloring.color(v) as usize] = i as Color + 1;
    }
    let colors = coloring.as_slice()[..reduced.original_count]
        .iter()
        .map(|&c| rename[c as usize])
        .collect::<Vec<_>>();
    if colors.contains(&0) {
        return Err(Error::Precondition(format!(
            "coloring uses colors outside the {p} clique colors"
        )));
    }
    Coloring::new(colors, p)
}

/// DIMACS edge list of `H_G` followed by two comment lines:
/// `c palette <p> original <n>` and `c clique <v_1> ... <v_p>` (1-based ids).
pub fn write_reduced(reduced: &ReducedGraph) -> String {
    let mut out = write_dimacs(&reduced.graph);
    writeln!(out, "c palette {} original {}", reduced.palette, reduced.original_count).unwrap();
    out.push_str("c clique");
    for v in &reduced.clique {
        write!(out, " {}", v + 1).unwrap();
    }
    out.push('\n');
    out
}

pub fn read_reduced(text: &str) -> Result<ReducedGraph, ParseError> {
    let graph = read_dimacs(text)?;
    let mut meta = None;
    let mut clique = None;
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| ParseError::at_line(line_no, format!("`{s}` is not an integer")))
        };
        match fields.as_slice() {
            ["c", "palette", p, "original", n] => meta = Some((num(p)?, num(n)?, line_no)),
            ["c", "clique", ids @ ..] => {
                let ids = ids
                    .iter()
                    .map(|s| num(s).and_then(|v| v.checked_sub(1).ok_or_else(|| ParseError::at_line(line_no, "ids are 1-based"))))
                    .collect::<Result<Vec<_>, _>>()?;
                clique = Some(ids);
            }
            _ => {}
        }
    }
    let (p, n, line_no) = meta.ok_or_else(|| ParseError::at_line(0, "missing `c palette` trailer"))?;
    let clique = clique.ok_or_else(|| ParseError::at_line(0, "missing `c clique` trailer"))?;
    let expected: Vec<Vertex> = (n..n + p).collect();
    if p == 0 || clique != expected || graph.vertex_count() != n + p || !graph.is_clique(&clique) {
        return Err(ParseError::at_line(line_no, "trailer does not describe the appended clique"));
    }
    Ok(ReducedGraph {
        graph,
        palette: p as Color,
        clique,
        original_count: n,
    })
}
