//! Orderings that keep a fixed vertex set `F` out of the way.
//!
//! An ordering is admissible for `F` when every free vertex that has a free
//! neighbor before it also has all of its `F`-neighbors before it. The
//! quantity of interest is the largest number of earlier neighbors of a free
//! vertex, minimised over admissible orderings. [`subdeg_ub`] computes an
//! upper bound by min-degree elimination restricted to the free vertices,
//! followed by moving an independent prefix of the result in front of `F`.

use std::fmt;

use crate::graph::{self, Graph, Vertex, VertexOrdering, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdegResult {
    /// Largest predecessor count of a free vertex in `ordering`.
    pub value: usize,
    /// Full ordering: independent prefix, then `F` ascending, then the rest.
    pub ordering: VertexOrdering,
    /// Value of the elimination ordering before the prefix move.
    pub lambda: usize,
    /// Number of free vertices moved in front of `F`.
    pub prefix: usize,
}

impl fmt::Display for SubdegResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "subdeg_ub {} lambda {} prefix {}", self.value, self.lambda, self.prefix)?;
        let ids: Vec<String> = self.ordering.iter().map(|v| (v + 1).to_string()).collect();
        writeln!(f, "{}", ids.join(" "))
    }
}

/// Min-degree elimination over the vertices outside `fixed`, ties broken by
/// smallest id. Fixed vertices are never removed but count towards degrees.
/// The result lists the free vertices in the order they follow `F`.
pub fn vertex_elimination(graph: &Graph, fixed: &VertexSet) -> VertexOrdering {
    let eligible: Vec<bool> = fixed.mask().iter().map(|&in_f| !in_f).collect();
    let elim = graph::eliminate(graph, &eligible);
    VertexOrdering::new(elim.order, graph.vertex_count()).expect("elimination is a partial permutation")
}

/// Whether `ordering` is admissible for `fixed`. Partial orderings are never
/// admissible.
pub fn check_sprime(graph: &Graph, fixed: &VertexSet, ordering: &VertexOrdering) -> bool {
    if ordering.universe() != graph.vertex_count() || !ordering.is_total() {
        return false;
    }
    let pos = |v: Vertex| ordering.position(v).expect("total ordering");
    graph.vertices().filter(|&v| !fixed.contains(v)).all(|v| {
        let p = pos(v);
        let free_before = graph.neighbors(v).iter().any(|&w| !fixed.contains(w) && pos(w) < p);
        !free_before || graph.neighbors(v).iter().all(|&w| !fixed.contains(w) || pos(w) < p)
    })
}

fn max_free_pred(graph: &Graph, fixed: &VertexSet, sequence: &[Vertex]) -> usize {
    let mut placed = vec![false; graph.vertex_count()];
    let mut best = 0;
    for &v in sequence {
        if !fixed.contains(v) {
            let before = graph.neighbors(v).iter().filter(|&&w| placed[w]).count();
            best = best.max(before);
        }
        placed[v] = true;
    }
    best
}

/// Moves the longest independent prefix of `tail` in front of `F`.
pub fn postprocess(graph: &Graph, fixed: &VertexSet, tail: &VertexOrdering) -> SubdegResult {
    let tail = tail.as_slice();
    let mut prefix = 0;
    while prefix < tail.len() && tail[..prefix].iter().all(|&u| !graph.has_edge(u, tail[prefix])) {
        prefix += 1;
    }

    let before: Vec<Vertex> = fixed.members().iter().chain(tail).copied().collect();
    let lambda = max_free_pred(graph, fixed, &before);

    let sequence: Vec<Vertex> = tail[..prefix]
        .iter()
        .chain(fixed.members())
        .chain(&tail[prefix..])
        .copied()
        .collect();
    let value = max_free_pred(graph, fixed, &sequence);
    let ordering = VertexOrdering::new(sequence, graph.vertex_count()).expect("F and its complement partition V");
    SubdegResult {
        value,
        ordering,
        lambda,
        prefix,
    }
}

pub fn subdeg_ub(graph: &Graph, fixed: &VertexSet) -> SubdegResult {
    let tail = vertex_elimination(graph, fixed);
    postprocess(graph, fixed, &tail)
}
