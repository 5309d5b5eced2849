//! Undirected simple graphs and the coloring primitives built on them.
//!
//! Vertices are dense 0-based ids. Colors are 1-based, `1..=palette`.

mod dimacs;

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub use dimacs::{read_dimacs, write_dimacs};

pub type Vertex = usize;
pub type Color = u32;

/// Undirected simple graph stored as sorted neighbor lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `vertex_count` vertices. Duplicate edges (in either
    /// orientation) are merged.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        count: vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut twice = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Ok(Graph {
            adjacency,
            edge_count: twice / 2,
        })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); vertex_count],
            edge_count: 0,
        }
    }

    pub fn complete(vertex_count: usize) -> Self {
        let edges = (0..vertex_count).flat_map(|u| (u + 1..vertex_count).map(move |v| (u, v)));
        Graph::new(vertex_count, edges).expect("complete graph edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    /// Whether the given vertices are pairwise non-adjacent.
    pub fn is_independent(&self, vertices: &[Vertex]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, vertices: &[Vertex]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u == v || self.has_edge(u, v)))
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count(),
            })
        }
    }
}

/// A total map from vertices to colors `1..=palette`. Properness is checked
/// with [`is_proper`], never assumed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    colors: Vec<Color>,
    palette: Color,
}

impl Coloring {
    pub fn new(colors: Vec<Color>, palette: Color) -> Result<Self> {
        if palette == 0 {
            return Err(Error::EmptyPalette);
        }
        if let Some(&color) = colors.iter().find(|&&c| c == 0 || c > palette) {
            return Err(Error::ColorOutOfRange { color, palette });
        }
        Ok(Coloring { colors, palette })
    }

    /// The same colors under a different palette size.
    pub fn with_palette(&self, palette: Color) -> Result<Self> {
        Coloring::new(self.colors.clone(), palette)
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn palette(&self) -> Color {
        self.palette
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    pub fn into_vec(self) -> Vec<Color> {
        self.colors
    }

    /// Number of distinct colors in use.
    pub fn colors_used(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    fn check_len(&self, graph: &Graph) -> Result<()> {
        if self.colors.len() == graph.vertex_count() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                got: self.colors.len(),
                expected: graph.vertex_count(),
            })
        }
    }
}

impl std::fmt::Display for Coloring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for c in &self.colors {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

/// A sequence of distinct vertices drawn from `0..universe`, with its inverse
/// index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrdering {
    sequence: Vec<Vertex>,
    positions: Vec<Option<usize>>,
}

impl VertexOrdering {
    pub fn new(sequence: Vec<Vertex>, universe: usize) -> Result<Self> {
        let mut positions = vec![None; universe];
        for (i, &v) in sequence.iter().enumerate() {
            let slot = positions.get_mut(v).ok_or(Error::VertexOutOfRange {
                vertex: v,
                count: universe,
            })?;
            if slot.is_some() {
                return Err(Error::DuplicateInOrdering(v));
            }
            *slot = Some(i);
        }
        Ok(VertexOrdering { sequence, positions })
    }

    /// `0, 1, ..., n - 1`.
    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            sequence: (0..n).collect(),
            positions: (0..n).map(Some).collect(),
        }
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.sequence
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn universe(&self) -> usize {
        self.positions.len()
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.positions.get(v).copied().flatten()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.position(v).is_some()
    }

    /// Whether every vertex of the universe appears.
    pub fn is_total(&self) -> bool {
        self.sequence.len() == self.positions.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.sequence.iter().copied()
    }

    pub(crate) fn require_total(&self, graph: &Graph) -> Result<()> {
        if self.universe() != graph.vertex_count() || !self.is_total() {
            return Err(Error::IncompleteOrdering {
                got: self.sequence.len(),
                expected: graph.vertex_count(),
            });
        }
        Ok(())
    }
}

/// A subset of `0..universe`, kept both as a sorted list and as a mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    members: Vec<Vertex>,
    mask: Vec<bool>,
}

impl VertexSet {
    pub fn new<I: IntoIterator<Item = Vertex>>(universe: usize, members: I) -> Result<Self> {
        let mut mask = vec![false; universe];
        for v in members {
            *mask.get_mut(v).ok_or(Error::VertexOutOfRange {
                vertex: v,
                count: universe,
            })? = true;
        }
        Ok(Self::from_mask(mask))
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(v, &m)| m.then_some(v))
            .collect();
        VertexSet { members, mask }
    }

    pub fn empty(universe: usize) -> Self {
        VertexSet {
            members: Vec::new(),
            mask: vec![false; universe],
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    /// Vertices of the universe outside the set, ascending.
    pub fn complement(&self) -> Vec<Vertex> {
        self.mask
            .iter()
            .enumerate()
            .filter_map(|(v, &m)| (!m).then_some(v))
            .collect()
    }
}

/// Swap colors `a` and `b` on the Kempe component containing `anchor`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KempeExchange {
    a: Color,
    b: Color,
    anchor: Vertex,
}

impl KempeExchange {
    pub fn new(a: Color, b: Color, anchor: Vertex) -> Result<Self> {
        if a == b {
            return Err(Error::EqualColors(a));
        }
        Ok(KempeExchange { a, b, anchor })
    }

    pub fn color_a(&self) -> Color {
        self.a
    }

    pub fn color_b(&self) -> Color {
        self.b
    }

    pub fn anchor(&self) -> Vertex {
        self.anchor
    }
}

impl std::fmt::Display for KempeExchange {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.anchor)
    }
}

/// Result of repeatedly removing a minimum-degree vertex (smallest id on
/// ties) among the eligible vertices. Ineligible vertices are never removed
/// but still count towards their neighbors' degrees.
pub(crate) struct Elimination {
    /// Eligible vertices in final order: the last removed comes first.
    pub order: Vec<Vertex>,
    /// Largest degree observed at removal time (0 if nothing was removed).
    pub width: usize,
}

pub(crate) fn eliminate(graph: &Graph, eligible: &[bool]) -> Elimination {
    let n = graph.vertex_count();
    let mut degree: Vec<usize> = graph.vertices().map(|v| graph.degree(v)).collect();
    let max_degree = degree.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); max_degree + 1];
    let mut remaining = 0;
    for v in 0..n {
        if eligible[v] {
            buckets[degree[v]].insert(v);
            remaining += 1;
        }
    }

    let mut removed = vec![false; n];
    let mut removal = Vec::with_capacity(remaining);
    let mut width = 0;
    let mut cursor = 0;
    while remaining > 0 {
        while buckets[cursor].is_empty() {
            cursor += 1;
        }
        let v = buckets[cursor].pop_first().expect("bucket is non-empty");
        width = width.max(cursor);
        removed[v] = true;
        remaining -= 1;
        removal.push(v);
        for &w in graph.neighbors(v) {
            if removed[w] {
                continue;
            }
            if eligible[w] {
                buckets[degree[w]].remove(&w);
                buckets[degree[w] - 1].insert(w);
            }
            degree[w] -= 1;
        }
        // a removal lowers any remaining degree by at most one
        cursor = cursor.saturating_sub(1);
    }
    removal.reverse();
    Elimination {
        order: removal,
        width,
    }
}

/// Degeneracy of `graph` with a witness ordering in which every vertex has at
/// most `value` neighbors before it.
pub fn degeneracy(graph: &Graph) -> (usize, VertexOrdering) {
    let all = vec![true; graph.vertex_count()];
    let Elimination { order, width } = eliminate(graph, &all);
    let witness = VertexOrdering::new(order, graph.vertex_count()).expect("elimination is a permutation");
    (width, witness)
}

/// Number of neighbors of `v` that precede it in `ordering`. Neighbors missing
/// from a partial ordering do not count.
pub fn pred_count(graph: &Graph, ordering: &VertexOrdering, v: Vertex) -> Result<usize> {
    graph.check_vertex(v)?;
    let pos = ordering.position(v).ok_or(Error::NotInOrdering(v))?;
    Ok(graph
        .neighbors(v)
        .iter()
        .filter(|&&w| ordering.position(w).is_some_and(|p| p < pos))
        .count())
}

/// Largest predecessor count over the vertices of `ordering`.
pub fn max_pred(graph: &Graph, ordering: &VertexOrdering) -> usize {
    ordering
        .iter()
        .map(|v| pred_count(graph, ordering, v).expect("vertex is in ordering"))
        .max()
        .unwrap_or(0)
}

/// The Kempe component of `u` in the subgraph induced by color classes `a` and
/// `b`, sorted ascending.
pub fn kempe_component(graph: &Graph, coloring: &Coloring, a: Color, b: Color, u: Vertex) -> Result<Vec<Vertex>> {
    graph.check_vertex(u)?;
    coloring.check_len(graph)?;
    component_within(graph, coloring.as_slice(), None, a, b, u)
}

/// Kempe component restricted to the vertices flagged in `within` (all
/// vertices when `None`).
pub(crate) fn component_within(
    graph: &Graph,
    colors: &[Color],
    within: Option<&[bool]>,
    a: Color,
    b: Color,
    u: Vertex,
) -> Result<Vec<Vertex>> {
    let inside = |v: Vertex| within.is_none_or(|w| w[v]);
    let cu = colors[u];
    if (cu != a && cu != b) || !inside(u) {
        return Err(Error::AnchorColor {
            vertex: u,
            color: cu,
            a,
            b,
        });
    }
    let mut seen = vec![false; graph.vertex_count()];
    let mut queue = VecDeque::from([u]);
    let mut component = vec![u];
    seen[u] = true;
    while let Some(v) = queue.pop_front() {
        for &w in graph.neighbors(v) {
            if !seen[w] && inside(w) && (colors[w] == a || colors[w] == b) {
                seen[w] = true;
                component.push(w);
                queue.push_back(w);
            }
        }
    }
    component.sort_unstable();
    Ok(component)
}

/// Swaps `a` and `b` on a component in place.
pub(crate) fn swap_on(colors: &mut [Color], component: &[Vertex], a: Color, b: Color) {
    for &v in component {
        colors[v] = if colors[v] == a { b } else { a };
    }
}

/// Applies a Kempe exchange, returning the new coloring.
pub fn apply_exchange(graph: &Graph, coloring: &Coloring, exchange: &KempeExchange) -> Result<Coloring> {
    let mut next = coloring.clone();
    apply_exchange_in_place(graph, &mut next, exchange)?;
    Ok(next)
}

pub(crate) fn apply_exchange_in_place(graph: &Graph, coloring: &mut Coloring, exchange: &KempeExchange) -> Result<()> {
    let (a, b) = (exchange.a, exchange.b);
    for color in [a, b] {
        if color == 0 || color > coloring.palette {
            return Err(Error::ColorOutOfRange {
                color,
                palette: coloring.palette,
            });
        }
    }
    let component = kempe_component(graph, coloring, a, b, exchange.anchor)?;
    swap_on(&mut coloring.colors, &component, a, b);
    Ok(())
}

/// True iff the coloring covers the graph and every edge is bichromatic.
pub fn is_proper(graph: &Graph, coloring: &Coloring) -> bool {
    first_conflict(graph, coloring.as_slice()).is_none() && coloring.len() == graph.vertex_count()
}

pub(crate) fn first_conflict(graph: &Graph, colors: &[Color]) -> Option<(Vertex, Vertex)> {
    if colors.len() != graph.vertex_count() {
        return None;
    }
    graph.edges().find(|&(u, v)| colors[u] == colors[v])
}

pub(crate) fn require_proper(graph: &Graph, coloring: &Coloring) -> Result<()> {
    coloring.check_len(graph)?;
    match first_conflict(graph, coloring.as_slice()) {
        Some((u, v)) => Err(Error::Improper(u, v)),
        None => Ok(()),
    }
}
