//! Exhaustive ground truth for tiny graphs: every proper (list) coloring, the
//! reconfiguration graphs over them, exact subdegeneracy and the max-min
//! characterisations that elimination is supposed to reach.

pub mod blocks;
pub mod fixtures;

use std::collections::{HashMap, VecDeque};
use std::fmt::Write;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{component_within, Color, Coloring, Graph, Vertex, VertexSet};

pub use blocks::{block_order_enumerate, toy_blocks, BlockRow, BlockTable};

/// Hard limits on exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub vertices: usize,
    pub colors: usize,
    pub subdeg_vertices: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            vertices: 8,
            colors: 6,
            subdeg_vertices: 10,
        }
    }
}

pub const CAPS_ENV: &str = "KEMPE_RECON_CAPS";

impl Caps {
    /// Parses `vertices=8,colors=6,subdeg=10`; omitted keys keep their defaults.
    pub fn parse(spec: &str) -> Result<Caps> {
        let mut caps = Caps::default();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Precondition(format!("cap `{item}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Precondition(format!("cap `{item}` has a non-numeric value")))?;
            match key.trim() {
                "vertices" => caps.vertices = value,
                "colors" => caps.colors = value,
                "subdeg" => caps.subdeg_vertices = value,
                other => return Err(Error::Precondition(format!("unknown cap `{other}`"))),
            }
        }
        Ok(caps)
    }

    /// Defaults, overridden by the environment variable when it is set.
    pub fn from_env() -> Result<Caps> {
        match std::env::var(CAPS_ENV) {
            Ok(spec) => Caps::parse(&spec),
            Err(_) => Ok(Caps::default()),
        }
    }
}

/// Every proper coloring with colors in `1..=k` (and in `lists[v]` when given),
/// in lexicographic order.
pub fn enumerate_colorings(graph: &Graph, k: Color, lists: Option<&[Vec<Color>]>, caps: &Caps) -> Result<Vec<Coloring>> {
    let n = graph.vertex_count();
    let allowed: Vec<Vec<Color>> = match lists {
        Some(lists) => {
            if lists.len() != n {
                return Err(Error::ListCount {
                    got: lists.len(),
                    expected: n,
                });
            }
            let mut out = Vec::with_capacity(n);
            for list in lists {
                let mut list = list.clone();
                list.sort_unstable();
                list.dedup();
                if let Some(&c) = list.iter().find(|&&c| c == 0 || c > k) {
                    return Err(Error::ColorOutOfRange { color: c, palette: k });
                }
                out.push(list);
            }
            out
        }
        None => vec![(1..=k).collect(); n],
    };
    let estimate = allowed.iter().fold(1u128, |acc, l| acc.saturating_mul(l.len() as u128));
    if n > caps.vertices {
        return Err(Error::CapExceeded {
            what: "vertices",
            limit: caps.vertices,
            requested: n,
            estimate,
        });
    }
    if k as usize > caps.colors {
        return Err(Error::CapExceeded {
            what: "colors",
            limit: caps.colors,
            requested: k as usize,
            estimate,
        });
    }
    if n == 0 {
        return Ok(vec![Coloring::new(Vec::new(), k)?]);
    }

    // shard on the color of vertex 0; shards are already in lexicographic order
    let shards: Vec<Vec<Vec<Color>>> = allowed[0]
        .par_iter()
        .map(|&first| {
            let mut out = Vec::new();
            let mut colors = vec![0; n];
            colors[0] = first;
            extend(graph, &allowed, &mut colors, 1, &mut out);
            out
        })
        .collect();
    shards
        .into_iter()
        .flatten()
        .map(|c| Coloring::new(c, k))
        .collect()
}

fn extend(graph: &Graph, allowed: &[Vec<Color>], colors: &mut [Color], v: Vertex, out: &mut Vec<Vec<Color>>) {
    if v == colors.len() {
        out.push(colors.to_vec());
        return;
    }
    for &c in &allowed[v] {
        if graph.neighbors(v).iter().all(|&w| w >= v || colors[w] != c) {
            colors[v] = c;
            extend(graph, allowed, colors, v + 1, out);
        }
    }
    colors[v] = 0;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// One vertex changes color.
    Elementary,
    /// One Kempe component swaps its two colors.
    Kempe,
}

/// Colorings as nodes, joined when one step of `relation` maps one to the
/// other. Steps leading outside the node set are ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconfigGraph {
    nodes: Vec<Coloring>,
    adjacency: Vec<Vec<usize>>,
    relation: Relation,
}

impl ReconfigGraph {
    pub fn nodes(&self) -> &[Coloring] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn relation(&self) -> Relation {
        self.relation
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, adj)| adj.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
            .collect()
    }

    /// Edge list as `p edge` / `e i j` lines with 1-based node ids.
    pub fn to_dimacs(&self) -> String {
        let edges = self.edges();
        let mut out = format!("p edge {} {}\n", self.nodes.len(), edges.len());
        for (i, j) in edges {
            writeln!(out, "e {} {}", i + 1, j + 1).unwrap();
        }
        out
    }

    /// One coloring per line, in node order.
    pub fn manifest(&self) -> String {
        self.nodes.iter().map(|c| format!("{c}\n")).collect()
    }
}

pub fn build_reconfig_graph(graph: &Graph, colorings: &[Coloring], relation: Relation) -> ReconfigGraph {
    let index: HashMap<&[Color], usize> = colorings.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    let adjacency: Vec<Vec<usize>> = colorings
        .par_iter()
        .map(|c| {
            let mut adj: Vec<usize> = step_targets(graph, c, relation)
                .iter()
                .filter_map(|t| index.get(t.as_slice()).copied())
                .collect();
            adj.sort_unstable();
            adj.dedup();
            adj
        })
        .collect();
    ReconfigGraph {
        nodes: colorings.to_vec(),
        adjacency,
        relation,
    }
}

fn step_targets(graph: &Graph, coloring: &Coloring, relation: Relation) -> Vec<Vec<Color>> {
    let colors = coloring.as_slice();
    let k = coloring.palette();
    let mut out = Vec::new();
    match relation {
        Relation::Elementary => {
            for v in graph.vertices() {
                for c in (1..=k).filter(|&c| c != colors[v]) {
                    let mut next = colors.to_vec();
                    next[v] = c;
                    out.push(next);
                }
            }
        }
        Relation::Kempe => {
            for a in 1..=k {
                for b in a + 1..=k {
                    let mut done = vec![false; graph.vertex_count()];
                    for u in graph.vertices() {
                        if done[u] || (colors[u] != a && colors[u] != b) {
                            continue;
                        }
                        let component = component_within(graph, colors, None, a, b, u).expect("anchor has color a or b");
                        let mut next = colors.to_vec();
                        for &w in &component {
                            done[w] = true;
                            next[w] = if colors[w] == a { b } else { a };
                        }
                        out.push(next);
                    }
                }
            }
        }
    }
    out
}

/// Whether a single Kempe exchange maps `c1` to `c2`, decided from the two
/// colorings alone.
pub fn kempe_adjacent(graph: &Graph, c1: &Coloring, c2: &Coloring) -> bool {
    let (x, y) = (c1.as_slice(), c2.as_slice());
    let differ: Vec<Vertex> = graph.vertices().filter(|&v| x[v] != y[v]).collect();
    let Some(&u) = differ.first() else {
        return false;
    };
    let (a, b) = (x[u], y[u]);
    if differ.iter().any(|&v| !((x[v] == a && y[v] == b) || (x[v] == b && y[v] == a))) {
        return false;
    }
    component_within(graph, x, None, a, b, u).is_ok_and(|comp| comp == differ)
}

/// Edge list of the Kempe relation by testing every pair of nodes.
pub fn pairwise_kempe_edges(graph: &Graph, colorings: &[Coloring]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..colorings.len() {
        for j in i + 1..colorings.len() {
            if kempe_adjacent(graph, &colorings[i], &colorings[j]) {
                edges.push((i, j));
            }
        }
    }
    edges
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Connectivity {
    pub connected: bool,
    pub components: usize,
    /// Only reported for connected graphs.
    pub diameter: Option<usize>,
}

fn bfs(rg: &ReconfigGraph, start: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; rg.node_count()];
    dist[start] = Some(0);
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        let d = dist[i].unwrap();
        for &j in rg.neighbors(i) {
            if dist[j].is_none() {
                dist[j] = Some(d + 1);
                queue.push_back(j);
            }
        }
    }
    dist
}

/// Component index of every node.
pub fn components(rg: &ReconfigGraph) -> Vec<usize> {
    let mut label = vec![usize::MAX; rg.node_count()];
    let mut next = 0;
    for s in 0..rg.node_count() {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            for &j in rg.neighbors(i) {
                if label[j] == usize::MAX {
                    label[j] = next;
                    stack.push(j);
                }
            }
        }
        next += 1;
    }
    label
}

pub fn connectivity(rg: &ReconfigGraph) -> Connectivity {
    let count = components(rg).into_iter().max().map_or(0, |m| m + 1);
    let connected = count == 1;
    let diameter = connected.then(|| {
        (0..rg.node_count())
            .into_par_iter()
            .map(|s| bfs(rg, s).into_iter().map(|d| d.expect("connected")).max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    });
    Connectivity {
        connected,
        components: count,
        diameter,
    }
}

fn require_small(graph: &Graph, fixed: &VertexSet, caps: &Caps, what: &'static str) -> Result<()> {
    let n = graph.vertex_count();
    if fixed.universe() != n {
        return Err(Error::LengthMismatch {
            got: fixed.universe(),
            expected: n,
        });
    }
    if n > caps.subdeg_vertices {
        return Err(Error::CapExceeded {
            what,
            limit: caps.subdeg_vertices,
            requested: n,
            estimate: (1u128 << n.min(127)).saturating_mul(n as u128),
        });
    }
    Ok(())
}

/// Minimum over admissible orderings of the largest predecessor count of a
/// free vertex, by dynamic programming over placed-vertex sets.
pub fn exact_subdeg(graph: &Graph, fixed: &VertexSet, caps: &Caps) -> Result<usize> {
    require_small(graph, fixed, caps, "vertices for exact subdegeneracy")?;
    let n = graph.vertex_count();
    let nbr: Vec<u32> = graph
        .vertices()
        .map(|v| graph.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let f_mask = fixed.members().iter().fold(0u32, |m, &v| m | 1 << v);
    let full = (1u32 << n) - 1;
    let mut best = vec![usize::MAX; 1 << n];
    best[0] = 0;
    for set in 0..=full {
        let here = best[set as usize];
        if here == usize::MAX {
            continue;
        }
        for (v, &adj) in nbr.iter().enumerate() {
            let bit = 1u32 << v;
            if set & bit != 0 {
                continue;
            }
            let cost = if f_mask & bit != 0 {
                0
            } else {
                let free_before = adj & set & !f_mask != 0;
                let fixed_pending = adj & f_mask & !set != 0;
                if free_before && fixed_pending {
                    continue;
                }
                (adj & set).count_ones() as usize
            };
            let slot = &mut best[(set | bit) as usize];
            *slot = (*slot).min(here.max(cost));
        }
    }
    Ok(best[full as usize])
}

/// `max` over non-empty `U` outside `F` of `min` over `v` in `U` of the number
/// of neighbors of `v` in `F ∪ U`; 0 when every vertex is fixed.
pub fn lambda_bruteforce(graph: &Graph, fixed: &VertexSet, caps: &Caps) -> Result<usize> {
    require_small(graph, fixed, caps, "vertices for brute-force lambda")?;
    let free = fixed.complement();
    let nbr: Vec<u32> = graph
        .vertices()
        .map(|v| graph.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let f_mask = fixed.members().iter().fold(0u32, |m, &v| m | 1 << v);
    let mut best = 0;
    for pick in 1u32..1 << free.len() {
        let u_mask = free
            .iter()
            .enumerate()
            .filter(|(i, _)| pick & 1 << i != 0)
            .fold(0u32, |m, (_, &v)| m | 1 << v);
        let inside = u_mask | f_mask;
        let min = free
            .iter()
            .filter(|&&v| u_mask & 1 << v != 0)
            .map(|&v| (nbr[v] & inside).count_ones() as usize)
            .min()
            .unwrap_or(0);
        best = best.max(min);
    }
    Ok(best)
}

/// Degeneracy as the largest minimum degree over induced subgraphs.
pub fn degeneracy_bruteforce(graph: &Graph, caps: &Caps) -> Result<usize> {
    lambda_bruteforce(graph, &VertexSet::empty(graph.vertex_count()), caps)
}
