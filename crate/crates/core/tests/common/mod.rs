//! Test-only helpers: seeded random instances and deliberately naive
//! reference implementations that share no code with the library.

#![allow(dead_code)]

use itertools::Itertools;
use kempe_recon::{Color, Graph, Vertex};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .tuple_combinations()
        .filter(|_| rng.gen_bool(density))
        .collect();
    Graph::new(n, edges).unwrap()
}

/// Non-empty random subsets of `1..=p`.
pub fn random_lists(rng: &mut impl Rng, n: usize, p: Color) -> Vec<Vec<Color>> {
    (0..n)
        .map(|_| loop {
            let list: Vec<Color> = (1..=p).filter(|_| rng.gen_bool(0.6)).collect();
            if !list.is_empty() {
                break list;
            }
        })
        .collect()
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// All tuples in `1..=k`, kept when proper and inside the lists.
pub fn naive_colorings(g: &Graph, k: Color, lists: Option<&[Vec<Color>]>) -> Vec<Vec<Color>> {
    let n = g.vertex_count();
    let adj = adjacency(g);
    let mut out = Vec::new();
    let mut tuple = vec![1; n];
    if k == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    loop {
        let proper = (0..n).all(|u| (0..n).all(|v| !adj[u][v] || tuple[u] != tuple[v]));
        let listed = lists.is_none_or(|ls| (0..n).all(|v| ls[v].contains(&tuple[v])));
        if proper && listed {
            out.push(tuple.clone());
        }
        // odometer with the last position fastest, giving lexicographic order
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if tuple[i] < k {
                tuple[i] += 1;
                for t in tuple.iter_mut().skip(i + 1) {
                    *t = 1;
                }
                break;
            }
        }
    }
}

/// Kempe component by repeated sweeps until nothing changes.
pub fn naive_component(adj: &[Vec<bool>], c: &[Color], a: Color, b: Color, u: Vertex) -> Vec<bool> {
    let n = c.len();
    let mut inside = vec![false; n];
    inside[u] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..n {
            if !inside[v] && (c[v] == a || c[v] == b) && (0..n).any(|w| inside[w] && adj[v][w]) {
                inside[v] = true;
                changed = true;
            }
        }
    }
    inside
}

pub fn naive_swap(adj: &[Vec<bool>], c: &[Color], a: Color, b: Color, u: Vertex) -> Vec<Color> {
    let inside = naive_component(adj, c, a, b, u);
    c.iter()
        .zip(&inside)
        .map(|(&x, &i)| if !i { x } else if x == a { b } else { a })
        .collect()
}

/// Edges `(i, j)`, `i < j`, of the Kempe relation among `nodes`.
pub fn naive_kempe_edges(g: &Graph, k: Color, nodes: &[Vec<Color>]) -> Vec<(usize, usize)> {
    let adj = adjacency(g);
    let mut edges = Vec::new();
    for (i, j) in (0..nodes.len()).tuple_combinations() {
        let linked = (1..=k).tuple_combinations().any(|(a, b)| {
            (0..g.vertex_count())
                .filter(|&u| nodes[i][u] == a || nodes[i][u] == b)
                .any(|u| naive_swap(&adj, &nodes[i], a, b, u) == nodes[j])
        });
        if linked {
            edges.push((i, j));
        }
    }
    edges
}

pub fn naive_elementary_edges(nodes: &[Vec<Color>]) -> Vec<(usize, usize)> {
    (0..nodes.len())
        .tuple_combinations()
        .filter(|&(i, j)| nodes[i].iter().zip(&nodes[j]).filter(|(x, y)| x != y).count() == 1)
        .collect()
}

/// Largest BFS distance, `None` when disconnected or empty.
pub fn naive_diameter(count: usize, edges: &[(usize, usize)]) -> Option<usize> {
    if count == 0 {
        return None;
    }
    const INF: usize = usize::MAX / 4;
    let mut d = vec![vec![INF; count]; count];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(i, j) in edges {
        d[i][j] = 1;
        d[j][i] = 1;
    }
    for m in 0..count {
        for i in 0..count {
            for j in 0..count {
                if d[i][m] + d[m][j] < d[i][j] {
                    d[i][j] = d[i][m] + d[m][j];
                }
            }
        }
    }
    let worst = d.iter().flatten().copied().max().unwrap();
    (worst < INF).then_some(worst)
}

/// Direct reading of the admissibility condition: for every path `u - v - w`
/// with `u, v` free and `w` fixed, `u` before `v` forces `w` before `v`.
pub fn naive_admissible(g: &Graph, fixed: &[bool], order: &[Vertex]) -> bool {
    let adj = adjacency(g);
    let n = g.vertex_count();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for v in 0..n {
        for u in 0..n {
            for w in 0..n {
                if adj[u][v] && adj[v][w] && !fixed[u] && !fixed[v] && fixed[w] && pos[u] < pos[v] && pos[w] > pos[v] {
                    return false;
                }
            }
        }
    }
    true
}

pub fn naive_max_free_pred(g: &Graph, fixed: &[bool], order: &[Vertex]) -> usize {
    let adj = adjacency(g);
    order
        .iter()
        .enumerate()
        .filter(|(_, &v)| !fixed[v])
        .map(|(i, &v)| order[..i].iter().filter(|&&u| adj[u][v]).count())
        .max()
        .unwrap_or(0)
}

/// Minimum over all admissible permutations.
pub fn naive_exact_subdeg(g: &Graph, fixed: &[bool]) -> usize {
    let n = g.vertex_count();
    (0..n)
        .permutations(n)
        .filter(|order| naive_admissible(g, fixed, order))
        .map(|order| naive_max_free_pred(g, fixed, &order))
        .min()
        .unwrap_or(0)
}

/// Max over induced subgraphs containing all fixed vertices and at least
/// one free vertex, of the minimum degree among the free ones.
pub fn naive_lambda(g: &Graph, fixed: &[bool]) -> usize {
    let adj = adjacency(g);
    let n = g.vertex_count();
    let mut best = 0;
    for pick in 0u32..1 << n {
        let keep: Vec<bool> = (0..n).map(|v| fixed[v] || pick & 1 << v != 0).collect();
        let free_kept: Vec<usize> = (0..n).filter(|&v| keep[v] && !fixed[v]).collect();
        if free_kept.is_empty() {
            continue;
        }
        let min = free_kept
            .iter()
            .map(|&v| (0..n).filter(|&w| keep[w] && adj[v][w]).count())
            .min()
            .unwrap();
        best = best.max(min);
    }
    best
}

pub fn naive_degeneracy(g: &Graph) -> usize {
    naive_lambda(g, &vec![false; g.vertex_count()])
}
