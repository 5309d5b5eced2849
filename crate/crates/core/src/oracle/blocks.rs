//! Enumeration over orders of cliques whose vertices share all outside
//! neighbors. Inside such a clique only the last vertex matters, so the best
//! admissible ordering with `F` first is found by trying every order of the
//! cliques.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Vertex;
use crate::instance::UtpInstance;
use crate::reduction::{FixedSet, ReducedGraph};

use super::fixtures::TOY_BLOCKS;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockRow {
    /// Block indices in placement order.
    pub order: Vec<usize>,
    /// Largest predecessor count inside each block, indexed like the blocks.
    pub values: Vec<usize>,
}

impl BlockRow {
    pub fn max(&self) -> usize {
        self.values.iter().copied().max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTable {
    pub names: Vec<String>,
    /// Every order of the blocks, in lexicographic order of block indices.
    pub rows: Vec<BlockRow>,
}

impl BlockTable {
    pub fn minimum(&self) -> usize {
        self.rows.iter().map(BlockRow::max).min().unwrap_or(0)
    }

    pub fn row(&self, order: &[&str]) -> Option<&BlockRow> {
        let wanted: Vec<usize> = order
            .iter()
            .map(|name| self.names.iter().position(|n| n == name))
            .collect::<Option<_>>()?;
        self.rows.iter().find(|r| r.order == wanted)
    }

    /// Rows whose last block is `name`.
    pub fn ending_with<'a>(&'a self, name: &str) -> impl Iterator<Item = &'a BlockRow> + 'a {
        let idx = self.names.iter().position(|n| n == name);
        self.rows.iter().filter(move |r| idx.is_some() && r.order.last().copied() == idx)
    }

    pub fn order_label(&self, row: &BlockRow) -> String {
        row.order.iter().map(|&i| self.names[i].as_str()).join(", ")
    }
}

impl fmt::Display for BlockTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "order")?;
        for name in &self.names {
            write!(f, " | p({name})")?;
        }
        writeln!(f, " | max")?;
        for row in &self.rows {
            write!(f, "{}", self.order_label(row))?;
            for v in &row.values {
                write!(f, " | {v}")?;
            }
            writeln!(f, " | {}", row.max())?;
        }
        writeln!(f, "minimum {}", self.minimum())
    }
}

pub fn block_order_enumerate(
    reduced: &ReducedGraph,
    blocks: &[(String, Vec<Vertex>)],
    fixed: &FixedSet,
) -> Result<BlockTable> {
    let graph = reduced.graph();
    let n = graph.vertex_count();
    let mut owner = vec![None; n];
    for (i, (name, members)) in blocks.iter().enumerate() {
        if members.is_empty() {
            return Err(Error::Precondition(format!("block {name} is empty")));
        }
        for &v in members {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, count: n });
            }
            if fixed.contains(v) || owner[v].is_some() {
                return Err(Error::Precondition(format!("vertex {v} of block {name} is fixed or in two blocks")));
            }
            owner[v] = Some(i);
        }
        if !graph.is_clique(members) {
            return Err(Error::Precondition(format!("block {name} is not a clique")));
        }
        let outside = |v: Vertex| -> Vec<Vertex> {
            graph.neighbors(v).iter().copied().filter(|w| !members.contains(w)).collect()
        };
        let first = outside(members[0]);
        if members.iter().any(|&v| outside(v) != first) {
            return Err(Error::Precondition(format!(
                "vertices of block {name} have different neighbors outside it"
            )));
        }
    }
    if let Some(v) = (0..n).find(|&v| !fixed.contains(v) && owner[v].is_none()) {
        return Err(Error::Precondition(format!("free vertex {v} is in no block")));
    }

    let rows = (0..blocks.len())
        .permutations(blocks.len())
        .map(|order| {
            let mut placed: Vec<bool> = (0..n).map(|v| fixed.contains(v)).collect();
            let mut values = vec![0; blocks.len()];
            for &b in &order {
                for &v in &blocks[b].1 {
                    let before = graph.neighbors(v).iter().filter(|&&w| placed[w]).count();
                    values[b] = values[b].max(before);
                    placed[v] = true;
                }
            }
            BlockRow { order, values }
        })
        .collect();
    Ok(BlockTable {
        names: blocks.iter().map(|(name, _)| name.clone()).collect(),
        rows,
    })
}

/// The per-course blocks `T, A, S, G` of the toy instance.
pub fn toy_blocks(instance: &UtpInstance) -> Vec<(String, Vec<Vertex>)> {
    TOY_BLOCKS
        .iter()
        .map(|&(short, course)| (short.to_string(), instance.events_of(course)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::parse_cctt;
    use crate::oracle::fixtures::TOY_CTT;
    use crate::reduction::{fixed_set, reduce_instance};

    fn toy_table() -> BlockTable {
        let inst = parse_cctt(TOY_CTT).unwrap();
        let h = reduce_instance(&inst).unwrap();
        block_order_enumerate(&h, &toy_blocks(&inst), &fixed_set(&h)).unwrap()
    }

    #[test]
    fn toy_rows() {
        let table = toy_table();
        assert_eq!(table.rows.len(), 24);
        let expect: [(&[&str], [usize; 4]); 6] = [
            (&["T", "A", "S", "G"], [8, 11, 10, 9]),
            (&["T", "S", "A", "G"], [8, 14, 7, 9]),
            (&["A", "T", "S", "G"], [11, 6, 10, 9]),
            (&["S", "T", "A", "G"], [11, 14, 2, 9]),
            (&["A", "S", "T", "G"], [14, 6, 5, 9]),
            (&["S", "A", "T", "G"], [14, 9, 2, 9]),
        ];
        for (order, values) in expect {
            assert_eq!(table.row(order).unwrap().values, values, "{order:?}");
        }
        // with both S and T before A, the last vertex of A sees 2 + 4 + 3 + 5
        assert_eq!(table.row(&["S", "T", "A", "G"]).unwrap().values[1], 2 + 4 + 3 + 5);
        assert_eq!(table.ending_with("G").map(BlockRow::max).min(), Some(11));
        assert_eq!(table.minimum(), 11);
    }

    #[test]
    fn refuses_inhomogeneous_blocks() {
        let inst = parse_cctt(TOY_CTT).unwrap();
        let h = reduce_instance(&inst).unwrap();
        let mut blocks = toy_blocks(&inst);
        let a = blocks.remove(1).1;
        blocks[1].1.extend(a);
        assert!(block_order_enumerate(&h, &blocks, &fixed_set(&h)).is_err());
    }
}
