//! Undirected simple graphs and the large sum graph built on them.

mod export;
mod invariants;
mod large_sum;
mod search;

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

pub use export::{to_dot, GraphDocument, VertexRecord};
pub use invariants::{
    bfs_distances, complete_multipartite_parts, components, cut_vertices, degrees, diameter, girth,
    is_complete, is_star, pendant_vertices, regular_degree, universal_vertices, GraphInvariants,
};
pub use large_sum::{build_graph, LargeSumGraph};
pub use search::{clique_number, domination_number, independence_number, SearchResult};

/// Adjacency-matrix graph on vertices `0..n` with bitset rows.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    rows: Vec<FixedBitSet>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for a in 0..n {
            for b in a + 1..n {
                g.add_edge(a, b);
            }
        }
        g
    }

    /// Loops are ignored.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.rows[a].insert(b);
            self.rows[b].insert(a);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn is_null(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].ones()
    }

    pub fn row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones(..)
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.rows.len())
            .flat_map(|a| {
                self.rows[a]
                    .ones()
                    .filter(move |&b| b > a)
                    .map(move |b| (a, b))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.rows.len();
        let mut g = SimpleGraph::new(n);
        for a in 0..n {
            for b in a + 1..n {
                if !self.has_edge(a, b) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Induced subgraph on `keep`, relabelled `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(keep.len());
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SimpleGraph(n={}, edges={:?})",
            self.vertex_count(),
            self.edges()
        )
    }
}

/// A distance-like quantity that may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extent {
    Finite(usize),
    Infinite,
}

impl Extent {
    pub fn finite(self) -> Option<usize> {
        match self {
            Extent::Finite(d) => Some(d),
            Extent::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Extent::Finite(_))
    }
}

impl fmt::Display for Extent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extent::Finite(d) => write!(f, "{d}"),
            Extent::Infinite => write!(f, "inf"),
        }
    }
}

/// Finite values serialize as numbers, infinity as the string `"inf"`.
impl Serialize for Extent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extent::Finite(d) => s.serialize_u64(*d as u64),
            Extent::Infinite => s.serialize_str("inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 2)]);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert!(g.has_edge(1, 0));
        assert_eq!(g.degree(1), 2);
        let c = g.complement();
        assert_eq!(c.edge_count(), 4);
        assert!(!c.has_edge(0, 1));
        let sub = g.induced(&[2, 1]);
        assert_eq!(sub.edges(), vec![(0, 1)]);
        assert_eq!(SimpleGraph::complete(4).edge_count(), 6);
    }

    #[test]
    fn extent_json() {
        assert_eq!(serde_json::to_string(&Extent::Finite(2)).unwrap(), "2");
        assert_eq!(serde_json::to_string(&Extent::Infinite).unwrap(), "\"inf\"");
        assert!(Extent::Finite(100) < Extent::Infinite);
    }
}
