//! Dense simple undirected graphs on vertices `0..n`.
//!
//! Adjacency is one word-packed bit row per vertex, so neighbourhood
//! intersections and degree queries are a handful of `popcount`s. Every
//! instance this crate deals with has at most a few hundred vertices.

use crate::bitset::{count_and, words_for, Ones, VertexSet};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

/// An induced subgraph together with the original label of each new vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `labels[i]` is the vertex of the parent graph that became vertex `i`.
    pub labels: Vec<usize>,
}

impl InducedSubgraph {
    pub fn to_parent(&self, vertices: &[usize]) -> Vec<usize> {
        vertices.iter().map(|&v| self.labels[v]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    /// Nondecreasing.
    pub sequence: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let stride = words_for(n);
        Self {
            n,
            stride,
            rows: vec![0; stride * n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.rows[v * self.stride..(v + 1) * self.stride]
    }

    /// Adds `uv`. Panics on a self-loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge {u}-{v} out of range for n={}", self.n);
        assert_ne!(u, v, "self-loop at {u}");
        self.row_mut(u)[v / 64] |= 1 << (v % 64);
        self.row_mut(v)[u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.row_mut(u)[v / 64] &= !(1 << (v % 64));
        self.row_mut(v)[u / 64] &= !(1 << (u % 64));
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> Ones<'_> {
        Ones::new(self.row(v))
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.row(v).to_vec(), self.n)
    }

    /// `|N(u) ∩ N(v)|`.
    pub fn common_degree(&self, u: usize, v: usize) -> usize {
        count_and(self.row(u), self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> InducedSubgraph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        InducedSubgraph {
            graph: g,
            labels: vertices.to_vec(),
        }
    }

    pub fn induced_set(&self, set: &VertexSet) -> InducedSubgraph {
        self.induced(&set.iter().collect::<Vec<_>>())
    }

    /// `G[N(v)]`, labelled by ascending original index.
    pub fn neighborhood_subgraph(&self, v: usize) -> InducedSubgraph {
        assert!(v < self.n, "vertex {v} out of range for n={}", self.n);
        self.induced(&self.neighbors(v).collect::<Vec<_>>())
    }

    /// `G - X`.
    pub fn without(&self, removed: &VertexSet) -> InducedSubgraph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| !removed.contains(v)).collect();
        self.induced(&keep)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let mut sequence: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        sequence.sort_unstable();
        DegreeStats {
            min: sequence.first().copied().unwrap_or(0),
            max: sequence.last().copied().unwrap_or(0),
            sequence,
        }
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = VertexSet::new(self.n);
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.neighbors(u) {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// Named graphs used as targets and test fixtures.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    /// `C_n` on `0..n` in cyclic order; `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// `W_k`: hub `0` joined to a `k`-cycle on `1..=k`. `W_1 = K_2`, `W_2 = K_3`.
    pub fn wheel(k: usize) -> Graph {
        match k {
            0 => panic!("wheel parameter must be positive"),
            1 => complete(2),
            2 => complete(3),
            _ => {
                let mut g = Graph::new(k + 1);
                for i in 1..=k {
                    g.add_edge(0, i);
                    g.add_edge(i, if i == k { 1 } else { i + 1 });
                }
                g
            }
        }
    }

    /// `F_k`: hub `0` joined to the matching `{1,2}, {3,4}, ...`.
    pub fn fan(k: usize) -> Graph {
        let mut g = star(2 * k);
        for i in 0..k {
            g.add_edge(2 * i + 1, 2 * i + 2);
        }
        g
    }

    /// `K_{1,m}` with centre `0`.
    pub fn star(m: usize) -> Graph {
        Graph::from_edges(m + 1, (1..=m).map(|v| (0, v)))
    }

    /// `n K_2`.
    pub fn matching(n: usize) -> Graph {
        Graph::from_edges(2 * n, (0..n).map(|i| (2 * i, 2 * i + 1)))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    pub fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    /// Circulant on `n` vertices: `i ~ i ± s (mod n)` for each `s` in `jumps`.
    pub fn circulant(n: usize, jumps: &[usize]) -> Graph {
        let mut g = Graph::new(n);
        for i in 0..n {
            for &s in jumps {
                let j = (i + s) % n;
                if j != i {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}
