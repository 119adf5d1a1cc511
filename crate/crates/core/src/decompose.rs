//! Cut-vertex deletion towards 2-connected pieces, and maximum fractional
//! matchings with the `(A, C, D)` decomposition they induce.

use crate::bitset::VertexSet;
use crate::detect::{blocks, is_two_connected, maximum_matching};
use crate::graph::Graph;
use rayon::prelude::*;
use serde::Serialize;

/// Delete cut vertices one at a time until every component of `g - X` is
/// 2-connected or has at most two vertices.
///
/// Each round removes the cut vertex whose smallest split-off piece is
/// largest, lowest index first on ties. When `δ(g) >= n/k + k` the result has
/// at most `k - 2` vertices.
pub fn two_connect_reduce(g: &Graph, k: usize) -> Vec<usize> {
    assert!(k >= 2, "k must be at least 2, got {k}");
    let n = g.order();
    let mut removed = VertexSet::new(n);
    loop {
        let rest = g.without(&removed);
        let cuts = blocks(&rest.graph).cut_vertices;
        if cuts.is_empty() {
            break;
        }
        let comp_of = component_index(&rest.graph);
        let best = cuts
            .iter()
            .map(|&c| (smallest_piece(&rest.graph, &comp_of, c), c))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|(_, c)| c)
            .expect("nonempty");
        removed.insert(rest.labels[best]);
    }
    removed.iter().collect()
}

fn component_index(g: &Graph) -> Vec<usize> {
    let mut idx = vec![0; g.order()];
    for (i, comp) in g.components().into_iter().enumerate() {
        for v in comp {
            idx[v] = i;
        }
    }
    idx
}

/// Order of the smallest component that `c` splits off from its own component.
fn smallest_piece(g: &Graph, comp_of: &[usize], c: usize) -> usize {
    let mut gone = VertexSet::new(g.order());
    gone.insert(c);
    let rest = g.without(&gone);
    rest.graph
        .components()
        .into_iter()
        .filter(|comp| comp_of[rest.labels[comp[0]]] == comp_of[c])
        .map(|comp| comp.len())
        .min()
        .unwrap_or(0)
}

/// True when every component of `g - removed` is 2-connected or has at most
/// two vertices.
pub fn components_two_connected(g: &Graph, removed: &[usize]) -> bool {
    let rest = g.without(&VertexSet::from_iter_with_capacity(g.order(), removed.iter().copied()));
    rest.graph
        .components()
        .into_iter()
        .all(|comp| comp.len() <= 2 || is_two_connected(&rest.graph.induced(&comp).graph))
}

/// One component of a fractional matching.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FractionalPart {
    Edge(usize, usize),
    /// Vertices in cycle order; odd length at least 3.
    OddCycle(Vec<usize>),
}

impl FractionalPart {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            FractionalPart::Edge(u, v) => vec![*u, *v],
            FractionalPart::OddCycle(c) => c.clone(),
        }
    }
}

/// Vertex-disjoint edges and odd cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FractionalMatching {
    pub components: Vec<FractionalPart>,
    pub covered: usize,
}

/// Vertices covered by a maximum fractional matching: the matching number of
/// the bipartite double cover.
pub fn fractional_matching_number(g: &Graph) -> usize {
    let mate = maximum_matching(&double_cover(g));
    mate.iter().filter(|m| m.is_some()).count() / 2
}

/// Left copy of `v` is `v`, right copy is `n + v`.
fn double_cover(g: &Graph) -> Graph {
    let n = g.order();
    let mut h = Graph::new(2 * n);
    for (u, v) in g.edges() {
        h.add_edge(u, n + v);
        h.add_edge(v, n + u);
    }
    h
}

pub fn max_fractional_matching(g: &Graph) -> FractionalMatching {
    let n = g.order();
    let mate = maximum_matching(&double_cover(g));
    // Arc u -> v whenever the left copy of u is matched to the right copy of v.
    let succ: Vec<Option<usize>> = (0..n).map(|u| mate[u].map(|r| r - n)).collect();
    let mut pred = vec![None; n];
    for (u, s) in succ.iter().enumerate() {
        if let Some(v) = *s {
            pred[v] = Some(u);
        }
    }
    let mut done = vec![false; n];
    let mut components = Vec::new();
    // Paths first, from their start vertices.
    for start in 0..n {
        if pred[start].is_some() || succ[start].is_none() {
            continue;
        }
        let mut path = vec![start];
        let mut v = start;
        while let Some(w) = succ[v] {
            path.push(w);
            v = w;
        }
        for &x in &path {
            done[x] = true;
        }
        split_into_edges(&path, &mut components);
    }
    for start in 0..n {
        if done[start] || succ[start].is_none() {
            continue;
        }
        let mut cyc = vec![start];
        let mut v = succ[start].expect("on a cycle");
        while v != start {
            cyc.push(v);
            v = succ[v].expect("on a cycle");
        }
        for &x in &cyc {
            done[x] = true;
        }
        match cyc.len() {
            2 => components.push(FractionalPart::Edge(cyc[0].min(cyc[1]), cyc[0].max(cyc[1]))),
            l if l % 2 == 1 => components.push(FractionalPart::OddCycle(cyc)),
            _ => split_into_edges(&cyc, &mut components),
        }
    }
    let covered = components.iter().map(|c| c.vertices().len()).sum();
    FractionalMatching { components, covered }
}

fn split_into_edges(walk: &[usize], out: &mut Vec<FractionalPart>) {
    for pair in walk.chunks_exact(2) {
        out.push(FractionalPart::Edge(pair[0].min(pair[1]), pair[0].max(pair[1])));
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PulleyblankDecomposition {
    pub a: Vec<usize>,
    pub c: Vec<usize>,
    pub d: Vec<usize>,
    pub p: usize,
}

impl PulleyblankDecomposition {
    /// Names of the structural identities that fail on `g`; empty when all hold.
    ///
    /// The bound `|A| >= δ(G)` is only checked when `D` is nonempty: with a
    /// perfect fractional matching it contradicts `2|A| + |C| = p`.
    pub fn violations(&self, g: &Graph) -> Vec<&'static str> {
        let n = g.order();
        let (a, c, d) = (self.a.len(), self.c.len(), self.d.len());
        let mut bad = Vec::new();
        if a + c + d != n {
            bad.push("partition");
        }
        if d + self.p != a + n {
            bad.push("|D| = |A| + |V| - p");
        }
        if 2 * a + c != self.p {
            bad.push("2|A| + |C| = p");
        }
        if self.d.iter().any(|&u| self.d.iter().any(|&v| g.has_edge(u, v))) {
            bad.push("D independent");
        }
        if self.c.iter().any(|&u| self.d.iter().any(|&v| g.has_edge(u, v))) {
            bad.push("no C-D edges");
        }
        if d > 0 && a < g.min_degree() {
            bad.push("|A| >= min degree");
        }
        bad
    }
}

/// `D` holds the vertices some maximum fractional matching leaves exposed,
/// `A = N(D) \ D`, and `C` is everything else.
pub fn pulleyblank_decomposition(g: &Graph) -> PulleyblankDecomposition {
    let n = g.order();
    let p = fractional_matching_number(g);
    let in_d: Vec<bool> = (0..n)
        .into_par_iter()
        .map(|v| {
            let mut gone = VertexSet::new(n);
            gone.insert(v);
            fractional_matching_number(&g.without(&gone).graph) == p
        })
        .collect();
    let d: Vec<usize> = (0..n).filter(|&v| in_d[v]).collect();
    let mut in_a = vec![false; n];
    for &v in &d {
        for w in g.neighbors(v) {
            in_a[w] = !in_d[w];
        }
    }
    let a: Vec<usize> = (0..n).filter(|&v| in_a[v]).collect();
    let c: Vec<usize> = (0..n).filter(|&v| !in_a[v] && !in_d[v]).collect();
    PulleyblankDecomposition { a, c, d, p }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn two_connected_needs_nothing() {
        assert!(two_connect_reduce(&petersen(), 3).is_empty());
    }

    #[test]
    fn two_k5_sharing_a_vertex() {
        let mut g = Graph::new(9);
        for block in [[0, 1, 2, 3, 4], [4, 5, 6, 7, 8]] {
            for (i, &u) in block.iter().enumerate() {
                for &v in &block[i + 1..] {
                    g.add_edge(u, v);
                }
            }
        }
        assert_eq!(two_connect_reduce(&g, 5), vec![4]);
    }

    #[test]
    fn paths_terminate() {
        let x = two_connect_reduce(&path(7), 2);
        assert!(components_two_connected(&path(7), &x));
    }

    #[test]
    fn fractional_examples() {
        assert_eq!(max_fractional_matching(&complete(3)).covered, 3);
        assert_eq!(max_fractional_matching(&cycle(4)).covered, 4);
        assert_eq!(max_fractional_matching(&star(3)).covered, 2);
        assert_eq!(max_fractional_matching(&cycle(5)).components.len(), 1);
    }

    #[test]
    fn star_decomposition() {
        let dec = pulleyblank_decomposition(&star(3));
        assert_eq!(dec, PulleyblankDecomposition { a: vec![0], c: vec![], d: vec![1, 2, 3], p: 2 });
        assert!(dec.violations(&star(3)).is_empty());
    }

    #[test]
    fn perfect_fractional_matching() {
        let dec = pulleyblank_decomposition(&cycle(5));
        assert_eq!((dec.a.len(), dec.c.len(), dec.d.len(), dec.p), (0, 5, 0, 5));
        assert!(dec.violations(&cycle(5)).is_empty());
    }
}
