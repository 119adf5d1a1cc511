//! Slow, obviously-correct answers used as ground truth by the tests.

#![allow(dead_code)]

use ramsey_core::selftest::Oracle;
use ramsey_core::Graph;

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

/// Cycle of exactly `len` vertices, by listing simple paths that start at
/// the cycle's smallest vertex.
pub fn naive_has_cycle(g: &Graph, len: usize) -> bool {
    fn extend(adj: &[Vec<bool>], path: &mut Vec<usize>, used: &mut [bool], len: usize) -> bool {
        let (start, last) = (path[0], *path.last().unwrap());
        if path.len() == len {
            return adj[last][start];
        }
        for w in start + 1..adj.len() {
            if !used[w] && adj[last][w] {
                used[w] = true;
                path.push(w);
                let hit = extend(adj, path, used, len);
                path.pop();
                used[w] = false;
                if hit {
                    return true;
                }
            }
        }
        false
    }
    if len < 3 || len > g.order() {
        return false;
    }
    let adj = adjacency(g);
    (0..g.order()).any(|s| {
        let mut used = vec![false; g.order()];
        used[s] = true;
        extend(&adj, &mut vec![s], &mut used, len)
    })
}

/// Maximum matching size by branching on the lowest unmatched vertex.
pub fn naive_matching(g: &Graph) -> usize {
    fn go(adj: &[Vec<bool>], free: &mut [bool]) -> usize {
        let Some(v) = free.iter().position(|&f| f) else { return 0 };
        free[v] = false;
        let mut best = go(adj, free);
        for u in v + 1..adj.len() {
            if free[u] && adj[v][u] {
                free[u] = false;
                best = best.max(1 + go(adj, free));
                free[u] = true;
            }
        }
        free[v] = true;
        best
    }
    go(&adjacency(g), &mut vec![true; g.order()])
}

/// Vertices covered by a maximum fractional matching, from the deficiency
/// formula `n - max_S (i(G - S) - |S|)`, where `i` counts isolated vertices.
pub fn deficiency_cover(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 16);
    let adj = adjacency(g);
    let mut worst = 0i64;
    for s in 0u32..(1 << n) {
        let isolated = (0..n)
            .filter(|&v| s >> v & 1 == 0 && (0..n).all(|u| s >> u & 1 == 1 || !adj[v][u]))
            .count() as i64;
        worst = worst.max(isolated - s.count_ones() as i64);
    }
    (n as i64 - worst) as usize
}

fn connected_without(adj: &[Vec<bool>], skip: Option<usize>) -> bool {
    let n = adj.len();
    let Some(start) = (0..n).find(|&v| Some(v) != skip) else { return true };
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for u in 0..n {
            if adj[v][u] && !seen[u] && Some(u) != skip {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    (0..n).all(|v| seen[v] || Some(v) == skip)
}

pub fn naive_two_connected(g: &Graph) -> bool {
    let adj = adjacency(g);
    g.order() >= 3 && connected_without(&adj, None) && (0..g.order()).all(|v| connected_without(&adj, Some(v)))
}

pub struct Naive;

impl Oracle for Naive {
    fn has_cycle(&self, g: &Graph, len: usize) -> bool {
        naive_has_cycle(g, len)
    }

    fn fractional_cover(&self, g: &Graph) -> usize {
        deficiency_cover(g)
    }

    fn is_two_connected(&self, g: &Graph) -> bool {
        naive_two_connected(g)
    }
}

/// Deterministic `G(n, p)` from a small linear congruential stream, so
/// tests need no extra dependencies.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next_f64(&mut self) -> f64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_f64() * n as f64) as usize
    }

    pub fn graph(&mut self, n: usize, p: f64) -> Graph {
        let mut g = Graph::new(n);
        for v in 1..n {
            for u in 0..v {
                if self.next_f64() < p {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}
