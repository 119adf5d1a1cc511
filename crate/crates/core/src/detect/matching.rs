//! Maximum cardinality matching in general graphs (Edmonds' blossom algorithm).

use crate::graph::Graph;
use std::collections::VecDeque;

const NONE: usize = usize::MAX;

/// `mate[v]` is `v`'s partner in a maximum matching.
pub fn maximum_matching(g: &Graph) -> Vec<Option<usize>> {
    let mut b = Blossom::new(g);
    // Greedy start; every later phase adds one edge.
    for u in 0..b.n {
        if b.mate[u] == NONE {
            if let Some(w) = g.neighbors(u).find(|&w| b.mate[w] == NONE) {
                b.mate[u] = w;
                b.mate[w] = u;
            }
        }
    }
    for root in 0..b.n {
        if b.mate[root] == NONE {
            let end = b.find_augmenting_path(root);
            b.augment(end);
        }
    }
    b.mate.iter().map(|&m| (m != NONE).then_some(m)).collect()
}

pub fn max_matching(g: &Graph) -> usize {
    maximum_matching(g).iter().filter(|m| m.is_some()).count() / 2
}

struct Blossom<'g> {
    g: &'g Graph,
    n: usize,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        Self {
            g,
            n,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.n];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> usize {
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            let neighbours: Vec<usize> = self.g.neighbors(v).collect();
            for to in neighbours {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..self.n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        NONE
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn check_valid(g: &Graph) -> usize {
        let mate = maximum_matching(g);
        for (v, m) in mate.iter().enumerate() {
            if let Some(w) = *m {
                assert!(g.has_edge(v, w));
                assert_eq!(mate[w], Some(v));
            }
        }
        mate.iter().filter(|m| m.is_some()).count() / 2
    }

    #[test]
    fn small_examples() {
        assert_eq!(check_valid(&cycle(5)), 2);
        assert_eq!(check_valid(&complete(6)), 3);
        assert_eq!(check_valid(&star(5)), 1);
        assert_eq!(check_valid(&Graph::new(3)), 0);
    }

    #[test]
    fn petersen_has_perfect_matching() {
        assert_eq!(check_valid(&petersen()), 5);
    }

    #[test]
    fn blossom_needed() {
        // Two triangles joined by a path: greedy can get stuck without contraction.
        let g = Graph::from_edges(
            8,
            [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 5)],
        );
        assert_eq!(check_valid(&g), 4);
    }
}
