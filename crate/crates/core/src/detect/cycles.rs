//! Exact-length cycle search.
//!
//! A cycle is searched for inside a single block, anchored at its
//! lowest-indexed vertex: partial paths start at the anchor and only use
//! higher vertices. Three cutoffs keep the search small:
//!
//! * a vertex is only appended if its BFS distance back to the anchor fits
//!   in the remaining length;
//! * a greedy independent set `I` bounds any cycle by `2(|V| - |I|)`, and
//!   bipartite blocks only carry even cycles;
//! * failed `(visited set, endpoint)` states are remembered, so refuting a
//!   length never revisits a state.

use super::structure::{blocks, is_bipartite, Bipartiteness};
use super::{Budget, DetectionResult, Exhausted, Meter};
use crate::bitset::VertexSet;
use crate::graph::Graph;
use std::collections::HashSet;
use std::hash::{BuildHasherDefault, Hasher};

/// Failed-state memo stops growing past this many entries.
const MEMO_CAP: usize = 1 << 22;

pub fn has_cycle_of_length(g: &Graph, len: usize) -> DetectionResult {
    has_cycle_of_length_with(g, len, &mut Budget::default().meter())
}

pub fn has_cycle_of_length_with(g: &Graph, len: usize, meter: &mut Meter) -> DetectionResult {
    assert!(len >= 3, "cycle length must be at least 3, got {len}");
    if len > g.order() {
        return DetectionResult::NotFound;
    }
    let mut exhausted = false;
    for block in blocks(g).blocks.into_iter().filter(|b| b.len() >= len) {
        let sub = g.induced(&block);
        match search_block(&sub.graph, len, None, meter) {
            DetectionResult::Found(c) => return DetectionResult::Found(sub.to_parent(&c)),
            DetectionResult::BudgetExhausted => exhausted = true,
            DetectionResult::NotFound => {}
        }
    }
    if exhausted {
        DetectionResult::BudgetExhausted
    } else {
        DetectionResult::NotFound
    }
}

/// Cycle of exactly `len` vertices passing through `v`; witness starts at `v`.
pub fn has_cycle_through(g: &Graph, len: usize, v: usize, meter: &mut Meter) -> DetectionResult {
    assert!(len >= 3, "cycle length must be at least 3, got {len}");
    if len > g.order() || g.degree(v) < 2 {
        return DetectionResult::NotFound;
    }
    let mut exhausted = false;
    for block in blocks(g).blocks.into_iter().filter(|b| b.len() >= len) {
        let Ok(pos) = block.binary_search(&v) else { continue };
        let sub = g.induced(&block);
        match search_block(&sub.graph, len, Some(pos), meter) {
            DetectionResult::Found(c) => return DetectionResult::Found(sub.to_parent(&c)),
            DetectionResult::BudgetExhausted => exhausted = true,
            DetectionResult::NotFound => {}
        }
    }
    if exhausted {
        DetectionResult::BudgetExhausted
    } else {
        DetectionResult::NotFound
    }
}

/// Search one 2-connected block. With `through = Some(a)` only cycles through
/// `a` are considered (all other vertices allowed); otherwise every vertex is
/// tried as the lowest-indexed anchor.
fn search_block(h: &Graph, len: usize, through: Option<usize>, meter: &mut Meter) -> DetectionResult {
    let n = h.order();
    if let Bipartiteness::Bipartite { left, right } = is_bipartite(h) {
        if len % 2 == 1 || len > 2 * left.len().min(right.len()) {
            return DetectionResult::NotFound;
        }
    }
    let anchors: Vec<usize> = match through {
        Some(a) => vec![a],
        None => (0..n.saturating_sub(len - 1)).collect(),
    };
    for a in anchors {
        let allowed = match through {
            Some(_) => VertexSet::full(n),
            None => VertexSet::from_iter_with_capacity(n, a..n),
        };
        if allowed.len() < len || !fits_independence_bound(h, &allowed, len) {
            continue;
        }
        let mut search = AnchoredSearch::new(h, a, allowed, len);
        match search.run(meter) {
            Ok(Some(c)) => return DetectionResult::Found(c),
            Ok(None) => {}
            Err(Exhausted) => return DetectionResult::BudgetExhausted,
        }
    }
    DetectionResult::NotFound
}

/// Any independent set `I` of `G[allowed]` limits cycles to `2(|allowed| - |I|)`.
fn fits_independence_bound(h: &Graph, allowed: &VertexSet, len: usize) -> bool {
    let mut rest = allowed.clone();
    let mut independent = 0;
    while !rest.is_empty() {
        // Greedy: take a vertex of minimum degree in what remains.
        let v = rest
            .iter()
            .min_by_key(|&u| crate::bitset::count_and(h.row(u), rest.words()))
            .expect("nonempty");
        independent += 1;
        rest.remove(v);
        rest.difference_with(h.row(v));
    }
    len <= 2 * (allowed.len() - independent)
}

#[derive(Default)]
struct MixHasher(u64);

impl Hasher for MixHasher {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.write_u64(b as u64);
        }
    }
    fn write_u64(&mut self, x: u64) {
        self.0 = (self.0.rotate_left(5) ^ x).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    }
    fn write_u128(&mut self, x: u128) {
        self.write_u64(x as u64);
        self.write_u64((x >> 64) as u64);
    }
    fn write_usize(&mut self, x: usize) {
        self.write_u64(x as u64);
    }
}

type FailMemo = HashSet<(u128, u8), BuildHasherDefault<MixHasher>>;

struct AnchoredSearch<'g> {
    g: &'g Graph,
    anchor: usize,
    allowed: VertexSet,
    len: usize,
    dist: Vec<usize>,
    visited: VertexSet,
    path: Vec<usize>,
    memo: Option<FailMemo>,
}

impl<'g> AnchoredSearch<'g> {
    fn new(g: &'g Graph, anchor: usize, allowed: VertexSet, len: usize) -> Self {
        let n = g.order();
        let mut dist = vec![usize::MAX; n];
        dist[anchor] = 0;
        let mut queue = std::collections::VecDeque::from([anchor]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if allowed.contains(w) && dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        let mut visited = VertexSet::new(n);
        visited.insert(anchor);
        Self {
            g,
            anchor,
            allowed,
            len,
            dist,
            visited,
            path: vec![anchor],
            memo: (n <= 128).then(FailMemo::default),
        }
    }

    fn run(&mut self, meter: &mut Meter) -> Result<Option<Vec<usize>>, Exhausted> {
        if self.extend(self.anchor, meter)? {
            Ok(Some(self.path.clone()))
        } else {
            Ok(None)
        }
    }

    fn key(&self, v: usize) -> (u128, u8) {
        let w = self.visited.words();
        let lo = w.first().copied().unwrap_or(0) as u128;
        let hi = w.get(1).copied().unwrap_or(0) as u128;
        (lo | hi << 64, v as u8)
    }

    /// `v` is the current endpoint and already on the path.
    fn extend(&mut self, v: usize, meter: &mut Meter) -> Result<bool, Exhausted> {
        meter.tick()?;
        let depth = self.path.len();
        if depth == self.len {
            return Ok(self.g.has_edge(v, self.anchor));
        }
        let key = self.memo.as_ref().map(|_| self.key(v));
        if let (Some(memo), Some(k)) = (&self.memo, key) {
            if memo.contains(&k) {
                return Ok(false);
            }
        }
        let mut cand = self.allowed.clone();
        cand.intersect_with(self.g.row(v));
        cand.difference_with(self.visited.words());
        if depth + 1 == self.len {
            cand.intersect_with(self.g.row(self.anchor));
            if let Some(w) = cand.first() {
                self.path.push(w);
                return Ok(true);
            }
        } else {
            let slack = self.len - depth;
            for w in cand.iter() {
                if self.dist[w] > slack {
                    continue;
                }
                self.visited.insert(w);
                self.path.push(w);
                if self.extend(w, meter)? {
                    return Ok(true);
                }
                self.path.pop();
                self.visited.remove(w);
            }
        }
        if let (Some(memo), Some(k)) = (&mut self.memo, key) {
            if memo.len() < MEMO_CAP {
                memo.insert(k);
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn assert_cycle(g: &Graph, c: &[usize], len: usize) {
        assert_eq!(c.len(), len);
        let mut seen = c.to_vec();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), len, "repeated vertex in {c:?}");
        for i in 0..len {
            assert!(g.has_edge(c[i], c[(i + 1) % len]), "{c:?} not a cycle");
        }
    }

    #[test]
    fn triangle_in_k4() {
        let g = complete(4);
        let r = has_cycle_of_length(&g, 3);
        assert_cycle(&g, r.witness().unwrap(), 3);
    }

    #[test]
    fn c6_has_no_c4() {
        assert_eq!(has_cycle_of_length(&cycle(6), 4), DetectionResult::NotFound);
        assert!(has_cycle_of_length(&cycle(6), 6).found());
    }

    #[test]
    fn k33_parity() {
        let g = complete_bipartite(3, 3);
        for len in [4, 6] {
            assert_cycle(&g, has_cycle_of_length(&g, len).witness().unwrap(), len);
        }
        assert_eq!(has_cycle_of_length(&g, 5), DetectionResult::NotFound);
    }

    #[test]
    fn longer_than_graph() {
        assert_eq!(has_cycle_of_length(&complete(4), 5), DetectionResult::NotFound);
    }

    #[test]
    fn petersen_spectrum() {
        // Girth 5, no 7-cycles, no Hamiltonian cycle.
        let g = petersen();
        let found: Vec<usize> = (3..=10).filter(|&l| has_cycle_of_length(&g, l).found()).collect();
        assert_eq!(found, vec![5, 6, 8, 9]);
    }

    #[test]
    fn through_vertex() {
        // Triangle 0-1-2 plus pendant square 2-3-4-5.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 2)]);
        let mut m = Budget::default().meter();
        assert!(has_cycle_through(&g, 3, 0, &mut m).found());
        assert!(!has_cycle_through(&g, 4, 0, &mut m).found());
        let w = has_cycle_through(&g, 4, 3, &mut m);
        assert_eq!(w.witness().unwrap()[0], 3);
    }

    #[test]
    fn tiny_budget_reports_exhaustion() {
        let g = complete(12);
        let mut m = Budget::nodes(3).meter();
        assert_eq!(has_cycle_of_length_with(&g, 12, &mut m), DetectionResult::BudgetExhausted);
    }
}
