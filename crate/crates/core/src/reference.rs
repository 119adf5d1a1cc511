//! Exponential-time reference answers for tiny graphs.
//!
//! These share no code with the detectors and exist to cross-check them.

use crate::graph::Graph;
use crate::selftest::Oracle;

/// Largest order the subset dynamic programs accept.
pub const MAX_ORDER: usize = 20;

fn masks(g: &Graph) -> Vec<u32> {
    let n = g.order();
    assert!(n <= MAX_ORDER, "reference oracle limited to {MAX_ORDER} vertices");
    (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |m, u| m | 1 << u))
        .collect()
}

/// `ends[mask]` for paths starting at `s` that visit exactly `mask`, where
/// every vertex of `mask` is at least `s`. Bit `v` set means some such path
/// ends at `v`.
fn path_ends(adj: &[u32], s: usize, max_size: u32) -> Vec<u32> {
    let n = adj.len();
    let mut ends = vec![0u32; 1 << n];
    ends[1 << s] = 1 << s;
    let above: u32 = !((1u32 << s) - 1) & ((1u64 << n) - 1) as u32;
    for mask in 0..(1u32 << n) {
        let e = ends[mask as usize];
        if e == 0 || mask.count_ones() >= max_size {
            continue;
        }
        let mut rest = e;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut next = adj[v] & above & !mask;
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                ends[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    ends
}

/// Vertex sets of size at least 3 that carry a Hamiltonian cycle.
fn hamiltonian_sets(adj: &[u32], max_size: u32) -> Vec<bool> {
    let n = adj.len();
    let mut ham = vec![false; 1 << n];
    for s in 0..n {
        let ends = path_ends(adj, s, max_size);
        for (mask, &e) in ends.iter().enumerate() {
            if e & adj[s] != 0 && (mask as u32).count_ones() >= 3 && mask.trailing_zeros() as usize == s {
                ham[mask] = true;
            }
        }
    }
    ham
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Brute;

impl Brute {
    pub fn has_cycle(g: &Graph, len: usize) -> bool {
        if len < 3 || len > g.order() {
            return false;
        }
        let adj = masks(g);
        (0..adj.len()).any(|s| {
            path_ends(&adj, s, len as u32)
                .iter()
                .enumerate()
                .any(|(mask, &e)| (mask as u32).count_ones() as usize == len && e & adj[s] != 0)
        })
    }

    /// Most vertices covered by vertex-disjoint edges and odd cycles.
    /// `ok[mask]` says `mask` splits exactly into such pieces.
    pub fn fractional_cover(g: &Graph) -> usize {
        let adj = masks(g);
        let n = adj.len();
        let ham = hamiltonian_sets(&adj, n as u32);
        let mut ok = vec![false; 1 << n];
        ok[0] = true;
        let mut best = 0;
        for mask in 1..(1u32 << n) {
            let s = mask.trailing_zeros();
            let rest = mask & !(1 << s);
            let mut good = false;
            let mut edges = adj[s as usize] & rest;
            while !good && edges != 0 {
                let t = edges.trailing_zeros();
                edges &= edges - 1;
                good = ok[(rest & !(1 << t)) as usize];
            }
            // Odd cycles through `s` inside `mask`.
            let mut sub = rest;
            while !good && sub != 0 {
                let c = sub | 1 << s;
                if c.count_ones() % 2 == 1 && ham[c as usize] {
                    good = ok[(mask & !c) as usize];
                }
                sub = (sub - 1) & rest;
            }
            ok[mask as usize] = good;
            if good {
                best = best.max(mask.count_ones() as usize);
            }
        }
        best
    }

    pub fn is_two_connected(g: &Graph) -> bool {
        let adj = masks(g);
        let n = adj.len();
        let full = ((1u64 << n) - 1) as u32;
        n >= 3 && connected(&adj, full) && (0..n).all(|v| connected(&adj, full & !(1 << v)))
    }
}

fn connected(adj: &[u32], within: u32) -> bool {
    if within == 0 {
        return true;
    }
    let mut seen = 1u32 << within.trailing_zeros();
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & within & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == within
}

impl Oracle for Brute {
    fn has_cycle(&self, g: &Graph, len: usize) -> bool {
        Brute::has_cycle(g, len)
    }

    fn fractional_cover(&self, g: &Graph) -> usize {
        Brute::fractional_cover(g)
    }

    fn is_two_connected(&self, g: &Graph) -> bool {
        Brute::is_two_connected(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn cycles_in_small_graphs() {
        let p = named::petersen();
        assert!(!Brute::has_cycle(&p, 3));
        assert!(!Brute::has_cycle(&p, 4));
        assert!(Brute::has_cycle(&p, 5));
        assert!(Brute::has_cycle(&p, 6) && Brute::has_cycle(&p, 8) && Brute::has_cycle(&p, 9));
        assert!(!Brute::has_cycle(&p, 7) && !Brute::has_cycle(&p, 10));
        assert!(Brute::has_cycle(&named::complete_bipartite(3, 3), 6));
        assert!(!Brute::has_cycle(&named::complete_bipartite(3, 3), 5));
    }

    #[test]
    fn covers() {
        assert_eq!(Brute::fractional_cover(&named::cycle(5)), 5);
        assert_eq!(Brute::fractional_cover(&named::star(3)), 2);
        assert_eq!(Brute::fractional_cover(&named::path(5)), 4);
        assert_eq!(Brute::fractional_cover(&named::petersen()), 10);
        assert_eq!(Brute::fractional_cover(&Graph::new(3)), 0);
    }

    #[test]
    fn two_connectivity() {
        assert!(Brute::is_two_connected(&named::cycle(4)));
        assert!(!Brute::is_two_connected(&named::path(4)));
        assert!(!Brute::is_two_connected(&named::complete(2)));
    }
}
