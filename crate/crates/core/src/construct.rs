//! Extremal lower-bound colorings.
//!
//! Every generator lays its parts out contiguously (cliques in order, `X`
//! before `Y`), so the output is deterministic. A [`WitnessReport`] carries
//! the coloring, the two avoided families and whether the detectors confirmed
//! that neither appears.

use crate::coloring::TwoColoring;
use crate::detect::{contains_family, DetectionResult};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::{named, Graph};
use serde::Serialize;

#[derive(Clone, Debug)]
pub struct WitnessReport {
    pub generator: &'static str,
    pub params: Vec<(&'static str, usize)>,
    pub coloring: TwoColoring,
    pub avoided_red: FamilySpec,
    pub avoided_blue: FamilySpec,
    /// Order of the coloring plus one.
    pub claimed_bound: usize,
    pub certified: bool,
}

impl WitnessReport {
    fn new(
        generator: &'static str,
        params: Vec<(&'static str, usize)>,
        coloring: TwoColoring,
        avoided_red: FamilySpec,
        avoided_blue: FamilySpec,
    ) -> Self {
        // A budget-exhausted search does not certify.
        let certified = contains_family(coloring.red(), avoided_red) == DetectionResult::NotFound
            && contains_family(&coloring.blue(), avoided_blue) == DetectionResult::NotFound;
        Self {
            generator,
            params,
            claimed_bound: coloring.order() + 1,
            coloring,
            avoided_red,
            avoided_blue,
            certified,
        }
    }

    /// Header lines for the witness file.
    pub fn metadata(&self) -> Vec<(String, String)> {
        let mut meta = vec![("generator".to_string(), self.generator.to_string())];
        for (k, v) in &self.params {
            meta.push((k.to_string(), v.to_string()));
        }
        meta.push(("avoided-red".into(), self.avoided_red.to_string()));
        meta.push(("avoided-blue".into(), self.avoided_blue.to_string()));
        meta.push(("claimed-bound".into(), self.claimed_bound.to_string()));
        meta
    }
}

fn out_of_regime(msg: String) -> Error {
    Error::OutOfRegime(msg)
}

/// Disjoint cliques of the given orders, laid out in order.
fn disjoint_cliques(sizes: &[usize]) -> Graph {
    sizes
        .iter()
        .fold(Graph::new(0), |g, &s| g.disjoint_union(&named::complete(s)))
}

/// A `(k-1)`-regular graph on `n` vertices whose components have at most
/// `2k - 1` vertices.
///
/// Exists iff `k >= 1` and either `n = 0` or `k <= n`, with `n` or `k - 1` even. Built
/// as copies of `K_k` with the remainder folded into one circulant of order
/// between `k + 1` and `2k - 1`.
pub fn regular_bounded_components(n: usize, k: usize) -> Result<Graph> {
    let d = k.checked_sub(1).ok_or_else(|| Error::Infeasible("k must be at least 1".into()))?;
    if n == 0 {
        return Ok(Graph::new(0));
    }
    if k > n {
        return Err(Error::Infeasible(format!(
            "a {d}-regular graph needs more than {n} vertices"
        )));
    }
    if n % 2 == 1 && d % 2 == 1 {
        return Err(Error::Infeasible(format!(
            "no {d}-regular graph on an odd number ({n}) of vertices"
        )));
    }
    let (q, r) = (n / k, n % k);
    let mut g = Graph::new(0);
    let full = if r == 0 { q } else { q - 1 };
    for _ in 0..full {
        g = g.disjoint_union(&named::complete(k));
    }
    if r > 0 {
        let s = k + r;
        let mut jumps: Vec<usize> = (1..=d / 2).collect();
        if d % 2 == 1 {
            // s is even here: n is even and every K_k before it has even order.
            jumps.push(s / 2);
        }
        g = g.disjoint_union(&named::circulant(s, &jumps));
    }
    Ok(g)
}

/// Red `K_{1,m}` versus blue `W_{2n}`, `m >= n >= 2`.
///
/// Red `Y` is a clique of order `m`; all `X`-`Y` edges are blue; inside `X`
/// the blue graph is `(n-1)`-regular with components of order at most
/// `2n - 1`. `|X| = n + m - 1`, or `n + m - 2` when `m` and `n` are even.
pub fn witness_star_wheel(m: usize, n: usize) -> Result<WitnessReport> {
    if n < 2 || m < n {
        return Err(out_of_regime(format!("star-wheel needs m >= n >= 2, got m={m}, n={n}")));
    }
    let x = if m % 2 == 0 && n % 2 == 0 { n + m - 2 } else { n + m - 1 };
    let blue_x = regular_bounded_components(x, n)?;
    let total = x + m;
    let mut red = Graph::new(total);
    let red_x = blue_x.complement();
    for (u, v) in red_x.edges() {
        red.add_edge(u, v);
    }
    for u in x..total {
        for v in u + 1..total {
            red.add_edge(u, v);
        }
    }
    Ok(WitnessReport::new(
        "star-wheel",
        vec![("m", m), ("n", n)],
        TwoColoring::from_red(red),
        FamilySpec::star(m),
        FamilySpec::wheel(2 * n),
    ))
}

/// Which of the two parity constructions a min-degree witness uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MinDegreeCase {
    /// `k - 1` even or `⌊(n+k)/2⌋` even.
    Balanced,
    /// `k - 1` odd and `⌊(n+k)/2⌋` odd.
    Shifted,
}

#[derive(Clone, Debug)]
pub struct MinDegreeWitness {
    pub graph: Graph,
    pub case: MinDegreeCase,
    pub min_degree: usize,
}

/// An `n`-vertex graph without `W_{2k}` and with large minimum degree,
/// `2 <= k < n/3`.
///
/// `X` carries a `(k-1)`-regular graph with small components and is joined
/// completely to the independent set `Y`.
pub fn witness_mindegree_wheel(n: usize, k: usize) -> Result<MinDegreeWitness> {
    if k < 2 || 3 * k >= n {
        return Err(out_of_regime(format!("mindeg-wheel needs 2 <= k < n/3, got n={n}, k={k}")));
    }
    let half_floor = (n + k) / 2;
    let half_ceil = (n + k).div_ceil(2);
    let (case, x, min_degree) = if (k - 1) % 2 == 0 || half_floor % 2 == 0 {
        (MinDegreeCase::Balanced, half_floor, half_ceil - 1)
    } else {
        (MinDegreeCase::Shifted, half_floor - 1, half_floor - 1)
    };
    let mut graph = regular_bounded_components(x, k)?.disjoint_union(&Graph::new(n - x));
    for u in 0..x {
        for v in x..n {
            graph.add_edge(u, v);
        }
    }
    Ok(MinDegreeWitness { graph, case, min_degree })
}

/// The min-degree witness read as a coloring: blue is the graph, so red has
/// maximum degree `n - 1 - δ` and avoids `K_{1, n-δ}`.
pub fn witness_mindegree_wheel_report(n: usize, k: usize) -> Result<WitnessReport> {
    let w = witness_mindegree_wheel(n, k)?;
    Ok(WitnessReport::new(
        "mindeg-wheel",
        vec![("n", n), ("k", k), ("min-degree", w.min_degree)],
        TwoColoring::from_blue(&w.graph),
        FamilySpec::star(n - w.min_degree),
        FamilySpec::wheel(2 * k),
    ))
}

/// Two red cliques of order `2m - 1`, blue between; `m >= n >= 2`.
pub fn witness_cycle_wheel_two_cliques(m: usize, n: usize) -> Result<WitnessReport> {
    if n < 2 || m < n {
        return Err(out_of_regime(format!("cycle-wheel needs m >= n >= 2, got m={m}, n={n}")));
    }
    Ok(WitnessReport::new(
        "cycle-wheel",
        vec![("m", m), ("n", n)],
        TwoColoring::from_red(disjoint_cliques(&[2 * m - 1, 2 * m - 1])),
        FamilySpec::cycle(2 * m),
        FamilySpec::wheel(2 * n),
    ))
}

/// Red cliques of orders `2m - 1`, `n - 1`, `n - 1`; `2 <= m`, `n/2 <= m < n`.
pub fn witness_cycle_fan_three_cliques(m: usize, n: usize) -> Result<WitnessReport> {
    if m < 2 || n > 2 * m || m >= n {
        return Err(out_of_regime(format!(
            "cycle-fan needs m >= 2 and n/2 <= m < n, got m={m}, n={n}"
        )));
    }
    Ok(WitnessReport::new(
        "cycle-fan",
        vec![("m", m), ("n", n)],
        TwoColoring::from_red(disjoint_cliques(&[2 * m - 1, n - 1, n - 1])),
        FamilySpec::cycle(2 * m),
        FamilySpec::fan(n),
    ))
}

/// Parameters of the red-clique construction against `K_{1,2n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CycleStarShape {
    /// `(2n-1)/q < 2m-1 <= (2n-1)/(q-1)`.
    pub q: usize,
    /// `(q+1)(2n-1) < q²(2m-1)`: `q` cliques of order `2m-1`.
    pub few_large: bool,
    /// `2n - 1 ≡ r (mod q)` with `1 <= r <= q`.
    pub r: usize,
    pub vertices: usize,
}

/// Shape of the cycle-star construction for any `2 <= m <= n`.
pub fn cycle_star_shape(m: usize, n: usize) -> CycleStarShape {
    let (a, b) = (2 * n - 1, 2 * m - 1);
    let q = a / b + 1;
    let few_large = (q + 1) * a < q * q * b;
    let r = match a % q {
        0 => q,
        r => r,
    };
    let vertices = if few_large {
        q * b
    } else {
        (q + 1) * a.div_ceil(q) - (q - r)
    };
    CycleStarShape { q, few_large, r, vertices }
}

/// Red cliques against blue `K_{1,2n}` (and so `W_{2n}`), `2 <= m <= n`.
/// The interesting range is `m < n/2`; above it other constructions win.
///
/// Either `q` cliques of order `2m - 1`, or `q + 1` cliques of orders
/// `⌈(2n-1)/q⌉` (`r` of them) and `⌈(2n-1)/q⌉ - 1` plus an apex joined in
/// red to the smaller ones.
pub fn witness_cycle_star_cliques(m: usize, n: usize) -> Result<WitnessReport> {
    if m < 2 || m > n {
        return Err(out_of_regime(format!("cycle-star needs 2 <= m <= n, got m={m}, n={n}")));
    }
    let shape = cycle_star_shape(m, n);
    let red = if shape.few_large {
        disjoint_cliques(&vec![2 * m - 1; shape.q])
    } else {
        let big = (2 * n - 1).div_ceil(shape.q);
        let mut sizes = vec![big; shape.r];
        sizes.extend(std::iter::repeat_n(big - 1, shape.q - shape.r + 1));
        let mut g = disjoint_cliques(&sizes).disjoint_union(&Graph::new(1));
        let apex = g.order() - 1;
        for v in shape.r * big..apex {
            g.add_edge(v, apex);
        }
        g
    };
    debug_assert_eq!(red.order(), shape.vertices);
    Ok(WitnessReport::new(
        "cycle-star",
        vec![("m", m), ("n", n), ("q", shape.q)],
        TwoColoring::from_red(red),
        FamilySpec::cycle(2 * m),
        FamilySpec::star(2 * n),
    ))
}

/// `|X| = n - 1`, `|Y| = 2n`; red between the sets, blue inside; `n >= 2`.
pub fn witness_matching_fan(n: usize) -> Result<WitnessReport> {
    if n < 2 {
        return Err(out_of_regime(format!("matching-fan needs n >= 2, got n={n}")));
    }
    let red = named::complete_bipartite(n - 1, 2 * n);
    Ok(WitnessReport::new(
        "matching-fan",
        vec![("n", n)],
        TwoColoring::from_red(red),
        FamilySpec::matching(n),
        FamilySpec::fan(n),
    ))
}

pub fn multipartite_complete(part_sizes: &[usize]) -> Result<Graph> {
    if part_sizes.contains(&0) {
        return Err(Error::Infeasible("every part needs at least one vertex".into()));
    }
    Ok(disjoint_cliques(part_sizes).complement())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn regular_with_small_components(g: &Graph, d: usize, cap: usize) -> bool {
        let s = g.degree_stats();
        (g.order() == 0 || (s.min == d && s.max == d)) && g.components().iter().all(|c| c.len() <= cap)
    }

    #[test]
    fn lemma_examples() {
        let g = regular_bounded_components(7, 3).unwrap();
        assert!(regular_with_small_components(&g, 2, 5));
        let mut sizes: Vec<usize> = g.components().iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 4]);
        assert_eq!(regular_bounded_components(6, 1).unwrap().edge_count(), 0);
        let g = regular_bounded_components(10, 5).unwrap();
        assert_eq!(g, named::complete(5).disjoint_union(&named::complete(5)));
    }

    #[test]
    fn lemma_infeasible() {
        assert!(regular_bounded_components(5, 2).is_err());
        assert!(regular_bounded_components(3, 4).is_err());
        assert!(regular_bounded_components(4, 5).is_err());
        assert!(regular_bounded_components(0, 1).is_ok());
    }

    #[test]
    fn star_wheel_sizes() {
        let w = witness_star_wheel(4, 3).unwrap();
        assert_eq!((w.coloring.order(), w.claimed_bound), (10, 11));
        assert!(w.certified);
        let w = witness_star_wheel(4, 4).unwrap();
        assert_eq!((w.coloring.order(), w.claimed_bound), (10, 11));
        assert!(w.certified);
        assert_eq!(witness_star_wheel(6, 3).unwrap().claimed_bound, 15);
        assert!(witness_star_wheel(2, 3).is_err());
    }

    #[test]
    fn mindegree_cases() {
        let w = witness_mindegree_wheel(20, 3).unwrap();
        assert_eq!(w.case, MinDegreeCase::Balanced);
        assert_eq!(w.min_degree, 11);
        assert_eq!(w.graph.min_degree(), 11);
        let w = witness_mindegree_wheel(22, 4).unwrap();
        assert_eq!(w.case, MinDegreeCase::Shifted);
        assert_eq!(w.graph.min_degree(), w.min_degree);
        assert!(witness_mindegree_wheel(9, 3).is_err());
    }

    #[test]
    fn clique_witnesses() {
        let w = witness_cycle_wheel_two_cliques(3, 2).unwrap();
        assert_eq!((w.coloring.order(), w.claimed_bound), (10, 11));
        assert!(w.certified);
        let w = witness_cycle_fan_three_cliques(3, 4).unwrap();
        assert_eq!((w.coloring.order(), w.claimed_bound), (11, 12));
        assert!(w.certified);
        assert!(witness_cycle_fan_three_cliques(5, 4).is_err());
    }

    #[test]
    fn cycle_star_shapes() {
        let s = cycle_star_shape(3, 7);
        assert_eq!((s.q, s.few_large, s.r, s.vertices), (3, false, 1, 18));
        let s = cycle_star_shape(4, 8);
        assert_eq!((s.q, s.few_large, s.vertices), (3, true, 21));
        let w = witness_cycle_star_cliques(3, 7).unwrap();
        assert!(w.certified);
        assert!(w.coloring.blue().max_degree() <= 13);
    }

    #[test]
    fn matching_fan() {
        let w = witness_matching_fan(3).unwrap();
        assert_eq!((w.coloring.order(), w.claimed_bound), (8, 9));
        assert!(w.certified);
    }

    #[test]
    fn multipartite() {
        assert_eq!(multipartite_complete(&[3, 3]).unwrap(), named::complete_bipartite(3, 3));
        let mut k4e = named::complete(4);
        k4e.remove_edge(2, 3);
        assert_eq!(multipartite_complete(&[1, 1, 2]).unwrap(), k4e);
        assert_eq!(multipartite_complete(&[2, 2, 2]).unwrap().edge_count(), 12);
    }
}
