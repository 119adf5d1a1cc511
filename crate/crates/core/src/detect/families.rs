use super::clique::find_clique;
use super::cycles::{has_cycle_of_length_with, has_cycle_through};
use super::matching::maximum_matching;
use super::{Budget, DetectionResult, Meter};
use crate::family::{FamilyKind, FamilySpec};
use crate::graph::Graph;

pub fn contains_family(g: &Graph, f: FamilySpec) -> DetectionResult {
    contains_family_with(g, f, &mut Budget::default().meter())
}

pub fn contains_family_with(g: &Graph, f: FamilySpec, meter: &mut Meter) -> DetectionResult {
    let k = f.param;
    match f.kind {
        FamilyKind::Cycle => has_cycle_of_length_with(g, k, meter),
        FamilyKind::Wheel => find_wheel(g, k, meter),
        FamilyKind::Fan => {
            let mut hubs: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= 2 * k).collect();
            hubs.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
            for hub in hubs {
                if let Some(w) = fan_at(g, hub, k) {
                    return DetectionResult::Found(w);
                }
            }
            DetectionResult::NotFound
        }
        FamilyKind::Star => match (0..g.order()).find(|&v| g.degree(v) >= k) {
            Some(c) => DetectionResult::Found(std::iter::once(c).chain(g.neighbors(c).take(k)).collect()),
            None => DetectionResult::NotFound,
        },
        FamilyKind::Matching => match matching_edges(g, k) {
            Some(w) => DetectionResult::Found(w),
            None => DetectionResult::NotFound,
        },
        FamilyKind::Clique => match find_clique(g, k) {
            Some(w) => DetectionResult::Found(w),
            None => DetectionResult::NotFound,
        },
    }
}

/// A copy of `f` that uses vertex `v`.
///
/// Used by the coloring search, where the graph minus `v` is already known
/// to be `f`-free, so any copy must pass through the newest vertex.
pub fn contains_family_through(g: &Graph, f: FamilySpec, v: usize, meter: &mut Meter) -> DetectionResult {
    let k = f.param;
    match f.kind {
        FamilyKind::Cycle => has_cycle_through(g, k, v, meter),
        FamilyKind::Wheel => match k {
            1 | 2 => contains_family_through(g, FamilySpec::clique(k + 1), v, meter),
            _ => {
                if g.degree(v) >= k {
                    let sub = g.neighborhood_subgraph(v);
                    match has_cycle_of_length_with(&sub.graph, k, meter) {
                        DetectionResult::Found(c) => return DetectionResult::Found(hub_first(v, sub.to_parent(&c))),
                        DetectionResult::BudgetExhausted => return DetectionResult::BudgetExhausted,
                        DetectionResult::NotFound => {}
                    }
                }
                for hub in g.neighbors(v) {
                    if g.degree(hub) < k {
                        continue;
                    }
                    let sub = g.neighborhood_subgraph(hub);
                    let pos = sub.labels.binary_search(&v).expect("v is a neighbour of hub");
                    match has_cycle_through(&sub.graph, k, pos, meter) {
                        DetectionResult::Found(c) => return DetectionResult::Found(hub_first(hub, sub.to_parent(&c))),
                        DetectionResult::BudgetExhausted => return DetectionResult::BudgetExhausted,
                        DetectionResult::NotFound => {}
                    }
                }
                DetectionResult::NotFound
            }
        },
        FamilyKind::Fan => {
            for hub in std::iter::once(v).chain(g.neighbors(v)) {
                if g.degree(hub) >= 2 * k {
                    if let Some(w) = fan_at(g, hub, k) {
                        return DetectionResult::Found(w);
                    }
                }
            }
            DetectionResult::NotFound
        }
        FamilyKind::Star => {
            for c in std::iter::once(v).chain(g.neighbors(v)) {
                if g.degree(c) >= k {
                    return DetectionResult::Found(std::iter::once(c).chain(g.neighbors(c).take(k)).collect());
                }
            }
            DetectionResult::NotFound
        }
        FamilyKind::Matching => contains_family_with(g, f, meter),
        FamilyKind::Clique => {
            if k == 1 {
                return DetectionResult::Found(vec![v]);
            }
            let sub = g.neighborhood_subgraph(v);
            match find_clique(&sub.graph, k - 1) {
                Some(c) => DetectionResult::Found(hub_first(v, sub.to_parent(&c))),
                None => DetectionResult::NotFound,
            }
        }
    }
}

fn hub_first(hub: usize, rest: Vec<usize>) -> Vec<usize> {
    std::iter::once(hub).chain(rest).collect()
}

fn find_wheel(g: &Graph, k: usize, meter: &mut Meter) -> DetectionResult {
    match k {
        1 => match g.edges().next() {
            Some((u, v)) => DetectionResult::Found(vec![u, v]),
            None => DetectionResult::NotFound,
        },
        2 => match find_clique(g, 3) {
            Some(t) => DetectionResult::Found(t),
            None => DetectionResult::NotFound,
        },
        _ => {
            let mut hubs: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= k).collect();
            hubs.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
            let mut exhausted = false;
            for hub in hubs {
                let sub = g.neighborhood_subgraph(hub);
                match has_cycle_of_length_with(&sub.graph, k, meter) {
                    DetectionResult::Found(c) => return DetectionResult::Found(hub_first(hub, sub.to_parent(&c))),
                    // Another hub may still succeed within budget.
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
    }
}

fn fan_at(g: &Graph, hub: usize, k: usize) -> Option<Vec<usize>> {
    let sub = g.neighborhood_subgraph(hub);
    let pairs = matching_edges(&sub.graph, k)?;
    Some(hub_first(hub, sub.to_parent(&pairs)))
}

/// First `k` edges of a maximum matching, flattened as `u0 v0 u1 v1 ...`.
fn matching_edges(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let mate = maximum_matching(g);
    let edges: Vec<usize> = mate
        .iter()
        .enumerate()
        .filter_map(|(u, m)| m.filter(|&w| w > u).map(|w| [u, w]))
        .take(k)
        .flatten()
        .collect();
    (edges.len() == 2 * k).then_some(edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn wheel_in_itself_hub_first() {
        let w = contains_family(&wheel(6), FamilySpec::wheel(6));
        assert_eq!(w.witness().unwrap()[0], 0);
        assert_eq!(w.witness().unwrap().len(), 7);
    }

    #[test]
    fn k5_contains_f2() {
        let r = contains_family(&complete(5), FamilySpec::fan(2));
        assert_eq!(r.witness().unwrap().len(), 5);
        assert!(!contains_family(&complete(4), FamilySpec::fan(2)).found());
    }

    #[test]
    fn small_wheels() {
        assert!(contains_family(&complete(2), FamilySpec::wheel(1)).found());
        assert!(!contains_family(&Graph::new(3), FamilySpec::wheel(1)).found());
        assert!(contains_family(&complete(3), FamilySpec::wheel(2)).found());
        assert!(!contains_family(&cycle(4), FamilySpec::wheel(2)).found());
        assert!(!contains_family(&complete_bipartite(4, 4), FamilySpec::wheel(4)).found());
        assert!(contains_family(&complete(5), FamilySpec::wheel(4)).found());
    }

    #[test]
    fn stars_and_matchings() {
        assert!(contains_family(&star(4), FamilySpec::star(4)).found());
        assert!(!contains_family(&star(4), FamilySpec::star(5)).found());
        assert!(contains_family(&petersen(), FamilySpec::matching(5)).found());
        assert!(!contains_family(&cycle(5), FamilySpec::matching(3)).found());
    }

    #[test]
    fn through_vertex_variants() {
        let mut m = Budget::default().meter();
        let g = wheel(4);
        // Rim vertex 1 lies on the wheel.
        assert!(contains_family_through(&g, FamilySpec::wheel(4), 1, &mut m).found());
        let mut h = cycle(5);
        h = h.disjoint_union(&Graph::new(1));
        assert!(!contains_family_through(&h, FamilySpec::cycle(5), 5, &mut m).found());
        assert!(contains_family_through(&h, FamilySpec::cycle(5), 2, &mut m).found());
        assert!(contains_family_through(&complete(4), FamilySpec::clique(4), 3, &mut m).found());
        assert!(contains_family_through(&star(3), FamilySpec::star(3), 2, &mut m).found());
    }
}
