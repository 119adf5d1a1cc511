use ramsey_core::construct::*;
use ramsey_core::detect::{contains_family, max_matching};
use ramsey_core::search::verify_witness;
use ramsey_core::selftest::{build_witness, sweep_instances};
use ramsey_core::{witness, FamilySpec, TwoColoring};

#[test]
fn full_grid_certifies() {
    for (name, m, n) in sweep_instances() {
        let w = build_witness(name, m, n).unwrap_or_else(|e| panic!("{name}({m},{n}): {e}"));
        assert!(w.certified, "{name}({m},{n})");
        assert_eq!(w.claimed_bound, w.coloring.order() + 1);
    }
}

#[test]
fn star_wheel_sizes() {
    // m even, n odd: |X| = n + m - 1, |Y| = m.
    let w = witness_star_wheel(4, 3).unwrap();
    assert_eq!((w.coloring.order(), w.claimed_bound), (10, 11));
    // Both even: |X| = n + m - 2.
    let w = witness_star_wheel(4, 4).unwrap();
    assert_eq!((w.coloring.order(), w.claimed_bound), (10, 11));
    // m = 2n with n odd reaches 5n.
    assert_eq!(witness_star_wheel(6, 3).unwrap().claimed_bound, 15);
    assert!(witness_star_wheel(2, 3).is_err());
}

#[test]
fn mindegree_examples() {
    let w = witness_mindegree_wheel(20, 3).unwrap();
    assert_eq!(w.graph.order(), 20);
    assert_eq!(w.min_degree, 11);
    assert_eq!(w.graph.min_degree(), 11);
    assert!(!contains_family(&w.graph, FamilySpec::wheel(6)).found());
    let w = witness_mindegree_wheel(22, 4).unwrap();
    assert_eq!(w.case, MinDegreeCase::Shifted);
    assert!(!contains_family(&w.graph, FamilySpec::wheel(8)).found());
    assert!(witness_mindegree_wheel(9, 3).is_err());
}

#[test]
fn clique_constructions() {
    let w = witness_cycle_wheel_two_cliques(3, 2).unwrap();
    assert_eq!((w.coloring.order(), w.claimed_bound), (10, 11));
    assert_eq!(witness_cycle_wheel_two_cliques(2, 2).unwrap().claimed_bound, 7);
    assert!(witness_cycle_wheel_two_cliques(4, 3).unwrap().certified);

    let w = witness_cycle_fan_three_cliques(3, 4).unwrap();
    assert_eq!((w.coloring.order(), w.claimed_bound), (11, 12));
    assert_eq!(witness_cycle_fan_three_cliques(2, 3).unwrap().claimed_bound, 8);
    assert!(witness_cycle_fan_three_cliques(5, 4).is_err());
}

#[test]
fn cycle_star_sub_cases() {
    let w = witness_cycle_star_cliques(3, 7).unwrap();
    assert_eq!(w.coloring.order(), 18);
    assert!(w.certified);
    assert!(w.coloring.blue().max_degree() <= 13);
    // Sub-case 1: q cliques of order 2m - 1.
    let w = witness_cycle_star_cliques(4, 8).unwrap();
    assert_eq!(w.claimed_bound, 3 * 7 + 1);
    assert!(w.certified);
    assert!(witness_cycle_star_cliques(5, 4).is_err());
}

#[test]
fn matching_fan_sizes() {
    for n in 2..=6 {
        let w = witness_matching_fan(n).unwrap();
        assert_eq!(w.claimed_bound, 3 * n);
        assert_eq!(max_matching(w.coloring.red()), n - 1);
    }
}

#[test]
fn multipartite_examples() {
    assert_eq!(multipartite_complete(&[3, 3]).unwrap().edge_count(), 9);
    assert_eq!(multipartite_complete(&[1, 1, 2]).unwrap().edge_count(), 5);
    let oct = multipartite_complete(&[2, 2, 2]).unwrap();
    assert!((0..6).all(|v| oct.degree(v) == 4));
    assert!(multipartite_complete(&[2, 0]).is_err());
}

#[test]
fn file_round_trip_keeps_report() {
    let w = witness_cycle_wheel_two_cliques(3, 2).unwrap();
    let text = witness::write(&w.coloring, &w.metadata());
    let back = witness::parse(&text).unwrap();
    assert_eq!(back.coloring, w.coloring);
    assert_eq!(back.meta("claimed-bound"), Some("11"));
    assert_eq!(
        verify_witness(&back.coloring, w.avoided_red, w.avoided_blue),
        verify_witness(&w.coloring, w.avoided_red, w.avoided_blue)
    );
}

#[test]
fn flipping_any_edge_never_breaks_verification() {
    let w = witness_star_wheel(3, 2).unwrap();
    let n = w.coloring.order();
    for v in 1..n {
        for u in 0..v {
            let mut red = w.coloring.red().clone();
            if red.has_edge(u, v) {
                red.remove_edge(u, v);
            } else {
                red.add_edge(u, v);
            }
            let report = verify_witness(&TwoColoring::from_red(red), w.avoided_red, w.avoided_blue);
            assert!(!report.red.is_exhausted() && !report.blue.is_exhausted());
        }
    }
}
