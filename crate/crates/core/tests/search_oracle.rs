use ramsey_core::search::{exists_good_coloring, ramsey_number, verify_witness, Existence, SearchStatus};
use ramsey_core::FamilySpec;

fn spec(s: &str) -> FamilySpec {
    s.parse().unwrap()
}

fn value(red: &str, blue: &str) -> usize {
    let out = ramsey_number(spec(red), spec(blue), 12);
    assert_eq!(out.status, SearchStatus::RamseyValue, "{red} vs {blue}: {:?}", out.transcript);
    let w = out.witness.as_ref().expect("witness below the value");
    assert_eq!(w.order(), out.value - 1);
    assert!(verify_witness(w, spec(red), spec(blue)).passed());
    out.value
}

#[test]
fn c6_c4() {
    assert_eq!(value("C6", "C4"), 7);
}

#[test]
fn c6_c6() {
    assert_eq!(value("C6", "C6"), 8);
}

#[test]
fn c4_c4() {
    assert_eq!(value("C4", "C4"), 6);
}

#[test]
fn matching_fan_small() {
    assert_eq!(value("M2", "F2"), 6);
    assert_eq!(value("M3", "F3"), 9);
}

#[test]
fn star_wheel_small() {
    assert_eq!(value("S2", "W6"), 7);
    assert_eq!(value("S2", "W4"), 5);
}

#[test]
fn color_swap_symmetry() {
    for (a, b) in [("C4", "C6"), ("S2", "W4"), ("M2", "F2"), ("K3", "C4")] {
        assert_eq!(value(a, b), value(b, a), "{a} {b}");
    }
}

#[test]
fn found_is_monotone_in_order() {
    for n in 1..=5 {
        assert!(matches!(exists_good_coloring(spec("C4"), spec("C4"), n).result, Existence::Found(_)));
    }
    assert_eq!(exists_good_coloring(spec("C4"), spec("C4"), 6).result, Existence::None);
}
