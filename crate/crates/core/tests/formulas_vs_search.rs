use ramsey_core::formulas::{
    cycle_wheel_bounds, even_cycle_ramsey, even_wheel_diag_bounds, matching_fan_value, star_wheel_value, Exactness, Pair,
};
use ramsey_core::search::{ramsey_number, SearchStatus};
use ramsey_core::FamilySpec;

fn oracle(red: FamilySpec, blue: FamilySpec) -> i64 {
    let out = ramsey_number(red, blue, 10);
    assert_eq!(out.status, SearchStatus::RamseyValue, "{red} {blue}");
    out.value as i64
}

#[test]
fn star_wheel_small_values_match_search() {
    for n in 2..=4u64 {
        for m in 1..=n {
            let v = star_wheel_value(m, n).unwrap();
            let Some(exact) = v.value().filter(|&x| x <= 9) else { continue };
            let found = oracle(FamilySpec::star(m as usize), FamilySpec::wheel(2 * n as usize));
            assert_eq!(found, exact, "R(S{m}, W{})", 2 * n);
        }
    }
}

#[test]
fn matching_fan_and_cycles_match_search() {
    for n in 2..=3u64 {
        let f = matching_fan_value(n).unwrap().value().unwrap();
        assert_eq!(oracle(FamilySpec::matching(n as usize), FamilySpec::fan(n as usize)), f);
        assert_eq!(oracle(FamilySpec::matching(n as usize), FamilySpec::wheel(2 * n as usize)), f);
    }
    for (m, n) in [(3, 2), (3, 3)] {
        let v = even_cycle_ramsey(m, n).unwrap().value().unwrap();
        assert_eq!(oracle(FamilySpec::cycle(2 * m as usize), FamilySpec::cycle(2 * n as usize)), v);
    }
}

#[test]
fn sandwich_holds_far_out() {
    for n in 2..=10_000u64 {
        let star = star_wheel_value(2 * n, n).unwrap().lower_int().unwrap();
        let diag = even_wheel_diag_bounds(n).unwrap();
        let twice = 2 * cycle_wheel_bounds(n, n).unwrap().upper_int().unwrap();
        let (lo, hi) = (diag.lower_int().unwrap(), diag.upper_int().unwrap());
        assert!(star <= hi && hi <= twice && lo <= hi, "n={n}");
    }
}

#[test]
fn every_pair_evaluates_or_explains() {
    for pair in Pair::ALL {
        for m in 0..=12 {
            for n in 0..=12 {
                match pair.evaluate(m, n) {
                    Ok(b) => {
                        if b.exactness == Exactness::Exact {
                            assert_eq!(b.lower, b.upper);
                        }
                        if let (Some(l), Some(u)) = (b.lower_int(), b.upper_int()) {
                            assert!(l <= u, "{pair} ({m},{n})");
                        }
                    }
                    Err(e) => assert!(!e.to_string().is_empty()),
                }
            }
        }
    }
}
