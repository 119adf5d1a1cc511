use super::{BoundValue, ErrorClass, Exactness, Flag, FormulaConfig, Pair, Rational, RegimeTag, Term};
use crate::construct::cycle_star_shape;
use crate::error::{Error, Result};

/// Additive constant in the upper bound for `n/2 <= m < n`: three times the
/// pancyclicity constant `75·10⁴/d⁵` at `d = 1/6`.
pub const CYCLE_WHEEL_MID_CONSTANT: i64 = 3 * 750_000 * 7776;

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfRegime(msg()))
    }
}

fn even(x: u64) -> i64 {
    (x % 2 == 0) as i64
}

/// `R(K_{1,m}, W_{2n})`, `m >= 1`, `n >= 2`.
pub fn star_wheel_value(m: u64, n: u64) -> Result<BoundValue> {
    require(m >= 1 && n >= 2, || format!("star-wheel needs m >= 1 and n >= 2, got m={m}, n={n}"))?;
    let (mi, ni) = (m as i64, n as i64);
    let theta = m % 2 == 0 && n % 2 == 0;
    let construction = 2 * mi + ni - theta as i64;
    let mut tag = RegimeTag::new(Pair::StarWheel, "");
    tag.theta = Some(theta);
    if m <= n {
        tag.case = "m<=n".into();
        return Ok(BoundValue::exact(
            mi + 2 * ni - even(m),
            tag,
            "star vs even wheel for m <= n (Hasmawati; Li-Schiermeyer)",
        ));
    }
    tag.c = Some(mi - ni);
    if n >= 3 && m <= 2 * n - 2 {
        tag.case = "n<m<=2n-2".into();
        return Ok(BoundValue::exact(construction, tag, "star vs even wheel for n < m <= 2n-2 (Li-Schiermeyer)"));
    }
    if n >= 3 && m + 1000 <= 3 * n {
        tag.case = "n<m<=3n-1000".into();
        return Ok(BoundValue::exact(
            construction,
            tag,
            "star vs even wheel for 3 <= n < m <= 3n-1000, lower construction of Li-Schiermeyer",
        ));
    }
    if n >= 3 && m == 2 * n - 1 {
        tag.case = "m=2n-1".into();
        return Ok(BoundValue::interval(
            5 * ni - 2,
            5 * ni - 1,
            ErrorClass::AdditiveConstant,
            tag,
            "star K_{1,2n-1} vs W_{2n}",
        ));
    }
    tag.case = "m>n".into();
    let mut bv = BoundValue {
        lower: Term::int(construction),
        upper: Term::Leading {
            value: Rational::from_integer(2 * mi + ni),
            expr: "(2+o(1))m+n".into(),
        },
        exactness: Exactness::Asymptotic,
        error_class: ErrorClass::LittleO,
        regime: tag,
        provenance: "star vs even wheel for m > n: Li-Schiermeyer construction, asymptotic upper bound".into(),
        flags: vec![Flag::SufficientlyLarge],
    };
    if n == 2 {
        bv = bv.with_flag(Flag::W4Exception);
    }
    Ok(bv)
}

/// `R(C_{2m}, C_{2n})`, `m, n >= 2`, `(m, n) != (2, 2)`.
pub fn even_cycle_ramsey(m: u64, n: u64) -> Result<BoundValue> {
    require(m >= 2 && n >= 2, || format!("cycle-cycle needs m, n >= 2, got m={m}, n={n}"))?;
    if (m, n) == (2, 2) {
        return Err(Error::ExcludedCase("R(C4, C4) = 6 falls outside the general formula".into()));
    }
    let (mi, ni) = (m as i64, n as i64);
    let (case, v) = if m >= n { ("m>=n", 2 * mi + ni - 1) } else { ("m<n", mi + 2 * ni - 1) };
    Ok(BoundValue::exact(
        v,
        RegimeTag::new(Pair::CycleCycle, case),
        "even cycles (Faudree-Schelp; Rosta)",
    ))
}

/// Regime of `(m, n)` for `R(C_{2m}, W_{2n})`.
pub fn regime_classify(m: u64, n: u64) -> Result<RegimeTag> {
    require(m >= 2 && n >= 2, || format!("cycle-wheel needs m, n >= 2, got m={m}, n={n}"))?;
    let mut tag = RegimeTag::new(Pair::CycleWheel, "");
    if m >= n {
        tag.case = "m>=n".into();
        tag.c = Some(m as i64 - n as i64);
    } else if 2 * m >= n {
        tag.case = "n/2<=m<n".into();
    } else {
        let q = n.div_ceil(m);
        tag.q = Some(q);
        tag.case = if m_at_least_boundary(m, n, q) {
            "(2q+o(1))m".into()
        } else {
            "(2+2/q+o(1))n".into()
        };
    }
    Ok(tag)
}

/// `m >= (q+1)n/q²`, compared exactly.
fn m_at_least_boundary(m: u64, n: u64, q: u64) -> bool {
    Rational::from_integer(m as i64) >= Rational::new(((q + 1) * n) as i64, (q * q) as i64)
}

pub fn cycle_wheel_bounds(m: u64, n: u64) -> Result<BoundValue> {
    cycle_wheel_bounds_with(m, n, &FormulaConfig::default())
}

/// `R(C_{2m}, W_{2n})`, `m, n >= 2`.
pub fn cycle_wheel_bounds_with(m: u64, n: u64, cfg: &FormulaConfig) -> Result<BoundValue> {
    let tag = regime_classify(m, n)?;
    let (mi, ni) = (m as i64, n as i64);
    if m >= n {
        let c = mi - ni;
        let upper = (4 * mi + 332 - 333 * c / 251).max(4 * mi - 1);
        return Ok(BoundValue::interval(
            4 * mi - 1,
            upper,
            ErrorClass::AdditiveConstant,
            tag,
            "even cycle vs even wheel, m >= n: two-clique construction and upper bound max{4m+332-floor(333c/251), 4m-1}",
        ));
    }
    if 2 * m >= n {
        let bv = BoundValue::interval(
            2 * mi + 2 * ni - 2,
            2 * mi + 2 * ni + CYCLE_WHEEL_MID_CONSTANT,
            ErrorClass::AdditiveConstant,
            tag,
            "even cycle vs even wheel, n/2 <= m < n: three-clique construction, upper constant C = 3*75*10^4*6^5",
        );
        return Ok(if cfg.is_large(m) { bv } else { bv.with_flag(Flag::SufficientlyLarge) });
    }
    let q = tag.q.expect("q set for m < n/2") as i64;
    let upper = if tag.case.starts_with("(2q") {
        Term::Leading {
            value: Rational::from_integer(2 * q * mi),
            expr: "(2q+o(1))m".into(),
        }
    } else {
        Term::Leading {
            value: Rational::new((2 * q + 2) * ni, q),
            expr: "(2+2/q+o(1))n".into(),
        }
    };
    Ok(BoundValue {
        lower: Term::int(cycle_star_shape(m as usize, n as usize).vertices as i64 + 1),
        upper,
        exactness: Exactness::Asymptotic,
        error_class: ErrorClass::LittleO,
        regime: tag,
        provenance: "even cycle vs even wheel, m < n/2: red-clique construction against K_{1,2n}, regularity upper bound".into(),
        flags: vec![Flag::SufficientlyLarge],
    })
}

pub fn cycle_star_value(m: u64, n: u64) -> Result<BoundValue> {
    cycle_star_value_with(m, n, &FormulaConfig::default())
}

/// `R(C_{2m}, K_{1,2n})`, `m >= 2`, `n >= 1`.
pub fn cycle_star_value_with(m: u64, n: u64, cfg: &FormulaConfig) -> Result<BoundValue> {
    require(m >= 2 && n >= 1, || format!("cycle-star needs m >= 2 and n >= 1, got m={m}, n={n}"))?;
    let (mi, ni) = (m as i64, n as i64);
    if m >= 2 * n {
        return Ok(BoundValue::exact(
            2 * mi,
            RegimeTag::new(Pair::CycleStar, "m>=2n"),
            "even cycle vs star, m >= 2n (Dirac)",
        ));
    }
    if m > n {
        return Ok(BoundValue::exact(
            4 * ni,
            RegimeTag::new(Pair::CycleStar, "n<m<2n"),
            "even cycle vs star, n < m < 2n (Zhang-Broersma-Chen)",
        ));
    }
    let shape = cycle_star_shape(m as usize, n as usize);
    let q = shape.q as i64;
    let (sub, value) = if shape.few_large {
        (1, 2 * q * mi - (q - 1))
    } else {
        (2, 2 * ni + (2 * ni - 1) / q + 1)
    };
    let tag = RegimeTag::new(Pair::CycleStar, format!("m<=n q={q} sub-case {sub}"));
    let provenance = "even cycle vs star, m <= n (Allen-Luczak-Polcyn-Zhang)";
    if cfg.is_large(m) {
        return Ok(BoundValue::exact(value, tag, provenance));
    }
    Ok(BoundValue {
        lower: Term::int(shape.vertices as i64 + 1),
        upper: Term::Leading {
            value: Rational::from_integer(value),
            expr: if sub == 1 { "2qm-(q-1)".into() } else { "2n+floor((2n-1)/q)+1".into() },
        },
        exactness: Exactness::Asymptotic,
        error_class: ErrorClass::None,
        regime: tag,
        provenance: provenance.into(),
        flags: vec![Flag::SufficientlyLarge],
    })
}

/// `R(W_{2n})`, `n >= 2`.
pub fn even_wheel_diag_bounds(n: u64) -> Result<BoundValue> {
    require(n >= 2, || format!("wheel-diag needs n >= 2, got n={n}"))?;
    let ni = n as i64;
    let tag = RegimeTag::new(Pair::WheelDiag, "n>=2");
    Ok(match n {
        2 => BoundValue::exact(15, tag, "R(W4) = 15 (Harborth-Mengersen; Hendry)").with_flag(Flag::KnownValue),
        3 => BoundValue::exact(19, tag, "R(W6) = 19 (Lin-Peng; Van Overberghe)").with_flag(Flag::KnownValue),
        _ => BoundValue::interval(
            5 * ni - even(n),
            8 * ni + 664,
            ErrorClass::None,
            tag,
            "even wheels: star-wheel lower bound, twice the cycle-wheel upper bound",
        ),
    })
}

/// `R(W_{2n+1})`, `n >= 1`.
pub fn odd_wheel_diag_bounds(n: u64) -> Result<BoundValue> {
    require(n >= 1, || format!("odd-wheel-diag needs n >= 1, got n={n}"))?;
    let ni = n as i64;
    Ok(BoundValue {
        lower: Term::int(6 * ni + 4),
        upper: Term::Unquantified {
            known: 10 * ni,
            constant: "c".into(),
        },
        exactness: Exactness::Interval,
        error_class: ErrorClass::AdditiveConstant,
        regime: RegimeTag::new(Pair::OddWheelDiag, "n>=1"),
        provenance: "odd wheels: R(K_{1,2n+1}, W_{2n+1}) lower bound, refinement of Zhang-Chen upper bound".into(),
        flags: Vec::new(),
    })
}

/// `R(K_{1,m}, W_{2n+1})`, `m, n >= 1`.
pub fn odd_star_wheel_value(m: u64, n: u64) -> Result<BoundValue> {
    require(m >= 1 && n >= 1, || format!("odd-star-wheel needs m, n >= 1, got m={m}, n={n}"))?;
    let (mi, ni) = (m as i64, n as i64);
    let (case, v) = if m <= n { ("m<=n", mi + 2 * ni + 1) } else { ("m>n", 3 * mi + 1) };
    Ok(BoundValue::exact(
        v,
        RegimeTag::new(Pair::OddStarWheel, case),
        "star vs odd wheel (Li-Schiermeyer)",
    ))
}

/// `R(C_{2m+1}, W_{2n+1})`, `m, n >= 1`, `(m, n) != (1, 1)`.
pub fn odd_cycle_wheel_value(m: u64, n: u64) -> Result<BoundValue> {
    require(m >= 1 && n >= 1, || format!("odd-cycle-wheel needs m, n >= 1, got m={m}, n={n}"))?;
    if (m, n) == (1, 1) {
        return Err(Error::ExcludedCase("R(C3, W3) falls outside the general formula".into()));
    }
    let (mi, ni) = (m as i64, n as i64);
    let (case, v) = if 3 * m > 2 * n { ("m>2n/3", 6 * mi + 1) } else { ("m<=2n/3", 4 * ni + 3) };
    Ok(BoundValue::exact(
        v,
        RegimeTag::new(Pair::OddCycleWheel, case),
        "odd cycle vs odd wheel (Chen-Cheng-Ng-Zhang; Zhang-Zhang-Chen)",
    ))
}

/// `R(nK_2, F_n) = R(nK_2, W_{2n})`, `n >= 1`.
pub fn matching_fan_value(n: u64) -> Result<BoundValue> {
    require(n >= 1, || format!("matching-fan needs n >= 1, got n={n}"))?;
    Ok(BoundValue::exact(
        3 * n as i64,
        RegimeTag::new(Pair::MatchingFan, "n>=1"),
        "matching vs fan and wheel: two-set construction, degree argument",
    ))
}

/// Least `δ` such that every `n`-vertex graph with minimum degree at least
/// `δ` contains `W_{2k}`; `2 <= k < n/2`.
pub fn mindegree_wheel_threshold(n: u64, k: u64) -> Result<BoundValue> {
    require(k >= 2 && 2 * k < n, || format!("mindeg-wheel needs 2 <= k < n/2, got n={n}, k={k}"))?;
    let (ni, ki) = (n as i64, k as i64);
    if 3 * k < n {
        let floor = (ni + ki) / 2;
        let ceil = (ni + ki + 1) / 2;
        // The parity construction has minimum degree one below this and no W_{2k}.
        let construction = if (k - 1) % 2 == 1 && floor % 2 == 1 { floor } else { ceil };
        let mut bv = BoundValue {
            lower: Term::int(construction),
            upper: Term::Leading {
                value: Rational::new(ni + ki, 2),
                expr: "(n+k)/2+εn".into(),
            },
            exactness: Exactness::Asymptotic,
            error_class: ErrorClass::LittleO,
            regime: RegimeTag::new(Pair::MindegWheel, "2<=k<n/3"),
            provenance: "min-degree form of star vs even wheel: parity construction, asymptotic upper bound".into(),
            flags: vec![Flag::SufficientlyLarge],
        };
        if k >= 3 {
            bv = bv.with_flag(Flag::Conjectured { value: construction });
        }
        return Ok(bv);
    }
    // Here the threshold is n - m* for the largest m* <= k with
    // R(K_{1,m*}, W_{2k}) <= n, read off the exact formula for m <= k.
    let m_star = (1..=ki).rev().find(|&m| m + 2 * ki - (m % 2 == 0) as i64 <= ni).unwrap_or(0);
    let mut bv = BoundValue::exact(
        ni - m_star,
        RegimeTag::new(Pair::MindegWheel, "n/3<=k<n/2"),
        "min-degree form of star vs even wheel for m <= k; asymptotically 2k",
    );
    bv.upper = Term::int(ni - m_star);
    Ok(bv)
}
