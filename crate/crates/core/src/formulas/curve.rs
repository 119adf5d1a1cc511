//! Leading coefficients of the piecewise curves, as functions of `μ = m/n`.

use super::{render_ratio, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Figure {
    /// `R(C_{2m}, W_{2n}) / n`.
    CycleWheel,
    /// `R(C_{2m}, W_{2n}) / n` alongside `R(C_{2m}, K_{1,2n}) / n`.
    CycleVsStar,
}

fn int(x: i64) -> Rational {
    Rational::from_integer(x)
}

/// `lim R(C_{2m}, W_{2n}) / n` along `m = μn`, for `μ >= 0`.
pub fn wheel_coefficient(mu: Rational) -> Rational {
    assert!(mu >= int(0), "negative m/n");
    if mu == int(0) {
        return int(2);
    }
    if mu >= int(1) {
        return int(4) * mu;
    }
    if mu * 2 >= int(1) {
        return int(2) * (int(1) + mu);
    }
    // n/q <= m < n/(q-1)
    let q = mu.recip().ceil().to_integer();
    if mu >= Rational::new(q + 1, q * q) {
        int(2 * q) * mu
    } else {
        int(2) + Rational::new(2, q)
    }
}

/// `lim R(C_{2m}, K_{1,2n}) / n` along `m = μn`, for `μ >= 0`.
pub fn star_coefficient(mu: Rational) -> Rational {
    assert!(mu >= int(0), "negative m/n");
    if mu == int(0) {
        return int(2);
    }
    if mu >= int(2) {
        return int(2) * mu;
    }
    if mu > int(1) {
        return int(4);
    }
    // n/q < m <= n/(q-1)
    let q = mu.recip().floor().to_integer() + 1;
    if mu > Rational::new(q + 1, q * q) {
        int(2 * q) * mu
    } else {
        int(2) + Rational::new(2, q)
    }
}

/// Boundaries where adjacent pieces disagree, for `2 <= q <= q_max`.
/// Empty means both curves are continuous.
pub fn continuity_violations(q_max: i64) -> Vec<String> {
    let mut bad = Vec::new();
    let mut check = |what: String, left: Rational, right: Rational| {
        if left != right {
            bad.push(format!("{what}: {} != {}", render_ratio(&left), render_ratio(&right)));
        }
    };
    // Pieces: rising 2qμ on [(q+1)/q², 1/(q-1)), flat 2+2/q on [1/q, (q+1)/q²).
    let rising = |q: i64, mu: Rational| int(2 * q) * mu;
    let flat = |q: i64| int(2) + Rational::new(2, q);
    for q in 2..=q_max {
        let knee = Rational::new(q + 1, q * q);
        check(format!("knee q={q}"), rising(q, knee), flat(q));
        // Top of band q meets the flat piece of band q-1 (or the middle piece).
        let top = Rational::new(1, q - 1);
        if q >= 3 {
            let next = if q == 3 { int(2) * (int(1) + top) } else { flat(q - 1) };
            check(format!("wheel top q={q}"), rising(q, top), next);
            check(format!("wheel eval q={q}"), wheel_coefficient(knee), flat(q));
        }
        // Star bands are open at 1/q: the flat value must meet band q+1's rising piece.
        check(format!("star bottom q={q}"), flat(q), rising(q + 1, Rational::new(1, q)));
        check(format!("star eval q={q}"), star_coefficient(knee), flat(q));
    }
    check("wheel at 1/2".into(), int(3), int(2) * (int(1) + Rational::new(1, 2)));
    check("wheel at 1".into(), int(2) * int(2), int(4));
    check("star at 1".into(), rising(2, int(1)), int(4));
    check("star at 2".into(), int(4), int(2) * int(2));
    bad
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvePoint {
    pub m_over_n: Rational,
    pub wheel: Rational,
    pub star: Rational,
}

impl CurvePoint {
    pub fn csv_fields(&self) -> [String; 3] {
        [render_ratio(&self.m_over_n), render_ratio(&self.wheel), render_ratio(&self.star)]
    }
}

/// `steps + 1` evenly spaced points `m = 0, .., m_max` with `m_max = 5n/4`
/// (cycle-wheel) or `5n/2` (comparison), plus every regime boundary with
/// `q <= 50` that falls inside. Sorted by `m/n`, duplicates removed.
pub fn sweep(figure: Figure, n: i64, steps: i64) -> Vec<CurvePoint> {
    assert!(n >= 1 && steps >= 1);
    let top = match figure {
        Figure::CycleWheel => Rational::new(5, 4),
        Figure::CycleVsStar => Rational::new(5, 2),
    };
    let mut mus: Vec<Rational> = (0..=steps)
        .map(|i| {
            // Round m to an integer so every row is an actual parameter pair.
            let m = (top * int(n) * Rational::new(i, steps)).round().to_integer();
            Rational::new(m, n)
        })
        .collect();
    for q in 2..=50i64 {
        for b in [Rational::new(q + 1, q * q), Rational::new(1, q)] {
            if b <= top {
                mus.push(b);
            }
        }
    }
    mus.extend([int(1), int(2)].into_iter().filter(|b| *b <= top));
    mus.sort();
    mus.dedup();
    mus.into_iter()
        .map(|mu| CurvePoint {
            m_over_n: mu,
            wheel: wheel_coefficient(mu),
            star: star_coefficient(mu),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn continuous_up_to_fifty() {
        assert_eq!(continuity_violations(50), Vec::<String>::new());
    }

    #[test]
    fn landmarks() {
        assert_eq!(wheel_coefficient(Rational::new(1, 3)), Rational::new(8, 3));
        assert_eq!(wheel_coefficient(Rational::new(4, 9)), int(8) / 3);
        assert_eq!(wheel_coefficient(Rational::new(1, 4)), Rational::new(5, 2));
        assert_eq!(wheel_coefficient(Rational::new(5, 16)), Rational::new(5, 2));
        assert_eq!(wheel_coefficient(Rational::new(5, 4)), int(5));
        assert_eq!(star_coefficient(Rational::new(3, 2)), int(4));
        assert_eq!(star_coefficient(Rational::new(3, 4)), int(3));
    }

    #[test]
    fn staircase_is_monotone() {
        for fig in [Figure::CycleWheel, Figure::CycleVsStar] {
            let pts = sweep(fig, 5040, 100);
            assert!(pts.windows(2).all(|w| w[0].wheel <= w[1].wheel && w[0].star <= w[1].star));
            assert_eq!(pts[0].wheel, int(2));
        }
    }
}
