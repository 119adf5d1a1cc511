//! Exact evaluators for the known Ramsey values and bounds around even wheels.
//!
//! All arithmetic is integer or exact rational. Results that only hold for
//! "sufficiently large" parameters, or that carry an unquantified constant,
//! say so in their [`BoundValue`] instead of printing an invented number.

mod curve;
mod values;

pub use curve::{continuity_violations, star_coefficient, sweep, wheel_coefficient, CurvePoint, Figure};
pub use values::*;

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use std::fmt;

pub type Rational = Ratio<i64>;

pub fn render_ratio(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn serialize_ratio<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&render_ratio(r))
}

/// One end of a bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Term {
    Int { value: i64 },
    /// Exact value of the leading term of an asymptotic expression.
    Leading {
        #[serde(serialize_with = "serialize_ratio")]
        value: Rational,
        expr: String,
    },
    /// `known` plus a constant that is never pinned down.
    Unquantified { known: i64, constant: String },
}

impl Term {
    pub fn int(value: i64) -> Self {
        Term::Int { value }
    }

    pub fn concrete(&self) -> Option<i64> {
        match self {
            Term::Int { value } => Some(*value),
            _ => None,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Int { value } => write!(f, "{value}"),
            Term::Leading { value, expr } => write!(f, "{expr} ~ {}", render_ratio(value)),
            Term::Unquantified { known, constant } => write!(f, "{known}+{constant}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    Exact,
    Interval,
    Asymptotic,
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exactness::Exact => "exact",
            Exactness::Interval => "interval",
            Exactness::Asymptotic => "asymptotic",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorClass {
    None,
    AdditiveConstant,
    LittleO,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "flag", rename_all = "snake_case")]
pub enum Flag {
    /// Small wheel `W_4`, whose star Ramsey numbers follow a different pattern.
    W4Exception,
    /// The result needs parameters above a threshold that is not quantified.
    SufficientlyLarge,
    /// Exact value known from direct computation, overriding the general bounds.
    KnownValue,
    /// Conjectured exact value.
    Conjectured { value: i64 },
}

/// Target pair a bound talks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pair {
    StarWheel,
    CycleCycle,
    CycleWheel,
    CycleStar,
    WheelDiag,
    OddWheelDiag,
    OddStarWheel,
    OddCycleWheel,
    MatchingFan,
    MindegWheel,
}

impl Pair {
    pub const ALL: [Pair; 10] = [
        Pair::StarWheel,
        Pair::CycleCycle,
        Pair::CycleWheel,
        Pair::CycleStar,
        Pair::WheelDiag,
        Pair::OddWheelDiag,
        Pair::OddStarWheel,
        Pair::OddCycleWheel,
        Pair::MatchingFan,
        Pair::MindegWheel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pair::StarWheel => "star-wheel",
            Pair::CycleCycle => "cycle-cycle",
            Pair::CycleWheel => "cycle-wheel",
            Pair::CycleStar => "cycle-star",
            Pair::WheelDiag => "wheel-diag",
            Pair::OddWheelDiag => "odd-wheel-diag",
            Pair::OddStarWheel => "odd-star-wheel",
            Pair::OddCycleWheel => "odd-cycle-wheel",
            Pair::MatchingFan => "matching-fan",
            Pair::MindegWheel => "mindeg-wheel",
        }
    }

    /// Evaluate with default configuration. Single-parameter pairs read `n`.
    pub fn evaluate(self, m: u64, n: u64) -> crate::Result<BoundValue> {
        self.evaluate_with(m, n, &FormulaConfig::default())
    }

    pub fn evaluate_with(self, m: u64, n: u64, cfg: &FormulaConfig) -> crate::Result<BoundValue> {
        match self {
            Pair::StarWheel => star_wheel_value(m, n),
            Pair::CycleCycle => even_cycle_ramsey(m, n),
            Pair::CycleWheel => cycle_wheel_bounds_with(m, n, cfg),
            Pair::CycleStar => cycle_star_value_with(m, n, cfg),
            Pair::WheelDiag => even_wheel_diag_bounds(n),
            Pair::OddWheelDiag => odd_wheel_diag_bounds(n),
            Pair::OddStarWheel => odd_star_wheel_value(m, n),
            Pair::OddCycleWheel => odd_cycle_wheel_value(m, n),
            Pair::MatchingFan => matching_fan_value(n),
            // Here `m` plays the role of the wheel parameter `k`.
            Pair::MindegWheel => mindegree_wheel_threshold(n, m),
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Pair {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        Pair::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| crate::Error::OutOfRegime(format!("unknown pair {s:?}")))
    }
}

/// Where a parameter pair sits in a piecewise result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegimeTag {
    pub pair: Pair,
    pub case: String,
    /// `⌈n/m⌉` in the cycle-wheel regime `m < n/2`.
    pub q: Option<u64>,
    /// `m - n` when `m >= n`.
    pub c: Option<i64>,
    /// `m` and `n` both even.
    pub theta: Option<bool>,
}

impl RegimeTag {
    pub(crate) fn new(pair: Pair, case: impl Into<String>) -> Self {
        Self {
            pair,
            case: case.into(),
            q: None,
            c: None,
            theta: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundValue {
    pub lower: Term,
    pub upper: Term,
    pub exactness: Exactness,
    pub error_class: ErrorClass,
    pub regime: RegimeTag,
    pub provenance: String,
    pub flags: Vec<Flag>,
}

impl BoundValue {
    pub(crate) fn exact(value: i64, regime: RegimeTag, provenance: &str) -> Self {
        Self {
            lower: Term::int(value),
            upper: Term::int(value),
            exactness: Exactness::Exact,
            error_class: ErrorClass::None,
            regime,
            provenance: provenance.to_string(),
            flags: Vec::new(),
        }
    }

    pub(crate) fn interval(lower: i64, upper: i64, error_class: ErrorClass, regime: RegimeTag, provenance: &str) -> Self {
        if lower == upper {
            return Self::exact(lower, regime, provenance);
        }
        Self {
            lower: Term::int(lower),
            upper: Term::int(upper),
            exactness: Exactness::Interval,
            error_class,
            regime,
            provenance: provenance.to_string(),
            flags: Vec::new(),
        }
    }

    pub(crate) fn with_flag(mut self, flag: Flag) -> Self {
        self.flags.push(flag);
        self
    }

    pub fn value(&self) -> Option<i64> {
        match self.exactness {
            Exactness::Exact => self.lower.concrete(),
            _ => None,
        }
    }

    pub fn lower_int(&self) -> Option<i64> {
        self.lower.concrete()
    }

    pub fn upper_int(&self) -> Option<i64> {
        self.upper.concrete()
    }

    /// One-line human rendering, e.g. `exact 7` or `interval [15, 348]`.
    pub fn headline(&self) -> String {
        match self.exactness {
            Exactness::Exact => format!("exact {}", self.lower),
            Exactness::Interval => format!("interval [{}, {}]", self.lower, self.upper),
            Exactness::Asymptotic => format!("asymptotic lower {}, upper {}", self.lower, self.upper),
        }
    }
}

/// Thresholds for results stated "for all sufficiently large" parameters.
///
/// The cutoffs are never quantified, so by default such results are reported
/// as asymptotic. Setting `large_cutoff` asserts that every `m` at or above
/// it is large enough.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FormulaConfig {
    pub large_cutoff: Option<u64>,
}

impl FormulaConfig {
    pub(crate) fn is_large(&self, m: u64) -> bool {
        self.large_cutoff.is_some_and(|c| m >= c)
    }
}
