//! Target graph families and their textual form.
//!
//! `C<k>` cycle, `W<k>` wheel on `k + 1` vertices (hub plus a `k`-cycle),
//! `F<k>` fan on `2k + 1` vertices, `S<m>` star `K_{1,m}`, `M<n>` matching
//! `nK_2`, `K<n>` clique. Note the wheel convention: `W6` has 7 vertices.

use crate::error::Error;
use crate::graph::{named, Graph};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyKind {
    Cycle,
    Wheel,
    Fan,
    Star,
    Matching,
    Clique,
}

impl FamilyKind {
    fn letter(self) -> char {
        match self {
            FamilyKind::Cycle => 'C',
            FamilyKind::Wheel => 'W',
            FamilyKind::Fan => 'F',
            FamilyKind::Star => 'S',
            FamilyKind::Matching => 'M',
            FamilyKind::Clique => 'K',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub param: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, param: usize) -> Result<Self, Error> {
        let min = if kind == FamilyKind::Cycle { 3 } else { 1 };
        if param < min {
            return Err(Error::InvalidFamily(format!(
                "{}{param}: parameter must be at least {min}",
                kind.letter()
            )));
        }
        Ok(Self { kind, param })
    }

    pub fn cycle(k: usize) -> Self {
        Self::new(FamilyKind::Cycle, k).expect("cycle length >= 3")
    }
    pub fn wheel(k: usize) -> Self {
        Self::new(FamilyKind::Wheel, k).expect("wheel parameter >= 1")
    }
    pub fn fan(k: usize) -> Self {
        Self::new(FamilyKind::Fan, k).expect("fan parameter >= 1")
    }
    pub fn star(m: usize) -> Self {
        Self::new(FamilyKind::Star, m).expect("star parameter >= 1")
    }
    pub fn matching(n: usize) -> Self {
        Self::new(FamilyKind::Matching, n).expect("matching parameter >= 1")
    }
    pub fn clique(n: usize) -> Self {
        Self::new(FamilyKind::Clique, n).expect("clique parameter >= 1")
    }

    pub fn vertex_count(&self) -> usize {
        let p = self.param;
        match self.kind {
            FamilyKind::Cycle | FamilyKind::Clique => p,
            FamilyKind::Wheel => p + 1,
            FamilyKind::Fan => 2 * p + 1,
            FamilyKind::Star => p + 1,
            FamilyKind::Matching => 2 * p,
        }
    }

    /// Largest connected component of the target graph.
    pub fn max_component_order(&self) -> usize {
        match self.kind {
            FamilyKind::Matching => 2,
            _ => self.vertex_count(),
        }
    }

    /// The canonical member of the family, as produced by [`named`].
    pub fn to_graph(&self) -> Graph {
        let p = self.param;
        match self.kind {
            FamilyKind::Cycle => named::cycle(p),
            FamilyKind::Wheel => named::wheel(p),
            FamilyKind::Fan => named::fan(p),
            FamilyKind::Star => named::star(p),
            FamilyKind::Matching => named::matching(p),
            FamilyKind::Clique => named::complete(p),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.param)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('C') => FamilyKind::Cycle,
            Some('W') => FamilyKind::Wheel,
            Some('F') => FamilyKind::Fan,
            Some('S') => FamilyKind::Star,
            Some('M') => FamilyKind::Matching,
            Some('K') => FamilyKind::Clique,
            _ => {
                return Err(Error::InvalidFamily(format!(
                    "{s:?}: expected one of C<k>, W<k>, F<k>, S<m>, M<n>, K<n>"
                )))
            }
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidFamily(format!("{s:?}: parameter must be a decimal integer")));
        }
        let param = digits
            .parse::<usize>()
            .map_err(|e| Error::InvalidFamily(format!("{s:?}: {e}")))?;
        FamilySpec::new(kind, param)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in ["C4", "W6", "F3", "S12", "M2", "K5", "W1"] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "C", "C2", "W0", "X4", "c4", "C4x", "C-4", "K 3"] {
            assert!(s.parse::<FamilySpec>().is_err(), "{s:?} should fail");
        }
    }

    #[test]
    fn vertex_counts_follow_wheel_convention() {
        assert_eq!(FamilySpec::wheel(6).vertex_count(), 7);
        assert_eq!(FamilySpec::fan(3).vertex_count(), 7);
        assert_eq!(FamilySpec::star(4).vertex_count(), 5);
        assert_eq!(FamilySpec::matching(3).max_component_order(), 2);
        assert_eq!(FamilySpec::wheel(6).to_graph().order(), 7);
    }
}
