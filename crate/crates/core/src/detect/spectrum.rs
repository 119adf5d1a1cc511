use super::cycles::has_cycle_of_length_with;
use super::{Budget, DetectionResult};
use crate::graph::Graph;
use serde::Serialize;
use std::collections::BTreeSet;

/// Which cycle lengths `3..=max_len` a graph realises.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleSpectrum {
    pub max_len: usize,
    pub present: BTreeSet<usize>,
    /// Lengths whose search ran out of budget.
    pub undetermined: BTreeSet<usize>,
}

impl CycleSpectrum {
    pub fn girth(&self) -> Option<usize> {
        self.present.first().copied()
    }

    pub fn circumference(&self) -> Option<usize> {
        self.present.last().copied()
    }

    /// Longest even cycle, `ec(G)`, within `max_len`.
    pub fn longest_even(&self) -> Option<usize> {
        self.present.iter().rev().find(|&&l| l % 2 == 0).copied()
    }

    /// Longest odd cycle, `oc(G)`, within `max_len`.
    pub fn longest_odd(&self) -> Option<usize> {
        self.present.iter().rev().find(|&&l| l % 2 == 1).copied()
    }

    pub fn contains(&self, len: usize) -> bool {
        self.present.contains(&len)
    }

    /// Every length `3..=n` present.
    pub fn is_pancyclic(&self, n: usize) -> bool {
        n >= 3 && self.max_len >= n && (3..=n).all(|l| self.present.contains(&l))
    }

    /// Every length between girth and circumference present.
    pub fn is_weakly_pancyclic(&self) -> bool {
        match (self.girth(), self.circumference()) {
            (Some(a), Some(b)) => (a..=b).all(|l| self.present.contains(&l)),
            _ => true,
        }
    }
}

pub fn cycle_spectrum(g: &Graph, max_len: usize) -> CycleSpectrum {
    cycle_spectrum_with(g, max_len, Budget::default())
}

/// Each length gets its own `budget`.
pub fn cycle_spectrum_with(g: &Graph, max_len: usize, budget: Budget) -> CycleSpectrum {
    let max_len = max_len.min(g.order());
    let mut present = BTreeSet::new();
    let mut undetermined = BTreeSet::new();
    for len in 3..=max_len {
        match has_cycle_of_length_with(g, len, &mut budget.meter()) {
            DetectionResult::Found(_) => {
                present.insert(len);
            }
            DetectionResult::BudgetExhausted => {
                undetermined.insert(len);
            }
            DetectionResult::NotFound => {}
        }
    }
    CycleSpectrum {
        max_len,
        present,
        undetermined,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn k5_pancyclic() {
        let s = cycle_spectrum(&complete(5), 5);
        assert_eq!(s.present, BTreeSet::from([3, 4, 5]));
        assert!(s.is_pancyclic(5));
    }

    #[test]
    fn c7_single_length() {
        let s = cycle_spectrum(&cycle(7), 7);
        assert_eq!(s.present, BTreeSet::from([7]));
        assert_eq!((s.girth(), s.circumference()), (Some(7), Some(7)));
    }

    #[test]
    fn k34_bipartite() {
        let s = cycle_spectrum(&complete_bipartite(3, 4), 7);
        assert_eq!(s.present, BTreeSet::from([4, 6]));
        assert_eq!(s.longest_even(), Some(6));
        assert_eq!(s.longest_odd(), None);
        assert!(s.is_weakly_pancyclic() == false);
    }

    #[test]
    fn acyclic() {
        let s = cycle_spectrum(&path(6), 6);
        assert!(s.present.is_empty());
        assert_eq!(s.girth(), None);
    }
}
