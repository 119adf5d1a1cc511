//! Exact "does this graph contain X" procedures.
//!
//! Every search is exact. Searches that can blow up (cycles of a given
//! length, and through them wheels) run against a node [`Budget`]; when it
//! runs out the answer is [`DetectionResult::BudgetExhausted`], never a
//! silent "not found".

mod clique;
mod cycles;
mod families;
mod matching;
mod spectrum;
mod structure;

pub use clique::find_clique;
pub use cycles::{has_cycle_of_length, has_cycle_of_length_with, has_cycle_through};
pub use families::{contains_family, contains_family_through, contains_family_with};
pub use matching::{max_matching, maximum_matching};
pub use spectrum::{cycle_spectrum, cycle_spectrum_with, CycleSpectrum};
pub use structure::{blocks, is_bipartite, is_two_connected, Bipartiteness, BlockDecomposition};

/// Default node budget for a single detector call.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Backtracking-node allowance for one detector call.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_nodes: DEFAULT_BUDGET,
        }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Self { max_nodes }
    }

    pub fn meter(self) -> Meter {
        Meter {
            used: 0,
            limit: self.max_nodes,
        }
    }
}

/// Running node count for one call.
#[derive(Clone, Debug)]
pub struct Meter {
    used: u64,
    limit: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exhausted;

impl Meter {
    #[inline]
    pub fn tick(&mut self) -> Result<(), Exhausted> {
        self.used += 1;
        if self.used > self.limit {
            Err(Exhausted)
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

/// Outcome of a containment query.
///
/// Witness layout: cycles in cycle order; wheels and fans hub first, then
/// the rim cycle or the matched pairs; stars centre first; matchings and
/// cliques as flat vertex lists (matchings pairwise).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DetectionResult {
    Found(Vec<usize>),
    NotFound,
    BudgetExhausted,
}

impl DetectionResult {
    pub fn found(&self) -> bool {
        matches!(self, DetectionResult::Found(_))
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match self {
            DetectionResult::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, DetectionResult::BudgetExhausted)
    }
}

impl From<Exhausted> for DetectionResult {
    fn from(_: Exhausted) -> Self {
        DetectionResult::BudgetExhausted
    }
}
