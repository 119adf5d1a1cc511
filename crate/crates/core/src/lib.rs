//! Executable Ramsey theory for even wheels.
//!
//! Dense graphs and 2-colorings, exact containment detectors, the structural
//! decompositions used in the proofs, extremal lower-bound colorings, exact
//! bound formulas and a brute-force Ramsey oracle.

pub mod bitset;
pub mod coloring;
pub mod construct;
pub mod decompose;
pub mod detect;
pub mod error;
pub mod family;
pub mod formulas;
pub mod graph;
pub mod reference;
pub mod search;
pub mod selftest;
pub mod witness;

pub use coloring::{Color, TwoColoring};
pub use error::{Error, Result};
pub use family::{FamilyKind, FamilySpec};
pub use graph::Graph;
