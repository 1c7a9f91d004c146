//! Newform dimension bounds, decompositions of a dimension into irrep
//! dimensions, and the level analysis built from them.

pub mod analysis;
pub mod bounds;
pub mod decompose;

pub use analysis::{analyze_level, AnalysisReport, LocalComponent};
pub use bounds::{bounds_prime, bounds_squarefree, BoundPair};
pub use decompose::{
    count_decompositions, decompose, decompose_with, DecomposeOptions, Decomposition,
};
