//! Exact dimension formulas for spaces of degree-2 Siegel cusp forms.
//!
//! The crate covers four congruence-subgroup families (the full modular group
//! `Sp(4,Z)`, the Klingen-type `Γ₀(N)`, the paramodular `K(p)` and the principal
//! congruence subgroups `Γ(N)`), the dimensions of the non-trivial irreducible
//! representations of `GSp(4,F_p)`, bounds on dimensions of newform spaces, and
//! an exhaustive enumerator for decompositions of a dimension into irrep
//! dimensions.
//!
//! Every value is computed with exact rational arithmetic. A formula whose
//! result is not an integer is reported as [`Error::IntegralityFailure`].

pub mod arith;
pub mod dims;
pub mod error;
pub mod irreps;
pub mod newforms;
pub mod report;

pub use arith::{ExactRational, SquareFreeLevel};
pub use dims::{DimValue, GroupFamily, Weight};
pub use error::{Error, Result};
pub use irreps::IrrepEntry;
pub use newforms::{AnalysisReport, BoundPair, Decomposition};
