//! Presentation layer: tables, the verification report and the CLI.

pub mod cli;
pub mod table;
pub mod verify;

pub use table::{emit_table, Family, Format, TableSpec};
pub use verify::{verify_paper, verify_with, Check, VerificationReport};
