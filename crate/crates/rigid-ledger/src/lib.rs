//! Case ledger for the rigid nilpotent orbits of the exceptional Lie
//! algebras: the case file format, the verification engine that replays
//! every stored claim with exact arithmetic, and the report writer.

#![forbid(unsafe_code)]

mod model;
mod parse;
mod report;
mod verify;

use thiserror::Error;

pub use model::{
    Candidate, CaseRecord, DerivedSubalgebra, Route, SetMode, StarRow, WeightExpr, WeylIdentity,
    WordExpr,
};
pub use parse::{parse_cases, parse_weight_expr};
pub use report::{emit_report, Format};
#[cfg(feature = "parallel")]
pub use verify::verify_all_parallel;
pub use verify::{
    root_system, verify_all, verify_all_sequential, verify_case, Check, CheckReport, Status,
};

/// The shipped case file with all 34 rigid orbits.
pub const SHIPPED: &str = include_str!("../data/rigid_cases.txt");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LedgerError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("case {case}, field {field}: {message}")]
    Validation {
        case: String,
        field: String,
        message: String,
    },
}

/// Parses [`SHIPPED`].
pub fn shipped_cases() -> Result<Vec<CaseRecord>, LedgerError> {
    parse_cases(SHIPPED)
}
