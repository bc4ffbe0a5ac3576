//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CmsError {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("denominator vanishes: {0}")]
    DenominatorVanishes(String),
    #[error("divergent limit in {0}")]
    DivergentLimit(String),
    #[error("cell ({0},{1}) outside diagram")]
    CellOutsideDiagram(usize, usize),
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("no jack basis provider registered")]
    NoJackProvider,
    #[error("degenerate eigenvalue between {0} and {1}")]
    DegenerateEigenvalue(String, String),
    #[error("pochhammer pole: parameter {parameter} vanishes on cell ({row},{col})")]
    PochhammerPole { parameter: String, row: usize, col: usize },
    #[error("singular evaluation point: {0}")]
    SingularPoint(String),
    #[error("polynomial is not in the deformed algebra")]
    NotInDeformedAlgebra,
    #[error("unknown verification suite: {0}")]
    UnknownSuite(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("basis mismatch: expected {expected}, got {got}")]
    BasisMismatch { expected: String, got: String },
    #[error("{0}")]
    Invalid(String),
}
