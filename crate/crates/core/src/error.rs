use std::fmt;

use thiserror::Error;

/// Broad failure class, used by the CLI to pick an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Input,
    Degeneracy,
    Io,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("empty input: {0}")]
    EmptyInput(String),
    #[error("degenerate cell {cell}: {detail}")]
    DegenerateCell { cell: usize, detail: String },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("coefficient {0} is not in {{-1, 0, +1}}")]
    InvalidCoefficient(i64),
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),
    #[error("malformed skeleton: {0}")]
    MalformedSkeleton(String),
    #[error("dangling facet {facet} at hinge {hinge}")]
    DanglingFacet { hinge: usize, facet: usize },
    #[error("chain is not a cycle: {0}")]
    NotACycle(String),
    #[error("inconsistent facet {facet}: {detail}")]
    InconsistentFacet { facet: usize, detail: String },
    #[error("inconsistent containment: {0}")]
    InconsistentContainment(String),
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::DegenerateGeometry(_)
            | Error::MalformedSkeleton(_)
            | Error::DanglingFacet { .. }
            | Error::NotACycle(_)
            | Error::InconsistentFacet { .. }
            | Error::InconsistentContainment(_) => ErrorClass::Degeneracy,
            Error::Io(_) => ErrorClass::Io,
            _ => ErrorClass::Input,
        }
    }

    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MalformedInput(_) => "malformed-input",
            Error::EmptyInput(_) => "empty-input",
            Error::DegenerateCell { .. } => "degenerate-cell",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::InvalidCoefficient(_) => "invalid-coefficient",
            Error::DegenerateGeometry(_) => "degenerate-geometry",
            Error::MalformedSkeleton(_) => "malformed-skeleton",
            Error::DanglingFacet { .. } => "dangling-facet",
            Error::NotACycle(_) => "not-a-cycle",
            Error::InconsistentFacet { .. } => "inconsistent-facet",
            Error::InconsistentContainment(_) => "inconsistent-containment",
            Error::UnsupportedFormat(_) => "unsupported-format",
            Error::Parse { .. } => "parse-error",
            Error::Io(_) => "io-error",
        }
    }

    pub(crate) fn malformed(msg: impl fmt::Display) -> Self {
        Error::MalformedInput(msg.to_string())
    }

    pub(crate) fn degenerate(msg: impl fmt::Display) -> Self {
        Error::DegenerateGeometry(msg.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
