//! Error type shared by every module of the crate.

use thiserror::Error;

use crate::rational::{format_vector, Rational};

/// Everything that can go wrong while building an algebra, running a
/// polarization algorithm, or parsing input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={limit}")]
    IndexOutOfRange { index: usize, limit: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("conflicting values given for the bracket of Z{i} and Z{j}")]
    AntisymmetryConflict { i: usize, j: usize },

    #[error(
        "Jacobi identity fails on (Z{i}, Z{j}, Z{k}): jacobiator = {}",
        format_vector(jacobiator)
    )]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        jacobiator: Vec<Rational>,
    },

    #[error(
        "structure constant c[{i}][{j}][{k}] = {value} breaks the ideal chain: \
         [Z{i}, Z{j}] must lie in the span of Z1..Z{}",
        min(*i, *j).saturating_sub(1)
    )]
    MalcevViolation {
        i: usize,
        j: usize,
        k: usize,
        value: Rational,
    },

    #[error("lower central series does not reach zero: the algebra is not nilpotent")]
    NotNilpotent,

    #[error(
        "center has dimension {actual_dim} but is not the span of the first \
         {actual_dim} basis vectors"
    )]
    CenterNotInitial { actual_dim: usize },

    #[error("a free step-2 algebra needs at least 2 generators, got {m}")]
    InvalidGeneratorCount { m: usize },

    #[error(
        "closed form does not apply: the generator block of order {order} is singular"
    )]
    ZariskiViolation { order: usize },

    #[error("expected {expected} entries, got {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("parse error at line {line}, column {col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },
}

fn min(a: usize, b: usize) -> usize {
    a.min(b)
}

impl Error {
    /// True for errors produced while reading input text, as opposed to
    /// errors about the mathematical content.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::ArityMismatch { .. })
    }
}
