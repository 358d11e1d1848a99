//! Error type shared by every module in the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric (max |a_ij - a_ji| = {asymmetry:.3e} exceeds tolerance)")]
    NotSymmetric { asymmetry: f64 },

    #[error("matrix contains a non-finite entry")]
    NonFinite,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("family has {n} matrices, exact enumeration is capped at {max}")]
    TooManyMatrices { n: usize, max: usize },

    #[error("enumeration over {count} tuples exceeds the cap of {max}")]
    EnumerationTooLarge { count: u128, max: u128 },

    #[error("index argument {value} out of range [{min}, {max}]")]
    IndexOutOfRange { value: usize, min: usize, max: usize },

    #[error("parameter {name} = {value} out of range")]
    OutOfRange { name: &'static str, value: f64 },

    #[error("matrix violates the conditioning window (1-eta)I <= A <= I with eta = {eta}")]
    WindowViolation { eta: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPsd { min_eigenvalue: f64 },

    #[error("vector {index} is not unit-norm (norm = {norm})")]
    NotUnitVector { index: usize, norm: f64 },

    #[error("matrix Q is numerically singular (|det| = {det:.3e})")]
    SingularQ { det: f64 },

    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("invalid permutation argument")]
    InvalidPermutation,
}
