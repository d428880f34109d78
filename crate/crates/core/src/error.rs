//! Crate-wide error type.

use crate::linalg::Matrix;
use crate::repr::WeightDecomposition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} does not fit a machine word after squaring (p < 2^31 required)")]
    ModulusTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("operation requires {0}")]
    UnsupportedField(&'static str),
    #[error("cannot parse scalar `{0}`")]
    ParseScalar(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("the zero polynomial has no squarefree part")]
    ZeroPolynomial,
    #[error("enumeration of {count} subspaces exceeds the cap of {cap}")]
    CapExceeded { count: u128, cap: u128 },
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("bracket listed for both orderings of pair ({0}, {1})")]
    DuplicatePair(String, String),
    #[error("antisymmetry violated: {0}")]
    AntisymmetryViolation(String),
    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    JacobiViolation { i: usize, j: usize, k: usize },
    #[error("matrix span is not closed under commutators at pair ({0}, {1})")]
    NotClosed(usize, usize),
    #[error("matrices are not linearly independent")]
    NotIndependent,
    #[error("subspace is not closed under the bracket")]
    NotASubalgebra,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("homomorphism law fails at basis pair ({i}, {j})")]
    HomomorphismViolation {
        i: usize,
        j: usize,
        difference: Box<Matrix>,
    },
    #[error("representation does not act on this algebra")]
    InvalidRepresentation,
    #[error("subspace is not invariant under the action")]
    NotInvariant,
    #[error("action matrix splits only partially over the base field")]
    IncompleteSplit { partial: Box<WeightDecomposition> },
}
