use thiserror::Error;

use crate::parser::ParseError;

/// Errors produced by the algebra and the verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An encoded monomial has a prime factor outside the variable context.
    #[error("{value} has a prime factor outside the first {num_vars} primes")]
    ForeignPrimeFactor { value: String, num_vars: usize },

    /// Zero cannot be decoded into a monomial.
    #[error("0 is not the encoding of any monomial")]
    ZeroEncoding,

    /// A term quotient was requested where the divisor monomial does not divide.
    #[error("term is not divisible by the given divisor")]
    NotDivisible,

    /// Division of a coefficient by zero.
    #[error("division by a zero coefficient")]
    ZeroCoefficient,

    /// An operation that needs a leading term received the zero polynomial.
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    /// The Buchberger loop hit its configured pass ceiling.
    #[error("no fixed point after {passes} passes (basis has {basis_len} elements)")]
    PassLimitExceeded { passes: usize, basis_len: usize },

    /// The division loop hit its configured step ceiling.
    #[error("division exceeded {steps} steps")]
    StepLimitExceeded { steps: usize },

    /// A basis operation received no nonzero polynomials.
    #[error("basis is empty")]
    EmptyBasis,

    /// The generator list was empty.
    #[error("no generators given")]
    NoGenerators,

    /// Brute-force enumeration was asked for too many variables.
    #[error("{num_vars} variables is too many for enumeration (limit {limit})")]
    TooManyVariables { num_vars: usize, limit: usize },

    /// A point or polynomial has the wrong number of variables.
    #[error("expected {expected} variables, got {actual}")]
    ArityMismatch { expected: usize, actual: usize },

    /// The variable context must have at least one variable.
    #[error("a variable context needs at least one variable")]
    NoVariables,

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
