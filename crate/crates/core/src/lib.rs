//! Groebner bases by the Buchberger algorithm over exact rationals.
//!
//! The default monomial order identifies `x_i` with the `i`-th prime and
//! compares monomials by the integers they evaluate to. Lexicographic and
//! graded lexicographic orders are available as well. A system whose basis
//! contains a nonzero constant has no common root.
//!
//! Everything is generic over a [`Scalar`] coefficient type; the aliases below
//! fix the exact rational instantiation used by the CLI.
//!
//! ```
//! use primegb::{buchberger, parse_system, BuchbergerConfig, Rational, Verdict};
//!
//! let system = parse_system::<Rational>("vars: 1\nx0\nx0 + 1\n").unwrap();
//! let report = buchberger(&system.polynomials, &BuchbergerConfig::default()).unwrap();
//! assert_eq!(report.verdict, Verdict::Inconsistent);
//! ```

pub mod buchberger;
pub mod cli;
pub mod division;
pub mod error;
pub mod monomial;
pub mod oracle;
pub mod ordering;
pub mod parser;
pub mod polynomial;
pub mod scalar;
pub mod spoly;

pub use buchberger::{
    buchberger, buchberger_criterion_holds, reduce_basis, solvability_verdict, BasisReport, BuchbergerConfig,
    PassEvent, Profile, Verdict,
};
pub use division::{divide_with_limit, multivariate_divide, DivisionResult};
pub use error::{Error, Result};
pub use monomial::{decode, encode, Monomial, VarContext};
pub use oracle::{boolean_solutions, evaluate};
pub use ordering::{leading_monomial, leading_term, MonomialOrder};
pub use parser::{parse_polynomial, parse_system, render_polynomial, ParseError, SystemFile};
pub use polynomial::{divide_term, Polynomial, Term};
pub use scalar::Scalar;
pub use spoly::{all_s_polynomials, reduce_polynomial, s_polynomial, ReductionMode};

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;
pub type QPolynomial = Polynomial<Rational>;
pub type QTerm = Term<Rational>;
pub type QBasisReport = BasisReport<Rational>;
pub type QDivisionResult = DivisionResult<Rational>;
pub type QSystemFile = SystemFile<Rational>;

/// Machine-word rationals; arithmetic panics on overflow.
pub type Rational64 = num_rational::Ratio<i64>;
pub type R64Polynomial = Polynomial<Rational64>;

/// Floating-point coefficients; results are exact only while nothing rounds.
pub type F64Polynomial = Polynomial<f64>;
pub type F32Polynomial = Polynomial<f32>;
