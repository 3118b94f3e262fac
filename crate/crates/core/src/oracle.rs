//! Brute-force verifiers.
//!
//! Nothing here touches division, S-polynomials or the Buchberger loop; the
//! only shared piece is the polynomial representation itself.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, VarContext};
use crate::polynomial::Polynomial;
use crate::scalar::Scalar;

/// Largest variable count [`boolean_solutions`] will enumerate.
pub const MAX_ENUMERATION_VARS: usize = 20;

/// Exact value of `f` at `point`.
pub fn evaluate<C: Scalar>(f: &Polynomial<C>, point: &[C]) -> Result<C> {
    if point.len() != f.num_vars() {
        return Err(Error::ArityMismatch { expected: f.num_vars(), actual: point.len() });
    }
    let mut total = C::zero();
    for t in f.terms() {
        let mut value = t.coeff.clone();
        for (x, &e) in point.iter().zip(t.mono.exponents()) {
            for _ in 0..e {
                value = value * x.clone();
            }
        }
        total = total + value;
    }
    Ok(total)
}

/// Every point of `{0,1}^n` where all of `system` vanishes, in lexicographic
/// order with `x0` most significant.
pub fn boolean_solutions<C: Scalar>(system: &[Polynomial<C>], ctx: &VarContext) -> Result<Vec<Vec<u8>>> {
    let n = ctx.num_vars();
    if n > MAX_ENUMERATION_VARS {
        return Err(Error::TooManyVariables { num_vars: n, limit: MAX_ENUMERATION_VARS });
    }
    if let Some(f) = system.iter().find(|f| f.num_vars() != n) {
        return Err(Error::ArityMismatch { expected: n, actual: f.num_vars() });
    }
    let mut solutions = Vec::new();
    for code in 0u32..(1u32 << n) {
        let bits: Vec<u8> = (0..n).map(|i| ((code >> (n - 1 - i)) & 1) as u8).collect();
        let point: Vec<C> = bits.iter().map(|&b| if b == 1 { C::one() } else { C::zero() }).collect();
        let mut all_zero = true;
        for f in system {
            if !evaluate(f, &point)?.is_zero() {
                all_zero = false;
                break;
            }
        }
        if all_zero {
            solutions.push(bits);
        }
    }
    Ok(solutions)
}

/// `x_i^2 - x_i`.
pub fn field_equation<C: Scalar>(index: usize, num_vars: usize) -> Polynomial<C> {
    let mut sq = vec![0; num_vars];
    sq[index] = 2;
    Polynomial::from_terms(
        num_vars,
        [(C::one(), Monomial::new(sq)), (-C::one(), Monomial::var(index, num_vars))],
    )
}

/// Whether every field equation `x_i^2 - x_i` occurs among `system`.
pub fn has_all_field_equations<C: Scalar>(system: &[Polynomial<C>], num_vars: usize) -> bool {
    (0..num_vars).all(|i| {
        let eq = field_equation::<C>(i, num_vars);
        system.iter().any(|f| *f == eq || *f == eq.neg())
    })
}

/// Whether each of `points` is a common zero of `polys`.
pub fn all_vanish_at<C: Scalar>(polys: &[Polynomial<C>], points: &[Vec<u8>]) -> Result<bool> {
    for bits in points {
        let point: Vec<C> = bits.iter().map(|&b| if b == 1 { C::one() } else { C::zero() }).collect();
        for f in polys {
            if !evaluate(f, &point)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
