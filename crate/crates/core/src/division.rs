//! Multivariate division by an ordered list of divisors.

use crate::error::{Error, Result};
use crate::ordering::{leading_term, MonomialOrder};
use crate::polynomial::{divide_term, Polynomial, Term};
use crate::scalar::Scalar;

/// Quotients aligned with the divisor list, plus the remainder.
#[derive(Debug, Clone, PartialEq)]
pub struct DivisionResult<C: Scalar> {
    pub quotients: Vec<Polynomial<C>>,
    pub remainder: Polynomial<C>,
}

/// Divide `f` by `divisors` in list order.
///
/// At every step the first divisor whose leading monomial divides the
/// leading monomial of the running polynomial is used; when none does, the
/// leading term moves to the remainder. Zero divisors are skipped and get a
/// zero quotient.
pub fn multivariate_divide<C: Scalar>(
    f: &Polynomial<C>,
    divisors: &[Polynomial<C>],
    ord: MonomialOrder,
) -> DivisionResult<C> {
    divide_with_limit(f, divisors, ord, None).expect("unbounded division cannot hit a step limit")
}

/// [`multivariate_divide`] with an optional ceiling on loop iterations.
pub fn divide_with_limit<C: Scalar>(
    f: &Polynomial<C>,
    divisors: &[Polynomial<C>],
    ord: MonomialOrder,
    max_steps: Option<usize>,
) -> Result<DivisionResult<C>> {
    let n = f.num_vars();
    let leads: Vec<Option<&Term<C>>> = divisors.iter().map(|g| leading_term(g, ord).ok()).collect();
    let mut quotients = vec![Polynomial::zero(n); divisors.len()];
    let mut remainder_terms: Vec<Term<C>> = Vec::new();
    let mut p = f.clone();
    let mut steps = 0usize;

    while !p.is_zero() {
        if let Some(limit) = max_steps {
            if steps >= limit {
                return Err(Error::StepLimitExceeded { steps: limit });
            }
        }
        steps += 1;

        let lt_p = leading_term(&p, ord)?.clone();
        let hit = leads.iter().enumerate().find_map(|(i, lead)| {
            let lead = (*lead)?;
            divide_term(&lt_p, lead).ok().map(|factor| (i, factor))
        });
        match hit {
            Some((i, factor)) => {
                quotients[i] = quotients[i].add(&Polynomial::from_term(factor.clone()));
                p = p.sub(&divisors[i].mul_term(&factor));
            }
            None => {
                p = p.sub(&Polynomial::from_term(lt_p.clone()));
                remainder_terms.push(lt_p);
            }
        }
    }

    let remainder = Polynomial::from_terms(n, remainder_terms.into_iter().map(|t| (t.coeff, t.mono)));
    Ok(DivisionResult { quotients, remainder })
}
