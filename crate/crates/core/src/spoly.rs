//! S-polynomials and the optional monomial-content reduction applied to them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Result;
use crate::monomial::Monomial;
use crate::ordering::{leading_term, MonomialOrder};
use crate::polynomial::{divide_term, Polynomial, Term};
use crate::scalar::Scalar;

/// What to do to each S-polynomial before it is divided by the basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReductionMode {
    /// Leave S-polynomials untouched.
    #[default]
    Off,
    /// Strip the common monomial factor; collapse lone non-power terms to 1.
    Paper,
}

impl ReductionMode {
    pub const fn name(&self) -> &'static str {
        match self {
            ReductionMode::Off => "off",
            ReductionMode::Paper => "paper",
        }
    }
}

impl fmt::Display for ReductionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReductionMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "off" => Ok(ReductionMode::Off),
            "paper" => Ok(ReductionMode::Paper),
            other => Err(format!("unknown reduction mode `{other}` (expected off or paper)")),
        }
    }
}

/// `(L / LT(f)) * f - (L / LT(g)) * g` with `L = lcm(LM(f), LM(g))`.
pub fn s_polynomial<C: Scalar>(f: &Polynomial<C>, g: &Polynomial<C>, ord: MonomialOrder) -> Result<Polynomial<C>> {
    let lt_f = leading_term(f, ord)?;
    let lt_g = leading_term(g, ord)?;
    let lcm = Term::new(C::one(), lt_f.mono.lcm(&lt_g.mono));
    let left = f.mul_term(&divide_term(&lcm, lt_f)?);
    let right = g.mul_term(&divide_term(&lcm, lt_g)?);
    Ok(left.sub(&right))
}

/// True when the leading monomials of `f` and `g` share no variable.
pub fn leading_monomials_coprime<C: Scalar>(f: &Polynomial<C>, g: &Polynomial<C>, ord: MonomialOrder) -> Result<bool> {
    let a = &leading_term(f, ord)?.mono;
    let b = &leading_term(g, ord)?.mono;
    Ok(a.gcd(b).is_one())
}

/// One S-polynomial per pair `i < j`, in nested-loop order.
pub fn all_s_polynomials<C: Scalar>(basis: &[Polynomial<C>], ord: MonomialOrder) -> Result<Vec<Polynomial<C>>> {
    Ok(s_polynomial_pairs(basis, ord, false)?.into_iter().map(|(_, s)| s).collect())
}

/// An S-polynomial with the basis indices `(i, j)` it came from.
pub type IndexedSPolynomial<C> = ((usize, usize), Polynomial<C>);

/// Pairwise S-polynomials tagged with their indices. With `skip_coprime`,
/// pairs whose leading monomials are coprime are left out.
pub fn s_polynomial_pairs<C: Scalar>(
    basis: &[Polynomial<C>],
    ord: MonomialOrder,
    skip_coprime: bool,
) -> Result<Vec<IndexedSPolynomial<C>>> {
    let mut out = Vec::with_capacity(basis.len() * basis.len().saturating_sub(1) / 2);
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if skip_coprime && leading_monomials_coprime(&basis[i], &basis[j], ord)? {
                continue;
            }
            out.push(((i, j), s_polynomial(&basis[i], &basis[j], ord)?));
        }
    }
    Ok(out)
}

/// Gcd of all monomials appearing in `f`; `None` for zero.
pub fn monomial_content<C: Scalar>(f: &Polynomial<C>) -> Option<Monomial> {
    let mut terms = f.terms().iter();
    let first = terms.next()?.mono.clone();
    Some(terms.fold(first, |acc, t| acc.gcd(&t.mono)))
}

pub fn reduce_polynomial<C: Scalar>(f: &Polynomial<C>, mode: ReductionMode) -> Polynomial<C> {
    match mode {
        ReductionMode::Off => f.clone(),
        ReductionMode::Paper => reduce_paper(f),
    }
}

fn reduce_paper<C: Scalar>(f: &Polynomial<C>) -> Polynomial<C> {
    if !f.constant_term().is_zero() || f.is_zero() {
        return f.clone();
    }
    if let [t] = f.terms() {
        // A bare power x_i^k survives; any other lone term becomes 1.
        if t.coeff.is_one() && t.mono.as_variable_power().is_some() {
            return f.clone();
        }
        return Polynomial::one(f.num_vars());
    }
    let content = monomial_content(f).expect("nonzero polynomial has a content");
    if content.is_one() {
        return f.clone();
    }
    f.div_monomial(&content).expect("content divides every term")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::monomial::{decode, VarContext};
    use crate::test_util::p;
    use crate::QPolynomial;
    use num_integer::Integer;

    #[test]
    fn s_polynomial_examples() {
        let f2 = p("x2^2 - x2", 3);
        let f3 = p("x1^2 - x1", 3);
        let s = s_polynomial(&f2, &f3, MonomialOrder::Prime).unwrap();
        assert_eq!(s, p("x1*x2^2 - x1^2*x2", 3));

        assert!(s_polynomial(&f2, &f2, MonomialOrder::Prime).unwrap().is_zero());

        let f1 = p("2*x0*x2 + 4*x1*x2 - 6", 3);
        let s = s_polynomial(&f1, &f2, MonomialOrder::Prime).unwrap();
        assert_eq!(s, p("1/2*x0*x2^2 + x1*x2 - 3/2*x2", 3));
    }

    #[test]
    fn s_polynomial_of_zero_is_an_error() {
        let z = QPolynomial::zero(2);
        assert_eq!(s_polynomial(&z, &p("x0", 2), MonomialOrder::Prime), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn all_pairs_counts() {
        let f = p("x0 + 1", 3);
        let g = p("x1^2 - x2", 3);
        assert!(all_s_polynomials(std::slice::from_ref(&f), MonomialOrder::Prime).unwrap().is_empty());
        assert_eq!(
            all_s_polynomials(&[f.clone(), g.clone()], MonomialOrder::Prime).unwrap(),
            vec![s_polynomial(&f, &g, MonomialOrder::Prime).unwrap()]
        );
        let sample = [
            p("2*x0*x2 + 4*x1*x2 - 6", 3),
            p("x2^2 - x2", 3),
            p("x1^2 - x1", 3),
            p("x0^2 - x0", 3),
        ];
        let all = s_polynomial_pairs(&sample, MonomialOrder::Prime, false).unwrap();
        assert_eq!(all.len(), 6);
        let idx: Vec<_> = all.iter().map(|(ij, _)| *ij).collect();
        assert_eq!(idx, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        // only (f1, f2) and (f1, f3) share a variable in their leading monomials
        let kept = s_polynomial_pairs(&sample, MonomialOrder::Prime, true).unwrap();
        let idx: Vec<_> = kept.iter().map(|(ij, _)| *ij).collect();
        assert_eq!(idx, vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn reduce_examples() {
        let r = reduce_polynomial(&p("x0^2*x1 + x0*x1", 3), ReductionMode::Paper);
        assert_eq!(r, p("x0 + 1", 3));
        assert_eq!(reduce_polynomial(&p("x0^2*x1", 3), ReductionMode::Paper), p("1", 3));
        let f = p("x0 + 2*x1 - 3", 3);
        assert_eq!(reduce_polynomial(&f, ReductionMode::Paper), f);
    }

    #[test]
    fn reduce_edge_cases() {
        let z = QPolynomial::zero(2);
        assert!(reduce_polynomial(&z, ReductionMode::Paper).is_zero());
        // bare powers are kept, scaled powers and products collapse
        assert_eq!(reduce_polynomial(&p("x1^3", 2), ReductionMode::Paper), p("x1^3", 2));
        assert_eq!(reduce_polynomial(&p("x1", 2), ReductionMode::Paper), p("x1", 2));
        assert_eq!(reduce_polynomial(&p("3*x1^3", 2), ReductionMode::Paper), p("1", 2));
        assert_eq!(reduce_polynomial(&p("-x0", 2), ReductionMode::Paper), p("1", 2));
        // coprime content leaves the polynomial as is
        let f = p("x0 + x1", 2);
        assert_eq!(reduce_polynomial(&f, ReductionMode::Paper), f);
        let g = p("x0^2*x1 + 7*x0*x1", 2);
        assert_eq!(reduce_polynomial(&g, ReductionMode::Off), g);
    }

    #[test]
    fn content_agrees_with_integer_gcd() {
        let ctx = VarContext::new(3).unwrap();
        let f = p("x0^3*x1^2*x2 + x0^2*x1^3 - 4*x0^2*x1^2*x2^5", 3);
        let via_codes = f.terms().iter().map(|t| t.mono.code().clone()).reduce(|a, b| a.gcd(&b)).unwrap();
        assert_eq!(decode(&via_codes, &ctx).unwrap(), monomial_content(&f).unwrap());
    }
}
