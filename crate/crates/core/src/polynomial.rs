//! Sparse multivariate polynomials in canonical form.
//!
//! Terms are kept strictly descending by prime encoding with no zero
//! coefficients, so structural equality is mathematical equality. This
//! internal layout is independent of whichever [`MonomialOrder`] a caller
//! uses for leading terms.
//!
//! [`MonomialOrder`]: crate::ordering::MonomialOrder

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::scalar::Scalar;

/// A nonzero coefficient times a monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term<C> {
    pub coeff: C,
    pub mono: Monomial,
}

impl<C: Scalar> Term<C> {
    /// # Panics
    /// If `coeff` is zero.
    pub fn new(coeff: C, mono: Monomial) -> Self {
        assert!(!coeff.is_zero(), "terms carry nonzero coefficients");
        Self { coeff, mono }
    }

    pub fn constant(coeff: C, num_vars: usize) -> Self {
        Self::new(coeff, Monomial::one(num_vars))
    }

    pub fn mul(&self, other: &Term<C>) -> Term<C> {
        Term { coeff: self.coeff.clone() * other.coeff.clone(), mono: self.mono.mul(&other.mono) }
    }
}

impl<C: Scalar> fmt::Debug for Term<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Term({self})")
    }
}

impl<C: Scalar> fmt::Display for Term<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::render_term(self))
    }
}

/// `t1 / t2`, defined when the monomial of `t2` divides that of `t1`.
pub fn divide_term<C: Scalar>(t1: &Term<C>, t2: &Term<C>) -> Result<Term<C>> {
    if t2.coeff.is_zero() {
        return Err(Error::ZeroCoefficient);
    }
    let mono = t1.mono.checked_div(&t2.mono).ok_or(Error::NotDivisible)?;
    Ok(Term { coeff: t1.coeff.clone() / t2.coeff.clone(), mono })
}

/// Canonical sparse polynomial over `num_vars` variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    num_vars: usize,
    terms: Vec<Term<C>>,
}

impl<C: Scalar> Polynomial<C> {
    pub fn zero(num_vars: usize) -> Self {
        Self { num_vars, terms: Vec::new() }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(C::one(), num_vars)
    }

    pub fn constant(c: C, num_vars: usize) -> Self {
        Self::from_term(Term { coeff: c, mono: Monomial::one(num_vars) })
    }

    pub fn var(index: usize, num_vars: usize) -> Self {
        Self::from_term(Term { coeff: C::one(), mono: Monomial::var(index, num_vars) })
    }

    pub fn from_term(term: Term<C>) -> Self {
        let num_vars = term.mono.num_vars();
        if term.coeff.is_zero() {
            return Self::zero(num_vars);
        }
        Self { num_vars, terms: vec![term] }
    }

    /// Sum an arbitrary list of (coefficient, monomial) pairs into canonical form.
    pub fn from_terms<I>(num_vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (C, Monomial)>,
    {
        let mut raw: Vec<Term<C>> = terms
            .into_iter()
            .map(|(coeff, mono)| {
                assert_eq!(mono.num_vars(), num_vars, "monomial arity differs from polynomial");
                Term { coeff, mono }
            })
            .collect();
        raw.sort_by(|a, b| b.mono.code().cmp(a.mono.code()));
        let mut terms: Vec<Term<C>> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = last.coeff.clone() + t.coeff,
                _ => {
                    if let Some(last) = terms.last() {
                        if last.coeff.is_zero() {
                            terms.pop();
                        }
                    }
                    terms.push(t);
                }
            }
        }
        if terms.last().is_some_and(|t| t.coeff.is_zero()) {
            terms.pop();
        }
        Self { num_vars, terms }
    }

    /// Re-normalize a term list; the identity on canonical input.
    pub fn canonicalize(&self) -> Self {
        Self::from_terms(self.num_vars, self.terms.iter().map(|t| (t.coeff.clone(), t.mono.clone())))
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Terms in descending prime-encoding order.
    pub fn terms(&self) -> &[Term<C>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn is_nonzero_constant(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    /// `f(0, ..., 0)`.
    pub fn constant_term(&self) -> C {
        match self.terms.last() {
            Some(t) if t.mono.is_one() => t.coeff.clone(),
            _ => C::zero(),
        }
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    fn check_arity(&self, other: &Self) {
        assert_eq!(self.num_vars, other.num_vars, "polynomials from different variable contexts");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    // Merge of two descending term lists.
    fn combine(&self, other: &Self, negate_other: bool) -> Self {
        self.check_arity(other);
        let sign = |c: &C| if negate_other { -c.clone() } else { c.clone() };
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.mono.code().cmp(b.mono.code()) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { coeff: sign(&b.coeff), mono: b.mono.clone() });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a.coeff.clone() + sign(&b.coeff);
                    if !c.is_zero() {
                        out.push(Term { coeff: c, mono: a.mono.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|b| Term { coeff: sign(&b.coeff), mono: b.mono.clone() }));
        Self { num_vars: self.num_vars, terms: out }
    }

    pub fn neg(&self) -> Self {
        Self {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|t| Term { coeff: -t.coeff.clone(), mono: t.mono.clone() }).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_arity(other);
        let products = self.terms.iter().flat_map(|a| {
            other.terms.iter().map(move |b| (a.coeff.clone() * b.coeff.clone(), a.mono.mul(&b.mono)))
        });
        Self::from_terms(self.num_vars, products)
    }

    /// Multiply every term by `t`. Multiplication by a monomial preserves the
    /// encoding order, so no re-sort is needed.
    pub fn mul_term(&self, t: &Term<C>) -> Self {
        assert_eq!(t.mono.num_vars(), self.num_vars, "term arity differs from polynomial");
        if t.coeff.is_zero() {
            return Self::zero(self.num_vars);
        }
        Self { num_vars: self.num_vars, terms: self.terms.iter().map(|s| s.mul(t)).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_term(&Term { coeff: c.clone(), mono: Monomial::one(self.num_vars) })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(self.num_vars);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Divide every monomial by `m`, which must divide all of them.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Self> {
        let terms = self
            .terms
            .iter()
            .map(|t| t.mono.checked_div(m).map(|mono| Term { coeff: t.coeff.clone(), mono }))
            .collect::<Option<Vec<_>>>()?;
        Some(Self { num_vars: self.num_vars, terms })
    }

    /// Total order on canonical forms: term by term, encoding first, then
    /// coefficient; a proper prefix sorts first.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let ord = a
                .mono
                .code()
                .cmp(b.mono.code())
                .then_with(|| a.coeff.partial_cmp(&b.coeff).unwrap_or(Ordering::Equal));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl<C: Scalar> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<C: Scalar> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::render_polynomial(self))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl<C: Scalar> $tr<&Polynomial<C>> for &Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: &Polynomial<C>) -> Polynomial<C> {
                Polynomial::$method(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<C: Scalar> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial::neg(self)
    }
}

pub fn add<C: Scalar>(f: &Polynomial<C>, g: &Polynomial<C>) -> Polynomial<C> {
    f.add(g)
}

pub fn mul<C: Scalar>(f: &Polynomial<C>, g: &Polynomial<C>) -> Polynomial<C> {
    f.mul(g)
}

pub fn mul_term<C: Scalar>(f: &Polynomial<C>, t: &Term<C>) -> Polynomial<C> {
    f.mul_term(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_util::{p, q};
    use crate::QPolynomial;

    fn t(c: i64, e: &[u32]) -> Term<crate::Rational> {
        Term::new(q(c), Monomial::new(e.to_vec()))
    }

    #[test]
    fn add_examples() {
        assert_eq!(p("x0+1", 3).add(&p("x0-1", 3)), p("2*x0", 3));
        let f = p("x0*x1 - 3*x2^2 + 1/2", 3);
        assert_eq!(f.add(&QPolynomial::zero(3)), f);
        assert!(p("x0*x1", 3).add(&p("-x0*x1", 3)).is_zero());
        assert!(f.add(&f.neg()).is_zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("x0+2*x1", 3).mul(&p("2*x2", 3)), p("2*x0*x2 + 4*x1*x2", 3));
        let f = p("x0^2 - x1 + 3", 3);
        assert_eq!(f.mul(&QPolynomial::one(3)), f);
        assert!(f.mul(&QPolynomial::zero(3)).is_zero());
    }

    #[test]
    fn mul_term_examples() {
        assert_eq!(p("x1^2 - x1", 3).mul_term(&t(1, &[0, 0, 2])), p("x1^2*x2^2 - x1*x2^2", 3));
        assert_eq!(p("x0+1", 3).mul_term(&t(3, &[0, 0, 0])), p("3*x0+3", 3));
        assert!(QPolynomial::zero(3).mul_term(&t(5, &[1, 0, 0])).is_zero());
    }

    #[test]
    fn divide_term_examples() {
        assert_eq!(divide_term(&t(4, &[0, 1, 1]), &t(2, &[0, 0, 1])).unwrap(), t(2, &[0, 1, 0]));
        assert_eq!(divide_term(&t(1, &[2, 0, 0]), &t(1, &[1, 0, 0])).unwrap(), t(1, &[1, 0, 0]));
        assert_eq!(divide_term(&t(1, &[0, 1, 0]), &t(1, &[1, 0, 0])), Err(Error::NotDivisible));
    }

    #[test]
    fn from_terms_merges_and_drops_zeros() {
        let x0 = Monomial::var(0, 2);
        let one = Monomial::one(2);
        let f = QPolynomial::from_terms(
            2,
            vec![(q(1), one.clone()), (q(2), x0.clone()), (q(-1), one.clone()), (q(-2), x0)],
        );
        assert!(f.is_zero());
        let g = QPolynomial::from_terms(2, vec![(q(0), one.clone()), (q(3), one)]);
        assert_eq!(g, QPolynomial::constant(q(3), 2));
    }

    #[test]
    fn terms_are_descending_by_encoding() {
        let f = p("1 + x0 + x1 + x0^2 + x2 + x0*x1", 3);
        let codes: Vec<_> = f.terms().iter().map(|t| t.mono.code().clone()).collect();
        assert!(codes.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(f.constant_term(), q(1));
        assert!(!f.is_constant());
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let f = p("x0 - 2*x1 + 1", 2);
        assert_eq!(f.pow(3), f.mul(&f).mul(&f));
        assert_eq!(f.pow(0), QPolynomial::one(2));
    }

    #[test]
    fn works_over_floats() {
        type FPoly = Polynomial<f64>;
        let x = FPoly::var(0, 2);
        let y = FPoly::var(1, 2);
        let f = &(&x + &y) * &(&x - &y);
        let expect = &x.mul(&x) - &y.mul(&y);
        assert_eq!(f, expect);
    }
}
