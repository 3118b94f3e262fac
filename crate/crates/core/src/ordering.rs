//! Monomial orders and leading terms.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::polynomial::{Polynomial, Term};
use crate::scalar::Scalar;

/// A monomial order. Lex and graded lex use the priority `x0 > x1 > ...`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Compare the prime encodings `prod p_i^e_i` as integers.
    #[default]
    Prime,
    Lex,
    Grlex,
}

impl MonomialOrder {
    pub const ALL: [MonomialOrder; 3] = [MonomialOrder::Prime, MonomialOrder::Lex, MonomialOrder::Grlex];

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            // Encoding is injective, so no tie-break is needed.
            MonomialOrder::Prime => a.code().cmp(b.code()),
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Grlex => a.degree().cmp(&b.degree()).then_with(|| a.exponents().cmp(b.exponents())),
        }
    }

    pub const fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Prime => "prime",
            MonomialOrder::Lex => "lex",
            MonomialOrder::Grlex => "grlex",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "prime" => Ok(MonomialOrder::Prime),
            "lex" => Ok(MonomialOrder::Lex),
            "grlex" => Ok(MonomialOrder::Grlex),
            other => Err(format!("unknown monomial order `{other}` (expected prime, lex or grlex)")),
        }
    }
}

pub fn compare(a: &Monomial, b: &Monomial, ord: MonomialOrder) -> Ordering {
    ord.compare(a, b)
}

/// Maximal term of `f` under `ord`, coefficient included.
pub fn leading_term<C: Scalar>(f: &Polynomial<C>, ord: MonomialOrder) -> Result<&Term<C>> {
    match ord {
        // Canonical storage is already descending by encoding.
        MonomialOrder::Prime => f.terms().first(),
        _ => f.terms().iter().max_by(|a, b| ord.compare(&a.mono, &b.mono)),
    }
    .ok_or(Error::ZeroPolynomial)
}

pub fn leading_monomial<C: Scalar>(f: &Polynomial<C>, ord: MonomialOrder) -> Result<&Monomial> {
    leading_term(f, ord).map(|t| &t.mono)
}

pub fn leading_coefficient<C: Scalar>(f: &Polynomial<C>, ord: MonomialOrder) -> Result<&C> {
    leading_term(f, ord).map(|t| &t.coeff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_util::{p, q};
    use crate::QPolynomial;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn compare_examples() {
        // 10 vs 15
        assert_eq!(compare(&m(&[1, 0, 1]), &m(&[0, 1, 1]), MonomialOrder::Prime), Ordering::Less);
        for ord in MonomialOrder::ALL {
            assert_eq!(compare(&m(&[2, 1, 3]), &m(&[2, 1, 3]), ord), Ordering::Equal);
        }
        assert_eq!(compare(&m(&[0, 0, 1]), &m(&[5, 0, 0]), MonomialOrder::Lex), Ordering::Less);
    }

    #[test]
    fn orders_differ_where_expected() {
        // x1 = 3 beats x0^1 = 2 under prime; lex prefers x0.
        let (x0, x1) = (m(&[1, 0]), m(&[0, 1]));
        assert_eq!(MonomialOrder::Prime.compare(&x0, &x1), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.compare(&x0, &x1), Ordering::Greater);
        // x0^2 = 4 beats x1 = 3 under prime, as under grlex.
        assert_eq!(MonomialOrder::Prime.compare(&m(&[2, 0]), &x1), Ordering::Greater);
        assert_eq!(MonomialOrder::Grlex.compare(&m(&[0, 2]), &m(&[1, 0])), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.compare(&m(&[0, 2]), &m(&[1, 0])), Ordering::Less);
    }

    #[test]
    fn leading_term_examples() {
        let f1 = p("2*x0*x2 + 4*x1*x2 - 6", 3);
        let lt = leading_term(&f1, MonomialOrder::Prime).unwrap();
        assert_eq!(lt.coeff, q(4));
        assert_eq!(lt.mono, m(&[0, 1, 1]));
        let f2 = p("x2^2 - x2", 3);
        for ord in MonomialOrder::ALL {
            let lt = leading_term(&f2, ord).unwrap();
            assert_eq!(lt.mono, m(&[0, 0, 2]));
        }
        let c = p("7", 3);
        let lt = leading_term(&c, MonomialOrder::Prime).unwrap();
        assert_eq!((lt.coeff.clone(), lt.mono.clone()), (q(7), m(&[0, 0, 0])));
        assert_eq!(leading_term(&QPolynomial::zero(3), MonomialOrder::Lex), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn leading_monomial_examples() {
        let f1 = p("2*x0*x2 + 4*x1*x2 - 6", 3);
        assert_eq!(leading_monomial(&f1, MonomialOrder::Prime).unwrap(), &m(&[0, 1, 1]));
        assert_eq!(leading_monomial(&p("x0", 3), MonomialOrder::Prime).unwrap(), &m(&[1, 0, 0]));
        assert_eq!(leading_monomial(&p("5", 3), MonomialOrder::Grlex).unwrap(), &m(&[0, 0, 0]));
        assert_eq!(leading_monomial(&f1, MonomialOrder::Lex).unwrap(), &m(&[1, 0, 1]));
    }

    #[test]
    fn parse_order_names() {
        assert_eq!("grlex".parse::<MonomialOrder>(), Ok(MonomialOrder::Grlex));
        assert!("grevlex".parse::<MonomialOrder>().is_err());
    }
}
