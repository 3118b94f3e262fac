#![allow(dead_code)]

use primegb::{Monomial, QPolynomial, Rational};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

pub fn random_monomial<R: Rng>(rng: &mut R, num_vars: usize, max_degree: u32) -> Monomial {
    let mut exps = vec![0u32; num_vars];
    let degree = rng.gen_range(0..=max_degree);
    for _ in 0..degree {
        exps[rng.gen_range(0..num_vars)] += 1;
    }
    Monomial::new(exps)
}

/// Sum of up to `max_terms` random terms with small integer (or, with
/// `rationals`, small fractional) coefficients.
pub fn random_polynomial<R: Rng>(
    rng: &mut R,
    num_vars: usize,
    max_degree: u32,
    max_terms: usize,
    rationals: bool,
) -> QPolynomial {
    let count = rng.gen_range(1..=max_terms);
    let terms = (0..count).map(|_| {
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-4i64..=4);
        }
        let coeff = if rationals { Rational::new(c.into(), rng.gen_range(1i64..=3).into()) } else { q(c) };
        (coeff, random_monomial(rng, num_vars, max_degree))
    });
    QPolynomial::from_terms(num_vars, terms)
}

/// A random polynomial that is not constant.
pub fn random_nonconstant<R: Rng>(rng: &mut R, num_vars: usize, max_degree: u32, max_terms: usize) -> QPolynomial {
    loop {
        let f = random_polynomial(rng, num_vars, max_degree, max_terms, false);
        if !f.is_constant() {
            return f;
        }
    }
}

/// Up to `max_gens` nonzero generators over `1..=max_vars` variables.
pub fn random_system<R: Rng>(rng: &mut R, max_vars: usize, max_degree: u32, max_gens: usize) -> Vec<QPolynomial> {
    let n = rng.gen_range(1..=max_vars);
    let gens = rng.gen_range(1..=max_gens);
    (0..gens).map(|_| random_nonconstant(rng, n, max_degree, 3)).collect()
}

/// Random constraints plus every field equation, shuffled.
pub fn random_boolean_system<R: Rng>(rng: &mut R, max_vars: usize) -> (usize, Vec<QPolynomial>) {
    let n = rng.gen_range(1..=max_vars);
    let mut system: Vec<QPolynomial> = (0..n).map(|i| primegb::oracle::field_equation(i, n)).collect();
    for _ in 0..rng.gen_range(1..=2) {
        system.push(random_nonconstant(rng, n, 2, 3));
    }
    system.shuffle(rng);
    (n, system)
}

/// Every monomial in `num_vars` variables with each exponent at most `max_exp`.
pub fn all_monomials(num_vars: usize, max_exp: u32) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for _ in 0..num_vars {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (0..=max_exp).map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}
