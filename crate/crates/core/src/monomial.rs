//! Exponent-vector monomials and their prime encoding.
//!
//! Variable `x_i` is identified with the `i`-th prime (`x0 = 2`, `x1 = 3`,
//! `x2 = 5`, ...), so a monomial maps to the positive integer
//! `prod p_i^e_i`. The map is injective and multiplicative, which turns
//! divisibility, lcm and gcd of monomials into the same operations on
//! integers. Exponent vectors stay the authoritative representation; the
//! encoded routes are kept alongside and tested against them.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

const PRIME_TABLE_LEN: usize = 256;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_table() -> &'static [u64] {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| (2u64..).filter(|&n| is_prime(n)).take(PRIME_TABLE_LEN).collect())
}

/// The first `n` primes, in increasing order.
pub fn first_primes(n: usize) -> Vec<u64> {
    let table = prime_table();
    if n <= table.len() {
        return table[..n].to_vec();
    }
    let mut primes = table.to_vec();
    let mut candidate = primes[primes.len() - 1] + 2;
    while primes.len() < n {
        if is_prime(candidate) {
            primes.push(candidate);
        }
        candidate += 2;
    }
    primes
}

fn nth_prime(i: usize) -> u64 {
    match prime_table().get(i) {
        Some(&p) => p,
        None => first_primes(i + 1)[i],
    }
}

/// Variables `x0..x{n-1}` together with their assigned primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarContext {
    num_vars: usize,
    primes: Vec<u64>,
}

impl VarContext {
    pub fn new(num_vars: usize) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::NoVariables);
        }
        Ok(Self { num_vars, primes: first_primes(num_vars) })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// The monomial `x_index`.
    pub fn var(&self, index: usize) -> Monomial {
        Monomial::var(index, self.num_vars)
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.num_vars)
    }
}

/// A power product `x0^e0 * ... * x{n-1}^e{n-1}`.
///
/// The prime encoding is cached next to the exponents; both are kept in sync
/// by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
    code: BigUint,
}

fn encode_exponents(exponents: &[u32]) -> BigUint {
    exponents
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(BigUint::one(), |acc, (i, &e)| acc * BigUint::from(nth_prime(i)).pow(e))
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        let code = encode_exponents(&exponents);
        Self { exponents, code }
    }

    /// The monomial 1 over `num_vars` variables.
    pub fn one(num_vars: usize) -> Self {
        Self { exponents: vec![0; num_vars], code: BigUint::one() }
    }

    pub fn var(index: usize, num_vars: usize) -> Self {
        assert!(index < num_vars, "variable x{index} outside {num_vars} variables");
        let mut exponents = vec![0; num_vars];
        exponents[index] = 1;
        Self { exponents, code: BigUint::from(nth_prime(index)) }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    /// Cached prime encoding.
    pub fn code(&self) -> &BigUint {
        &self.code
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// `Some(i)` when the monomial is `x_i^k` for some `k >= 1`.
    pub fn as_variable_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    fn check_arity(&self, other: &Monomial) {
        assert_eq!(
            self.num_vars(),
            other.num_vars(),
            "monomials from different variable contexts"
        );
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.check_arity(other);
        let exponents = self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect();
        Monomial { exponents, code: &self.code * &other.code }
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exponents = self.exponents.iter().zip(&other.exponents).map(|(a, b)| a - b).collect();
        Some(Monomial { exponents, code: &self.code / &other.code })
    }

    /// Componentwise test: `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.check_arity(other);
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    /// Divisibility decided on the encodings.
    pub fn divides_encoded(&self, other: &Monomial) -> bool {
        self.check_arity(other);
        other.code.is_multiple_of(&self.code)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.check_arity(other);
        Monomial::new(self.exponents.iter().zip(&other.exponents).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.check_arity(other);
        Monomial::new(self.exponents.iter().zip(&other.exponents).map(|(a, b)| *a.min(b)).collect())
    }

    /// Lcm through integer lcm of the encodings followed by factorization.
    pub fn lcm_encoded(&self, other: &Monomial, ctx: &VarContext) -> Result<Monomial> {
        decode(&self.code.lcm(&other.code), ctx)
    }

    /// Gcd through integer gcd of the encodings followed by factorization.
    pub fn gcd_encoded(&self, other: &Monomial, ctx: &VarContext) -> Result<Monomial> {
        decode(&self.code.gcd(&other.code), ctx)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({self})")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// `prod primes[i]^exponents[i]`, computed from the context's primes.
pub fn encode(m: &Monomial, ctx: &VarContext) -> BigUint {
    assert_eq!(m.num_vars(), ctx.num_vars(), "monomial arity differs from context");
    m.exponents
        .iter()
        .zip(ctx.primes())
        .fold(BigUint::one(), |acc, (&e, &p)| acc * BigUint::from(p).pow(e))
}

/// Factor `value` over the context's primes.
pub fn decode(value: &BigUint, ctx: &VarContext) -> Result<Monomial> {
    if value.is_zero() {
        return Err(Error::ZeroEncoding);
    }
    let mut rest = value.clone();
    let mut exponents = vec![0u32; ctx.num_vars()];
    for (e, &p) in exponents.iter_mut().zip(ctx.primes()) {
        let p = BigUint::from(p);
        loop {
            let (q, r) = rest.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            rest = q;
            *e += 1;
        }
    }
    if !rest.is_one() {
        return Err(Error::ForeignPrimeFactor { value: value.to_string(), num_vars: ctx.num_vars() });
    }
    Ok(Monomial::new(exponents))
}

pub fn divides(d: &Monomial, m: &Monomial) -> bool {
    d.divides(m)
}

pub fn monomial_lcm(a: &Monomial, b: &Monomial) -> Monomial {
    a.lcm(b)
}

pub fn monomial_gcd(a: &Monomial, b: &Monomial) -> Monomial {
    a.gcd(b)
}
