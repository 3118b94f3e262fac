//! The Buchberger fixed-point loop, reduced bases and the solvability verdict.
//!
//! Each pass forms every pairwise S-polynomial of the current basis,
//! optionally reduces them, removes duplicates, and divides each survivor by
//! the basis as it grows. Nonzero remainders are appended. The loop stops when
//! a pass appends nothing, or as soon as a nonzero constant shows up: that
//! constant is a certificate that the system has no common root.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::division::multivariate_divide;
use crate::error::{Error, Result};
use crate::ordering::{leading_coefficient, leading_monomial, MonomialOrder};
use crate::polynomial::Polynomial;
use crate::scalar::Scalar;
use crate::spoly::{reduce_polynomial, s_polynomial_pairs, ReductionMode};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize)]
pub enum Profile {
    /// Prime order with the content reduction, reproducing the reference
    /// procedure step for step.
    #[serde(rename = "paper")]
    PaperFaithful,
    /// No reduction heuristic; the result is a true Groebner basis.
    #[default]
    #[serde(rename = "conservative")]
    Conservative,
}

impl Profile {
    pub const fn name(&self) -> &'static str {
        match self {
            Profile::PaperFaithful => "paper",
            Profile::Conservative => "conservative",
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "paper" => Ok(Profile::PaperFaithful),
            "conservative" => Ok(Profile::Conservative),
            other => Err(format!("unknown profile `{other}` (expected paper or conservative)")),
        }
    }
}

/// Settings for one run. Build through [`BuchbergerConfig::paper_faithful`]
/// or [`BuchbergerConfig::conservative`] so the profile invariants hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuchbergerConfig {
    order: MonomialOrder,
    reduction: ReductionMode,
    profile: Profile,
    pub max_passes: Option<usize>,
    /// Skip pairs with coprime leading monomials. Off in both profiles.
    pub skip_coprime_pairs: bool,
}

impl BuchbergerConfig {
    pub fn paper_faithful() -> Self {
        Self {
            order: MonomialOrder::Prime,
            reduction: ReductionMode::Paper,
            profile: Profile::PaperFaithful,
            max_passes: None,
            skip_coprime_pairs: false,
        }
    }

    pub fn conservative(order: MonomialOrder) -> Self {
        Self {
            order,
            reduction: ReductionMode::Off,
            profile: Profile::Conservative,
            max_passes: None,
            skip_coprime_pairs: false,
        }
    }

    pub fn with_max_passes(mut self, max_passes: Option<usize>) -> Self {
        self.max_passes = max_passes;
        self
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn reduction(&self) -> ReductionMode {
        self.reduction
    }

    pub fn profile(&self) -> Profile {
        self.profile
    }
}

impl Default for BuchbergerConfig {
    fn default() -> Self {
        Self::conservative(MonomialOrder::Prime)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// The basis holds a nonzero constant: no common root exists.
    Inconsistent,
    /// No certificate of non-existence was found.
    Consistent,
}

impl Verdict {
    pub const fn name(&self) -> &'static str {
        match self {
            Verdict::Inconsistent => "inconsistent",
            Verdict::Consistent => "consistent",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What happened during one pass of the loop.
#[derive(Clone, Debug, PartialEq)]
pub struct PassEvent<C: Scalar> {
    pub pass: usize,
    pub s_polynomials: usize,
    pub distinct: usize,
    pub appended: Vec<Polynomial<C>>,
    pub basis_len: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BasisReport<C: Scalar> {
    /// Nonzero input generators; these are the first elements of `basis`.
    pub generators: Vec<Polynomial<C>>,
    pub basis: Vec<Polynomial<C>>,
    pub passes: usize,
    pub contradiction: bool,
    pub verdict: Verdict,
    pub config: BuchbergerConfig,
    pub trace: Vec<PassEvent<C>>,
}

impl<C: Scalar> BasisReport<C> {
    /// Whether every pairwise S-polynomial of the basis divides to zero.
    pub fn satisfies_criterion(&self) -> Result<bool> {
        buchberger_criterion_holds(&self.basis, self.config.order)
    }
}

fn sort_dedup<C: Scalar>(mut polys: Vec<Polynomial<C>>) -> Vec<Polynomial<C>> {
    polys.sort_by(|a, b| a.canonical_cmp(b));
    polys.dedup();
    polys
}

pub fn buchberger<C: Scalar>(generators: &[Polynomial<C>], cfg: &BuchbergerConfig) -> Result<BasisReport<C>> {
    if generators.is_empty() {
        return Err(Error::NoGenerators);
    }
    let ord = cfg.order;
    let inputs: Vec<Polynomial<C>> = generators.iter().filter(|f| !f.is_zero()).cloned().collect();
    let mut basis = inputs.clone();
    let mut trace = Vec::new();
    let mut passes = 0;
    let mut contradiction = false;

    loop {
        if cfg.max_passes.is_some_and(|max| passes >= max) {
            return Err(Error::PassLimitExceeded { passes, basis_len: basis.len() });
        }
        passes += 1;

        let pairs = s_polynomial_pairs(&basis, ord, cfg.skip_coprime_pairs)?;
        let s_count = pairs.len();
        let candidates = sort_dedup(pairs.into_iter().map(|(_, s)| reduce_polynomial(&s, cfg.reduction)).collect());
        let distinct = candidates.len();

        let mut appended = Vec::new();
        for s in candidates {
            // Later candidates are divided by the basis including this pass's
            // additions.
            let r = multivariate_divide(&s, &basis, ord).remainder;
            if r.is_zero() {
                continue;
            }
            let constant = r.is_nonzero_constant();
            basis.push(r.clone());
            appended.push(r);
            if constant {
                contradiction = true;
                break;
            }
        }
        contradiction |= basis.iter().any(Polynomial::is_nonzero_constant);

        let done = appended.is_empty() || contradiction;
        trace.push(PassEvent { pass: passes, s_polynomials: s_count, distinct, appended, basis_len: basis.len() });
        if done {
            break;
        }
    }

    let verdict = if contradiction { Verdict::Inconsistent } else { Verdict::Consistent };
    Ok(BasisReport { generators: inputs, basis, passes, contradiction, verdict, config: cfg.clone(), trace })
}

pub fn solvability_verdict<C: Scalar>(report: &BasisReport<C>) -> Verdict {
    verdict_of(&report.basis)
}

/// Inconsistent iff some element is a nonzero constant.
pub fn verdict_of<C: Scalar>(basis: &[Polynomial<C>]) -> Verdict {
    if basis.iter().any(Polynomial::is_nonzero_constant) {
        Verdict::Inconsistent
    } else {
        Verdict::Consistent
    }
}

/// Every S-polynomial of `basis` has remainder zero on division by `basis`.
pub fn buchberger_criterion_holds<C: Scalar>(basis: &[Polynomial<C>], ord: MonomialOrder) -> Result<bool> {
    let nonzero: Vec<Polynomial<C>> = basis.iter().filter(|f| !f.is_zero()).cloned().collect();
    for (_, s) in s_polynomial_pairs(&nonzero, ord, false)? {
        if !multivariate_divide(&s, &nonzero, ord).remainder.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn make_monic<C: Scalar>(f: &Polynomial<C>, ord: MonomialOrder) -> Result<Polynomial<C>> {
    let lc = leading_coefficient(f, ord)?.clone();
    Ok(f.scale(&(C::one() / lc)))
}

/// The reduced Groebner basis of the ideal generated by `basis`, which must
/// already be a Groebner basis under `ord`. Output is monic, interreduced and
/// sorted ascending by leading monomial.
pub fn reduce_basis<C: Scalar>(basis: &[Polynomial<C>], ord: MonomialOrder) -> Result<Vec<Polynomial<C>>> {
    let g: Vec<Polynomial<C>> = basis.iter().filter(|f| !f.is_zero()).cloned().collect();
    if g.is_empty() {
        return Err(Error::EmptyBasis);
    }
    let leads = g.iter().map(|f| leading_monomial(f, ord)).collect::<Result<Vec<_>>>()?;

    // Minimal basis: drop elements whose leading monomial is divisible by
    // another's; among equal leading monomials the first one stays.
    let keep: Vec<usize> = (0..g.len())
        .filter(|&i| {
            !(0..g.len()).any(|j| j != i && leads[j].divides(leads[i]) && (leads[j] != leads[i] || j < i))
        })
        .collect();
    let minimal = keep.iter().map(|&i| make_monic(&g[i], ord)).collect::<Result<Vec<_>>>()?;

    // Leading monomials are fixed by now, so one sweep fully interreduces.
    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, f) in minimal.iter().enumerate() {
        let others: Vec<Polynomial<C>> =
            minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, h)| h.clone()).collect();
        let r = if others.is_empty() { f.clone() } else { multivariate_divide(f, &others, ord).remainder };
        reduced.push(make_monic(&r, ord)?);
    }

    reduced.sort_by(|a, b| {
        ord.compare(leading_monomial(a, ord).expect("nonzero"), leading_monomial(b, ord).expect("nonzero"))
    });
    Ok(reduced)
}
