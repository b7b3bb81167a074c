//! Finite index sets for sums over `α + β = γ`.
//!
//! `α ↦ I(α·a)` is constant on each interval `[ξ_k, ξ_{k+1})` between
//! consecutive jumping numbers, and `α ↦ I((γ-α)·b)` is constant on each
//! interval `(γ-ξ'_{k+1}, γ-ξ'_k]`. Between consecutive critical points both
//! factors are therefore constant on the open interval, so the endpoints
//! together with one interior point per gap see every distinct summand.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::newton::MultiplierSolver;
use crate::rational::{common_denominator, int, Rational};

/// Sorted distinct coefficients in `[0, γ]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaSamples {
    values: Vec<Rational>,
}

impl AlphaSamples {
    /// `points ∩ [0, γ]` together with `0`, `γ` and every midpoint.
    pub fn from_critical(points: impl IntoIterator<Item = Rational>, gamma: &Rational) -> Self {
        let mut set: BTreeSet<Rational> = points
            .into_iter()
            .filter(|x| !x.is_negative() && x <= gamma)
            .collect();
        set.insert(Rational::zero());
        set.insert(gamma.clone());
        AlphaSamples {
            values: with_midpoints(set.into_iter().collect()),
        }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Adds the midpoint of every consecutive pair.
    pub fn refine(&self) -> Self {
        AlphaSamples {
            values: with_midpoints(self.values.clone()),
        }
    }
}

fn with_midpoints(sorted: Vec<Rational>) -> Vec<Rational> {
    let mut out = Vec::with_capacity(2 * sorted.len());
    for (i, x) in sorted.iter().enumerate() {
        if i > 0 {
            out.push((&sorted[i - 1] + x) / int(2));
        }
        out.push(x.clone());
    }
    out
}

/// `α ↦ I(α·a)`, including the zero ideal under the convention
/// `I(α·(0)) = (1)` for `α <= 0` and `(0)` otherwise.
pub(crate) struct Scaled {
    arity: usize,
    solver: Option<MultiplierSolver>,
}

impl Scaled {
    pub(crate) fn new(ideal: &MonomialIdeal) -> Result<Self> {
        let solver = if ideal.is_zero() { None } else { Some(MultiplierSolver::new(ideal)?) };
        Ok(Scaled {
            arity: ideal.arity(),
            solver,
        })
    }

    pub(crate) fn at(&self, c: &Rational) -> Result<MonomialIdeal> {
        match &self.solver {
            Some(s) => s.multiplier_ideal(c),
            None if c.is_positive() => Ok(MonomialIdeal::zero(self.arity)),
            None => Ok(MonomialIdeal::unit(self.arity)),
        }
    }

    /// Jumping numbers in `(0, limit]`; the zero ideal contributes none
    /// beyond the endpoint `0` that every sample set contains.
    pub(crate) fn jumps(&self, limit: &Rational) -> Result<Vec<Rational>> {
        match &self.solver {
            Some(s) if limit.is_positive() => s.jumping_numbers(limit),
            _ => Ok(Vec::new()),
        }
    }
}

fn check_pair(a: &MonomialIdeal, b: &MonomialIdeal, gamma: &Rational) -> Result<()> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::domain("sums over α + β = γ need nonzero ideals"));
    }
    if gamma.is_negative() {
        return Err(Error::domain("sums over α + β = γ need γ >= 0"));
    }
    Ok(())
}

pub(crate) fn critical_points(a: &Scaled, b: &Scaled, gamma: &Rational) -> Result<Vec<Rational>> {
    let mut points = a.jumps(gamma)?;
    points.extend(b.jumps(gamma)?.into_iter().map(|x| gamma - x));
    Ok(points)
}

pub(crate) fn samples_for(a: &Scaled, b: &Scaled, gamma: &Rational) -> Result<AlphaSamples> {
    if gamma.is_zero() {
        return Ok(AlphaSamples {
            values: vec![Rational::zero()],
        });
    }
    Ok(AlphaSamples::from_critical(critical_points(a, b, gamma)?, gamma))
}

/// `{0, γ} ∪ jn(a) ∪ (γ - jn(b))` within `[0, γ]`, plus midpoints.
pub fn critical_alphas(a: &MonomialIdeal, b: &MonomialIdeal, gamma: &Rational) -> Result<AlphaSamples> {
    check_pair(a, b, gamma)?;
    samples_for(&Scaled::new(a)?, &Scaled::new(b)?, gamma)
}

pub(crate) fn grid_for(a: &Scaled, b: &Scaled, gamma: &Rational) -> Result<AlphaSamples> {
    let points = critical_points(a, b, gamma)?;
    let den = common_denominator(points.iter().chain(std::iter::once(gamma))) * BigInt::from(2);
    let steps = (gamma * Rational::from_integer(den.clone())).to_integer();
    let mut values = Vec::new();
    let mut k = BigInt::zero();
    while k <= steps {
        values.push(Rational::new(k.clone(), den.clone()));
        k += 1;
    }
    Ok(AlphaSamples { values })
}

/// Every multiple of `1/(2L)` in `[0, γ]`, `L` the common denominator of `γ`
/// and all critical points: a denser, independent index set.
pub fn grid_alphas(a: &MonomialIdeal, b: &MonomialIdeal, gamma: &Rational) -> Result<AlphaSamples> {
    check_pair(a, b, gamma)?;
    grid_for(&Scaled::new(a)?, &Scaled::new(b)?, gamma)
}

/// `Σ_{α ∈ samples} left(α)·right(γ - α)`.
pub(crate) fn sum_over(
    samples: &AlphaSamples,
    gamma: &Rational,
    arity: usize,
    mut term: impl FnMut(&Rational, &Rational) -> Result<MonomialIdeal>,
) -> Result<MonomialIdeal> {
    samples
        .values()
        .iter()
        .try_fold(MonomialIdeal::zero(arity), |acc, alpha| {
            acc.sum(&term(alpha, &(gamma - alpha))?)
        })
}

pub(crate) fn same_space_sum(a: &Scaled, b: &Scaled, samples: &AlphaSamples, gamma: &Rational) -> Result<MonomialIdeal> {
    sum_over(samples, gamma, a.arity, |alpha, beta| a.at(alpha)?.product(&b.at(beta)?))
}

pub(crate) fn disjoint_sum(a: &Scaled, b: &Scaled, samples: &AlphaSamples, gamma: &Rational) -> Result<MonomialIdeal> {
    let total = a.arity + b.arity;
    sum_over(samples, gamma, total, |alpha, beta| {
        a.at(alpha)?
            .embed_product(0, total)?
            .product(&b.at(beta)?.embed_product(a.arity, total)?)
    })
}

/// `Σ_{α+β=γ} I(α·a)·I(β·b)` for `a`, `b` in the same variables.
pub fn finite_sum(a: &MonomialIdeal, b: &MonomialIdeal, gamma: &Rational) -> Result<MonomialIdeal> {
    check_pair(a, b, gamma)?;
    if a.arity() != b.arity() {
        return Err(Error::input("finite sum needs ideals in the same variables"));
    }
    let (sa, sb) = (Scaled::new(a)?, Scaled::new(b)?);
    same_space_sum(&sa, &sb, &samples_for(&sa, &sb, gamma)?, gamma)
}

/// `Σ_{α+β=γ} I(α·a)·I(β·b)` on the product, `a` in the first block of
/// variables and `b` in the second.
pub fn product_sum(a: &MonomialIdeal, b: &MonomialIdeal, gamma: &Rational) -> Result<MonomialIdeal> {
    check_pair(a, b, gamma)?;
    let (sa, sb) = (Scaled::new(a)?, Scaled::new(b)?);
    disjoint_sum(&sa, &sb, &samples_for(&sa, &sb, gamma)?, gamma)
}
