//! Truncated graded systems of monomial ideals and their asymptotic
//! multiplier ideals.

use std::cell::OnceCell;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::newton::MultiplierSolver;
use crate::rational::{int, Rational};

/// `a_0 = (1), a_1, ..., a_{p_max}` with `a_p·a_q ⊆ a_{p+q}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSystem {
    arity: usize,
    /// `table[p]` is `a_p`; `table[0]` is the unit ideal.
    table: Vec<MonomialIdeal>,
}

/// Outcome of [`GradedSystem::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Validation {
    pub valid: bool,
    /// First `(p, q)`, `p <= q`, with `a_p·a_q ⊄ a_{p+q}`.
    pub violation: Option<(usize, usize)>,
}

impl GradedSystem {
    /// Builds a system from `a_1, ..., a_{p_max}`. Entries must be nonzero
    /// ideals in `arity` variables; multiplicativity is checked separately.
    pub fn new(arity: usize, entries: Vec<MonomialIdeal>) -> Result<Self> {
        for (i, a) in entries.iter().enumerate() {
            if a.arity() != arity {
                return Err(Error::input(format!(
                    "entry {} has arity {}, system has arity {arity}",
                    i + 1,
                    a.arity()
                )));
            }
            if a.is_zero() {
                return Err(Error::domain(format!("entry {} is the zero ideal", i + 1)));
            }
        }
        let mut table = Vec::with_capacity(entries.len() + 1);
        table.push(MonomialIdeal::unit(arity));
        table.extend(entries);
        Ok(GradedSystem { arity, table })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn p_max(&self) -> usize {
        self.table.len() - 1
    }

    /// `a_p` for `0 <= p <= p_max`.
    pub fn get(&self, p: usize) -> Result<&MonomialIdeal> {
        self.table
            .get(p)
            .ok_or_else(|| Error::input(format!("index {p} is beyond p_max = {}", self.p_max())))
    }

    pub fn entries(&self) -> &[MonomialIdeal] {
        &self.table[1..]
    }

    pub fn validate(&self) -> Validation {
        let n = self.p_max();
        for p in 1..=n {
            for q in p..=n - p {
                let prod = self.table[p].product(&self.table[q]).expect("same arity");
                if !self.table[p + q].contains(&prod).expect("same arity") {
                    return Validation {
                        valid: false,
                        violation: Some((p, q)),
                    };
                }
            }
        }
        Validation {
            valid: true,
            violation: None,
        }
    }

    fn require_valid(&self) -> Result<()> {
        match self.validate().violation {
            None => Ok(()),
            Some((p, q)) => Err(Error::input(format!(
                "not a graded system: a_{p}·a_{q} is not contained in a_{}",
                p + q
            ))),
        }
    }
}

/// `a_p = a^p` for `p <= p_max`.
pub fn powers_system(a: &MonomialIdeal, p_max: usize) -> Result<GradedSystem> {
    if a.is_zero() {
        return Err(Error::domain("powers of the zero ideal do not form a graded system"));
    }
    let mut entries = Vec::with_capacity(p_max);
    let mut acc = MonomialIdeal::unit(a.arity());
    for _ in 0..p_max {
        acc = acc.product(a)?;
        entries.push(acc.clone());
    }
    GradedSystem::new(a.arity(), entries)
}

/// `c_m = Σ_{i+j=m} a_i·b_j`, endpoint terms included.
pub fn sum_systems(a: &GradedSystem, b: &GradedSystem) -> Result<GradedSystem> {
    if a.arity() != b.arity() || a.p_max() != b.p_max() {
        return Err(Error::input(format!(
            "cannot add systems of shape ({}, {}) and ({}, {})",
            a.arity(),
            a.p_max(),
            b.arity(),
            b.p_max()
        )));
    }
    let entries = (1..=a.p_max())
        .map(|m| {
            (0..=m).try_fold(MonomialIdeal::zero(a.arity()), |acc, i| {
                acc.sum(&a.table[i].product(&b.table[m - i])?)
            })
        })
        .collect::<Result<Vec<_>>>()?;
    GradedSystem::new(a.arity(), entries)
}

/// Truncated asymptotic multiplier ideal `I(γ·‖a_p‖)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticIdeal {
    pub ideal: MonomialIdeal,
    /// The maximum is attained at some `q` with `2q <= q_max` and the
    /// member at `2q` equals it.
    pub stabilized: bool,
    /// Smallest `q` attaining the maximum.
    pub attained_at: usize,
}

/// Computes `I(γ/q · a_{pq})` for `q <= q_max` and keeps the largest.
///
/// One [`MultiplierSolver`] per entry is built lazily and kept, so calls for
/// many coefficients share LP work.
pub struct AsymptoticSolver<'a> {
    system: &'a GradedSystem,
    solvers: Vec<OnceCell<MultiplierSolver>>,
}

impl<'a> AsymptoticSolver<'a> {
    pub fn new(system: &'a GradedSystem) -> Result<Self> {
        system.require_valid()?;
        Ok(AsymptoticSolver {
            system,
            solvers: (0..=system.p_max()).map(|_| OnceCell::new()).collect(),
        })
    }

    pub fn system(&self) -> &GradedSystem {
        self.system
    }

    /// Solver for `a_index`.
    pub fn entry(&self, index: usize) -> Result<&MultiplierSolver> {
        let cell = self
            .solvers
            .get(index)
            .ok_or_else(|| Error::input(format!("index {index} is beyond p_max = {}", self.system.p_max())))?;
        if let Some(s) = cell.get() {
            return Ok(s);
        }
        let solver = MultiplierSolver::new(self.system.get(index)?)?;
        Ok(cell.get_or_init(|| solver))
    }

    fn check_truncation(&self, p: usize, q_max: usize) -> Result<()> {
        if p == 0 || q_max == 0 {
            return Err(Error::input("asymptotic ideal needs p >= 1 and q_max >= 1"));
        }
        if p * q_max > self.system.p_max() {
            return Err(Error::input(format!(
                "p·q_max = {} exceeds the truncation p_max = {}",
                p * q_max,
                self.system.p_max()
            )));
        }
        Ok(())
    }

    /// The members `I(γ/q · a_{pq})` for `q = 1..=q_max`.
    pub fn family(&self, p: usize, gamma: &Rational, q_max: usize) -> Result<Vec<MonomialIdeal>> {
        self.check_truncation(p, q_max)?;
        (1..=q_max)
            .map(|q| {
                let c = gamma / int(q as i64);
                self.entry(p * q)?.multiplier_ideal(&c)
            })
            .collect()
    }

    pub fn asymptotic(&self, p: usize, gamma: &Rational, q_max: usize) -> Result<AsymptoticIdeal> {
        let arity = self.system.arity();
        self.check_truncation(p, q_max)?;
        if !gamma.is_positive() {
            // Every member is the unit ideal.
            return Ok(AsymptoticIdeal {
                ideal: MonomialIdeal::unit(arity),
                stabilized: q_max >= 2,
                attained_at: 1,
            });
        }
        let members = self.family(p, gamma, q_max)?;
        let Some(idx) = members
            .iter()
            .position(|cand| members.iter().all(|m| cand.contains(m).expect("same arity")))
        else {
            return Err(Error::Inconclusive(format!(
                "no member of I(γ/q·a_{{{p}q}}), q <= {q_max}, contains all the others"
            )));
        };
        let top = &members[idx];
        let stabilized = (1..=q_max / 2).any(|q| members[q - 1] == *top && members[2 * q - 1] == *top);
        Ok(AsymptoticIdeal {
            ideal: top.clone(),
            stabilized,
            attained_at: idx + 1,
        })
    }
}

/// `I(γ·‖a_p‖)` truncated at `q_max`; requires `p·q_max <= p_max`.
pub fn asymptotic_multiplier_ideal(
    system: &GradedSystem,
    p: usize,
    gamma: &Rational,
    q_max: usize,
) -> Result<AsymptoticIdeal> {
    AsymptoticSolver::new(system)?.asymptotic(p, gamma, q_max)
}
