//! Checks of the sum-of-ideals inclusions and their companions on concrete
//! monomial instances.
//!
//! Each `verify_*` function computes both sides exactly and returns a
//! [`VerificationReport`]. A `Fails` verdict always carries a witness that
//! [`VerificationReport::recheck`] can confirm.

mod campaign;
mod instances;
mod sampling;
mod verify;

use std::fmt;

use crate::monomial::{Exponent, MonomialIdeal};
use crate::parse::render_default;
use crate::rational::Rational;

pub use campaign::{run_campaign, thread_pool, CampaignSummary, TrialOutcome};
pub use instances::{
    fixed_instances, random_instance, random_product_instance, Instance, InstanceParams, VerifyKind,
};
pub use sampling::{
    critical_alphas, finite_sum, grid_alphas, product_sum, AlphaSamples,
};
pub use verify::{
    powers_family, verify_asymptotic, verify_jumping_shift, verify_main_inclusion,
    verify_approximation, verify_product_equality, verify_subvariety,
    verify_sum_equals_intersection, verify_sum_inclusion, IdealFamily,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// `I(γ(a+b)) ⊆ Σ I(αa)·I(βb)`.
    Thm1,
    /// The same inclusion for asymptotic ideals of graded systems.
    Thm2,
    /// Equality for ideals in disjoint sets of variables.
    ThmEquality,
    /// Inclusion for families `a_i`, `b_i` on a product.
    ThmMain,
    /// `Σ_α (a_α·b_β) = ∩_α (a_α + b_β)` for ideals in disjoint variables.
    LemmaEquiv,
    /// Inclusion for families `a_i`, `b_i` in the same variables.
    CorSameVar,
    /// Perturbing by a power of the maximal ideal.
    PropApprox,
    /// Restriction to a coordinate subspace shifts the coefficient by the codimension.
    PropSubvariety,
    /// Jumping numbers shift by the codimension.
    PropJumpShift,
}

impl TheoremId {
    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Thm1 => "thm1",
            TheoremId::Thm2 => "thm2",
            TheoremId::ThmEquality => "equality",
            TheoremId::ThmMain => "main",
            TheoremId::LemmaEquiv => "lemma",
            TheoremId::CorSameVar => "main-same-variables",
            TheoremId::PropApprox => "approx",
            TheoremId::PropSubvariety => "subvariety",
            TheoremId::PropJumpShift => "jumpshift",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Holds,
    HoldsWithEquality,
    /// A truncated computation did not stabilize.
    Inconclusive,
    Fails,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Holds => "Holds",
            Verdict::HoldsWithEquality => "HoldsWithEquality",
            Verdict::Inconclusive => "Inconclusive",
            Verdict::Fails => "FAILS",
        }
    }

    pub fn holds(self) -> bool {
        matches!(self, Verdict::Holds | Verdict::HoldsWithEquality)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which side the witness belongs to (and is missing from the other).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    LhsNotRhs,
    RhsNotLhs,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Monomial(Exponent, Direction),
    Number(Rational, Direction),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (what, dir) = match self {
            Witness::Monomial(e, d) => (crate::parse::render_monomial_default(e), d),
            Witness::Number(q, d) => (q.to_string(), d),
        };
        let side = match dir {
            Direction::LhsNotRhs => "in lhs, not in rhs",
            Direction::RhsNotLhs => "in rhs, not in lhs",
        };
        write!(f, "{what} ({side})")
    }
}

/// One side of a checked relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Side {
    Ideal(MonomialIdeal),
    /// One ideal per index, as in the per-`m` asymptotic check.
    Ideals(Vec<MonomialIdeal>),
    Numbers(Vec<Rational>),
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Ideal(i) => f.write_str(&render_default(i)),
            Side::Ideals(is) => {
                let parts: Vec<String> = is.iter().map(render_default).collect();
                write!(f, "[{}]", parts.join("; "))
            }
            Side::Numbers(xs) => {
                let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
        }
    }
}

/// Truncation data of an asymptotic check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Truncation {
    pub q_max: usize,
    pub all_stabilized: bool,
    /// Largest `q` at which any computed asymptotic ideal first reached its maximum.
    pub max_attained_at: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    /// Canonical text from which both sides can be recomputed.
    pub instance: String,
    pub lhs: Side,
    pub rhs: Side,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub truncation: Option<Truncation>,
}

impl VerificationReport {
    /// Verdict of `lhs ⊆ rhs`.
    pub(crate) fn inclusion(theorem: TheoremId, instance: String, lhs: MonomialIdeal, rhs: MonomialIdeal) -> Self {
        let (verdict, witness) = match lhs.generator_outside(&rhs).expect("same arity") {
            Some(w) => (Verdict::Fails, Some(Witness::Monomial(w, Direction::LhsNotRhs))),
            None if lhs == rhs => (Verdict::HoldsWithEquality, None),
            None => (Verdict::Holds, None),
        };
        VerificationReport {
            theorem,
            instance,
            lhs: Side::Ideal(lhs),
            rhs: Side::Ideal(rhs),
            verdict,
            witness,
            truncation: None,
        }
    }

    /// Verdict of `lhs = rhs`; a strict inclusion either way fails.
    pub(crate) fn equality(theorem: TheoremId, instance: String, lhs: MonomialIdeal, rhs: MonomialIdeal) -> Self {
        let witness = match lhs.generator_outside(&rhs).expect("same arity") {
            Some(w) => Some(Witness::Monomial(w, Direction::LhsNotRhs)),
            None => rhs
                .generator_outside(&lhs)
                .expect("same arity")
                .map(|w| Witness::Monomial(w, Direction::RhsNotLhs)),
        };
        VerificationReport {
            theorem,
            instance,
            lhs: Side::Ideal(lhs),
            rhs: Side::Ideal(rhs),
            verdict: if witness.is_some() { Verdict::Fails } else { Verdict::HoldsWithEquality },
            witness,
            truncation: None,
        }
    }

    pub(crate) fn set_equality(theorem: TheoremId, instance: String, lhs: Vec<Rational>, rhs: Vec<Rational>) -> Self {
        let witness = match lhs.iter().find(|x| !rhs.contains(x)) {
            Some(x) => Some(Witness::Number(x.clone(), Direction::LhsNotRhs)),
            None => rhs
                .iter()
                .find(|x| !lhs.contains(x))
                .map(|x| Witness::Number(x.clone(), Direction::RhsNotLhs)),
        };
        VerificationReport {
            theorem,
            instance,
            lhs: Side::Numbers(lhs),
            rhs: Side::Numbers(rhs),
            verdict: if witness.is_some() { Verdict::Fails } else { Verdict::HoldsWithEquality },
            witness,
            truncation: None,
        }
    }

    /// Confirms that a witness lies on its side and not on the other.
    /// Reports without a witness recheck trivially.
    pub fn recheck(&self) -> bool {
        let Some(w) = &self.witness else {
            return self.verdict != Verdict::Fails;
        };
        let (here, there) = match w {
            Witness::Monomial(_, Direction::LhsNotRhs) | Witness::Number(_, Direction::LhsNotRhs) => (&self.lhs, &self.rhs),
            _ => (&self.rhs, &self.lhs),
        };
        let member = |side: &Side| -> bool {
            match (side, w) {
                (Side::Ideal(i), Witness::Monomial(e, _)) => i.contains_monomial(e).unwrap_or(false),
                (Side::Ideals(is), Witness::Monomial(e, _)) => {
                    is.iter().any(|i| i.contains_monomial(e).unwrap_or(false))
                }
                (Side::Numbers(xs), Witness::Number(q, _)) => xs.contains(q),
                _ => false,
            }
        };
        let outside = match (there, w) {
            // For per-index lhs, the witness must escape the single rhs.
            (Side::Ideal(i), Witness::Monomial(e, _)) => !i.contains_monomial(e).unwrap_or(true),
            (Side::Numbers(xs), Witness::Number(q, _)) => !xs.contains(q),
            _ => false,
        };
        self.verdict == Verdict::Fails && member(here) && outside
    }
}
