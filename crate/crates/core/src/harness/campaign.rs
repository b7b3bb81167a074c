use std::collections::BTreeMap;

use rayon::prelude::*;

use super::instances::{fixed_instances, Instance, VerifyKind};
use super::sampling::{disjoint_sum, grid_for, same_space_sum, Scaled};
use super::{Verdict, VerificationReport};
use crate::error::Result;
use crate::monomial::MonomialIdeal;
use crate::newton::{generator_box_bound, MultiplierSolver, SearchStrategy};
use crate::rational::{int, Rational};

/// Where an instance came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    Fixed(usize),
    Seed(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialOutcome {
    pub origin: Origin,
    pub instance: Instance,
    /// `Err` holds the message of an input or domain error.
    pub report: std::result::Result<VerificationReport, String>,
    /// Disagreement found by the brute-force cross-checks, if they ran.
    pub oracle_mismatch: Option<String>,
}

impl TrialOutcome {
    pub fn label(&self) -> String {
        match self.origin {
            Origin::Fixed(i) => format!("fixed {i}"),
            Origin::Seed(s) => format!("seed {s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignSummary {
    pub kind: VerifyKind,
    pub trials: usize,
    pub seed: u64,
    pub outcomes: Vec<TrialOutcome>,
}

impl CampaignSummary {
    pub fn count(&self, verdict: Verdict) -> usize {
        self.outcomes
            .iter()
            .filter(|o| matches!(&o.report, Ok(r) if r.verdict == verdict))
            .count()
    }

    pub fn errors(&self) -> usize {
        self.outcomes.iter().filter(|o| o.report.is_err()).count()
    }

    pub fn oracle_mismatches(&self) -> usize {
        self.outcomes.iter().filter(|o| o.oracle_mismatch.is_some()).count()
    }

    /// Verdict counts keyed by name, in a fixed order.
    pub fn counts(&self) -> BTreeMap<&'static str, usize> {
        [Verdict::Holds, Verdict::HoldsWithEquality, Verdict::Inconclusive, Verdict::Fails]
            .into_iter()
            .map(|v| (v.name(), self.count(v)))
            .collect()
    }

    /// True when nothing failed, errored or disagreed with an oracle.
    pub fn clean(&self) -> bool {
        self.count(Verdict::Fails) == 0 && self.errors() == 0 && self.oracle_mismatches() == 0
    }
}

/// A rayon pool whose size is capped by `MULTCTL_THREADS` when set.
pub fn thread_pool() -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = std::env::var("MULTCTL_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        builder = builder.num_threads(n);
    }
    builder.build().expect("thread pool")
}

/// Runs `kind` on its fixed instances and on `trials` random ones drawn from
/// seeds `seed, seed + 1, ...`. Output order does not depend on scheduling.
pub fn run_campaign(kind: VerifyKind, trials: usize, seed: u64, oracle: bool) -> CampaignSummary {
    let mut jobs: Vec<(Origin, Instance)> = fixed_instances(kind)
        .into_iter()
        .enumerate()
        .map(|(i, inst)| (Origin::Fixed(i), inst))
        .collect();
    jobs.extend((0..trials as u64).map(|i| {
        let s = seed.wrapping_add(i);
        (Origin::Seed(s), Instance::random(kind, s))
    }));
    let outcomes = thread_pool().install(|| {
        jobs.into_par_iter()
            .map(|(origin, instance)| {
                let report = instance.verify(kind).map_err(|e| e.to_string());
                let oracle_mismatch = if oracle {
                    cross_check(kind, &instance).unwrap_or_else(|e| Some(format!("oracle error: {e}")))
                } else {
                    None
                };
                TrialOutcome {
                    origin,
                    instance,
                    report,
                    oracle_mismatch,
                }
            })
            .collect()
    });
    CampaignSummary {
        kind,
        trials,
        seed,
        outcomes,
    }
}

/// Points in a full-scan box beyond which the scan is skipped.
const SCAN_LIMIT: u64 = 40_000;

/// Frontier search against the full box scan, when the box is small enough.
fn scan_mismatch(ideal: &MonomialIdeal, c: &Rational) -> Result<Option<String>> {
    if ideal.is_zero() || ideal.is_unit() || c <= &int(0) {
        return Ok(None);
    }
    let b = u64::from(generator_box_bound(ideal, c)?);
    let used = ideal.used_variables().iter().filter(|&&u| u).count() as u32;
    if (b + 1).checked_pow(used).is_none_or(|n| n > SCAN_LIMIT) {
        return Ok(None);
    }
    let frontier = MultiplierSolver::new(ideal)?.with_certificate_checks(true).multiplier_ideal(c)?;
    let scan = MultiplierSolver::new(ideal)?
        .with_strategy(SearchStrategy::FullScan)
        .multiplier_ideal(c)?;
    Ok((frontier != scan).then(|| format!("frontier {frontier} differs from full scan {scan} at c = {c}")))
}

/// Independent recomputation of the parts of a check that rely on the
/// sampling argument or on the frontier search.
fn cross_check(kind: VerifyKind, instance: &Instance) -> Result<Option<String>> {
    match (kind, instance) {
        (VerifyKind::Thm1, Instance::Pair { a, b, gamma }) => {
            let (sa, sb) = (Scaled::new(a)?, Scaled::new(b)?);
            let crit = same_space_sum(&sa, &sb, &super::sampling::samples_for(&sa, &sb, gamma)?, gamma)?;
            let grid = super::verify::grid_finite_sum(a, b, gamma)?;
            if crit != grid {
                return Ok(Some(format!("critical-point sum {crit} differs from grid sum {grid}")));
            }
            scan_mismatch(&a.sum(b)?, gamma)
        }
        (VerifyKind::Equality | VerifyKind::Lemma, Instance::Product { a, b, gamma }) => {
            let (sa, sb) = (Scaled::new(a)?, Scaled::new(b)?);
            let crit = disjoint_sum(&sa, &sb, &super::sampling::samples_for(&sa, &sb, gamma)?, gamma)?;
            let grid = disjoint_sum(&sa, &sb, &grid_for(&sa, &sb, gamma)?, gamma)?;
            Ok((crit != grid).then(|| format!("critical-point sum {crit} differs from grid sum {grid}")))
        }
        (VerifyKind::Approx, Instance::Approx { a, gamma, .. }) => scan_mismatch(a, gamma),
        (VerifyKind::Subvariety, Instance::Subvariety { b, r, gamma }) => {
            scan_mismatch(b, &(gamma + int(*r as i64)))
        }
        (VerifyKind::Jumpshift, Instance::JumpShift { a, t, .. }) => {
            let frontier = MultiplierSolver::new(a)?.jumping_numbers(t)?;
            let scan = MultiplierSolver::new(a)?
                .with_strategy(SearchStrategy::FullScan)
                .jumping_numbers(t)?;
            Ok((frontier != scan).then(|| "frontier and full-scan jumping numbers differ".to_string()))
        }
        (VerifyKind::Main, Instance::Powers { a, b, m, gamma, .. }) => {
            // a^m + b^m ⊆ mixed ideal; check the largest pure term.
            scan_mismatch(&a.power(*m as u32).sum(&b.power(*m as u32))?, &(gamma / int(*m as i64)))
        }
        _ => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn campaign_is_deterministic_and_clean() {
        let a = run_campaign(VerifyKind::Thm1, 6, 42, true);
        let b = run_campaign(VerifyKind::Thm1, 6, 42, true);
        assert_eq!(a, b);
        assert!(a.clean(), "{a:?}");
        assert_eq!(a.outcomes.len(), 6 + fixed_instances(VerifyKind::Thm1).len());
        assert_eq!(a.count(Verdict::Holds) + a.count(Verdict::HoldsWithEquality), a.outcomes.len());
    }

    #[test]
    fn every_kind_runs_clean_with_oracles() {
        for kind in VerifyKind::ALL {
            let s = run_campaign(kind, 2, 7, true);
            assert!(s.clean(), "{kind}: {s:?}");
        }
    }
}
