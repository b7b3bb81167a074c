//! Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
//! throughout. Time limits are part of each criterion. Runs without the
//! libtest harness so the lines are always printed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use multctl::harness::{run_campaign, CampaignSummary, Instance, Side, Verdict, VerifyKind};
use multctl::lp::check_certificates;
use multctl::newton::{NewtonPolyhedron, ScaleValue, SearchStrategy};
use multctl::oracle::hull_scale;
use multctl::rational::{frac, int};
use multctl::{Exponent, MonomialIdeal, MultiplierSolver, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 42;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Check>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> std::result::Result<(), String> {
    ensure(elapsed <= limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

/// Every outcome is a report (no input errors) with an allowed verdict.
fn all_verdicts(s: &CampaignSummary, allowed: &[Verdict]) -> std::result::Result<(), String> {
    for o in &s.outcomes {
        match &o.report {
            Err(e) => return Err(format!("{}: error {e}", o.label())),
            Ok(r) if !allowed.contains(&r.verdict) => {
                let w = r.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
                return Err(format!("{} ({}): {} {w}", o.label(), o.instance, r.verdict));
            }
            Ok(_) => {}
        }
        if let Some(m) = &o.oracle_mismatch {
            return Err(format!("{}: oracle mismatch {m}", o.label()));
        }
    }
    Ok(())
}

fn counts(s: &CampaignSummary) -> String {
    let parts: Vec<String> = s.counts().into_iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{} instances, {}", s.outcomes.len(), parts.join(" "))
}

fn campaign_check(kind: VerifyKind, trials: usize, allowed: &[Verdict], limit: Duration) -> Check {
    let start = Instant::now();
    let s = run_campaign(kind, trials, SEED, true);
    let seeded = s.outcomes.len() - multctl::harness::fixed_instances(kind).len();
    ensure(seeded == trials, || format!("{seeded} seeded instances"))?;
    all_verdicts(&s, allowed)?;
    within(start.elapsed(), limit)?;
    Ok(counts(&s))
}

fn closed_form() -> Check {
    let start = Instant::now();
    let mut cases = 0;
    for n in 1..=4usize {
        for p in 1..=4u32 {
            let solver = MultiplierSolver::new(&MonomialIdeal::max_ideal_power(n, i64::from(p)))
                .map_err(|e| e.to_string())?;
            for k in 1..=6 * (n as i64 + 2) {
                let beta = frac(k, 6);
                let exponent = (i64::from(p) * k).div_euclid(6) - n as i64 + 1;
                let expected = MonomialIdeal::max_ideal_power(n, exponent);
                let got = solver.multiplier_ideal(&beta).map_err(|e| e.to_string())?;
                ensure(got == expected, || format!("n={n} p={p} β={beta}: {got} != {expected}"))?;
                cases += 1;
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{cases} cases"))
}

fn lct_suite() -> Check {
    let start = Instant::now();
    for a in 1..=5u32 {
        for b in 1..=5u32 {
            let ideal = MonomialIdeal::minimalize([Exponent::new(vec![a, 0]), Exponent::new(vec![0, b])], 2)
                .map_err(|e| e.to_string())?;
            let got = multctl::newton::lct(&ideal).map_err(|e| e.to_string())?;
            let expected = frac(1, i64::from(a)) + frac(1, i64::from(b));
            ensure(got == ScaleValue::Finite(expected.clone()), || format!("a={a} b={b}: {got} != {expected}"))?;
        }
    }
    for n in 1..=5usize {
        let got = multctl::newton::lct(&MonomialIdeal::max_ideal_power(n, 1)).map_err(|e| e.to_string())?;
        ensure(got == ScaleValue::Finite(int(n as i64)), || format!("m in dimension {n}: {got}"))?;
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok("30 cases".into())
}

fn theorem1() -> Check {
    let m = MonomialIdeal::max_ideal_power(2, 1);
    let strict = Instance::Pair {
        a: m.clone(),
        b: m.clone(),
        gamma: int(2),
    }
    .verify(VerifyKind::Thm1)
    .map_err(|e| e.to_string())?;
    ensure(strict.verdict == Verdict::Holds && strict.lhs == Side::Ideal(m.clone()), || {
        format!("strict instance: {} lhs {}", strict.verdict, strict.lhs)
    })?;
    ensure(multctl::harness::fixed_instances(VerifyKind::Thm1).iter().any(|i| {
        matches!(i, Instance::Pair { a, b, gamma } if *a == m && *b == m && *gamma == int(2))
    }), || "strict instance missing from the fixed corpus".into())?;
    campaign_check(
        VerifyKind::Thm1,
        200,
        &[Verdict::Holds, Verdict::HoldsWithEquality],
        Duration::from_secs(300),
    )
}

fn theorem2() -> Check {
    let start = Instant::now();
    let s = run_campaign(VerifyKind::Thm2, 25, SEED, true);
    all_verdicts(&s, &[Verdict::Holds, Verdict::HoldsWithEquality])?;
    for o in &s.outcomes {
        let r = o.report.as_ref().map_err(|e| e.clone())?;
        let t = r.truncation.as_ref().ok_or_else(|| format!("{}: no truncation info", o.label()))?;
        ensure(t.all_stabilized && t.max_attained_at == 1, || {
            format!("{}: stabilized={} attained at q={}", o.label(), t.all_stabilized, t.max_attained_at)
        })?;
    }
    within(start.elapsed(), Duration::from_secs(300))?;
    Ok(counts(&s))
}

fn random_arity2(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let count = rng.gen_range(1..=4);
    let gens: Vec<Exponent> = (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=6u32);
            let i = rng.gen_range(0..=d);
            Exponent::new(vec![i, d - i])
        })
        .collect();
    MonomialIdeal::minimalize(gens, 2).expect("arity 2")
}

fn oracle_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut points = 0;
    let mut lps = 0;
    for trial in 0..100 {
        let ideal = random_arity2(&mut rng);
        let poly = NewtonPolyhedron::new(&ideal).map_err(|e| e.to_string())?;
        let mut samples: Vec<Vec<Rational>> = Vec::new();
        for i in 0..5 {
            for j in 0..5 {
                samples.push(vec![int(i + 1), int(j + 1)]);
            }
        }
        for _ in 0..10 {
            samples.push(vec![
                frac(rng.gen_range(0..=24), rng.gen_range(1..=6)),
                frac(rng.gen_range(0..=24), rng.gen_range(1..=6)),
            ]);
        }
        for v in &samples {
            let (lp_value, certificate) = poly.scale_with_certificate(v).map_err(|e| e.to_string())?;
            let hull = hull_scale(&ideal, v).map_err(|e| e.to_string())?;
            ensure(lp_value == hull, || format!("trial {trial} {ideal} at {v:?}: LP {lp_value} hull {hull}"))?;
            if let Some((program, outcome)) = certificate {
                ensure(check_certificates(&program, &outcome), || format!("trial {trial}: certificate rejected"))?;
                lps += 1;
            }
            points += 1;
        }
        let frontier = MultiplierSolver::new(&ideal).map_err(|e| e.to_string())?.with_certificate_checks(true);
        let scan = MultiplierSolver::new(&ideal)
            .map_err(|e| e.to_string())?
            .with_strategy(SearchStrategy::FullScan)
            .with_certificate_checks(true);
        for k in 1..=12 {
            let c = frac(k, 6);
            let (f, s) = (
                frontier.multiplier_ideal(&c).map_err(|e| e.to_string())?,
                scan.multiplier_ideal(&c).map_err(|e| e.to_string())?,
            );
            ensure(f == s, || format!("trial {trial} {ideal} at c={c}: frontier {f} scan {s}"))?;
        }
    }
    Ok(format!("100 ideals, {points} points, {lps} certified LPs"))
}

fn determinism() -> Check {
    let run = || {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let args = ["multctl", "--no-timing", "--json", "campaign", "--trials", "10", "--seed", "42", "--oracle"];
        let code = multctl::cli::run(args, &mut out, &mut err);
        (code, out)
    };
    let (c1, o1) = run();
    let (c2, o2) = run();
    ensure(c1 == 0 && c2 == 0, || format!("campaign exit codes {c1}, {c2}"))?;
    ensure(o1 == o2, || "campaign outputs differ".into())?;
    Ok(format!("{} bytes identical", o1.len()))
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("closed-form m^p multiplier ideals", Box::new(closed_form)),
        ("log canonical thresholds", Box::new(lct_suite)),
        ("sum inclusion on 200 instances and corpus", Box::new(theorem1)),
        ("product equality on 100 instances", Box::new(|| {
            campaign_check(VerifyKind::Equality, 100, &[Verdict::HoldsWithEquality], Duration::from_secs(300))
        })),
        ("sum equals intersection on 100 instances", Box::new(|| {
            campaign_check(VerifyKind::Lemma, 100, &[Verdict::HoldsWithEquality], Duration::from_secs(300))
        })),
        ("family inclusion on 50 powers families", Box::new(|| {
            campaign_check(VerifyKind::Main, 50, &[Verdict::Holds, Verdict::HoldsWithEquality], Duration::from_secs(300))
        })),
        ("approximation on 100 instances", Box::new(|| {
            campaign_check(VerifyKind::Approx, 100, &[Verdict::Holds, Verdict::HoldsWithEquality], Duration::from_secs(300))
        })),
        ("subvariety restriction and jumping shift, 50 each", Box::new(|| {
            let a = campaign_check(VerifyKind::Subvariety, 50, &[Verdict::HoldsWithEquality], Duration::from_secs(300))?;
            let b = campaign_check(VerifyKind::Jumpshift, 50, &[Verdict::HoldsWithEquality], Duration::from_secs(300))?;
            Ok(format!("{a}; {b}"))
        })),
        ("asymptotic inclusion on 25 powers systems", Box::new(theorem2)),
        ("LP vs hull oracle, frontier vs scan, certificates", Box::new(oracle_equivalence)),
        ("campaign determinism", Box::new(determinism)),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                println!("criterion {:>2}: FAIL  {name}: {why} ({secs:.1}s)", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: {} of {} criteria passed", criteria.len(), criteria.len());
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
