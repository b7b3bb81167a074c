use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::sampling::{disjoint_sum, grid_for, same_space_sum, samples_for, AlphaSamples, Scaled};
use super::{Side, TheoremId, Truncation, Verdict, VerificationReport, Witness, Direction};
use crate::error::{Error, Result};
use crate::graded::{sum_systems, AsymptoticSolver, GradedSystem};
use crate::monomial::MonomialIdeal;
use crate::newton::MultiplierSolver;
use crate::parse::{default_variables, render_default, render_ideal};
use crate::rational::{floor_i64, int, Rational};

fn same_arity(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<()> {
    if a.arity() != b.arity() {
        return Err(Error::input(format!(
            "ideals live in {} and {} variables",
            a.arity(),
            b.arity()
        )));
    }
    Ok(())
}

fn nonzero(a: &MonomialIdeal, what: &str) -> Result<()> {
    if a.is_zero() {
        return Err(Error::domain(format!("{what} must be a nonzero ideal")));
    }
    Ok(())
}

fn nonnegative(gamma: &Rational) -> Result<()> {
    if gamma.is_negative() {
        return Err(Error::input("γ must be nonnegative"));
    }
    Ok(())
}

fn pair_instance(a: &MonomialIdeal, b: &MonomialIdeal, gamma: &Rational) -> String {
    format!("a={} b={} gamma={gamma}", render_default(a), render_default(b))
}

/// Like the pair description, with `b` written in the variables after `a`'s.
pub(crate) fn product_instance(a: &MonomialIdeal, b: &MonomialIdeal, gamma: &Rational) -> String {
    let vars = default_variables(a.arity() + b.arity());
    format!(
        "a={} b={} gamma={gamma}",
        render_ideal(a, &vars[..a.arity()]),
        render_ideal(b, &vars[a.arity()..])
    )
}

/// `I(γ·(a+b)) ⊆ Σ_{α+β=γ} I(α·a)·I(β·b)`.
pub fn verify_sum_inclusion(a: &MonomialIdeal, b: &MonomialIdeal, gamma: &Rational) -> Result<VerificationReport> {
    nonzero(a, "a")?;
    nonzero(b, "b")?;
    same_arity(a, b)?;
    nonnegative(gamma)?;
    let lhs = MultiplierSolver::new(&a.sum(b)?)?.multiplier_ideal(gamma)?;
    let (sa, sb) = (Scaled::new(a)?, Scaled::new(b)?);
    let rhs = same_space_sum(&sa, &sb, &samples_for(&sa, &sb, gamma)?, gamma)?;
    Ok(VerificationReport::inclusion(TheoremId::Thm1, pair_instance(a, b, gamma), lhs, rhs))
}

/// Equality of `I(γ·(a ⊕ b))` with `Σ I(α·a)·I(β·b)` for `a`, `b` in
/// disjoint variables. Either ideal may be zero.
pub fn verify_product_equality(a: &MonomialIdeal, b: &MonomialIdeal, gamma: &Rational) -> Result<VerificationReport> {
    nonnegative(gamma)?;
    let total = a.arity() + b.arity();
    let joint = a.embed_product(0, total)?.sum(&b.embed_product(a.arity(), total)?)?;
    let lhs = Scaled::new(&joint)?.at(gamma)?;
    let (sa, sb) = (Scaled::new(a)?, Scaled::new(b)?);
    let rhs = disjoint_sum(&sa, &sb, &samples_for(&sa, &sb, gamma)?, gamma)?;
    Ok(VerificationReport::equality(
        TheoremId::ThmEquality,
        product_instance(a, b, gamma),
        lhs,
        rhs,
    ))
}

/// `Σ_α (a_α·b_β) = ∩_α (a_α + b_β)` with `a_α = I(α·a)`, `b_β = I(β·b)`
/// pulled back to the product, over the same samples.
pub fn verify_sum_equals_intersection(
    a: &MonomialIdeal,
    b: &MonomialIdeal,
    gamma: &Rational,
) -> Result<VerificationReport> {
    nonzero(a, "a")?;
    nonzero(b, "b")?;
    nonnegative(gamma)?;
    let total = a.arity() + b.arity();
    let (sa, sb) = (Scaled::new(a)?, Scaled::new(b)?);
    let samples = samples_for(&sa, &sb, gamma)?;
    let mut sum = MonomialIdeal::zero(total);
    let mut meet: Option<MonomialIdeal> = None;
    for alpha in samples.values() {
        let beta = gamma - alpha;
        let left = sa.at(alpha)?.embed_product(0, total)?;
        let right = sb.at(&beta)?.embed_product(a.arity(), total)?;
        sum = sum.sum(&left.product(&right)?)?;
        let plus = left.sum(&right)?;
        meet = Some(match meet {
            None => plus,
            Some(m) => m.intersect(&plus)?,
        });
    }
    let meet = meet.expect("samples are never empty");
    Ok(VerificationReport::equality(
        TheoremId::LemmaEquiv,
        product_instance(a, b, gamma),
        sum,
        meet,
    ))
}

/// `a_1, ..., a_m` together with `a_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFamily {
    /// `members[i - 1] = a_i` for `1 <= i <= m`.
    pub members: Vec<MonomialIdeal>,
    pub n: usize,
    pub top: MonomialIdeal,
}

impl IdealFamily {
    pub fn m(&self) -> usize {
        self.members.len()
    }

    pub fn arity(&self) -> usize {
        self.top.arity()
    }

    /// `i | n` and `a_i^{n/i} ⊆ a_n` for every `1 <= i <= m`.
    pub fn check_hypotheses(&self) -> Result<()> {
        if self.members.is_empty() || self.n == 0 {
            return Err(Error::input("a family needs m >= 1 and n >= 1"));
        }
        nonzero(&self.top, "a_n")?;
        for (k, ai) in self.members.iter().enumerate() {
            let i = k + 1;
            nonzero(ai, "every family member")?;
            same_arity(ai, &self.top)?;
            if !self.n.is_multiple_of(i) {
                return Err(Error::input(format!("{i} does not divide n = {}", self.n)));
            }
            let power = u32::try_from(self.n / i).map_err(|_| Error::input("n is too large"))?;
            if !self.top.contains(&ai.power(power))? {
                return Err(Error::input(format!("a_{i}^{} is not contained in a_{}", self.n / i, self.n)));
            }
        }
        Ok(())
    }

    fn describe(&self) -> String {
        let parts: Vec<String> = self.members.iter().map(render_default).collect();
        format!("[{}] top={}", parts.join(", "), render_default(&self.top))
    }
}

/// `a_i = a^i` for `i <= m`, and `a_n = a^n` with `n = lcm(1..m)·k`.
pub fn powers_family(a: &MonomialIdeal, m: usize, k: usize) -> Result<IdealFamily> {
    nonzero(a, "a")?;
    if m == 0 || k == 0 {
        return Err(Error::input("powers family needs m >= 1 and k >= 1"));
    }
    let n = (1..=m).fold(1usize, |acc, i| acc.lcm(&i)) * k;
    let members = (1..=m as u32).map(|i| a.power(i)).collect();
    let top = a.power(u32::try_from(n).map_err(|_| Error::input("n is too large"))?);
    Ok(IdealFamily { members, n, top })
}

/// `I(γ/m·(a_m + Σ_{i<m} a_i·b_{m-i} + b_m)) ⊆ Σ_{α+β=γ} I(α/n·a_n)·I(β/n·b_n)`
/// in one set of variables. With `m = n = 1` this is [`verify_sum_inclusion`].
pub fn verify_main_inclusion(a: &IdealFamily, b: &IdealFamily, gamma: &Rational) -> Result<VerificationReport> {
    a.check_hypotheses()?;
    b.check_hypotheses()?;
    if a.m() != b.m() || a.n != b.n {
        return Err(Error::input("families must share m and n"));
    }
    if a.arity() != b.arity() {
        return Err(Error::input("families must live in the same variables"));
    }
    nonnegative(gamma)?;
    let m = a.m();
    let mut mixed = a.members[m - 1].sum(&b.members[m - 1])?;
    for i in 1..m {
        mixed = mixed.sum(&a.members[i - 1].product(&b.members[m - i - 1])?)?;
    }
    let lhs = MultiplierSolver::new(&mixed)?.multiplier_ideal(&(gamma / int(m as i64)))?;
    // Σ_{α+β=γ} I(α/n·a_n)·I(β/n·b_n) = Σ_{α'+β'=γ/n} I(α'·a_n)·I(β'·b_n).
    let scaled = gamma / int(a.n as i64);
    let (sa, sb) = (Scaled::new(&a.top)?, Scaled::new(&b.top)?);
    let rhs = same_space_sum(&sa, &sb, &samples_for(&sa, &sb, &scaled)?, &scaled)?;
    let instance = format!("m={m} n={} a={} b={} gamma={gamma}", a.n, a.describe(), b.describe());
    Ok(VerificationReport::inclusion(TheoremId::CorSameVar, instance, lhs, rhs))
}

/// `I((γ+ε)·(a + m^p)) ⊆ I(γ·a) + m^{⌊pε⌋-n+1}` at the origin.
pub fn verify_approximation(a: &MonomialIdeal, p: u32, gamma: &Rational, eps: &Rational) -> Result<VerificationReport> {
    nonzero(a, "a")?;
    nonnegative(gamma)?;
    if p == 0 {
        return Err(Error::input("p must be at least 1"));
    }
    if !eps.is_positive() {
        return Err(Error::input("ε must be positive"));
    }
    let n = a.arity();
    let mp = MonomialIdeal::max_ideal_power(n, i64::from(p));
    let lhs = MultiplierSolver::new(&a.sum(&mp)?)?.multiplier_ideal(&(gamma + eps))?;
    let exponent = floor_i64(&(int(i64::from(p)) * eps))? - n as i64 + 1;
    let rhs = MultiplierSolver::new(a)?
        .multiplier_ideal(gamma)?
        .sum(&MonomialIdeal::max_ideal_power(n, exponent))?;
    let instance = format!("a={} p={p} gamma={gamma} eps={eps}", render_default(a));
    Ok(VerificationReport::inclusion(TheoremId::PropApprox, instance, lhs, rhs))
}

/// `I(γ·(b|_X)) = I((γ+r)·b)|_X` for `X` the subspace where the last `r`
/// variables vanish and `b` strictly containing their ideal.
pub fn verify_subvariety(b: &MonomialIdeal, r: usize, gamma: &Rational) -> Result<VerificationReport> {
    let total = b.arity();
    if r >= total {
        return Err(Error::input(format!("codimension {r} leaves no variables out of {total}")));
    }
    let n = total - r;
    let ax = MonomialIdeal::variables(total, n..total)?;
    if !b.contains(&ax)? || *b == ax {
        return Err(Error::input(
            "b must strictly contain the ideal of the last r variables",
        ));
    }
    let shifted = gamma + int(r as i64);
    if shifted.is_negative() {
        return Err(Error::input("γ + r must be nonnegative"));
    }
    let keep: Vec<usize> = (0..n).collect();
    let lhs = MultiplierSolver::new(b)?
        .multiplier_ideal(&shifted)?
        .restrict_to_subspace(&keep)?;
    let restricted = b.restrict_to_subspace(&keep)?;
    let rhs = MultiplierSolver::new(&restricted)?.multiplier_ideal(gamma)?;
    let instance = format!("b={} r={r} gamma={gamma}", render_default(b));
    Ok(VerificationReport::equality(TheoremId::PropSubvariety, instance, lhs, rhs))
}

/// `{ξ + r : ξ ∈ jn(a) ∩ (0, T]} = jn(a + (y_1..y_r)) ∩ (r, T + r]`, with `a`
/// pulled back to `n + r` variables.
pub fn verify_jumping_shift(a: &MonomialIdeal, r: usize, t: &Rational) -> Result<VerificationReport> {
    nonzero(a, "a")?;
    if a.is_unit() {
        return Err(Error::domain("a must be a proper ideal"));
    }
    if !t.is_positive() {
        return Err(Error::input("T must be positive"));
    }
    let n = a.arity();
    let total = n + r;
    let a2 = a
        .embed_product(0, total)?
        .sum(&MonomialIdeal::variables(total, n..total)?)?;
    let shift = int(r as i64);
    let lhs: Vec<Rational> = MultiplierSolver::new(a)?
        .jumping_numbers(t)?
        .into_iter()
        .map(|x| x + &shift)
        .collect();
    let rhs: Vec<Rational> = MultiplierSolver::new(&a2)?
        .jumping_numbers(&(t + &shift))?
        .into_iter()
        .filter(|x| *x > shift)
        .collect();
    let instance = format!("a={} r={r} T={t}", render_default(a));
    Ok(VerificationReport::set_equality(TheoremId::PropJumpShift, instance, lhs, rhs))
}

/// Critical coefficients of `α ↦ I(α·‖a_1‖)` in `[0, γ]`: the jumps of
/// every member `α ↦ I(α/q·a_q)`, that is `q·ξ` for `ξ ∈ jn(a_q)`.
fn asymptotic_jumps(solver: &AsymptoticSolver<'_>, gamma: &Rational, q_max: usize) -> Result<Vec<Rational>> {
    let mut out = Vec::new();
    if !gamma.is_positive() {
        return Ok(out);
    }
    for q in 1..=q_max {
        let qq = int(q as i64);
        let jumps = solver.entry(q)?.jumping_numbers(&(gamma / &qq))?;
        out.extend(jumps.into_iter().map(|x| x * &qq));
    }
    Ok(out)
}

/// Truncated check of `I(γ·‖c_p‖) ⊆ Σ I(α·‖a_p‖)·I(β·‖b_p‖)` for `c = a + b`.
///
/// Rescaling `I(α·‖a_p‖) = I(pα·‖a_1‖)` reduces to `p = 1`, where the
/// inclusion amounts to `I(pγ/m·c_m) ⊆ Σ_{α+β=pγ} I(α·‖a_1‖)·I(β·‖b_1‖)`
/// for every `m`. Asymptotic ideals are truncated at `q <= p·q_max`; the
/// verdict is `Inconclusive` unless each of them stabilized.
pub fn verify_asymptotic(
    a: &GradedSystem,
    b: &GradedSystem,
    p: usize,
    m_max: usize,
    q_max: usize,
    gamma: &Rational,
) -> Result<VerificationReport> {
    nonnegative(gamma)?;
    if p == 0 || m_max == 0 || q_max == 0 {
        return Err(Error::input("p, m_max and q_max must be at least 1"));
    }
    let c = sum_systems(a, b)?;
    let q_total = p * q_max;
    if q_total > a.p_max() || m_max > a.p_max() {
        return Err(Error::input(format!(
            "truncation p_max = {} is below max(p·q_max, m_max) = {}",
            a.p_max(),
            q_total.max(m_max)
        )));
    }
    let g = int(p as i64) * gamma;
    let (sa, sb) = (AsymptoticSolver::new(a)?, AsymptoticSolver::new(b)?);
    let mut points = asymptotic_jumps(&sa, &g, q_total)?;
    points.extend(asymptotic_jumps(&sb, &g, q_total)?.into_iter().map(|x| &g - x));
    let samples = if g.is_zero() {
        AlphaSamples::from_critical(Vec::new(), &g)
    } else {
        AlphaSamples::from_critical(points, &g)
    };
    let instance = format!(
        "A={} B={} p={p} m_max={m_max} q_max={q_max} gamma={gamma}",
        describe_system(a),
        describe_system(b)
    );
    let mut all_stabilized = true;
    let mut max_attained_at = 1;
    let mut rhs = MonomialIdeal::zero(a.arity());
    for alpha in samples.values() {
        let beta = &g - alpha;
        let (left, right) = match (sa.asymptotic(1, alpha, q_total), sb.asymptotic(1, &beta, q_total)) {
            (Ok(l), Ok(r)) => (l, r),
            (Err(Error::Inconclusive(_)), _) | (_, Err(Error::Inconclusive(_))) => {
                return Ok(inconclusive(instance, a.arity(), q_max, max_attained_at));
            }
            (Err(e), _) | (_, Err(e)) => return Err(e),
        };
        all_stabilized &= left.stabilized && right.stabilized;
        max_attained_at = max_attained_at.max(left.attained_at).max(right.attained_at);
        rhs = rhs.sum(&left.ideal.product(&right.ideal)?)?;
    }
    let mut lhs = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        lhs.push(MultiplierSolver::new(c.get(m)?)?.multiplier_ideal(&(&g / int(m as i64)))?);
    }
    let truncation = Some(Truncation {
        q_max,
        all_stabilized,
        max_attained_at,
    });
    let witness = lhs
        .iter()
        .find_map(|l| l.generator_outside(&rhs).expect("same arity"))
        .map(|w| Witness::Monomial(w, Direction::LhsNotRhs));
    let verdict = match (&witness, all_stabilized) {
        (_, false) => Verdict::Inconclusive,
        (Some(_), true) => Verdict::Fails,
        (None, true) if lhs.iter().all(|l| *l == rhs) => Verdict::HoldsWithEquality,
        (None, true) => Verdict::Holds,
    };
    Ok(VerificationReport {
        theorem: TheoremId::Thm2,
        instance,
        lhs: Side::Ideals(lhs),
        rhs: Side::Ideal(rhs),
        witness: if verdict == Verdict::Fails { witness } else { None },
        verdict,
        truncation,
    })
}

fn inconclusive(instance: String, arity: usize, q_max: usize, max_attained_at: usize) -> VerificationReport {
    VerificationReport {
        theorem: TheoremId::Thm2,
        instance,
        lhs: Side::Ideals(Vec::new()),
        rhs: Side::Ideal(MonomialIdeal::zero(arity)),
        verdict: Verdict::Inconclusive,
        witness: None,
        truncation: Some(Truncation {
            q_max,
            all_stabilized: false,
            max_attained_at,
        }),
    }
}

fn describe_system(s: &GradedSystem) -> String {
    let parts: Vec<String> = s.entries().iter().map(render_default).collect();
    format!("[{}]", parts.join(", "))
}

/// Recomputes the right-hand side of [`verify_sum_inclusion`] over the dense
/// grid instead of the critical samples.
pub(crate) fn grid_finite_sum(a: &MonomialIdeal, b: &MonomialIdeal, gamma: &Rational) -> Result<MonomialIdeal> {
    let (sa, sb) = (Scaled::new(a)?, Scaled::new(b)?);
    same_space_sum(&sa, &sb, &grid_for(&sa, &sb, gamma)?, gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::powers_system;
    use crate::monomial::tests::ideal;
    use crate::rational::frac;

    fn m2() -> MonomialIdeal {
        MonomialIdeal::variables(2, 0..2).unwrap()
    }

    #[test]
    fn thm1_examples() {
        let a = ideal(2, &[&[2, 0]]);
        let b = ideal(2, &[&[0, 3]]);
        let r = verify_sum_inclusion(&a, &b, &frac(5, 6)).unwrap();
        assert_eq!(r.verdict, Verdict::HoldsWithEquality);
        assert_eq!(r.lhs, Side::Ideal(m2()));
        let r = verify_sum_inclusion(&m2(), &m2(), &int(2)).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.lhs, Side::Ideal(m2()));
        assert_eq!(r.rhs, Side::Ideal(MonomialIdeal::unit(2)));
        assert_eq!(verify_sum_inclusion(&a, &b, &int(0)).unwrap().verdict, Verdict::HoldsWithEquality);
        assert!(verify_sum_inclusion(&MonomialIdeal::zero(2), &b, &int(1)).is_err());
    }

    #[test]
    fn equality_examples() {
        let x2 = ideal(1, &[&[2]]);
        let y3 = ideal(1, &[&[3]]);
        let r = verify_product_equality(&x2, &y3, &frac(5, 6)).unwrap();
        assert_eq!(r.verdict, Verdict::HoldsWithEquality);
        assert_eq!(r.lhs, Side::Ideal(m2()));
        let r = verify_product_equality(&MonomialIdeal::unit(1), &y3, &int(4)).unwrap();
        assert_eq!(r.lhs, Side::Ideal(MonomialIdeal::unit(2)));
        assert_eq!(r.verdict, Verdict::HoldsWithEquality);
        let x = ideal(1, &[&[1]]);
        // lct((x, y)) = 2, so at γ = 1 both sides are still the unit ideal.
        let r = verify_product_equality(&x, &x, &int(1)).unwrap();
        assert_eq!(r.rhs, Side::Ideal(MonomialIdeal::unit(2)));
        assert_eq!(r.verdict, Verdict::HoldsWithEquality);
        let r = verify_product_equality(&x, &x, &int(2)).unwrap();
        assert_eq!(r.rhs, Side::Ideal(m2()));
        assert_eq!(r.verdict, Verdict::HoldsWithEquality);
    }

    #[test]
    fn equality_with_a_zero_factor() {
        let y3 = ideal(1, &[&[3]]);
        let zero = MonomialIdeal::zero(1);
        for g in [int(0), frac(1, 2), int(2)] {
            let r = verify_product_equality(&zero, &y3, &g).unwrap();
            assert_eq!(r.verdict, Verdict::HoldsWithEquality, "gamma={g}");
        }
        let r = verify_product_equality(&zero, &zero, &int(1)).unwrap();
        assert_eq!(r.lhs, Side::Ideal(MonomialIdeal::zero(2)));
        assert_eq!(r.verdict, Verdict::HoldsWithEquality);
        let r = verify_product_equality(&zero, &zero, &int(0)).unwrap();
        assert_eq!(r.lhs, Side::Ideal(MonomialIdeal::unit(2)));
    }

    #[test]
    fn lemma_examples() {
        let x2 = ideal(1, &[&[2]]);
        let y3 = ideal(1, &[&[3]]);
        let x = ideal(1, &[&[1]]);
        for (a, b, g) in [(&x2, &y3, frac(5, 6)), (&x2, &y3, int(0)), (&x, &x, int(2))] {
            assert_eq!(verify_sum_equals_intersection(a, b, &g).unwrap().verdict, Verdict::HoldsWithEquality);
        }
    }

    #[test]
    fn main_examples() {
        let a = ideal(2, &[&[2, 0]]);
        let b = ideal(2, &[&[0, 3]]);
        let fa = powers_family(&a, 2, 1).unwrap();
        let fb = powers_family(&b, 2, 1).unwrap();
        assert_eq!(fa.n, 2);
        assert!(verify_main_inclusion(&fa, &fb, &frac(5, 3)).unwrap().verdict.holds());
        let fm = powers_family(&m2(), 2, 1).unwrap();
        assert!(verify_main_inclusion(&fm, &fm, &int(4)).unwrap().verdict.holds());
        assert_eq!(powers_family(&a, 3, 2).unwrap().n, 12);
    }

    #[test]
    fn main_with_m_n_one_is_thm1() {
        let a = ideal(2, &[&[2, 1], &[0, 3]]);
        let b = ideal(2, &[&[1, 1]]);
        for g in [frac(5, 6), int(2), frac(7, 3)] {
            let main = verify_main_inclusion(&powers_family(&a, 1, 1).unwrap(), &powers_family(&b, 1, 1).unwrap(), &g).unwrap();
            let thm1 = verify_sum_inclusion(&a, &b, &g).unwrap();
            assert_eq!((main.lhs, main.rhs, main.verdict), (thm1.lhs, thm1.rhs, thm1.verdict));
        }
    }

    #[test]
    fn main_rejects_bad_families() {
        let x = ideal(1, &[&[1]]);
        let bad = IdealFamily {
            members: vec![x.clone(), ideal(1, &[&[1]])],
            n: 2,
            top: ideal(1, &[&[3]]),
        };
        assert!(bad.check_hypotheses().is_err());
        let not_dividing = IdealFamily {
            members: vec![x.clone(), x.clone()],
            n: 3,
            top: x.clone(),
        };
        assert!(not_dividing.check_hypotheses().is_err());
        let good = powers_family(&x, 2, 1).unwrap();
        assert!(verify_main_inclusion(&bad, &good, &int(1)).is_err());
    }

    #[test]
    fn approximation_examples() {
        let a = ideal(2, &[&[2, 0], &[0, 3]]);
        let r = verify_approximation(&a, 4, &frac(5, 6), &frac(1, 2)).unwrap();
        assert!(r.verdict.holds());
        let r = verify_approximation(&a, 1, &frac(5, 6), &frac(1, 2)).unwrap();
        assert_eq!(r.rhs, Side::Ideal(MonomialIdeal::unit(2)));
        let x = ideal(1, &[&[1]]);
        assert!(verify_approximation(&x, 2, &int(1), &int(1)).unwrap().verdict.holds());
        assert!(verify_approximation(&x, 2, &int(1), &int(0)).is_err());
    }

    #[test]
    fn subvariety_examples() {
        let b = ideal(2, &[&[2, 0], &[0, 1]]);
        let r = verify_subvariety(&b, 1, &frac(1, 4)).unwrap();
        assert_eq!(r.verdict, Verdict::HoldsWithEquality);
        assert_eq!(r.lhs, Side::Ideal(MonomialIdeal::unit(1)));
        let r = verify_subvariety(&b, 1, &frac(-1, 2)).unwrap();
        assert_eq!(r.lhs, Side::Ideal(MonomialIdeal::unit(1)));
        assert_eq!(r.verdict, Verdict::HoldsWithEquality);
        let r = verify_subvariety(&m2(), 1, &frac(1, 2)).unwrap();
        assert_eq!(r.verdict, Verdict::HoldsWithEquality);
        assert_eq!(r.rhs, Side::Ideal(MonomialIdeal::unit(1)));
        assert!(verify_subvariety(&ideal(2, &[&[0, 1]]), 1, &int(1)).is_err());
        assert!(verify_subvariety(&b, 1, &int(-2)).is_err());
    }

    #[test]
    fn jumpshift_examples() {
        let x = ideal(1, &[&[1]]);
        let r = verify_jumping_shift(&x, 1, &int(3)).unwrap();
        assert_eq!(r.lhs, Side::Numbers(vec![int(2), int(3), int(4)]));
        assert_eq!(r.verdict, Verdict::HoldsWithEquality);
        let r = verify_jumping_shift(&ideal(1, &[&[2]]), 1, &int(2)).unwrap();
        assert_eq!(r.lhs, Side::Numbers(vec![frac(3, 2), int(2), frac(5, 2), int(3)]));
        assert_eq!(r.verdict, Verdict::HoldsWithEquality);
        let a = ideal(2, &[&[2, 1], &[0, 3]]);
        assert_eq!(verify_jumping_shift(&a, 0, &int(2)).unwrap().verdict, Verdict::HoldsWithEquality);
    }

    #[test]
    fn asymptotic_examples() {
        let a = powers_system(&ideal(2, &[&[2, 0]]), 3).unwrap();
        let b = powers_system(&ideal(2, &[&[0, 3]]), 3).unwrap();
        let r = verify_asymptotic(&a, &b, 1, 3, 2, &frac(5, 6)).unwrap();
        assert!(r.verdict.holds(), "{r:?}");
        assert_eq!(r.truncation.as_ref().unwrap().max_attained_at, 1);
        let u = powers_system(&MonomialIdeal::unit(2), 2).unwrap();
        assert!(verify_asymptotic(&u, &u, 1, 2, 2, &int(3)).unwrap().verdict.holds());
        let m = powers_system(&m2(), 2).unwrap();
        assert!(verify_asymptotic(&m, &m, 1, 2, 2, &int(2)).unwrap().verdict.holds());
        assert_eq!(verify_asymptotic(&m, &m, 1, 2, 1, &int(2)).unwrap().verdict, Verdict::Inconclusive);
        assert!(verify_asymptotic(&m, &m, 2, 2, 2, &int(2)).is_err());
    }

    #[test]
    fn failing_reports_recheck() {
        let r = VerificationReport::inclusion(TheoremId::Thm1, String::new(), MonomialIdeal::unit(2), m2());
        assert_eq!(r.verdict, Verdict::Fails);
        assert!(r.recheck());
        let r = VerificationReport::equality(TheoremId::ThmEquality, String::new(), m2(), MonomialIdeal::unit(2));
        assert!(matches!(r.witness, Some(Witness::Monomial(_, Direction::RhsNotLhs))));
        assert!(r.recheck());
        let r = VerificationReport::set_equality(TheoremId::PropJumpShift, String::new(), vec![int(1)], vec![int(2)]);
        assert!(r.recheck());
    }

    #[test]
    fn grid_sum_matches() {
        let a = ideal(2, &[&[3, 1], &[0, 2]]);
        let b = ideal(2, &[&[1, 0]]);
        let g = frac(7, 6);
        let (sa, sb) = (Scaled::new(&a).unwrap(), Scaled::new(&b).unwrap());
        let crit = same_space_sum(&sa, &sb, &samples_for(&sa, &sb, &g).unwrap(), &g).unwrap();
        assert_eq!(grid_finite_sum(&a, &b, &g).unwrap(), crit);
    }
}
