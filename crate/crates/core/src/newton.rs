//! Newton polyhedra and multiplier ideals of monomial ideals.
//!
//! For a nonzero monomial ideal `a` with Newton polyhedron
//! `P = conv{w : x^w ∈ a} + ℝⁿ₊`, the scale function is
//!
//! ```text
//! μ(v) = max{ t >= 0 : v ∈ t·P }
//!      = max{ Σ y_i : Σ y_i g_i <= v, y >= 0 }     (g_i the minimal generators)
//! ```
//!
//! (write a point of `t·P` as `t·Σλ_i g_i + r`, `λ` a convex combination and
//! `r >= 0`, then substitute `y = tλ`). `μ` is concave, positively homogeneous
//! and monotone, and it ignores coordinates that no generator involves.
//!
//! Multiplier ideals are computed from Howald's description:
//! `x^w ∈ I(c·a)` iff `w + e` lies in the interior of `c·P`, where `e` is the
//! all-ones vector. For a strictly positive `v` this is equivalent to
//! `μ(v) > c`: if `μ(v) > c` then `v ∈ μ(v)·P`, and since `P + ℝⁿ₊ = P` a small
//! ball around `v` shrunk by the factor `c/μ(v) < 1` still lies in `c·P`
//! (every coordinate of `v` is positive, so `(c/μ(v))·B(v, δ) <= v` for
//! small `δ`). Conversely if `μ(v) <= c` there is a facet inequality
//! `φ·u >= 1` of `P` with `φ·v <= c`, and points `v - εφ` lie outside `c·P`.
//! The argument needs every coordinate positive: with `v_j = 0` the point
//! sits on the boundary hyperplane `u_j = 0` of the orthant, which is why
//! [`in_interior`] rejects such vectors.
//!
//! `x^w` therefore leaves `I(c·a)` exactly at `c = μ(w + e)`, which makes the
//! jumping numbers the values `μ(w + e)`.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lp::{self, LinearProgram, LpOutcome};
use crate::monomial::{Exponent, MonomialIdeal};
use crate::rational::{ceil_i64, int, Rational};

/// The all-ones vector `e` of length `arity`.
pub fn unit_vector(arity: usize) -> Vec<Rational> {
    vec![Rational::one(); arity]
}

/// A value of the scale function: a nonnegative rational, or `+∞` for the
/// unit ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ScaleValue {
    Finite(Rational),
    Infinite,
}

impl ScaleValue {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ScaleValue::Finite(q) => Some(q),
            ScaleValue::Infinite => None,
        }
    }

    pub fn exceeds(&self, c: &Rational) -> bool {
        match self {
            ScaleValue::Finite(q) => q > c,
            ScaleValue::Infinite => true,
        }
    }
}

impl PartialOrd for ScaleValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ScaleValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ScaleValue::Finite(a), ScaleValue::Finite(b)) => a.cmp(b),
            (ScaleValue::Finite(_), ScaleValue::Infinite) => Ordering::Less,
            (ScaleValue::Infinite, ScaleValue::Finite(_)) => Ordering::Greater,
            (ScaleValue::Infinite, ScaleValue::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ScaleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScaleValue::Finite(q) => write!(f, "{q}"),
            ScaleValue::Infinite => write!(f, "inf"),
        }
    }
}

/// `conv{w : x^w ∈ a} + ℝⁿ₊`, stored through its vertices (the minimal
/// generators of `a` that are not in the polyhedron of the others).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    arity: usize,
    generators: Vec<Exponent>,
    /// `Σ y_i g_i <= v` with all-ones objective; the right-hand side is a
    /// placeholder replaced per query.
    template: LinearProgram,
}

fn scale_template(arity: usize, generators: &[Exponent]) -> Result<LinearProgram> {
    let k = generators.len();
    let rows = (0..arity)
        .map(|j| {
            generators
                .iter()
                .map(|g| int(i64::from(g.coords()[j])))
                .collect()
        })
        .collect();
    LinearProgram::new(k, rows, vec![Rational::zero(); arity], vec![Rational::one(); k])
}

impl NewtonPolyhedron {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::domain("the zero ideal has no Newton polyhedron"));
        }
        let arity = ideal.arity();
        let mut generators = ideal.generators().to_vec();
        // Drop g when μ_{others}(g) >= 1; removing a redundant point leaves
        // the polyhedron unchanged, so one pass suffices.
        let mut i = 0;
        while generators.len() > 1 && i < generators.len() {
            let others: Vec<Exponent> = generators
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let rest = NewtonPolyhedron {
                arity,
                template: scale_template(arity, &others)?,
                generators: others,
            };
            let g: Vec<Rational> = generators[i].coords().iter().map(|&c| int(i64::from(c))).collect();
            if rest.scale(&g)? >= ScaleValue::Finite(Rational::one()) {
                generators.remove(i);
            } else {
                i += 1;
            }
        }
        Ok(NewtonPolyhedron {
            arity,
            template: scale_template(arity, &generators)?,
            generators,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.generators
    }

    pub fn is_orthant(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_zero()
    }

    /// The linear program whose optimum is `μ(v)`.
    pub fn scale_program(&self, v: &[Rational]) -> Result<LinearProgram> {
        self.check_point(v)?;
        LinearProgram::new(
            self.template.num_vars(),
            self.template.constraints().to_vec(),
            v.to_vec(),
            self.template.objective().to_vec(),
        )
    }

    fn check_point(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.arity {
            return Err(Error::input(format!(
                "point has {} coordinates, polyhedron lives in dimension {}",
                v.len(),
                self.arity
            )));
        }
        if v.iter().any(Signed::is_negative) {
            return Err(Error::domain("scale function needs a nonnegative point"));
        }
        Ok(())
    }

    /// `μ(v)` together with the LP outcome that certifies it (`None` for the
    /// orthant, where no LP is solved).
    pub fn scale_with_certificate(&self, v: &[Rational]) -> Result<(ScaleValue, Option<(LinearProgram, LpOutcome)>)> {
        self.check_point(v)?;
        if self.is_orthant() {
            return Ok((ScaleValue::Infinite, None));
        }
        let program = self.scale_program(v)?;
        let outcome = lp::solve_max(&program);
        let value = match &outcome {
            LpOutcome::Optimal(sol) => ScaleValue::Finite(sol.value.clone()),
            // No zero generator, so every y_i is bounded by some v_j / g_ij.
            LpOutcome::Unbounded => unreachable!("scale program of a proper ideal is bounded"),
            LpOutcome::Infeasible => unreachable!("y = 0 is feasible for v >= 0"),
        };
        Ok((value, Some((program, outcome))))
    }

    pub fn scale(&self, v: &[Rational]) -> Result<ScaleValue> {
        Ok(self.scale_with_certificate(v)?.0)
    }
}

/// `μ(v) = max{t >= 0 : v ∈ t·P}`.
pub fn mu(polyhedron: &NewtonPolyhedron, v: &[Rational]) -> Result<ScaleValue> {
    polyhedron.scale(v)
}

/// Whether `v` lies in the interior of `c·P`; `v` must be strictly positive.
pub fn in_interior(polyhedron: &NewtonPolyhedron, v: &[Rational], c: &Rational) -> Result<bool> {
    if v.iter().any(|x| !x.is_positive()) {
        return Err(Error::domain(
            "interiority test needs a strictly positive point",
        ));
    }
    Ok(polyhedron.scale(v)?.exceeds(c))
}

/// How minimal generators of a multiplier ideal are searched for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchStrategy {
    /// Ascend from the origin through non-members only.
    #[default]
    Frontier,
    /// Test every point of the search box; slow, used as a cross-check.
    FullScan,
}

/// `⌈c·d⌉` where `d` is the largest single exponent among the generators.
///
/// Taking `y = min_j(v_j)/d` on one generator shows `μ(v) >= min_j(v_j)/d`, so
/// every `w` with all coordinates at least this bound has `μ(w + e) > c`.
pub fn generator_box_bound(ideal: &MonomialIdeal, c: &Rational) -> Result<u32> {
    if ideal.is_zero() {
        return Err(Error::domain("box bound of the zero ideal"));
    }
    if c.is_negative() {
        return Err(Error::domain("box bound needs a nonnegative coefficient"));
    }
    let d = int(i64::from(ideal.max_coordinate()));
    let bound = ceil_i64(&(c * d))?;
    u32::try_from(bound).map_err(|_| Error::input(format!("search box bound {bound} is too large")))
}

/// Multiplier ideals, thresholds and jumping numbers of one fixed ideal.
///
/// Scale values `μ(w + e)` are memoized, so asking for several coefficients
/// of the same ideal costs one LP per lattice point overall.
pub struct MultiplierSolver {
    ideal: MonomialIdeal,
    polyhedron: NewtonPolyhedron,
    used: Vec<bool>,
    strategy: SearchStrategy,
    verify: bool,
    cache: RefCell<HashMap<Exponent, ScaleValue>>,
}

impl MultiplierSolver {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        let polyhedron = NewtonPolyhedron::new(ideal)?;
        Ok(MultiplierSolver {
            ideal: ideal.clone(),
            used: ideal.used_variables(),
            polyhedron,
            strategy: SearchStrategy::default(),
            verify: cfg!(debug_assertions),
            cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn with_strategy(mut self, strategy: SearchStrategy) -> Self {
        self.strategy = strategy;
        self
    }

    /// Re-check the primal/dual certificate of every LP solved.
    pub fn with_certificate_checks(mut self, on: bool) -> Self {
        self.verify = on;
        self
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn polyhedron(&self) -> &NewtonPolyhedron {
        &self.polyhedron
    }

    /// `μ(w + e)`.
    pub fn scale_at(&self, w: &Exponent) -> ScaleValue {
        if let Some(s) = self.cache.borrow().get(w) {
            return s.clone();
        }
        let v: Vec<Rational> = w.coords().iter().map(|&c| int(i64::from(c) + 1)).collect();
        let (value, certificate) = self
            .polyhedron
            .scale_with_certificate(&v)
            .expect("shifted exponents are positive");
        if self.verify {
            if let Some((program, outcome)) = &certificate {
                assert!(
                    lp::check_certificates(program, outcome),
                    "LP certificate check failed for {w} in {}",
                    self.ideal
                );
            }
        }
        self.cache.borrow_mut().insert(w.clone(), value.clone());
        value
    }

    pub fn lct(&self) -> ScaleValue {
        self.scale_at(&Exponent::zeros(self.ideal.arity()))
    }

    fn box_bounds(&self, c: &Rational) -> Result<Vec<u32>> {
        let b = generator_box_bound(&self.ideal, c)?;
        Ok(self.used.iter().map(|&u| if u { b } else { 0 }).collect())
    }

    /// `I(c·a)`.
    pub fn multiplier_ideal(&self, c: &Rational) -> Result<MonomialIdeal> {
        let arity = self.ideal.arity();
        if !c.is_positive() || self.ideal.is_unit() {
            return Ok(MonomialIdeal::unit(arity));
        }
        let bounds = self.box_bounds(c)?;
        let generators = match self.strategy {
            SearchStrategy::Frontier => self.frontier(c, &bounds, |_| {}),
            SearchStrategy::FullScan => self.full_scan(c, &bounds),
        };
        MonomialIdeal::minimalize(generators, arity)
    }

    /// Ascending search from the origin. Points are taken in order of total
    /// degree, so a member that no earlier generator divides is minimal.
    /// `outside` sees every non-member visited together with its scale.
    fn frontier(&self, c: &Rational, bounds: &[u32], mut outside: impl FnMut(&ScaleValue)) -> Vec<Exponent> {
        let arity = bounds.len();
        let mut found: Vec<Exponent> = Vec::new();
        let mut queue: BTreeSet<(u64, Exponent)> = BTreeSet::new();
        queue.insert((0, Exponent::zeros(arity)));
        while let Some((deg, w)) = queue.pop_first() {
            if found.iter().any(|g| g.divides(&w)) {
                continue;
            }
            let s = self.scale_at(&w);
            if s.exceeds(c) {
                found.push(w);
                continue;
            }
            outside(&s);
            for j in 0..arity {
                if w.coords()[j] < bounds[j] {
                    let mut next = w.coords().to_vec();
                    next[j] += 1;
                    queue.insert((deg + 1, Exponent::new(next)));
                }
            }
        }
        found
    }

    fn box_points(bounds: &[u32]) -> impl Iterator<Item = Exponent> + '_ {
        let total: u64 = bounds.iter().map(|&b| u64::from(b) + 1).product();
        (0..total).map(move |mut k| {
            let coords = bounds
                .iter()
                .map(|&b| {
                    let r = (k % (u64::from(b) + 1)) as u32;
                    k /= u64::from(b) + 1;
                    r
                })
                .collect();
            Exponent::new(coords)
        })
    }

    fn full_scan(&self, c: &Rational, bounds: &[u32]) -> Vec<Exponent> {
        let members: Vec<Exponent> = Self::box_points(bounds)
            .filter(|w| self.scale_at(w).exceeds(c))
            .collect();
        members
            .iter()
            .filter(|w| {
                (0..w.arity()).all(|j| {
                    if w.coords()[j] == 0 {
                        return true;
                    }
                    let mut below = w.coords().to_vec();
                    below[j] -= 1;
                    !self.scale_at(&Exponent::new(below)).exceeds(c)
                })
            })
            .cloned()
            .collect()
    }

    /// Distinct jumping numbers in `(0, t]`, ascending.
    pub fn jumping_numbers(&self, t: &Rational) -> Result<Vec<Rational>> {
        if self.ideal.is_unit() {
            return Ok(Vec::new());
        }
        if !t.is_positive() {
            return Err(Error::domain("jumping numbers need a positive upper limit"));
        }
        let bounds = self.box_bounds(t)?;
        let mut values: BTreeSet<Rational> = BTreeSet::new();
        match self.strategy {
            SearchStrategy::Frontier => {
                self.frontier(t, &bounds, |s| {
                    if let ScaleValue::Finite(q) = s {
                        values.insert(q.clone());
                    }
                });
            }
            SearchStrategy::FullScan => {
                for w in Self::box_points(&bounds) {
                    if let ScaleValue::Finite(q) = self.scale_at(&w) {
                        if q <= *t {
                            values.insert(q);
                        }
                    }
                }
            }
        }
        Ok(values.into_iter().filter(Signed::is_positive).collect())
    }

    /// Smallest jumping number strictly above `gamma`.
    pub fn next_jump_above(&self, gamma: &Rational) -> Result<Rational> {
        if self.ideal.is_unit() {
            return Err(Error::domain("the unit ideal has no jumping numbers"));
        }
        let mut step = Rational::one();
        loop {
            let limit = gamma + &step;
            let limit = if limit.is_positive() { limit } else { step.clone() };
            if let Some(next) = self
                .jumping_numbers(&limit)?
                .into_iter()
                .find(|x| x > gamma)
            {
                return Ok(next);
            }
            step *= int(2);
        }
    }

    /// An `ε > 0` with `I((γ+ε)·a) = I(γ·a)`: half the gap to the next jump.
    pub fn stability_epsilon(&self, gamma: &Rational) -> Result<Rational> {
        if gamma.is_negative() {
            return Err(Error::domain("stability epsilon needs γ >= 0"));
        }
        let next = self.next_jump_above(gamma)?;
        Ok((next - gamma) / int(2))
    }
}

/// `I(c·a)`; the unit ideal for `c <= 0`.
pub fn multiplier_ideal(ideal: &MonomialIdeal, c: &Rational) -> Result<MonomialIdeal> {
    MultiplierSolver::new(ideal)?.multiplier_ideal(c)
}

/// Log canonical threshold, `μ(e)`.
pub fn lct(ideal: &MonomialIdeal) -> Result<ScaleValue> {
    Ok(MultiplierSolver::new(ideal)?.lct())
}

pub fn jumping_numbers(ideal: &MonomialIdeal, t: &Rational) -> Result<Vec<Rational>> {
    MultiplierSolver::new(ideal)?.jumping_numbers(t)
}

pub fn stability_epsilon(ideal: &MonomialIdeal, gamma: &Rational) -> Result<Rational> {
    MultiplierSolver::new(ideal)?.stability_epsilon(gamma)
}
