//! Exact rational linear programming.
//!
//! Problems have the form `maximize c·y subject to A y <= b, y >= 0`. The
//! solver is a dense two-phase tableau simplex over [`Rational`] using
//! Bland's smallest-index rule for both the entering and the leaving
//! variable, so it terminates on every input and is fully deterministic.
//!
//! Every optimal outcome carries a primal point and a dual point
//! `u >= 0, Aᵀu >= c` with `c·y = b·u` exactly; [`check_certificates`]
//! re-verifies that triple from scratch.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    num_vars: usize,
    constraints: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    objective: Vec<Rational>,
}

impl LinearProgram {
    pub fn new(
        num_vars: usize,
        constraints: Vec<Vec<Rational>>,
        rhs: Vec<Rational>,
        objective: Vec<Rational>,
    ) -> Result<Self> {
        if objective.len() != num_vars {
            return Err(Error::input(format!(
                "objective has {} coefficients, expected {num_vars}",
                objective.len()
            )));
        }
        if constraints.len() != rhs.len() {
            return Err(Error::input(format!(
                "{} constraint rows but {} right-hand sides",
                constraints.len(),
                rhs.len()
            )));
        }
        if let Some((k, row)) = constraints
            .iter()
            .enumerate()
            .find(|(_, row)| row.len() != num_vars)
        {
            return Err(Error::input(format!(
                "constraint row {k} has {} coefficients, expected {num_vars}",
                row.len()
            )));
        }
        Ok(LinearProgram {
            num_vars,
            constraints,
            rhs,
            objective,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_constraints(&self) -> usize {
        self.constraints.len()
    }

    pub fn constraints(&self) -> &[Vec<Rational>] {
        &self.constraints
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Unbounded,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalSolution {
    pub value: Rational,
    pub primal: Vec<Rational>,
    pub dual: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(OptimalSolution),
    Unbounded,
    Infeasible,
}

impl LpOutcome {
    pub fn status(&self) -> LpStatus {
        match self {
            LpOutcome::Optimal(_) => LpStatus::Optimal,
            LpOutcome::Unbounded => LpStatus::Unbounded,
            LpOutcome::Infeasible => LpStatus::Infeasible,
        }
    }

    pub fn optimal(&self) -> Option<&OptimalSolution> {
        match self {
            LpOutcome::Optimal(sol) => Some(sol),
            _ => None,
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        self.optimal().map(|s| &s.value)
    }

    pub fn solution(&self) -> Option<&[Rational]> {
        self.optimal().map(|s| s.primal.as_slice())
    }

    pub fn dual_solution(&self) -> Option<&[Rational]> {
        self.optimal().map(|s| s.dual.as_slice())
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    /// Reduced costs `c_B B⁻¹ a_j - c_j`; optimal when none is negative.
    reduced: Vec<Rational>,
    value: Rational,
    basis: Vec<usize>,
}

struct UnboundedColumn;

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.rows[row][col].recip();
        for x in self.rows[row].iter_mut() {
            *x = &*x * &inv;
        }
        self.rhs[row] = &self.rhs[row] * &inv;

        let pivot_row = self.rows[row].clone();
        let pivot_rhs = self.rhs[row].clone();
        for r in 0..self.rows.len() {
            if r == row || self.rows[r][col].is_zero() {
                continue;
            }
            let factor = self.rows[r][col].clone();
            for (x, p) in self.rows[r].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = &*x - &factor * p;
                }
            }
            self.rhs[r] = &self.rhs[r] - &factor * &pivot_rhs;
        }
        if !self.reduced[col].is_zero() {
            let factor = self.reduced[col].clone();
            for (x, p) in self.reduced.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = &*x - &factor * p;
                }
            }
            self.value = &self.value - &factor * &pivot_rhs;
        }
        self.basis[row] = col;
    }

    /// Recomputes the objective row for the cost vector `cost`.
    fn price(&mut self, cost: &[Rational]) {
        let width = cost.len();
        let mut reduced: Vec<Rational> = cost.iter().map(|c| -c).collect();
        let mut value = Rational::zero();
        for (r, &b) in self.basis.iter().enumerate() {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (j, red) in reduced.iter_mut().enumerate().take(width) {
                let a = &self.rows[r][j];
                if !a.is_zero() {
                    *red = &*red + cb * a;
                }
            }
            value += cb * &self.rhs[r];
        }
        self.reduced = reduced;
        self.value = value;
    }

    /// Bland's rule simplex over the columns `0..allowed`.
    fn optimize(&mut self, allowed: usize) -> std::result::Result<(), UnboundedColumn> {
        loop {
            let Some(col) = (0..allowed).find(|&j| self.reduced[j].is_negative()) else {
                return Ok(());
            };
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[r] / a;
                let better = match &leave {
                    None => true,
                    Some((best_r, best)) => {
                        ratio < *best || (ratio == *best && self.basis[r] < self.basis[*best_r])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, col),
                None => return Err(UnboundedColumn),
            }
        }
    }
}

/// Maximizes `lp`; see the module docs for the certificate guarantees.
pub fn solve_max(lp: &LinearProgram) -> LpOutcome {
    let n = lp.num_vars;
    let m = lp.constraints.len();
    let negative: Vec<usize> = (0..m).filter(|&i| lp.rhs[i].is_negative()).collect();
    let width = n + m + negative.len();

    // Rows with a negative right-hand side are negated and get an artificial
    // variable; the slack keeps its original sign so that the final slack
    // reduced costs are the dual values.
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for i in 0..m {
        let flip = lp.rhs[i].is_negative();
        let mut row = vec![Rational::zero(); width];
        for j in 0..n {
            row[j] = if flip {
                -&lp.constraints[i][j]
            } else {
                lp.constraints[i][j].clone()
            };
        }
        if flip {
            row[n + i] = -Rational::one();
            let art = n + m + negative.iter().position(|&k| k == i).unwrap();
            row[art] = Rational::one();
            basis.push(art);
            rhs.push(-&lp.rhs[i]);
        } else {
            row[n + i] = Rational::one();
            basis.push(n + i);
            rhs.push(lp.rhs[i].clone());
        }
        rows.push(row);
    }

    let mut tab = Tableau {
        rows,
        rhs,
        reduced: Vec::new(),
        value: Rational::zero(),
        basis,
    };

    if !negative.is_empty() {
        let mut phase_one = vec![Rational::zero(); width];
        for c in phase_one.iter_mut().skip(n + m) {
            *c = -Rational::one();
        }
        tab.price(&phase_one);
        if tab.optimize(width).is_err() {
            unreachable!("phase one objective is bounded above by zero");
        }
        if tab.value.is_negative() {
            return LpOutcome::Infeasible;
        }
        // Artificials left in the basis sit at level zero; pivot them out on
        // any structural column. Rows with no such column are redundant and
        // never block afterwards.
        for r in 0..m {
            if tab.basis[r] >= n + m {
                if let Some(col) = (0..n + m).find(|&j| !tab.rows[r][j].is_zero()) {
                    tab.pivot(r, col);
                }
            }
        }
    }

    let mut cost = vec![Rational::zero(); width];
    cost[..n].clone_from_slice(&lp.objective);
    tab.price(&cost);
    if tab.optimize(n + m).is_err() {
        return LpOutcome::Unbounded;
    }

    let mut primal = vec![Rational::zero(); n];
    for (r, &b) in tab.basis.iter().enumerate() {
        if b < n {
            primal[b] = tab.rhs[r].clone();
        }
    }
    let dual = tab.reduced[n..n + m].to_vec();
    LpOutcome::Optimal(OptimalSolution {
        value: tab.value,
        primal,
        dual,
    })
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Re-verifies primal feasibility, dual feasibility and exact equality of
/// the primal value, the dual value and the reported optimum.
pub fn check_certificates(lp: &LinearProgram, outcome: &LpOutcome) -> bool {
    let Some(sol) = outcome.optimal() else {
        return false;
    };
    let n = lp.num_vars;
    let m = lp.constraints.len();
    if sol.primal.len() != n || sol.dual.len() != m {
        return false;
    }
    if sol.primal.iter().any(Signed::is_negative) || sol.dual.iter().any(Signed::is_negative) {
        return false;
    }
    let primal_ok = lp
        .constraints
        .iter()
        .zip(&lp.rhs)
        .all(|(row, b)| dot(row, &sol.primal) <= *b);
    if !primal_ok {
        return false;
    }
    let dual_ok = (0..n).all(|j| {
        let col_dot = (0..m).fold(Rational::zero(), |acc, i| {
            acc + &lp.constraints[i][j] * &sol.dual[i]
        });
        col_dot >= lp.objective[j]
    });
    if !dual_ok {
        return false;
    }
    dot(&lp.objective, &sol.primal) == sol.value && dot(&lp.rhs, &sol.dual) == sol.value
}
