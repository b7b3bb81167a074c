//! Monomial ideals in `k[x_1, ..., x_n]`, represented by their minimal
//! generators.
//!
//! A monomial ideal is an up-set of exponent vectors in `ℕⁿ`, and is
//! determined by its componentwise-minimal elements. [`MonomialIdeal`] keeps
//! those minimal generators as a lexicographically sorted antichain, so two
//! ideals are equal exactly when their generator lists are equal.

use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector `w` of the monomial `x^w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(coords: Vec<u32>) -> Self {
        Exponent(coords)
    }

    pub fn zeros(arity: usize) -> Self {
        Exponent(vec![0; arity])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `x^self` divides `x^other`, i.e. `self <= other` componentwise.
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn max_coordinate(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    arity: usize,
    generators: Vec<Exponent>,
}

fn check_arity(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::input(format!(
            "arity mismatch: expected {expected} variables, got {got}"
        )));
    }
    Ok(())
}

impl MonomialIdeal {
    /// Reduces `gens` to the antichain of its componentwise-minimal elements.
    pub fn minimalize(gens: impl IntoIterator<Item = Exponent>, arity: usize) -> Result<Self> {
        let mut gens: Vec<Exponent> = gens.into_iter().collect();
        for g in &gens {
            check_arity(arity, g.arity())?;
        }
        // A divisor always has degree <= its multiple, so scanning by degree
        // only ever compares against already-kept candidates.
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        gens.dedup();
        let mut kept: Vec<Exponent> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        kept.sort();
        Ok(MonomialIdeal {
            arity,
            generators: kept,
        })
    }

    pub fn unit(arity: usize) -> Self {
        MonomialIdeal {
            arity,
            generators: vec![Exponent::zeros(arity)],
        }
    }

    pub fn zero(arity: usize) -> Self {
        MonomialIdeal {
            arity,
            generators: Vec::new(),
        }
    }

    /// The ideal of the given variables, e.g. `(x_2, x_3)`.
    pub fn variables(arity: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut gens = Vec::new();
        for i in indices {
            if i >= arity {
                return Err(Error::input(format!(
                    "variable index {i} out of range for arity {arity}"
                )));
            }
            let mut e = vec![0; arity];
            e[i] = 1;
            gens.push(Exponent(e));
        }
        MonomialIdeal::minimalize(gens, arity)
    }

    /// `m^p` for the maximal ideal at the origin; the unit ideal when `p <= 0`.
    pub fn max_ideal_power(arity: usize, p: i64) -> Self {
        if p <= 0 {
            return MonomialIdeal::unit(arity);
        }
        let p = p as u32;
        let mut gens = Vec::new();
        let mut current = vec![0u32; arity];
        fn rec(pos: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Exponent>) {
            if pos + 1 == current.len() {
                current[pos] = left;
                out.push(Exponent(current.clone()));
                return;
            }
            for k in 0..=left {
                current[pos] = k;
                rec(pos + 1, left - k, current, out);
            }
        }
        if arity == 0 {
            return MonomialIdeal::zero(0);
        }
        rec(0, p, &mut current, &mut gens);
        gens.sort();
        MonomialIdeal {
            arity,
            generators: gens,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_zero()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    /// Largest single exponent over all generators.
    pub fn max_coordinate(&self) -> u32 {
        self.generators
            .iter()
            .map(Exponent::max_coordinate)
            .max()
            .unwrap_or(0)
    }

    /// `used[j]` is true when some generator involves `x_j`.
    pub fn used_variables(&self) -> Vec<bool> {
        (0..self.arity)
            .map(|j| self.generators.iter().any(|g| g.0[j] > 0))
            .collect()
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        check_arity(self.arity, other.arity)?;
        MonomialIdeal::minimalize(
            self.generators.iter().chain(&other.generators).cloned(),
            self.arity,
        )
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<Self> {
        check_arity(self.arity, other.arity)?;
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.add(b)));
        MonomialIdeal::minimalize(gens, self.arity)
    }

    pub fn power(&self, k: u32) -> Self {
        let mut acc = MonomialIdeal::unit(self.arity);
        for _ in 0..k {
            acc = acc.product(self).expect("same arity");
        }
        acc
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<Self> {
        check_arity(self.arity, other.arity)?;
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.lcm(b)));
        MonomialIdeal::minimalize(gens, self.arity)
    }

    pub fn contains_monomial(&self, w: &Exponent) -> Result<bool> {
        check_arity(self.arity, w.arity())?;
        Ok(self.generators.iter().any(|g| g.divides(w)))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &MonomialIdeal) -> Result<bool> {
        check_arity(self.arity, other.arity)?;
        Ok(other
            .generators
            .iter()
            .all(|w| self.generators.iter().any(|g| g.divides(w))))
    }

    /// A generator of `self` lying outside `other`, if any.
    pub fn generator_outside(&self, other: &MonomialIdeal) -> Result<Option<Exponent>> {
        check_arity(self.arity, other.arity)?;
        Ok(self
            .generators
            .iter()
            .find(|w| !other.generators.iter().any(|g| g.divides(w)))
            .cloned())
    }

    /// Pulls back along the projection onto the block of variables
    /// `offset..offset + arity` of a ring with `total` variables.
    pub fn embed_product(&self, offset: usize, total: usize) -> Result<Self> {
        if offset + self.arity > total {
            return Err(Error::input(format!(
                "cannot place {} variables at offset {offset} in a ring of {total}",
                self.arity
            )));
        }
        let generators = self
            .generators
            .iter()
            .map(|g| {
                let mut e = vec![0; total];
                e[offset..offset + self.arity].copy_from_slice(&g.0);
                Exponent(e)
            })
            .collect();
        MonomialIdeal::minimalize_sorted(generators, total)
    }

    /// Image under the ring map sending every variable outside `keep` to 0;
    /// the result lives in `keep.len()` variables, in the order of `keep`.
    pub fn restrict_to_subspace(&self, keep: &[usize]) -> Result<Self> {
        if keep.is_empty() {
            return Err(Error::input("restriction needs at least one variable"));
        }
        let mut seen = vec![false; self.arity];
        for &k in keep {
            if k >= self.arity || seen[k] {
                return Err(Error::input(format!(
                    "invalid or repeated variable index {k} for arity {}",
                    self.arity
                )));
            }
            seen[k] = true;
        }
        let gens = self
            .generators
            .iter()
            .filter(|g| (0..self.arity).all(|j| seen[j] || g.0[j] == 0))
            .map(|g| Exponent(keep.iter().map(|&k| g.0[k]).collect()));
        MonomialIdeal::minimalize(gens, keep.len())
    }

    fn minimalize_sorted(mut generators: Vec<Exponent>, arity: usize) -> Result<Self> {
        generators.sort();
        Ok(MonomialIdeal { arity, generators })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}}")
    }
}
