use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::verify::{
    powers_family, verify_approximation, verify_asymptotic, verify_jumping_shift, verify_main_inclusion,
    product_instance, verify_product_equality, verify_subvariety, verify_sum_equals_intersection, verify_sum_inclusion,
};
use super::VerificationReport;
use crate::error::{Error, Result};
use crate::graded::powers_system;
use crate::monomial::{Exponent, MonomialIdeal};
use crate::parse::render_default;
use crate::rational::{frac, int, Rational};

/// The relations a campaign can exercise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VerifyKind {
    Thm1,
    Thm2,
    Equality,
    Lemma,
    Main,
    Approx,
    Subvariety,
    Jumpshift,
}

impl VerifyKind {
    pub const ALL: [VerifyKind; 8] = [
        VerifyKind::Thm1,
        VerifyKind::Thm2,
        VerifyKind::Equality,
        VerifyKind::Lemma,
        VerifyKind::Main,
        VerifyKind::Approx,
        VerifyKind::Subvariety,
        VerifyKind::Jumpshift,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VerifyKind::Thm1 => "thm1",
            VerifyKind::Thm2 => "thm2",
            VerifyKind::Equality => "equality",
            VerifyKind::Lemma => "lemma",
            VerifyKind::Main => "main",
            VerifyKind::Approx => "approx",
            VerifyKind::Subvariety => "subvariety",
            VerifyKind::Jumpshift => "jumpshift",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        VerifyKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for VerifyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Shape limits for random ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceParams {
    /// Arity is drawn uniformly from `1..=arity`.
    pub arity: usize,
    pub max_gens: usize,
    /// Bound on the total degree of each generator.
    pub max_deg: u32,
    /// `γ = k / gamma_den` with `0 <= k <= gamma_num_max`.
    pub gamma_den: i64,
    pub gamma_num_max: i64,
}

impl Default for InstanceParams {
    fn default() -> Self {
        InstanceParams {
            arity: 3,
            max_gens: 4,
            max_deg: 6,
            gamma_den: 6,
            gamma_num_max: 18,
        }
    }
}

fn random_ideal(rng: &mut ChaCha8Rng, arity: usize, params: &InstanceParams) -> MonomialIdeal {
    let count = rng.gen_range(1..=params.max_gens.max(1));
    let gens = (0..count).map(|_| {
        let degree = rng.gen_range(1..=params.max_deg.max(1));
        let mut e = vec![0u32; arity];
        for _ in 0..degree {
            e[rng.gen_range(0..arity)] += 1;
        }
        Exponent::new(e)
    });
    MonomialIdeal::minimalize(gens, arity).expect("generators have the right arity")
}

fn random_gamma(rng: &mut ChaCha8Rng, params: &InstanceParams) -> Rational {
    frac(rng.gen_range(0..=params.gamma_num_max), params.gamma_den)
}

/// Two nonzero proper ideals in a common number of variables and a
/// coefficient; deterministic in `seed`.
pub fn random_instance(seed: u64, params: &InstanceParams) -> (MonomialIdeal, MonomialIdeal, Rational) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let arity = rng.gen_range(1..=params.arity.max(1));
    let a = random_ideal(&mut rng, arity, params);
    let b = random_ideal(&mut rng, arity, params);
    (a, b, random_gamma(&mut rng, params))
}

/// Like [`random_instance`] but with independent arities
/// `r <= max_r`, `s <= max_s`, for the disjoint-variable relations.
pub fn random_product_instance(
    seed: u64,
    max_r: usize,
    max_s: usize,
    params: &InstanceParams,
) -> (MonomialIdeal, MonomialIdeal, Rational) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = rng.gen_range(1..=max_r.max(1));
    let s = rng.gen_range(1..=max_s.max(1));
    let a = random_ideal(&mut rng, r, params);
    let b = random_ideal(&mut rng, s, params);
    (a, b, random_gamma(&mut rng, params))
}

/// A concrete input for one relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    /// Thm1: `a` and `b` in the same variables.
    Pair {
        a: MonomialIdeal,
        b: MonomialIdeal,
        gamma: Rational,
    },
    /// Equality and lemma: `b` lives in its own variables, after those of `a`.
    Product {
        a: MonomialIdeal,
        b: MonomialIdeal,
        gamma: Rational,
    },
    /// Families `a_i = a^i`, `b_i = b^i`, `n = lcm(1..m)·k`.
    Powers {
        a: MonomialIdeal,
        b: MonomialIdeal,
        m: usize,
        k: usize,
        gamma: Rational,
    },
    Approx {
        a: MonomialIdeal,
        p: u32,
        gamma: Rational,
        eps: Rational,
    },
    Subvariety {
        b: MonomialIdeal,
        r: usize,
        gamma: Rational,
    },
    JumpShift {
        a: MonomialIdeal,
        r: usize,
        t: Rational,
    },
    /// Powers systems of `a` and `b`.
    Asymptotic {
        a: MonomialIdeal,
        b: MonomialIdeal,
        p: usize,
        m_max: usize,
        q_max: usize,
        gamma: Rational,
    },
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = render_default;
        match self {
            Instance::Pair { a, b, gamma } => write!(f, "a={} b={} gamma={gamma}", r(a), r(b)),
            Instance::Product { a, b, gamma } => f.write_str(&product_instance(a, b, gamma)),
            Instance::Powers { a, b, m, k, gamma } => {
                write!(f, "a={} b={} m={m} k={k} gamma={gamma}", r(a), r(b))
            }
            Instance::Approx { a, p, gamma, eps } => write!(f, "a={} p={p} gamma={gamma} eps={eps}", r(a)),
            Instance::Subvariety { b, r: codim, gamma } => write!(f, "b={} r={codim} gamma={gamma}", r(b)),
            Instance::JumpShift { a, r: codim, t } => write!(f, "a={} r={codim} T={t}", r(a)),
            Instance::Asymptotic {
                a,
                b,
                p,
                m_max,
                q_max,
                gamma,
            } => write!(
                f,
                "a={} b={} p={p} m_max={m_max} q_max={q_max} gamma={gamma}",
                r(a),
                r(b)
            ),
        }
    }
}

impl Instance {
    /// Draws the instance used by trial `seed` of a campaign for `kind`.
    pub fn random(kind: VerifyKind, seed: u64) -> Instance {
        let params = InstanceParams::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
        match kind {
            VerifyKind::Thm1 => {
                let (a, b, gamma) = random_instance(seed, &params);
                Instance::Pair { a, b, gamma }
            }
            VerifyKind::Equality | VerifyKind::Lemma => {
                let (a, b, gamma) = random_product_instance(seed, 2, 2, &params);
                Instance::Product { a, b, gamma }
            }
            VerifyKind::Main => {
                let small = InstanceParams {
                    arity: 2,
                    max_gens: 3,
                    max_deg: 4,
                    ..params
                };
                let (a, b, gamma) = random_instance(seed, &small);
                let m = rng.gen_range(1..=3);
                Instance::Powers { a, b, m, k: 1, gamma }
            }
            VerifyKind::Approx => {
                let (a, _, gamma) = random_instance(seed, &params);
                let p = rng.gen_range(1..=4);
                let eps = if rng.gen_bool(0.5) { frac(1, 2) } else { int(1) };
                Instance::Approx { a, p, gamma, eps }
            }
            VerifyKind::Subvariety => {
                let small = InstanceParams {
                    arity: 2,
                    max_gens: 3,
                    max_deg: 4,
                    ..params
                };
                let r = rng.gen_range(1..=2);
                let n = rng.gen_range(1..=2);
                let mut inner = ChaCha8Rng::seed_from_u64(seed);
                // Generators in all n + r variables, one of them free of the
                // last r so that the containment is strict.
                let free = random_ideal(&mut inner, n, &small).embed_product(0, n + r).expect("fits");
                let extra = random_ideal(&mut inner, n + r, &small);
                let ax = MonomialIdeal::variables(n + r, n..n + r).expect("in range");
                let b = ax.sum(&free).and_then(|s| s.sum(&extra)).expect("same arity");
                let gamma = frac(rng.gen_range(-6 * r as i64..=18), 6);
                Instance::Subvariety { b, r, gamma }
            }
            VerifyKind::Jumpshift => {
                let small = InstanceParams {
                    arity: 2,
                    max_gens: 3,
                    max_deg: 4,
                    ..params
                };
                let (a, _, _) = random_instance(seed, &small);
                let r = rng.gen_range(1..=2);
                let t = frac(rng.gen_range(1..=18), 6);
                Instance::JumpShift { a, r, t }
            }
            VerifyKind::Thm2 => {
                let small = InstanceParams {
                    arity: 2,
                    max_gens: 3,
                    max_deg: 4,
                    gamma_num_max: 12,
                    ..params
                };
                let (a, b, gamma) = random_instance(seed, &small);
                let p = rng.gen_range(1..=2);
                Instance::Asymptotic {
                    a,
                    b,
                    p,
                    m_max: 2,
                    q_max: 2,
                    gamma,
                }
            }
        }
    }

    /// Runs the relation `kind` on this instance.
    pub fn verify(&self, kind: VerifyKind) -> Result<VerificationReport> {
        match (kind, self) {
            (VerifyKind::Thm1, Instance::Pair { a, b, gamma }) => verify_sum_inclusion(a, b, gamma),
            (VerifyKind::Equality, Instance::Product { a, b, gamma }) => verify_product_equality(a, b, gamma),
            (VerifyKind::Lemma, Instance::Product { a, b, gamma }) => verify_sum_equals_intersection(a, b, gamma),
            (VerifyKind::Main, Instance::Powers { a, b, m, k, gamma }) => {
                verify_main_inclusion(&powers_family(a, *m, *k)?, &powers_family(b, *m, *k)?, gamma)
            }
            (VerifyKind::Approx, Instance::Approx { a, p, gamma, eps }) => verify_approximation(a, *p, gamma, eps),
            (VerifyKind::Subvariety, Instance::Subvariety { b, r, gamma }) => verify_subvariety(b, *r, gamma),
            (VerifyKind::Jumpshift, Instance::JumpShift { a, r, t }) => verify_jumping_shift(a, *r, t),
            (
                VerifyKind::Thm2,
                Instance::Asymptotic {
                    a,
                    b,
                    p,
                    m_max,
                    q_max,
                    gamma,
                },
            ) => {
                let p_max = (p * q_max).max(*m_max);
                verify_asymptotic(&powers_system(a, p_max)?, &powers_system(b, p_max)?, *p, *m_max, *q_max, gamma)
            }
            (kind, other) => Err(Error::input(format!("instance `{other}` does not fit `{kind}`"))),
        }
    }
}

fn mon(arity: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::minimalize(gens.iter().map(|g| Exponent::new(g.to_vec())), arity).expect("fixed arity")
}

/// Hand-checked instances run by every campaign in addition to random ones.
pub fn fixed_instances(kind: VerifyKind) -> Vec<Instance> {
    let m2 = MonomialIdeal::variables(2, 0..2).expect("in range");
    let x2y3 = mon(2, &[&[2, 0], &[0, 3]]);
    let pair = |a: &MonomialIdeal, b: &MonomialIdeal, gamma: Rational| Instance::Pair {
        a: a.clone(),
        b: b.clone(),
        gamma,
    };
    let product = |a: &MonomialIdeal, b: &MonomialIdeal, gamma: Rational| Instance::Product {
        a: a.clone(),
        b: b.clone(),
        gamma,
    };
    match kind {
        VerifyKind::Thm1 => vec![
            pair(&mon(2, &[&[2, 0]]), &mon(2, &[&[0, 3]]), frac(5, 6)),
            // Strict: I(2·m) = m while the α = β = 1 summand is the unit ideal.
            pair(&m2, &m2, int(2)),
            pair(&x2y3, &m2, int(0)),
            pair(&x2y3, &mon(2, &[&[1, 1]]), frac(7, 3)),
        ],
        VerifyKind::Equality | VerifyKind::Lemma => vec![
            product(&mon(1, &[&[2]]), &mon(1, &[&[3]]), frac(5, 6)),
            product(&MonomialIdeal::unit(1), &mon(1, &[&[3]]), int(2)),
            product(&mon(1, &[&[1]]), &mon(1, &[&[1]]), int(1)),
            product(&mon(1, &[&[1]]), &mon(1, &[&[1]]), int(2)),
            product(&mon(1, &[&[2]]), &mon(1, &[&[3]]), int(0)),
        ],
        VerifyKind::Main => vec![
            Instance::Powers {
                a: mon(2, &[&[2, 0]]),
                b: mon(2, &[&[0, 3]]),
                m: 2,
                k: 1,
                gamma: frac(5, 3),
            },
            Instance::Powers {
                a: m2.clone(),
                b: m2.clone(),
                m: 2,
                k: 1,
                gamma: int(4),
            },
            Instance::Powers {
                a: m2.clone(),
                b: m2.clone(),
                m: 1,
                k: 1,
                gamma: int(2),
            },
        ],
        VerifyKind::Approx => vec![
            Instance::Approx {
                a: x2y3.clone(),
                p: 4,
                gamma: frac(5, 6),
                eps: frac(1, 2),
            },
            Instance::Approx {
                a: x2y3.clone(),
                p: 1,
                gamma: frac(5, 6),
                eps: frac(1, 2),
            },
            Instance::Approx {
                a: mon(1, &[&[1]]),
                p: 2,
                gamma: int(1),
                eps: int(1),
            },
        ],
        VerifyKind::Subvariety => vec![
            Instance::Subvariety {
                b: mon(2, &[&[2, 0], &[0, 1]]),
                r: 1,
                gamma: frac(1, 4),
            },
            Instance::Subvariety {
                b: mon(2, &[&[2, 0], &[0, 1]]),
                r: 1,
                gamma: frac(-1, 2),
            },
            Instance::Subvariety {
                b: m2.clone(),
                r: 1,
                gamma: frac(1, 2),
            },
        ],
        VerifyKind::Jumpshift => vec![
            Instance::JumpShift {
                a: mon(1, &[&[1]]),
                r: 1,
                t: int(3),
            },
            Instance::JumpShift {
                a: mon(1, &[&[2]]),
                r: 1,
                t: int(2),
            },
            Instance::JumpShift {
                a: x2y3.clone(),
                r: 0,
                t: int(2),
            },
        ],
        VerifyKind::Thm2 => vec![
            Instance::Asymptotic {
                a: mon(2, &[&[2, 0]]),
                b: mon(2, &[&[0, 3]]),
                p: 1,
                m_max: 3,
                q_max: 2,
                gamma: frac(5, 6),
            },
            Instance::Asymptotic {
                a: MonomialIdeal::unit(2),
                b: MonomialIdeal::unit(2),
                p: 1,
                m_max: 2,
                q_max: 2,
                gamma: int(3),
            },
            Instance::Asymptotic {
                a: m2.clone(),
                b: m2,
                p: 1,
                m_max: 2,
                q_max: 2,
                gamma: int(2),
            },
        ],
    }
}
