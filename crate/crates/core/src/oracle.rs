//! Scale function of a monomial ideal in one or two variables, read off the
//! lower convex hull of its staircase instead of solving an LP.
//!
//! In the plane the Newton polyhedron is cut out by the facets of the hull of
//! the generators together with the two coordinate half-planes that bound
//! its unbounded ends, and `μ(v) = min over facets (a·v)/b` for each facet
//! `a·u >= b` with `b > 0`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Exponent, MonomialIdeal};
use crate::newton::ScaleValue;
use crate::rational::{int, Rational};

/// A facet `normal · u >= offset` with `offset > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

fn coord(e: &Exponent, j: usize) -> i64 {
    i64::from(e.coords()[j])
}

/// Facets of the Newton polyhedron with positive offset; `None` for the unit
/// ideal, whose polyhedron is the whole orthant.
pub fn staircase_facets(ideal: &MonomialIdeal) -> Result<Option<Vec<Facet>>> {
    if ideal.is_zero() {
        return Err(Error::domain("the zero ideal has no Newton polyhedron"));
    }
    if ideal.is_unit() {
        return Ok(None);
    }
    match ideal.arity() {
        1 => {
            let g = coord(&ideal.generators()[0], 0);
            Ok(Some(vec![Facet {
                normal: vec![Rational::one()],
                offset: int(g),
            }]))
        }
        2 => Ok(Some(plane_facets(ideal.generators()))),
        n => Err(Error::input(format!(
            "hull oracle handles one or two variables, got {n}"
        ))),
    }
}

fn plane_facets(generators: &[Exponent]) -> Vec<Facet> {
    // Minimal generators sorted by x ascending have y strictly descending.
    let mut points: Vec<(i64, i64)> = generators.iter().map(|g| (coord(g, 0), coord(g, 1))).collect();
    points.sort();
    let cross = |a: (i64, i64), b: (i64, i64), c: (i64, i64)| {
        (b.0 - a.0) * (c.1 - b.1) - (b.1 - a.1) * (c.0 - b.0)
    };
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for p in points {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let mut facets = Vec::new();
    let first = hull[0];
    if first.0 > 0 {
        facets.push(Facet {
            normal: vec![Rational::one(), Rational::zero()],
            offset: int(first.0),
        });
    }
    for w in hull.windows(2) {
        let ((x1, y1), (x2, y2)) = (w[0], w[1]);
        let (a, b) = (y1 - y2, x2 - x1);
        facets.push(Facet {
            normal: vec![int(a), int(b)],
            offset: int(a * x1 + b * y1),
        });
    }
    let last = hull[hull.len() - 1];
    if last.1 > 0 {
        facets.push(Facet {
            normal: vec![Rational::zero(), Rational::one()],
            offset: int(last.1),
        });
    }
    facets
}

/// `μ(v)` from the hull facets.
pub fn hull_scale(ideal: &MonomialIdeal, v: &[Rational]) -> Result<ScaleValue> {
    if v.len() != ideal.arity() {
        return Err(Error::input("point and ideal have different arity"));
    }
    let Some(facets) = staircase_facets(ideal)? else {
        return Ok(ScaleValue::Infinite);
    };
    let value = facets
        .iter()
        .map(|f| {
            let dot: Rational = f.normal.iter().zip(v).map(|(a, x)| a * x).sum();
            dot / &f.offset
        })
        .min()
        .expect("a proper ideal has at least one facet");
    Ok(ScaleValue::Finite(value))
}
