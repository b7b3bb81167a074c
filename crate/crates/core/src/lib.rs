//! Exact multiplier ideals of monomial ideals, with a harness that checks
//! subadditivity-type inclusions on generated instances.

pub mod cli;
pub mod error;
pub mod graded;
pub mod harness;
pub mod lp;
pub mod monomial;
pub mod newton;
pub mod oracle;
pub mod parse;
pub mod rational;

pub use error::{Error, Result};
pub use monomial::{Exponent, MonomialIdeal};
pub use newton::{MultiplierSolver, NewtonPolyhedron, ScaleValue, SearchStrategy};
pub use rational::Rational;
