//! Exact coefficients: Gaussian rationals and polynomials modulo substitution relations.

mod gauss;
mod parse;
mod poly;
mod ring;
mod sample;

pub use gauss::{GaussRational, Rational};
pub use parse::parse_scalar;
pub use poly::Scalar;
pub use ring::{CoordinateRing, Monomial, Relation, Terms};
pub use sample::{monomial, sample_points, stereographic};
