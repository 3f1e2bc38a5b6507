//! Exact symbolic calculus for Lie algebroids carrying almost complex and Poisson structures.
//!
//! Scalars are polynomials over the Gaussian rationals reduced modulo coordinate relations, so
//! every identity is decided exactly. See the README for a tour of the modules.

#![allow(clippy::needless_range_loop)]

pub mod algebroid;
pub mod catalogue;
pub mod cli;
pub mod complex;
pub mod constructions;
pub mod error;
pub mod gallery;
pub mod io;
pub mod linalg;
pub mod poisson;
pub mod properties;
pub mod random;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
