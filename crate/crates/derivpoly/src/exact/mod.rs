//! Exact arithmetic substrate: arbitrary-precision rationals, Gaussian
//! rationals, and dense univariate polynomials over them.
//!
//! All values are immutable and all operations are pure; results are always
//! in canonical form (reduced fractions, trimmed coefficient lists).

mod gauss;
mod poly;
mod rational;

pub use gauss::GaussRational;
pub use poly::Poly;
pub use rational::Rational;
