//! Derivative polynomials for tanh, tan, sech and sec with exact
//! Stirling-number coefficients.
//!
//! The m-th derivative of each of these functions is a fixed polynomial
//! evaluated at the function itself (or at tan/tanh for the secant pair).
//! This crate builds those polynomials exactly over Gaussian rationals,
//! derives the classical Bernoulli, Euler and tangent numbers from them, and
//! cross-checks every construction against independent routes: chain-rule
//! recurrences, Hurwitz-zeta polygamma values, Eisenstein series sums and
//! half-line quadrature.
//!
//! The same material is covered as a narrative in the `book/` directory;
//! the snippets there mirror the doc-tests below.
//!
//! ```
//! use derivpoly::polyfamilies::{family_poly, PolyFamily};
//! use derivpoly::exact::Poly;
//!
//! // (d/dθ)² tanh θ = C_2(tanh θ) with C_2(z) = 2z³ - 2z
//! let c2 = family_poly(PolyFamily::Tanh, 2).unwrap();
//! assert_eq!(c2.poly, Poly::from_i64(&[0, -2, 0, 2]));
//! ```
//!
//! ```
//! use derivpoly::combinat::{bernoulli, euler_number, tangent_number};
//! use derivpoly::exact::Rational;
//!
//! assert_eq!(bernoulli(2), Rational::new(1, 6));
//! assert_eq!(euler_number(4).unwrap(), Rational::from(5));
//! assert_eq!(tangent_number(3).unwrap(), Rational::from(16));
//! ```

// run the code snippets in the book as doc-tests so they cannot drift
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }
    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(exact_arithmetic, "../../../book/src/exact-arithmetic.md");
    chapter!(families, "../../../book/src/families.md");
    chapter!(numbers, "../../../book/src/numbers.md");
    chapter!(eisenstein, "../../../book/src/eisenstein.md");
    chapter!(integrals, "../../../book/src/integrals.md");
    chapter!(cli, "../../../book/src/cli.md");
}

pub mod analytic;
pub mod combinat;
pub mod error;
pub mod exact;
pub mod polyfamilies;
pub mod quadcheck;
pub mod render;

pub use error::{Error, Result};
