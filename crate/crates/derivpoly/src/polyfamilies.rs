//! The derivative-polynomial families.
//!
//! For each trigonometric/hyperbolic function f there is a sequence of
//! polynomials F_m with `(d/dθ)^m f(θ)` equal to `F_m` (or `f · F_m` for the
//! secant-type functions) evaluated at tanh θ, tan θ, coth θ or cot θ.
//! [`family_poly`] builds F_m from the explicit Stirling-number formulas;
//! [`family_next_oracle`] steps the independent chain-rule recurrence used to
//! cross-check them.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;

use crate::combinat::{binomial, euler_number, stirling2_row, tangent_number, tanh_center_value};
use crate::error::Result;
use crate::exact::{GaussRational, Poly, Rational};

/// Selects a derivative-polynomial family.
///
/// Tanh and Coth share the same polynomials C_m (both satisfy y' = 1 - y²),
/// and Sech and Csch share S_m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolyFamily {
    Tanh,
    Coth,
    Tan,
    Cot,
    Sech,
    Csch,
    Sec,
}

impl PolyFamily {
    pub const ALL: [PolyFamily; 7] = [
        PolyFamily::Tanh,
        PolyFamily::Coth,
        PolyFamily::Tan,
        PolyFamily::Cot,
        PolyFamily::Sech,
        PolyFamily::Csch,
        PolyFamily::Sec,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PolyFamily::Tanh => "tanh",
            PolyFamily::Coth => "coth",
            PolyFamily::Tan => "tan",
            PolyFamily::Cot => "cot",
            PolyFamily::Sech => "sech",
            PolyFamily::Csch => "csch",
            PolyFamily::Sec => "sec",
        }
    }

    /// Tangent-type families have deg F_m = m + 1; secant-type have deg m.
    pub fn expected_degree(self, m: usize) -> usize {
        match self {
            PolyFamily::Tanh | PolyFamily::Coth | PolyFamily::Tan | PolyFamily::Cot => m + 1,
            PolyFamily::Sech | PolyFamily::Csch | PolyFamily::Sec => m,
        }
    }
}

impl fmt::Display for PolyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolyFamily {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "tanh" => Ok(PolyFamily::Tanh),
            "coth" => Ok(PolyFamily::Coth),
            "tan" => Ok(PolyFamily::Tan),
            "cot" => Ok(PolyFamily::Cot),
            "sech" => Ok(PolyFamily::Sech),
            "csch" => Ok(PolyFamily::Csch),
            "sec" => Ok(PolyFamily::Sec),
            other => Err(format!("unknown family `{}`", other)),
        }
    }
}

/// A family polynomial that passed the assert-real step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyResult {
    pub family: PolyFamily,
    pub m: usize,
    pub poly: Poly,
}

impl FamilyResult {
    pub fn real_coeffs(&self) -> Vec<Rational> {
        // construction already checked realness
        self.poly.assert_real().expect("family polynomial is real")
    }
}

/// Geometric polynomial `ω_n(x) = sum_{k=0}^{n} {n k} k! x^k`.
///
/// ```
/// use derivpoly::polyfamilies::geometric_poly;
/// use derivpoly::exact::Poly;
/// assert_eq!(geometric_poly(2), Poly::from_i64(&[0, 1, 2])); // x + 2x^2
/// ```
pub fn geometric_poly(n: usize) -> Poly {
    let row = stirling2_row(n);
    let mut k_fact = BigInt::from(1);
    let coeffs = row
        .into_iter()
        .enumerate()
        .map(|(k, s)| {
            if k > 0 {
                k_fact *= k;
            }
            GaussRational::real(Rational::from_bigint(s * &k_fact))
        })
        .collect();
    Poly::new(coeffs)
}

/// Generalized polynomial `p_m(z; a, b) = sum_k C(m,k) a^{m-k} b^k ω_k(z)`,
/// with the convention 0^0 = 1 so that `p_m(z; 0, b) = b^m ω_m(z)`.
pub fn general_poly(m: usize, a: &GaussRational, b: &GaussRational) -> Poly {
    let mut acc = Poly::zero();
    // powers a^{m-k}, b^k with 0^0 = 1
    let mut b_pow = GaussRational::one();
    for k in 0..=m {
        if k > 0 {
            b_pow = &b_pow * b;
        }
        let a_pow = if m - k == 0 { GaussRational::one() } else { a.pow((m - k) as u32) };
        let c = &(&GaussRational::real(Rational::from_bigint(binomial(m, k))) * &a_pow) * &b_pow;
        if !c.is_zero() {
            acc = &acc + &geometric_poly(k).scale(&c);
        }
    }
    acc
}

fn half() -> GaussRational {
    GaussRational::real(Rational::new(1, 2))
}

fn neg_half() -> GaussRational {
    GaussRational::real(Rational::new(-1, 2))
}

/// C_m via `(-2)^m (z+1) ω_m((z-1)/2)` for m >= 1; C_0(z) = z from the
/// defining equation (the zeroth derivative is the function itself).
fn tanh_poly(m: usize) -> Poly {
    if m == 0 {
        return Poly::x();
    }
    let omega = geometric_poly(m).compose_affine(&half(), &neg_half());
    let scale = GaussRational::real(Rational::from_bigint(pow_neg_two(m)));
    (&Poly::from_i64(&[1, 1]) * &omega).scale(&scale)
}

/// P_m via `i^{m+1} 2^m (1 - iz) ω_m((1 + iz)/(-2))` for m >= 1; P_0(z) = z.
fn tan_poly(m: usize) -> Poly {
    if m == 0 {
        return Poly::x();
    }
    let i = GaussRational::i();
    // ω_m under x |-> (1 + iz)/(-2)
    let alpha = &neg_half() * &i;
    let omega = geometric_poly(m).compose_affine(&alpha, &neg_half());
    let one_minus_iz = Poly::new(vec![GaussRational::one(), -&i]);
    let scale = &GaussRational::i_pow(m as i64 + 1)
        * &GaussRational::real(Rational::from_bigint(BigInt::from(1) << m));
    (&one_minus_iz * &omega).scale(&scale)
}

/// S_m via `p_m((1+z)/(-2); 1, 2)`.
fn sech_poly(m: usize) -> Poly {
    let p = general_poly(m, &GaussRational::one(), &GaussRational::from_i64(2));
    p.compose_affine(&neg_half(), &neg_half())
}

fn pow_neg_two(m: usize) -> BigInt {
    let v = BigInt::from(1) << m;
    if m % 2 == 0 { v } else { -v }
}

/// Builds the m-th polynomial of a family from its explicit formula and
/// asserts every coefficient is real.
pub fn family_poly(family: PolyFamily, m: usize) -> Result<FamilyResult> {
    let poly = match family {
        PolyFamily::Tanh | PolyFamily::Coth => tanh_poly(m),
        PolyFamily::Tan => tan_poly(m),
        // cot polynomials are -P_m(-z)
        PolyFamily::Cot => {
            -&tan_poly(m).compose_affine(&GaussRational::from_i64(-1), &GaussRational::zero())
        }
        PolyFamily::Sech | PolyFamily::Csch => sech_poly(m),
        // Q_m(z) = i^m S_m(iz)
        PolyFamily::Sec => sech_poly(m)
            .compose_affine(&GaussRational::i(), &GaussRational::zero())
            .scale(&GaussRational::i_pow(m as i64)),
    };
    poly.assert_real()?;
    Ok(FamilyResult { family, m, poly })
}

/// One step of the chain-rule recurrence: given the family's m-th polynomial,
/// returns the (m+1)-th.
///
/// Derivation, with w the inner function (tanh, tan, coth or cot):
/// tanh' = coth' = 1 - w², tan' = 1 + w², cot' = -(1 + w²); for the
/// secant-type families the product rule adds the `±z·p` term.
pub fn family_next_oracle(family: PolyFamily, p: &Poly) -> Poly {
    let dp = p.derivative();
    let one_minus_z2 = Poly::from_i64(&[1, 0, -1]);
    let one_plus_z2 = Poly::from_i64(&[1, 0, 1]);
    let z = Poly::x();
    match family {
        PolyFamily::Tanh | PolyFamily::Coth => &one_minus_z2 * &dp,
        PolyFamily::Tan => &one_plus_z2 * &dp,
        PolyFamily::Cot => -&(&one_plus_z2 * &dp),
        PolyFamily::Sech | PolyFamily::Csch => &(&one_minus_z2 * &dp) - &(&z * p),
        PolyFamily::Sec => &(&one_plus_z2 * &dp) + &(&z * p),
    }
}

/// F_m(0) by the closed forms (Bernoulli form for C_m, tangent numbers for
/// P_m, Euler numbers for S_m) — deliberately not by evaluating the
/// polynomial, so the two routes stay independent.
pub fn center_value(family: PolyFamily, m: usize) -> Result<Rational> {
    match family {
        PolyFamily::Tanh | PolyFamily::Coth => Ok(tanh_center_value(m)),
        PolyFamily::Tan => {
            if m % 2 == 0 {
                Ok(Rational::zero())
            } else {
                tangent_number((m + 1) / 2)
            }
        }
        PolyFamily::Cot => {
            if m % 2 == 0 {
                Ok(Rational::zero())
            } else {
                Ok(-tangent_number((m + 1) / 2)?)
            }
        }
        PolyFamily::Sech | PolyFamily::Csch => euler_number(m),
        PolyFamily::Sec => {
            // Q_m(0) = i^m E_m: zero for odd m, (-1)^{m/2} E_m for even m
            if m % 2 == 1 {
                Ok(Rational::zero())
            } else {
                let e = euler_number(m)?;
                Ok(if (m / 2) % 2 == 0 { e } else { -e })
            }
        }
    }
}
