//! Floating-point analytic layer: Eisenstein series, Hurwitz zeta, polygamma
//! and the explicit polygamma reflection formula, plus the high-derivative
//! rules for csc and csch.
//!
//! Everything here is double precision; the exact polynomials from
//! [`crate::polyfamilies`] enter only through final Horner evaluation.

use std::f64::consts::PI;

use num::complex::Complex64;

use crate::combinat::bernoulli;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::polyfamilies::{family_poly, PolyFamily};

/// Double-precision complex scalar used throughout the analytic layer.
pub type ComplexF = Complex64;

const POLE_EPS: f64 = 1e-12;

/// Asymptotic-series threshold: arguments are shifted up until the real part
/// reaches this before the Euler-Maclaurin / Stirling tails are applied.
const SHIFT_LIMIT: f64 = 15.0;

/// Number of Bernoulli correction terms in the tails.
const BERNOULLI_TERMS: usize = 12;

fn near_integer(z: ComplexF) -> bool {
    z.im.abs() < POLE_EPS && (z.re - z.re.round()).abs() < POLE_EPS
}

/// Symmetric partial sum of the Eisenstein series
/// `e_r(z) = 1/z^r + sum_{k=1}^{K} [(z+k)^{-r} + (z-k)^{-r}]`
/// plus a midpoint-rule tail correction.
///
/// The raw tail is O(K^{1-r}) for r >= 2 and O(K^{-1}) for the paired r = 1
/// sum; the correction knocks it down by two more powers of K.
pub fn eisenstein_direct(r: u32, z: ComplexF, k_terms: u32) -> Result<ComplexF> {
    assert!(r >= 1, "r must be positive");
    if near_integer(z) {
        return Err(Error::Pole(format!("{}", z)));
    }
    let mut sum = z.powi(-(r as i32));
    if r == 1 {
        // pair the terms: 1/(z+k) + 1/(z-k) = 2z/(z^2 - k^2)
        let z2 = z * z;
        for k in 1..=k_terms {
            let kk = (k as f64) * (k as f64);
            sum += 2.0 * z / (z2 - kk);
        }
        let a = k_terms as f64 + 0.5;
        sum += ((a - z) / (a + z)).ln();
    } else {
        for k in 1..=k_terms {
            let k = k as f64;
            sum += (z + k).powi(-(r as i32)) + (z - k).powi(-(r as i32));
        }
        let a = k_terms as f64 + 0.5;
        let p = 1 - r as i32;
        sum += ((z + a).powi(p) - (z - a).powi(p)) / (r as f64 - 1.0);
    }
    Ok(sum)
}

/// Exact expansion of e_r as a polynomial in e_1:
/// `e_r = sum_j c_j · π^{r-j} · e_1^j` with rational c_j, obtained from
/// `e_r = ((-1)^r π^r / (r-1)!) P_{r-1}(-e_1/π)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EisensteinExpansion {
    pub r: u32,
    /// Pairs (j, c_j) with c_j != 0, ascending j.
    pub terms: Vec<(u32, Rational)>,
}

impl EisensteinExpansion {
    /// Evaluates the expansion at a numeric value of e_1.
    pub fn eval_at_e1(&self, e1: f64) -> f64 {
        self.terms
            .iter()
            .map(|(j, c)| c.to_f64() * PI.powi(self.r as i32 - *j as i32) * e1.powi(*j as i32))
            .sum()
    }
}

pub fn eisenstein_expansion(r: u32) -> Result<EisensteinExpansion> {
    assert!(r >= 1, "r must be positive");
    let p = family_poly(PolyFamily::Tan, r as usize - 1)?;
    let coeffs = p.real_coeffs();
    let mut factorial = Rational::one();
    for j in 2..r as usize {
        factorial *= &Rational::from(j as i64);
    }
    let mut terms = Vec::new();
    for (j, c) in coeffs.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // P_{r-1}(-e_1/π): the z^j term picks up (-1)^j π^{-j}, and the
        // prefactor contributes (-1)^r π^r / (r-1)!
        let sign = if (r as usize + j) % 2 == 0 { Rational::one() } else { -Rational::one() };
        terms.push((j as u32, &(&sign * &c) / &factorial));
    }
    Ok(EisensteinExpansion { r, terms })
}

/// Hurwitz zeta `ζ(s, a) = sum_{k>=0} (a+k)^{-s}` for integer s >= 2 and
/// Re(a) > 0, by direct summation up to Re(a+N) >= 15 followed by an
/// Euler-Maclaurin tail with 12 Bernoulli terms (~1e-12 relative accuracy).
pub fn hurwitz_zeta(s: u32, a: ComplexF) -> Result<ComplexF> {
    if s < 2 {
        return Err(Error::Domain(format!("hurwitz_zeta requires s >= 2, got {}", s)));
    }
    if a.re <= 0.0 {
        return Err(Error::Domain(format!("hurwitz_zeta requires Re(a) > 0, got {}", a)));
    }
    let shift = ((SHIFT_LIMIT - a.re).ceil().max(0.0)) as usize;
    let mut direct = Complex64::new(0.0, 0.0);
    for k in 0..shift {
        direct += (a + k as f64).powi(-(s as i32));
    }
    let w = a + shift as f64;
    // Euler-Maclaurin: w^{1-s}/(s-1) + w^{-s}/2 + Bernoulli corrections
    let mut tail = w.powi(1 - s as i32) / (s as f64 - 1.0) + 0.5 * w.powi(-(s as i32));
    let mut pochhammer = 1.0; // (s)(s+1)...(s+2j-2)
    let mut fact = 1.0; // (2j)!
    for j in 1..=BERNOULLI_TERMS {
        pochhammer *= if j == 1 {
            s as f64
        } else {
            (s as f64 + 2.0 * j as f64 - 3.0) * (s as f64 + 2.0 * j as f64 - 2.0)
        };
        fact *= (2.0 * j as f64 - 1.0) * (2.0 * j as f64);
        let b2j = bernoulli(2 * j).to_f64();
        tail += b2j / fact * pochhammer * w.powi(-(s as i32) - 2 * j as i32 + 1);
    }
    Ok(direct + tail)
}

/// Digamma via upward recurrence `ψ(z) = ψ(z+1) - 1/z` followed by the
/// asymptotic series `ln z - 1/(2z) - sum B_{2j}/(2j z^{2j})`.
fn digamma(z: ComplexF) -> ComplexF {
    let mut shifted = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while shifted.re < SHIFT_LIMIT {
        acc -= shifted.inv();
        shifted += 1.0;
    }
    let mut value = shifted.ln() - 0.5 * shifted.inv();
    let z2_inv = (shifted * shifted).inv();
    let mut pow = Complex64::new(1.0, 0.0);
    for j in 1..=BERNOULLI_TERMS {
        pow *= z2_inv;
        value -= bernoulli(2 * j).to_f64() / (2.0 * j as f64) * pow;
    }
    value + acc
}

/// Polygamma `ψ_n(z)`: digamma for n = 0, otherwise
/// `(-1)^{n+1} n! ζ(n+1, z)`.
pub fn polygamma(n: u32, z: ComplexF) -> Result<ComplexF> {
    if near_integer(z) && z.re.round() <= 0.0 {
        return Err(Error::Pole(format!("{}", z)));
    }
    if n == 0 {
        if z.re <= 0.0 && z.im.abs() < POLE_EPS {
            // reflect off the real axis poles: ψ(z) = ψ(1-z) - π cot(πz)
            let reflected = digamma(Complex64::new(1.0 - z.re, 0.0));
            return Ok(reflected - Complex64::new(PI / (PI * z.re).tan(), 0.0));
        }
        if z.re <= 0.0 {
            // shift into the right half plane
            let mut shifted = z;
            let mut acc = Complex64::new(0.0, 0.0);
            while shifted.re <= 0.5 {
                acc -= shifted.inv();
                shifted += 1.0;
            }
            return Ok(digamma(shifted) + acc);
        }
        return Ok(digamma(z));
    }
    if z.re <= 0.0 {
        return Err(Error::Domain(format!(
            "polygamma n={} requires Re(z) > 0, got {}",
            n, z
        )));
    }
    let mut n_fact = 1.0;
    for j in 2..=n {
        n_fact *= j as f64;
    }
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * n_fact * hurwitz_zeta(n + 1, z)?)
}

/// Right side of the explicit reflection formula:
/// `ψ_n(z) - (-1)^n ψ_n(1-z) = π^{n+1} P_n(-cot πz)` for 0 < z < 1.
pub fn reflection_rhs(n: u32, z: f64) -> Result<f64> {
    if !(0.0 < z && z < 1.0) {
        return Err(Error::Domain(format!("reflection requires 0 < z < 1, got {}", z)));
    }
    let p = family_poly(PolyFamily::Tan, n as usize)?;
    let cot = (PI * z).cos() / (PI * z).sin();
    Ok(PI.powi(n as i32 + 1) * p.poly.eval_f64(-cot))
}

/// `(d/dθ)^m csc θ = (1/2^{m+1}) [P_m(tan θ/2) + (-1)^m P_m(cot θ/2)]`.
pub fn csc_high_derivative(m: u32, theta: f64) -> Result<f64> {
    let s = theta.sin();
    if s.abs() < POLE_EPS || (theta / 2.0).cos().abs() < POLE_EPS {
        return Err(Error::Pole(format!("theta = {}", theta)));
    }
    let p = family_poly(PolyFamily::Tan, m as usize)?;
    let half = theta / 2.0;
    let tan_half = half.tan();
    let cot_half = half.cos() / half.sin();
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    Ok((p.poly.eval_f64(tan_half) + sign * p.poly.eval_f64(cot_half)) / 2f64.powi(m as i32 + 1))
}

/// `(d/dθ)^m csch θ = csch θ · S_m(coth θ)`.
pub fn csch_high_derivative(m: u32, theta: f64) -> Result<f64> {
    if theta.abs() < POLE_EPS {
        return Err(Error::Pole(format!("theta = {}", theta)));
    }
    let p = family_poly(PolyFamily::Sech, m as usize)?;
    let csch = 1.0 / theta.sinh();
    let coth = theta.cosh() / theta.sinh();
    Ok(csch * p.poly.eval_f64(coth))
}
