//! Numerical verification of the integral identities: adaptive Gauss-Kronrod
//! quadrature on the half line (and whole line) against the closed forms
//! built from the derivative polynomials and polygamma values.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num::complex::Complex64;

use crate::analytic::{polygamma, ComplexF};
use crate::error::{Error, Result};
use crate::polyfamilies::{family_poly, PolyFamily};

/// Quadrature parameters. The defaults target ~1e-12 absolute error.
#[derive(Debug, Clone)]
pub struct QuadConfig {
    pub abs_tol: f64,
    pub max_depth: u32,
    pub truncation_margin: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig { abs_tol: 1e-12, max_depth: 40, truncation_margin: 1.0 }
    }
}

impl QuadConfig {
    fn validate(&self) {
        assert!(self.abs_tol >= 1e-13, "abs_tol below supported range");
        assert!(self.max_depth <= 60, "max_depth above supported range");
        assert!(self.truncation_margin > 0.0, "truncation_margin must be positive");
    }
}

/// Outcome of one identity check. `residual = |lhs - rhs| / max(1, |rhs|)`,
/// the 1-floor keeps near-zero right sides from inflating the ratio.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub identity_id: String,
    pub params: BTreeMap<String, f64>,
    pub lhs: ComplexF,
    pub rhs: ComplexF,
    pub residual: f64,
    pub tol: f64,
    pub pass: bool,
}

impl CheckReport {
    pub fn new(
        identity_id: impl Into<String>,
        params: &[(&str, f64)],
        lhs: ComplexF,
        rhs: ComplexF,
        tol: f64,
    ) -> Self {
        let residual = (lhs - rhs).norm() / rhs.norm().max(1.0);
        CheckReport {
            identity_id: identity_id.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            lhs,
            rhs,
            residual,
            tol,
            pass: residual <= tol,
        }
    }
}

/// Default tolerances for the shipped identity checks.
pub const COS_IDENTITY_TOL: f64 = 1e-8;
pub const SIN_IDENTITY_TOL: f64 = 1e-7;
pub const EXP_IDENTITY_TOL: f64 = 1e-7;
pub const HOFFMAN_TOL: f64 = 1e-7;

// 15-point Kronrod abscissae with embedded 7-point Gauss rule.
const XGK15: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WG7: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];
const WGK15: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

fn gk15<F: Fn(f64) -> ComplexF>(f: &F, a: f64, b: f64) -> (ComplexF, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);
    let mut kronrod = f_center * WGK15[7];
    let mut gauss = f_center * WG7[3];
    for j in 0..7 {
        let x = half * XGK15[j];
        let fsum = f(center - x) + f(center + x);
        kronrod += fsum * WGK15[j];
        if j % 2 == 1 {
            gauss += fsum * WG7[j / 2];
        }
    }
    let err = ((kronrod - gauss) * half).norm();
    (kronrod * half, err)
}

fn adaptive<F: Fn(f64) -> ComplexF>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    depth: u32,
    cfg: &QuadConfig,
) -> Result<(ComplexF, f64)> {
    let (value, err) = gk15(f, a, b);
    if err <= tol || err <= 1e-16 * value.norm() {
        return Ok((value, err));
    }
    if depth >= cfg.max_depth {
        return Err(Error::Convergence { estimate: err, target: tol });
    }
    let mid = 0.5 * (a + b);
    let (lv, le) = adaptive(f, a, mid, tol / 2.0, depth + 1, cfg)?;
    let (rv, re) = adaptive(f, mid, b, tol / 2.0, depth + 1, cfg)?;
    Ok((lv + rv, le + re))
}

/// Integrates f over [a, b] to the config's absolute tolerance.
pub fn integrate_interval<F: Fn(f64) -> ComplexF>(
    f: F,
    a: f64,
    b: f64,
    cfg: &QuadConfig,
) -> Result<ComplexF> {
    cfg.validate();
    adaptive(&f, a, b, cfg.abs_tol, 0, cfg).map(|(v, _)| v)
}

/// Solves `n ln x - rate·x + margin = ln(abs_tol/10)` for the truncation
/// point of an integrand bounded by `x^n e^{-rate·x + margin}`.
fn truncation_point(n: u32, rate: f64, cfg: &QuadConfig) -> f64 {
    let target = cfg.truncation_margin - (cfg.abs_tol / 10.0).ln();
    let mut x: f64 = 40.0;
    for _ in 0..40 {
        x = (target + n as f64 * x.max(1.0).ln()) / rate;
    }
    x.max(40.0 / rate).max(40.0)
}

/// Integrates f over [0, ∞) for integrands with a `x^n e^{-x}`-type tail,
/// truncating where the analytic bound drops below `abs_tol/10`.
pub fn integrate_halfline<F: Fn(f64) -> ComplexF>(
    f: F,
    growth: u32,
    cfg: &QuadConfig,
) -> Result<ComplexF> {
    cfg.validate();
    let x_max = truncation_point(growth, 1.0, cfg);
    adaptive(&f, 0.0, x_max, cfg.abs_tol, 0, cfg).map(|(v, _)| v)
}

fn sech(x: f64) -> f64 {
    1.0 / x.cosh()
}

fn pow_half_pi(n: u32) -> f64 {
    (PI / 2.0).powi(n as i32 + 1)
}

fn i_pow(n: u32) -> ComplexF {
    match n % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// `∫_0^∞ (x^n / cosh x) cos(ax + πn/2) dx
///  = (π/2)^{n+1} sech(πa/2) S_n(tanh(πa/2))`.
pub fn check_cos_identity(n: u32, a: f64, cfg: &QuadConfig, tol: f64) -> Result<CheckReport> {
    let phase = PI * n as f64 / 2.0;
    let lhs = integrate_halfline(
        |x| Complex64::new(x.powi(n as i32) * sech(x) * (a * x + phase).cos(), 0.0),
        n,
        cfg,
    )?;
    let s = family_poly(PolyFamily::Sech, n as usize)?;
    let t = (PI * a / 2.0).tanh();
    let rhs = pow_half_pi(n) * sech(PI * a / 2.0) * s.poly.eval_f64(t);
    Ok(CheckReport::new(
        "cos-sech",
        &[("n", n as f64), ("a", a)],
        lhs,
        Complex64::new(rhs, 0.0),
        tol,
    ))
}

/// `∫_0^∞ (x^n / cosh x) sin(ax + πn/2) dx`, against the digamma-based
/// closed form with C_n and the polygamma values at (1 ± ia)/4.
pub fn check_sin_identity(n: u32, a: f64, cfg: &QuadConfig, tol: f64) -> Result<CheckReport> {
    let phase = PI * n as f64 / 2.0;
    let lhs = integrate_halfline(
        |x| Complex64::new(x.powi(n as i32) * sech(x) * (a * x + phase).sin(), 0.0),
        n,
        cfg,
    )?;
    let c = family_poly(PolyFamily::Tanh, n as usize)?;
    let t = (PI * a / 2.0).tanh();
    let psi_minus = polygamma(n, Complex64::new(0.25, -a / 4.0))?;
    let psi_plus = polygamma(n, Complex64::new(0.25, a / 4.0))?;
    let i = Complex64::new(0.0, 1.0);
    let rhs = -pow_half_pi(n) * c.poly.eval_f64(t)
        + i / 2f64.powi(2 * n as i32 + 1)
            * (i_pow(n).conj() * psi_minus - i_pow(n) * psi_plus);
    Ok(CheckReport::new("sin-digamma", &[("n", n as f64), ("a", a)], lhs, rhs, tol))
}

/// `∫_0^∞ (x^n / cosh x) e^{iax} dx`, the combined identity uniting the cos
/// and sin evaluations.
pub fn check_exp_identity(n: u32, a: f64, cfg: &QuadConfig, tol: f64) -> Result<CheckReport> {
    let lhs = integrate_halfline(
        |x| {
            let w = x.powi(n as i32) * sech(x);
            Complex64::new(w * (a * x).cos(), w * (a * x).sin())
        },
        n,
        cfg,
    )?;
    let s = family_poly(PolyFamily::Sech, n as usize)?;
    let c = family_poly(PolyFamily::Tanh, n as usize)?;
    let t = (PI * a / 2.0).tanh();
    let i = Complex64::new(0.0, 1.0);
    let psi_plus = polygamma(n, Complex64::new(0.25, a / 4.0))?;
    let psi_minus = polygamma(n, Complex64::new(0.25, -a / 4.0))?;
    let parity = if n % 2 == 0 { 1.0 } else { -1.0 };
    let rhs = i_pow(n).conj()
        * pow_half_pi(n)
        * (sech(PI * a / 2.0) * s.poly.eval_f64(t) - i * c.poly.eval_f64(t))
        + (psi_plus - parity * psi_minus) / 2f64.powi(2 * n as i32 + 1);
    Ok(CheckReport::new("exp-combined", &[("n", n as f64), ("a", a)], lhs, rhs, tol))
}

/// Which whole-line integrand the Hoffman evaluation uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HoffmanKind {
    /// `x^n e^{ax} / (e^x + 1)`, valid for n >= 0.
    ExpPlusOne,
    /// `x^n e^{ax} / (e^x - 1)`, valid for n >= 1.
    ExpMinusOne,
}

/// Hoffman's whole-line evaluations for 0 < a < 1:
/// `∫ x^n e^{ax}/(e^x+1) dx = π^{n+1} csc(aπ) Q_n(-cot aπ)` and
/// `∫ x^n e^{ax}/(e^x-1) dx = π^{n+1} P_n(-cot aπ)`.
pub fn check_hoffman_integral(
    kind: HoffmanKind,
    n: u32,
    a: f64,
    cfg: &QuadConfig,
    tol: f64,
) -> Result<CheckReport> {
    cfg.validate();
    if !(0.0 < a && a < 1.0) {
        return Err(Error::Domain(format!("hoffman integrals need 0 < a < 1, got {}", a)));
    }
    if kind == HoffmanKind::ExpMinusOne && n == 0 {
        return Err(Error::Domain("e^x - 1 variant needs n >= 1".into()));
    }
    let integrand = move |x: f64| -> ComplexF {
        let value = match kind {
            HoffmanKind::ExpPlusOne => {
                if x > 0.0 {
                    // e^{ax}/(e^x+1) = e^{(a-1)x} / (1 + e^{-x})
                    x.powi(n as i32) * ((a - 1.0) * x).exp() / (1.0 + (-x).exp())
                } else {
                    x.powi(n as i32) * (a * x).exp() / (x.exp() + 1.0)
                }
            }
            HoffmanKind::ExpMinusOne => {
                // x/(e^x - 1) is smooth through 0; switch to its series there
                let core = if x.abs() < 1e-5 {
                    1.0 - x / 2.0 + x * x / 12.0
                } else if x > 0.0 {
                    x * (-x).exp() / (1.0 - (-x).exp())
                } else {
                    x / (x.exp() - 1.0)
                };
                x.powi(n as i32 - 1) * (a * x).exp() * core
            }
        };
        Complex64::new(value, 0.0)
    };
    // decay rates: e^{-(1-a)x} to the right, e^{-a|x|} to the left
    let x_right = truncation_point(n, 1.0 - a, cfg);
    let x_left = truncation_point(n, a, cfg);
    let (right, _) = adaptive(&integrand, 0.0, x_right, cfg.abs_tol, 0, cfg)?;
    let (left, _) = adaptive(&integrand, -x_left, 0.0, cfg.abs_tol, 0, cfg)?;
    let lhs = left + right;

    let cot = (a * PI).cos() / (a * PI).sin();
    let rhs = match kind {
        HoffmanKind::ExpPlusOne => {
            let q = family_poly(PolyFamily::Sec, n as usize)?;
            PI.powi(n as i32 + 1) / (a * PI).sin() * q.poly.eval_f64(-cot)
        }
        HoffmanKind::ExpMinusOne => {
            let p = family_poly(PolyFamily::Tan, n as usize)?;
            PI.powi(n as i32 + 1) * p.poly.eval_f64(-cot)
        }
    };
    let id = match kind {
        HoffmanKind::ExpPlusOne => "hoffman-plus",
        HoffmanKind::ExpMinusOne => "hoffman-minus",
    };
    Ok(CheckReport::new(id, &[("n", n as f64), ("a", a)], lhs, Complex64::new(rhs, 0.0), tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halfline_basics() {
        let cfg = QuadConfig::default();
        // ∫ sech = π/2
        let v = integrate_halfline(|x| Complex64::new(sech(x), 0.0), 0, &cfg).unwrap();
        assert!((v.re - PI / 2.0).abs() < 1e-10, "{}", v);
        // ∫ e^{-x} = 1
        let v = integrate_halfline(|x| Complex64::new((-x).exp(), 0.0), 0, &cfg).unwrap();
        assert!((v.re - 1.0).abs() < 1e-11, "{}", v);
        // ∫ x sech x = 2·Catalan
        let catalan = 0.915_965_594_177_219;
        let v = integrate_halfline(|x| Complex64::new(x * sech(x), 0.0), 1, &cfg).unwrap();
        assert!((v.re - 2.0 * catalan).abs() < 1e-10, "{}", v);
    }

    #[test]
    fn halfline_self_consistency() {
        // halving abs_tol moves the value by less than the looser tolerance
        let loose = QuadConfig { abs_tol: 1e-10, ..QuadConfig::default() };
        let tight = QuadConfig { abs_tol: 5e-11, ..QuadConfig::default() };
        let f = |x: f64| Complex64::new(x.powi(3) * sech(x) * (0.7 * x).cos(), 0.0);
        let a = integrate_halfline(f, 3, &loose).unwrap();
        let b = integrate_halfline(f, 3, &tight).unwrap();
        assert!((a - b).norm() < 1e-10);
    }

    #[test]
    fn convergence_error_on_tiny_depth() {
        let cfg = QuadConfig { abs_tol: 1e-13, max_depth: 1, ..QuadConfig::default() };
        let res = integrate_halfline(|x| Complex64::new(sech(x * 17.3), 0.0), 0, &cfg);
        assert!(matches!(res, Err(Error::Convergence { .. })));
    }

    #[test]
    fn cos_identity_easy_cases() {
        let cfg = QuadConfig::default();
        let r = check_cos_identity(0, 0.0, &cfg, 1e-10).unwrap();
        assert!(r.pass, "residual {}", r.residual);
        assert!((r.lhs.re - PI / 2.0).abs() < 1e-10);
        // n=1, a=0: cos(x·0 + π/2) = 0 pointwise
        let r = check_cos_identity(1, 0.0, &cfg, 1e-10).unwrap();
        assert!(r.lhs.norm() < 1e-12 && r.rhs.norm() < 1e-12);
        let r = check_cos_identity(2, 0.5, &cfg, 1e-8).unwrap();
        assert!(r.pass, "residual {}", r.residual);
    }

    #[test]
    fn sin_identity_cases() {
        let cfg = QuadConfig::default();
        let r = check_sin_identity(0, 0.0, &cfg, 1e-10).unwrap();
        assert!(r.lhs.norm() < 1e-12 && r.rhs.norm() < 1e-10, "{:?}", r);
        let r = check_sin_identity(0, 1.0, &cfg, 1e-8).unwrap();
        assert!(r.pass, "residual {}", r.residual);
        let r = check_sin_identity(1, 0.5, &cfg, 1e-7).unwrap();
        assert!(r.pass, "residual {}", r.residual);
    }

    #[test]
    fn exp_identity_cases() {
        let cfg = QuadConfig::default();
        let r = check_exp_identity(0, 0.0, &cfg, 1e-10).unwrap();
        assert!(r.pass && (r.lhs.re - PI / 2.0).abs() < 1e-10);
        let r = check_exp_identity(0, 0.5, &cfg, 1e-8).unwrap();
        assert!(r.pass, "residual {}", r.residual);
        let r = check_exp_identity(2, 1.0, &cfg, 1e-7).unwrap();
        assert!(r.pass, "residual {}", r.residual);
    }

    #[test]
    fn exp_decomposes_into_cos_and_sin() {
        let cfg = QuadConfig::default();
        for n in 0..=4u32 {
            for &a in &[0.0, 0.5, 1.0] {
                let cos = check_cos_identity(n, a, &cfg, 1e-8).unwrap();
                let sin = check_sin_identity(n, a, &cfg, 1e-7).unwrap();
                let exp = check_exp_identity(n, a, &cfg, 1e-7).unwrap();
                // x^n e^{i(ax + πn/2)} = i^n x^n e^{iax}
                let rotated = i_pow(n) * exp.lhs;
                assert!((rotated.re - cos.lhs.re).abs() < 1e-10, "n={} a={}", n, a);
                assert!((rotated.im - sin.lhs.re).abs() < 1e-10, "n={} a={}", n, a);
            }
        }
    }

    #[test]
    fn cos_identity_even_symmetry_in_a() {
        let cfg = QuadConfig::default();
        for n in [0u32, 2, 4] {
            for &a in &[0.5, 1.0] {
                let plus = check_cos_identity(n, a, &cfg, 1e-8).unwrap();
                let minus = check_cos_identity(n, -a, &cfg, 1e-8).unwrap();
                assert!((plus.lhs - minus.lhs).norm() < 1e-10, "n={} a={}", n, a);
                assert!((plus.rhs - minus.rhs).norm() < 1e-10, "n={} a={}", n, a);
            }
        }
    }

    #[test]
    fn hoffman_closed_forms() {
        let cfg = QuadConfig::default();
        // n=0, a=1/2, plus variant: π csc(π/2) Q_0(0) = π
        let r = check_hoffman_integral(HoffmanKind::ExpPlusOne, 0, 0.5, &cfg, 1e-9).unwrap();
        assert!(r.pass && (r.rhs.re - PI).abs() < 1e-14, "{:?}", r);
        // n=1, a=1/2, minus variant: π² P_1(0) = π²
        let r = check_hoffman_integral(HoffmanKind::ExpMinusOne, 1, 0.5, &cfg, 1e-8).unwrap();
        assert!(r.pass && (r.rhs.re - PI * PI).abs() < 1e-12, "{:?}", r);
        let r = check_hoffman_integral(HoffmanKind::ExpPlusOne, 2, 1.0 / 3.0, &cfg, 1e-7).unwrap();
        assert!(r.pass, "residual {}", r.residual);
    }

    #[test]
    fn hoffman_domain_checks() {
        let cfg = QuadConfig::default();
        assert!(check_hoffman_integral(HoffmanKind::ExpMinusOne, 0, 0.5, &cfg, 1e-7).is_err());
        assert!(check_hoffman_integral(HoffmanKind::ExpPlusOne, 0, 1.5, &cfg, 1e-7).is_err());
    }

    #[test]
    fn report_residual_floor() {
        let r = CheckReport::new(
            "t",
            &[],
            Complex64::new(1e-12, 0.0),
            Complex64::new(0.0, 0.0),
            1e-9,
        );
        assert!(r.pass && r.residual <= 1e-9);
    }
}
