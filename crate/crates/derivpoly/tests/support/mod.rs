//! Independent oracles shared by the integration suites. Nothing here may
//! call into the code paths it is used to check: series are divided from
//! scratch, integrals are summed termwise in closed form.

use derivpoly::exact::Rational;
use num::complex::Complex64;

/// Maclaurin coefficients of sin x up to x^order.
pub fn sin_series(order: usize) -> Vec<Rational> {
    let mut coeffs = vec![Rational::zero(); order + 1];
    let mut fact = Rational::one();
    for j in 1..=order {
        fact *= &Rational::from(j as i64);
        if j % 2 == 1 {
            let sign = if j % 4 == 1 { Rational::one() } else { -Rational::one() };
            coeffs[j] = &sign / &fact;
        }
    }
    coeffs
}

/// Maclaurin coefficients of cos x up to x^order.
pub fn cos_series(order: usize) -> Vec<Rational> {
    let mut coeffs = vec![Rational::zero(); order + 1];
    coeffs[0] = Rational::one();
    let mut fact = Rational::one();
    for j in 1..=order {
        fact *= &Rational::from(j as i64);
        if j % 2 == 0 {
            let sign = if j % 4 == 0 { Rational::one() } else { -Rational::one() };
            coeffs[j] = &sign / &fact;
        }
    }
    coeffs
}

/// Maclaurin coefficients of cosh x up to x^order.
pub fn cosh_series(order: usize) -> Vec<Rational> {
    let mut coeffs = vec![Rational::zero(); order + 1];
    coeffs[0] = Rational::one();
    let mut fact = Rational::one();
    for j in 1..=order {
        fact *= &Rational::from(j as i64);
        if j % 2 == 0 {
            coeffs[j] = Rational::one() / fact.clone();
        }
    }
    coeffs
}

/// Truncated power series quotient num/den, requires den[0] != 0.
pub fn series_divide(num: &[Rational], den: &[Rational], order: usize) -> Vec<Rational> {
    assert!(!den[0].is_zero());
    let mut out = vec![Rational::zero(); order + 1];
    for j in 0..=order {
        let mut acc = num.get(j).cloned().unwrap_or_else(Rational::zero);
        for k in 1..=j {
            if k < den.len() && !den[k].is_zero() {
                acc -= &(&den[k] * &out[j - k]);
            }
        }
        out[j] = &acc / &den[0];
    }
    out
}

/// Tangent numbers by series division: tan = sin/cos, then
/// `T_k = (2k-1)! · [x^{2k-1}] tan x`.
pub fn tangent_numbers_by_series(k_max: usize) -> Vec<Rational> {
    let order = 2 * k_max - 1;
    let tan = series_divide(&sin_series(order), &cos_series(order), order);
    let mut fact = Rational::one();
    let mut out = Vec::new();
    for j in 1..=order {
        fact *= &Rational::from(j as i64);
        if j % 2 == 1 {
            out.push(&tan[j] * &fact);
        }
    }
    out
}

/// Euler numbers by series reciprocal: sech = 1/cosh, `E_m = m! · [x^m] sech x`.
pub fn euler_numbers_by_series(m_max: usize) -> Vec<Rational> {
    let one = vec![Rational::one()];
    let sech = series_divide(&one, &cosh_series(m_max), m_max);
    let mut fact = Rational::one();
    let mut out = vec![sech[0].clone()];
    for m in 1..=m_max {
        fact *= &Rational::from(m as i64);
        out.push(&sech[m] * &fact);
    }
    out
}

/// Sums the alternating series `sum_{k>=0} (-1)^k t(k)` by direct summation
/// followed by repeated averaging of partial sums (each averaging level
/// halves the remaining alternating tail).
pub fn alternating_sum(t: impl Fn(u64) -> Complex64) -> Complex64 {
    const DIRECT: u64 = 100;
    const LEVELS: usize = 48;
    let mut head = Complex64::new(0.0, 0.0);
    let mut sign = 1.0;
    for k in 0..DIRECT {
        head += sign * t(k);
        sign = -sign;
    }
    // partial sums of the tail, starting at k = DIRECT
    let mut partials = Vec::with_capacity(LEVELS + 1);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut s = sign;
    for k in DIRECT..DIRECT + LEVELS as u64 + 1 {
        acc += s * t(k);
        s = -s;
        partials.push(acc);
    }
    while partials.len() > 1 {
        partials = partials.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    }
    head + partials[0]
}

/// Termwise closed form of `∫_0^∞ x^n e^{iax} sech x dx` via
/// `sech x = 2 sum_k (-1)^k e^{-(2k+1)x}` and
/// `∫_0^∞ x^n e^{-(λ-ia)x} dx = n!/(λ-ia)^{n+1}`.
pub fn exp_integral_by_series(n: u32, a: f64) -> Complex64 {
    let mut n_fact = 1.0;
    for j in 2..=n {
        n_fact *= j as f64;
    }
    2.0 * alternating_sum(|k| {
        let lambda = (2 * k + 1) as f64;
        n_fact * Complex64::new(lambda, -a).powi(-(n as i32) - 1)
    })
}
