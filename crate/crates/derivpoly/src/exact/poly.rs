use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{GaussRational, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial over [`GaussRational`], ascending degree.
///
/// The coefficient list is always trimmed: the last stored coefficient is
/// nonzero, and the zero polynomial is the empty list (its degree is `None`).
///
/// ```
/// use derivpoly::exact::{GaussRational, Poly};
/// // (z + 1)(z - 1) = z^2 - 1
/// let p = Poly::from_i64(&[1, 1]);
/// let q = Poly::from_i64(&[-1, 1]);
/// assert_eq!(&p * &q, Poly::from_i64(&[-1, 0, 1]));
/// assert_eq!(Poly::zero().degree(), None);
/// ```
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<GaussRational>,
}

impl Poly {
    /// Builds a polynomial, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<GaussRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(GaussRational::one())
    }

    /// The monomial z.
    pub fn x() -> Self {
        Poly::new(vec![GaussRational::zero(), GaussRational::one()])
    }

    pub fn constant(c: GaussRational) -> Self {
        Poly::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| GaussRational::from_i64(c)).collect())
    }

    pub fn from_rationals(coeffs: Vec<Rational>) -> Self {
        Poly::new(coeffs.into_iter().map(GaussRational::real).collect())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of z^j (zero beyond the stored length).
    pub fn coeff(&self, j: usize) -> GaussRational {
        self.coeffs.get(j).cloned().unwrap_or_else(GaussRational::zero)
    }

    pub fn coeffs(&self) -> &[GaussRational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Formal derivative d/dz.
    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * &GaussRational::from_i64(j as i64))
                .collect(),
        )
    }

    /// Returns p(alpha z + beta), fully expanded.
    pub fn compose_affine(&self, alpha: &GaussRational, beta: &GaussRational) -> Self {
        let inner = Poly::new(vec![beta.clone(), alpha.clone()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, z: &GaussRational) -> GaussRational {
        let mut acc = GaussRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + c;
        }
        acc
    }

    /// Horner evaluation of the real part in floating point.
    ///
    /// Intended for polynomials that have already passed [`Poly::assert_real`].
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.re.to_f64();
        }
        acc
    }

    /// Fails with `ComplexResidue` unless every coefficient is real; on
    /// success returns the real coefficient list.
    pub fn assert_real(&self) -> Result<Vec<Rational>> {
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_real() {
                return Err(Error::ComplexResidue { degree: j, value: c.to_string() });
            }
        }
        Ok(self.coeffs.iter().map(|c| c.re.clone()).collect())
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|j| &self.coeff(j) + &rhs.coeff(j)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|j| &self.coeff(j) - &rhs.coeff(j)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![GaussRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a * b;
                out[i + j] = &out[i + j] + &prod;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| format!("({})z^{}", c, j))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_cancellation() {
        // (1 + z) + (-1) = z
        let p = Poly::from_i64(&[1, 1]);
        let q = Poly::from_i64(&[-1]);
        assert_eq!(&p + &q, Poly::x());
    }

    #[test]
    fn add_identity_and_disjoint_support() {
        let p = Poly::from_i64(&[3, 0, 2]);
        assert_eq!(&Poly::zero() + &p, p);
        let a = Poly::from_i64(&[1, 0, 1]);
        let b = Poly::from_i64(&[0, 2]);
        assert_eq!(&a + &b, Poly::from_i64(&[1, 2, 1]));
    }

    #[test]
    fn mul_basic() {
        let p = Poly::from_i64(&[1, 1]);
        let q = Poly::from_i64(&[-1, 1]);
        assert_eq!(&p * &q, Poly::from_i64(&[-1, 0, 1]));
        assert_eq!(&p * &Poly::zero(), Poly::zero());
    }

    #[test]
    fn mul_conjugate_complex_factors() {
        // (1 + iz)(1 - iz) = 1 + z^2
        let i = GaussRational::i();
        let p = Poly::new(vec![GaussRational::one(), i.clone()]);
        let q = Poly::new(vec![GaussRational::one(), -&i]);
        assert_eq!(&p * &q, Poly::from_i64(&[1, 0, 1]));
    }

    #[test]
    fn degree_law() {
        let p = Poly::from_i64(&[1, 2, 3]);
        let q = Poly::from_i64(&[0, 0, 0, 5]);
        assert_eq!((&p * &q).degree(), Some(5));
    }

    #[test]
    fn derivative_cases() {
        assert_eq!(Poly::from_i64(&[0, 0, 1]).derivative(), Poly::from_i64(&[0, 2]));
        assert_eq!(Poly::from_i64(&[7]).derivative(), Poly::zero());
        // C_2 = 2z^3 - 2z has derivative 6z^2 - 2
        assert_eq!(
            Poly::from_i64(&[0, -2, 0, 2]).derivative(),
            Poly::from_i64(&[-2, 0, 6])
        );
    }

    #[test]
    fn compose_affine_cases() {
        let half = GaussRational::real(Rational::new(1, 2));
        let neg_half = GaussRational::real(Rational::new(-1, 2));
        // x |-> (z - 1)/2
        let p = Poly::x().compose_affine(&half, &neg_half);
        assert_eq!(
            p,
            Poly::new(vec![neg_half.clone(), half.clone()])
        );
        // x^2 under x |-> iz gives -z^2
        let sq = Poly::from_i64(&[0, 0, 1]);
        assert_eq!(
            sq.compose_affine(&GaussRational::i(), &GaussRational::zero()),
            Poly::from_i64(&[0, 0, -1])
        );
        // x + 2x^2 under x |-> (z-1)/2: hand-expanded (z-1)/2 + (z-1)^2/2
        let p = Poly::from_i64(&[0, 1, 2]);
        let composed = p.compose_affine(&half, &neg_half);
        let zm1 = Poly::from_i64(&[-1, 1]);
        let expected = &(&zm1 * &Poly::constant(half.clone()))
            + &(&(&zm1 * &zm1) * &Poly::constant(half.clone()));
        assert_eq!(composed, expected);
    }

    #[test]
    fn eval_cases() {
        let p = Poly::from_i64(&[1, 0, -1]); // 1 - z^2
        assert_eq!(p.eval(&GaussRational::one()), GaussRational::zero());
        let q = Poly::from_i64(&[1, 0, 1]); // 1 + z^2
        assert_eq!(q.eval(&GaussRational::i()), GaussRational::zero());
        let c2 = Poly::from_i64(&[0, -2, 0, 2]);
        assert_eq!(c2.eval(&GaussRational::from_i64(2)), GaussRational::from_i64(12));
    }

    #[test]
    fn assert_real_rejects_imaginary_residue() {
        let p = Poly::new(vec![GaussRational::one(), GaussRational::i()]);
        assert!(p.assert_real().is_err());
        assert!(Poly::from_i64(&[1, 2]).assert_real().is_ok());
    }
}
