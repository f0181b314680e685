//! Exact integer sequences: Stirling numbers of the second kind, Bernoulli,
//! Euler and tangent numbers.
//!
//! The Bernoulli convention here is `B_1 = -1/2`; it is forced by the Euler
//! number identity `E_0 = 2(1-2)B_1 = 1` and matches the generating function
//! `x/(e^x - 1)`.

use std::sync::Mutex;
use std::sync::OnceLock;

use num::bigint::BigInt;
use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Triangle of Stirling numbers of the second kind, `rows[n][k] = {n k}`,
/// grown on demand by the additive recurrence
/// `{n k} = k {n-1 k} + {n-1 k-1}`.
#[derive(Debug, Clone)]
pub struct StirlingTriangle {
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTriangle {
    pub fn new() -> Self {
        StirlingTriangle { rows: vec![vec![BigInt::one()]] }
    }

    fn extend_to(&mut self, n: usize) {
        while self.rows.len() <= n {
            let prev = self.rows.last().unwrap();
            let m = self.rows.len();
            let mut row = vec![BigInt::zero(); m + 1];
            for k in 1..=m {
                let carry = if k < prev.len() { &prev[k] * k } else { BigInt::zero() };
                row[k] = carry + &prev[k - 1];
            }
            self.rows.push(row);
        }
    }

    pub fn get(&mut self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        self.extend_to(n);
        self.rows[n][k].clone()
    }

    pub fn row(&mut self, n: usize) -> Vec<BigInt> {
        self.extend_to(n);
        self.rows[n].clone()
    }
}

impl Default for StirlingTriangle {
    fn default() -> Self {
        Self::new()
    }
}

fn shared_triangle() -> &'static Mutex<StirlingTriangle> {
    static CACHE: OnceLock<Mutex<StirlingTriangle>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(StirlingTriangle::new()))
}

/// `{n k}`, the number of partitions of an n-set into k nonempty blocks.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    shared_triangle().lock().unwrap().get(n, k)
}

/// Row n of the Stirling triangle, `{n 0} .. {n n}`.
pub fn stirling2_row(n: usize) -> Vec<BigInt> {
    shared_triangle().lock().unwrap().row(n)
}

/// Binomial coefficient C(n, k) as an exact integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

fn bernoulli_cache() -> &'static Mutex<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Rational::one()]))
}

/// Bernoulli number B_n with `B_1 = -1/2`, from the defining recurrence
/// `sum_{j=0}^{n} C(n+1, j) B_j = 0` seeded with `B_0 = 1`.
pub fn bernoulli(n: usize) -> Rational {
    let mut cache = bernoulli_cache().lock().unwrap();
    while cache.len() <= n {
        let m = cache.len();
        let mut sum = Rational::zero();
        for (j, b) in cache.iter().enumerate() {
            sum += &(&Rational::from_bigint(binomial(m + 1, j)) * b);
        }
        let value = -(sum / Rational::from_bigint(BigInt::from(m as i64 + 1)));
        cache.push(value);
    }
    cache[n].clone()
}

/// Euler number E_m from
/// `E_m = (1/(m+1)) sum_{k=1}^{m+1} C(m+1, k) 2^k (1 - 2^k) B_k`;
/// integrality is asserted, a fractional result means a transcription bug.
pub fn euler_number(m: usize) -> Result<Rational> {
    let mut sum = Rational::zero();
    for k in 1..=m + 1 {
        let two_k = Rational::from_bigint(BigInt::one() << k);
        let factor = &two_k * &(&Rational::one() - &two_k);
        sum += &(&(&Rational::from_bigint(binomial(m + 1, k)) * &factor) * &bernoulli(k));
    }
    let e = sum / Rational::from(m as i64 + 1);
    if !e.is_integer() {
        return Err(Error::NonIntegerResult(format!("E_{} = {}", m, e)));
    }
    Ok(e)
}

/// Tangent number `P_{2k-1}(0) = ((-1)^{k+1} / 2k) 2^{2k} (2^{2k} - 1) B_{2k}`,
/// a positive integer for every k >= 1.
pub fn tangent_number(k: usize) -> Result<Rational> {
    assert!(k >= 1, "tangent numbers are indexed from 1");
    let sign = if k % 2 == 1 { Rational::one() } else { -Rational::one() };
    let four_k = Rational::from_bigint(BigInt::one() << (2 * k));
    let t = &(&sign / &Rational::from(2 * k as i64))
        * &(&(&four_k * &(&four_k - &Rational::one())) * &bernoulli(2 * k));
    if !t.is_integer() {
        return Err(Error::NonIntegerResult(format!("T_{} = {}", k, t)));
    }
    Ok(t)
}

/// `C_m(0) = ((-1)^m / (m+1)) 2^{m+1} (1 - 2^{m+1}) B_{m+1}`, the m-th
/// Maclaurin derivative of tanh at 0. Zero for even m.
pub fn tanh_center_value(m: usize) -> Rational {
    if m == 0 {
        return Rational::zero();
    }
    let sign = if m % 2 == 0 { Rational::one() } else { -Rational::one() };
    let two_m1 = Rational::from_bigint(BigInt::one() << (m + 1));
    &(&sign / &Rational::from(m as i64 + 1))
        * &(&(&two_m1 * &(&Rational::one() - &two_m1)) * &bernoulli(m + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force {n k} by enumerating set partitions: assign each of the n
    /// elements to a block index, count surjective assignments up to block
    /// relabeling via restricted growth strings.
    fn stirling2_by_enumeration(n: usize, k: usize) -> u64 {
        fn go(remaining: usize, blocks_used: usize, k: usize) -> u64 {
            if remaining == 0 {
                return if blocks_used == k { 1 } else { 0 };
            }
            let mut total = blocks_used as u64 * go(remaining - 1, blocks_used, k);
            if blocks_used < k {
                total += go(remaining - 1, blocks_used + 1, k);
            }
            total
        }
        if n == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        go(n, 0, k)
    }

    #[test]
    fn stirling_matches_partition_enumeration() {
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling2(4, 2), BigInt::from(stirling2_by_enumeration(4, 2)));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(5, 3), BigInt::from(25));
        for n in 0..=9 {
            for k in 0..=n + 1 {
                assert_eq!(
                    stirling2(n, k),
                    BigInt::from(stirling2_by_enumeration(n, k)),
                    "{{{} {}}}",
                    n,
                    k
                );
            }
        }
    }

    #[test]
    fn triangle_boundaries() {
        for n in 1..=12 {
            assert_eq!(stirling2(n, 0), BigInt::zero());
            assert_eq!(stirling2(n, n), BigInt::one());
            assert_eq!(stirling2(n, n + 3), BigInt::zero());
        }
    }

    #[test]
    fn row_sums_are_bell_numbers() {
        // Bell numbers by the independent Bell-triangle recurrence.
        let mut bell = vec![BigInt::one()];
        let mut row = vec![BigInt::one()];
        for _ in 1..=12 {
            let mut next = vec![row.last().unwrap().clone()];
            for v in &row {
                let last = next.last().unwrap().clone();
                next.push(last + v);
            }
            bell.push(next[0].clone());
            row = next;
        }
        for n in 0..=12 {
            let sum: BigInt = stirling2_row(n).into_iter().sum();
            assert_eq!(sum, bell[n], "row {}", n);
        }
    }

    #[test]
    fn bernoulli_small_values() {
        assert_eq!(bernoulli(0), Rational::one());
        assert_eq!(bernoulli(1), Rational::new(-1, 2));
        assert_eq!(bernoulli(2), Rational::new(1, 6));
        assert_eq!(bernoulli(3), Rational::zero());
        assert_eq!(bernoulli(4), Rational::new(-1, 30));
        assert_eq!(bernoulli(12), Rational::new(-691, 2730));
        for n in (3..=25).step_by(2) {
            assert!(bernoulli(n).is_zero(), "B_{}", n);
        }
    }

    #[test]
    fn euler_numbers() {
        let expect: [i64; 9] = [1, 0, -1, 0, 5, 0, -61, 0, 1385];
        for (m, &e) in expect.iter().enumerate() {
            assert_eq!(euler_number(m).unwrap(), Rational::from(e), "E_{}", m);
        }
        for m in (1..=25).step_by(2) {
            assert!(euler_number(m).unwrap().is_zero(), "E_{}", m);
        }
    }

    #[test]
    fn tangent_numbers() {
        let expect: [i64; 5] = [1, 2, 16, 272, 7936];
        for (i, &t) in expect.iter().enumerate() {
            assert_eq!(tangent_number(i + 1).unwrap(), Rational::from(t), "T_{}", i + 1);
        }
    }

    #[test]
    fn tanh_center_values() {
        assert_eq!(tanh_center_value(1), Rational::one());
        assert_eq!(tanh_center_value(2), Rational::zero());
        assert_eq!(tanh_center_value(3), Rational::from(-2));
        assert_eq!(tanh_center_value(5), Rational::from(16));
    }

    #[test]
    fn stirling_bernoulli_alternating_sum() {
        // sum_k (-1)^k {m k} k!/2^k = (2/(m+1)) (1 - 2^{m+1}) B_{m+1}
        for m in 0..=25 {
            let mut lhs = Rational::zero();
            let mut k_fact = BigInt::one();
            for k in 0..=m {
                if k > 0 {
                    k_fact *= k;
                }
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let term = Rational::from_bigints(
                    stirling2(m, k) * &k_fact * sign,
                    BigInt::one() << k,
                );
                lhs += &term;
            }
            let two_m1 = Rational::from_bigint(BigInt::one() << (m + 1));
            let rhs = &(&(&Rational::from(2) / &Rational::from(m as i64 + 1))
                * &(&Rational::one() - &two_m1))
                * &bernoulli(m + 1);
            assert_eq!(lhs, rhs, "m = {}", m);
        }
    }

    #[test]
    fn tangent_equals_signed_tanh_center() {
        // P_{2k-1}(0) = (-1)^{k+1} C_{2k-1}(0)
        for k in 1..=12 {
            let sign = if k % 2 == 1 { Rational::one() } else { -Rational::one() };
            assert_eq!(
                tangent_number(k).unwrap(),
                &sign * &tanh_center_value(2 * k - 1),
                "k = {}",
                k
            );
        }
    }

    /// C_k(0) through the Stirling closed form
    /// `(-2)^k sum_j (-1)^j {k j} j!/2^j`; at k = 0 this evaluates to 1,
    /// the value the middle-form Euler identity needs for its k = 0 term.
    fn center_via_stirling_sum(k: usize) -> Rational {
        let mut sum = Rational::zero();
        let mut j_fact = BigInt::one();
        for j in 0..=k {
            if j > 0 {
                j_fact *= j;
            }
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sum += &Rational::from_bigints(stirling2(k, j) * &j_fact * sign, BigInt::one() << j);
        }
        let scale = if k % 2 == 0 { 1 } else { -1 };
        &Rational::from_bigints(BigInt::from(scale) << k, BigInt::one()) * &sum
    }

    #[test]
    fn stirling_sum_matches_bernoulli_center_form() {
        for k in 1..=20 {
            assert_eq!(center_via_stirling_sum(k), tanh_center_value(k), "k = {}", k);
        }
    }

    #[test]
    fn euler_from_tanh_centers() {
        // E_m = sum_k C(m,k) (-1)^k C_k(0), with the k = 0 term taken from
        // the Stirling closed form (value 1).
        for m in 0..=20 {
            let mut sum = Rational::zero();
            for k in 0..=m {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                sum += &(&(&Rational::from_bigint(binomial(m, k)) * &Rational::from(sign))
                    * &center_via_stirling_sum(k));
            }
            assert_eq!(sum, euler_number(m).unwrap(), "m = {}", m);
        }
    }
}
