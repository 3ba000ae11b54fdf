//! Exact Bernoulli numbers `B_k` and half-argument values `B_k(1/2)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Cache of `B_k` (convention `B_1 = -1/2`) and `B_k(1/2) = (2^{1-k} - 1) B_k`.
#[derive(Clone, Debug)]
pub struct BernoulliCache {
    values: Vec<BigRational>,
}

impl BernoulliCache {
    /// Build `B_0..=B_max_k` by the defining recurrence
    /// `Σ_{j=0}^{n} C(n+1, j) B_j = 0`.
    pub fn new(max_k: usize) -> Self {
        let mut values: Vec<BigRational> = Vec::with_capacity(max_k + 1);
        values.push(BigRational::one());
        for n in 1..=max_k {
            let mut acc = BigRational::zero();
            for (j, b) in values.iter().enumerate() {
                acc += b * BigRational::from_integer(binomial(n + 1, j));
            }
            let divisor = BigRational::from_integer(BigInt::from(n as i64 + 1));
            values.push(-acc / divisor);
        }
        BernoulliCache { values }
    }

    pub fn max_k(&self) -> usize {
        self.values.len() - 1
    }

    /// `B_k` as an exact rational.
    pub fn b(&self, k: usize) -> &BigRational {
        &self.values[k]
    }

    /// `B_k(1/2) = (2^{1-k} - 1) B_k`.
    pub fn b_half(&self, k: usize) -> BigRational {
        let two_pow = if k == 0 {
            BigRational::from_integer(BigInt::from(2))
        } else {
            BigRational::new(BigInt::one(), BigInt::from(2).pow(k as u32 - 1))
        };
        (two_pow - BigRational::one()) * &self.values[k]
    }

    pub fn b_f64(&self, k: usize) -> f64 {
        rational_to_f64(&self.values[k])
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    let num = r.numer();
    let den = r.denom();
    // exact-ish conversion through strings is wasteful; do scaled division
    let fnum = bigint_to_f64(num);
    let fden = bigint_to_f64(den);
    fnum / fden
}

fn bigint_to_f64(x: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::INFINITY)
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut b = BigInt::one();
    for j in 0..k.min(n - k) {
        b = b * BigInt::from((n - j) as u64) / BigInt::from((j + 1) as u64);
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn first_values() {
        let c = BernoulliCache::new(12);
        assert_eq!(c.b(0), &rat(1, 1));
        assert_eq!(c.b(1), &rat(-1, 2));
        assert_eq!(c.b(2), &rat(1, 6));
        assert_eq!(c.b(4), &rat(-1, 30));
        assert_eq!(c.b(6), &rat(1, 42));
        assert_eq!(c.b(8), &rat(-1, 30));
        assert_eq!(c.b(10), &rat(5, 66));
        assert_eq!(c.b(12), &rat(-691, 2730));
    }

    #[test]
    fn odd_values_vanish() {
        let c = BernoulliCache::new(15);
        for k in (3..=15).step_by(2) {
            assert!(c.b(k).is_zero(), "B_{k}");
        }
    }

    #[test]
    fn half_values() {
        let c = BernoulliCache::new(6);
        assert_eq!(c.b_half(0), rat(1, 1));
        assert_eq!(c.b_half(2), rat(-1, 12)); // B_2(1/2) = -1/12
        assert_eq!(c.b_half(4), rat(7, 240));
        assert_eq!(c.b_half(6), rat(-31, 1344));
    }
}
