//! The combinatorial constants
//! `κ(a,b,c) = (2(a+b+c))! (-1)^{a+c} B_{2c}(1/2) / (a!(2b+1)!(2c)! π^a 4^{a+b})`
//! populating the asymptotic series, kept exact as `rational · π^{-a}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::bernoulli::{rational_to_f64, BernoulliCache};

/// `κ(a,b,c)` with the power of π split off: value = `rational_part · π^{-pi_power}`.
#[derive(Clone, PartialEq, Debug)]
pub struct KappaValue {
    pub rational_part: BigRational,
    pub pi_power: u32,
}

impl KappaValue {
    pub fn as_f64(&self) -> f64 {
        rational_to_f64(&self.rational_part) / std::f64::consts::PI.powi(self.pi_power as i32)
    }
}

fn factorial(n: usize) -> BigInt {
    let mut f = BigInt::one();
    for j in 2..=n {
        f *= BigInt::from(j as u64);
    }
    f
}

/// Exact `κ(a,b,c)`; the cache must hold `B_{2c}`.
pub fn kappa(a: usize, b: usize, c: usize, cache: &BernoulliCache) -> KappaValue {
    let r = a + b + c;
    let numer = factorial(2 * r)
        * if (a + c) % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
    let denom = factorial(a) * factorial(2 * b + 1) * factorial(2 * c) * BigInt::from(4u64).pow((a + b) as u32);
    let rational_part = BigRational::new(numer, denom) * cache.b_half(2 * c);
    KappaValue {
        rational_part,
        pi_power: a as u32,
    }
}
