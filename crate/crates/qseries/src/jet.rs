//! Truncated Taylor expansions in `(2πiz)`.
//!
//! A jet of order `L` represents `Σ_{i≤L} c_i (2πiz)^i`. Internally the
//! coefficients are stored *scaled*: `coeffs[i] = i! · c_i`. With that
//! scaling the jet of `ζ^m = e^{2πimz}` is simply `(m^0, m^1, …, m^L)`,
//! products stay in the integers, and the order-`ℓ` moment is read off as
//! `ℓ! · c_ℓ = coeffs[ℓ]` with no division at all.

use crate::ring::Coeff;

/// Truncated Taylor expansion in `(2πiz)` with scaled coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct Jet<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Jet<C> {
    /// The zero jet of order `order`.
    pub fn zero(order: usize) -> Self {
        Jet {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    /// The constant-one jet of order `order`.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[0] = C::one();
        Jet { coeffs }
    }

    /// Constant jet with value `c`.
    pub fn constant(c: C, order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[0] = c;
        Jet { coeffs }
    }

    /// The jet of `ζ^m = e^{2πimz}` for integer `m`: scaled coefficients `m^i`.
    pub fn zeta_pow(m: i64, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut p = C::one();
        let base = C::from_i64(m);
        for i in 0..=order {
            if i > 0 {
                p = p.mul(&base);
            }
            coeffs.push(p.clone());
        }
        Jet { coeffs }
    }

    /// The jet of `e^{2πi·s·z}` for an arbitrary exact exponent `s`
    /// (half-integers appear via `ζ^{±1/2}`): scaled coefficients `s^i`.
    pub fn exp_scaled(s: &C, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut p = C::one();
        for i in 0..=order {
            if i > 0 {
                p = p.mul(s);
            }
            coeffs.push(p.clone());
        }
        Jet { coeffs }
    }

    pub fn from_scaled_coeffs(coeffs: Vec<C>) -> Self {
        Jet { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Scaled coefficient `i! · c_i`; for moment extraction this is the
    /// `ℓ`-th moment directly.
    pub fn scaled(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    pub fn scaled_coeffs(&self) -> &[C] {
        &self.coeffs
    }
}

const BINOMIAL_MAX: usize = 35;

fn binomial(m: usize, i: usize) -> i64 {
    debug_assert!(m <= BINOMIAL_MAX);
    let mut b: i64 = 1;
    for j in 0..i.min(m - i) {
        b = b * (m - j) as i64 / (j + 1) as i64;
    }
    b
}

impl<C: Coeff> Coeff for Jet<C> {
    fn zero() -> Self {
        panic!("jet order is dynamic; use Jet::zero(order)")
    }
    fn one() -> Self {
        panic!("jet order is dynamic; use Jet::one(order)")
    }
    fn from_i64(_: i64) -> Self {
        panic!("jet order is dynamic; use Jet::constant")
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn neg(&self) -> Self {
        Jet {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.order(), rhs.order());
        Jet {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.order(), rhs.order());
        Jet {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }
    /// Product of jets truncates at the common order; in scaled form this is
    /// the binomial convolution `(ab)_m = Σ_i C(m,i) a_i b_{m-i}`.
    fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.order(), rhs.order());
        let l = self.order();
        let mut out = vec![C::zero(); l + 1];
        for m in 0..=l {
            for i in 0..=m {
                let a = &self.coeffs[i];
                let b = &rhs.coeffs[m - i];
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let bin = binomial(m, i);
                if bin == 1 {
                    out[m].add_mul_assign(a, b);
                } else {
                    out[m].add_mul_assign(&a.mul_i64(bin), b);
                }
            }
        }
        Jet { coeffs: out }
    }
    fn mul_i64(&self, k: i64) -> Self {
        Jet {
            coeffs: self.coeffs.iter().map(|c| c.mul_i64(k)).collect(),
        }
    }
    fn add_assign(&mut self, rhs: &Self) {
        debug_assert_eq!(self.order(), rhs.order());
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            a.add_assign(b);
        }
    }
    fn sub_assign(&mut self, rhs: &Self) {
        debug_assert_eq!(self.order(), rhs.order());
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            a.sub_assign(b);
        }
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let prod = a.mul(b);
        self.add_assign(&prod);
    }
    fn zero_like(&self) -> Self {
        Jet::zero(self.order())
    }
    fn one_like(&self) -> Self {
        Jet::one(self.order())
    }
    /// Inverse of a jet with unit constant term: Neumann series against the
    /// nilpotent part, truncated at the jet order.
    fn inv(&self) -> Option<Self> {
        let l = self.order();
        let c0 = self.coeffs[0].inv()?;
        // n = 1 - c0^{-1} * self has zero constant term; inverse is
        // c0^{-1} * (1 + n + n^2 + ... + n^L).
        let mut n = Jet::constant(c0.clone(), l).mul(self);
        n = Jet::one(l).sub(&n);
        let mut acc = Jet::one(l);
        let mut p = Jet::one(l);
        for _ in 0..l {
            p = p.mul(&n);
            acc.add_assign(&p);
        }
        Some(Jet::constant(c0, l).mul(&acc))
    }
}
