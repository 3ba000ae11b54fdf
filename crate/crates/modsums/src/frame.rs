//! Modular `(h, k)` frames and the Durfee refinement data
//! `g = gcd(k,6)`, `K = k/g`, `H = 6h/g`, `h = gμ + ϱ`, `α_{H,K} = K/2 - H/6`.

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use thiserror::Error;

use crate::eta::{eta_multiplier, UnimodularMatrix};

#[derive(Debug, Error)]
pub enum ModSumError {
    #[error("h = {0} and k = {1} are not coprime")]
    NotCoprime(i64, i64),
    #[error("need 0 <= h < k, got h = {0}, k = {1}")]
    RangeError(i64, i64),
    #[error("rho = {0} is not an admissible residue for gcd(k,6) = {1}")]
    InvalidRho(i64, i64),
}

/// `[-h]_k`: the unique `0 ≤ x < k` with `-h·x ≡ 1 (mod k)` (0 for k = 1).
pub fn neg_inverse(h: i64, k: i64) -> Result<i64, ModSumError> {
    if k < 1 {
        return Err(ModSumError::RangeError(h, k));
    }
    if h.gcd(&k) != 1 {
        return Err(ModSumError::NotCoprime(h, k));
    }
    if k == 1 {
        return Ok(0);
    }
    // extended gcd: find inverse of (-h) mod k
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (k, (-h).rem_euclid(k));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    Ok(t.rem_euclid(k))
}

/// Frame data for one Farey fraction `h/k`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ModularFrame {
    pub h: i64,
    pub k: i64,
    /// `[-h]_k`
    pub neg_inv: i64,
    /// `gcd(k, 6)`
    pub g: i64,
    /// `K = k/g`
    pub k_cap: i64,
    /// `H = 6h/g`
    pub h_cap: i64,
    /// `[-H]_K`
    pub neg_inv_cap: i64,
    /// `h = gμ + ϱ`, `0 ≤ ϱ < g`
    pub mu: i64,
    pub rho: i64,
}

impl ModularFrame {
    pub fn new(h: i64, k: i64) -> Result<Self, ModSumError> {
        if k < 1 || h < 0 || h >= k.max(1) || (k == 1 && h != 0) {
            return Err(ModSumError::RangeError(h, k));
        }
        let neg_inv = neg_inverse(h, k)?;
        let g = k.gcd(&6);
        let k_cap = k / g;
        let h_cap = 6 * h / g;
        let neg_inv_cap = neg_inverse(h_cap.rem_euclid(k_cap.max(1)), k_cap)?;
        let mu = h / g;
        let rho = h % g;
        Ok(ModularFrame {
            h,
            k,
            neg_inv,
            g,
            k_cap,
            h_cap,
            neg_inv_cap,
            mu,
            rho,
        })
    }

    /// `α_{H,K} = K/2 - H/6 = (3K - H)/6`, denominator dividing 6.
    pub fn alpha(&self) -> Ratio<i64> {
        Ratio::new(3 * self.k_cap - self.h_cap, 6)
    }

    /// The frame matrix `([-h]_k, -(h[-h]_k+1)/k; k, -h)`.
    pub fn matrix(&self) -> UnimodularMatrix {
        debug_assert_eq!((self.h * self.neg_inv + 1) % self.k, 0);
        UnimodularMatrix::new(
            self.neg_inv,
            -(self.h * self.neg_inv + 1) / self.k,
            self.k,
            -self.h,
        )
    }

    /// The capital-frame matrix `([-H]_K, -(H[-H]_K+1)/K; K, -H)`.
    pub fn matrix_cap(&self) -> UnimodularMatrix {
        debug_assert_eq!((self.h_cap * self.neg_inv_cap + 1) % self.k_cap, 0);
        UnimodularMatrix::new(
            self.neg_inv_cap,
            -(self.h_cap * self.neg_inv_cap + 1) / self.k_cap,
            self.k_cap,
            -self.h_cap,
        )
    }
}

/// `χ_{h,k} = χ(M_{h,k})² / χ(M_{H,K})³` (a quotient of roots of unity).
pub fn chi_hk(frame: &ModularFrame) -> Complex64 {
    let small = eta_multiplier(&frame.matrix());
    let cap = eta_multiplier(&frame.matrix_cap());
    let cap3 = cap * cap * cap;
    small * small * cap3.conj()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neg_inverse_examples() {
        assert_eq!(neg_inverse(1, 5).unwrap(), 4);
        assert_eq!(neg_inverse(0, 1).unwrap(), 0);
    }

    #[test]
    fn neg_inverse_exhaustive() {
        for k in 1..=50i64 {
            for h in 0..k {
                if h.gcd(&k) != 1 {
                    assert!(neg_inverse(h, k).is_err());
                    continue;
                }
                let x = neg_inverse(h, k).unwrap();
                assert!((0..k).contains(&x));
                assert_eq!((-h * x).rem_euclid(k), 1 % k, "h={h} k={k}");
            }
        }
    }

    #[test]
    fn frame_invariants() {
        for k in 1..=40i64 {
            for h in 0..k.max(1) {
                if h.gcd(&k) != 1 {
                    continue;
                }
                let f = ModularFrame::new(h, k).unwrap();
                assert_eq!(f.g * f.k_cap, k);
                assert_eq!(f.g * f.h_cap, 6 * h);
                assert_eq!(f.g * f.mu + f.rho, h);
                assert!((0..f.g).contains(&f.rho));
                assert_eq!(f.matrix().det(), 1);
                assert_eq!(f.matrix_cap().det(), 1);
                let alpha = f.alpha();
                assert!(6 % alpha.denom() == 0, "alpha denominator {}", alpha.denom());
            }
        }
    }

    #[test]
    fn chi_hk_unit_modulus_and_composition() {
        for k in 1..=24i64 {
            for h in 0..k.max(1) {
                if h.gcd(&k) != 1 {
                    continue;
                }
                let f = ModularFrame::new(h, k).unwrap();
                let v = chi_hk(&f);
                assert!((v.norm() - 1.0).abs() < 1e-12);
                // compositional consistency against direct evaluation
                let small = eta_multiplier(&f.matrix());
                let cap = eta_multiplier(&f.matrix_cap());
                let direct = small.powi(2) / cap.powi(3);
                assert!((v - direct).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn frame_zero_one_multiplier() {
        // frame (0,1): both matrices are S, so χ_{0,1} = χ(S)^{-1} = e^{πi/4}
        let f = ModularFrame::new(0, 1).unwrap();
        let v = chi_hk(&f);
        let expect = Complex64::from_polar(1.0, std::f64::consts::PI / 4.0);
        assert!((v - expect).norm() < 1e-14, "{v}");
    }
}
