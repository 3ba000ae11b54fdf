//! Asymptotic series for unrestricted unimodal sequences: the rank-count
//! series for `u(n)` and the full moment series for `u_ℓ(n)`.
//!
//! `u(n) ≈ π/(2^{3/4}√3(24n+1)^{3/4}) Σ_{k,ν} K_k(n,ν)/k²
//!   ∫_{-1}^1 cot(π(x/√6-ν-1/2)/(2k)) I_{3/2}(C_k√(1-x²)) (1-x²)^{3/4} dx`
//!
//! `u_ℓ(n) ≈ π/(2^{3/4}√3(24n+1)^{3/4}) Σ_{j,a,b,c} C(ℓ,2j) κ(a,b,c)/2^{a/2+c}
//!   (24n+1)^{a/2+c} Σ_{k,ν} k^{a-2} K_k(n,ν)
//!   ∫_{-1}^1 C_{ℓ-2j}(w_ν(x)) I_{a+2c-3/2}(C_k√(1-x²))/(1-x²)^{a/2+c-3/4} dx`
//!
//! with `C_k = π√(24n+1)/(3√2 k)` and `w_ν(x) = (x/√6-ν-1/2)/(2k)`.
//! The Bessel-over-power form `I_ν(y)/y^ν` keeps the integrand analytic on
//! the closed interval, and every term is carried in log scale.

use num_complex::Complex64;
use rayon::prelude::*;
use thiserror::Error;

use crate::report::{AsymptoticReport, ScaledComplex, TermRecord};
use modsums::kloosterman_k;
use specfun::{bessel_i_over_pow, cot_deriv, kappa, BernoulliCache};
use thetalab::quad::adaptive;

#[derive(Debug, Error)]
pub enum AsympError {
    #[error("moment order must be even, got {0}")]
    OddMoment(usize),
    #[error("quadrature failure: estimated error {0}")]
    Quadrature(f64),
}

pub(crate) fn binom_f(n: usize, k: usize) -> f64 {
    let mut b = 1.0f64;
    for j in 0..k.min(n - k) {
        b = b * (n - j) as f64 / (j + 1) as f64;
    }
    b
}

/// Compositions a+b+c = j.
pub(crate) fn compositions3(j: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 0..=j {
        for b in 0..=j - a {
            out.push((a, b, j - a - b));
        }
    }
    out
}

/// Theorem-1.3-shaped series for `u(n)` itself.
pub fn u_exact_series(n: usize, k_max: i64, quad_tol: f64) -> Result<AsymptoticReport, AsympError> {
    let m24 = 24.0 * n as f64 + 1.0;
    let pref = ScaledComplex::new(
        Complex64::new(
            std::f64::consts::PI / (2f64.powf(0.75) * 3f64.sqrt()),
            0.0,
        ),
        -0.75 * m24.ln(),
    );
    let descriptors: Vec<(i64, i64)> = (1..=k_max)
        .flat_map(|k| (0..2 * k).map(move |nu| (k, nu)))
        .collect();
    let terms: Vec<TermRecord> = descriptors
        .par_iter()
        .map(|&(k, nu)| {
            let kf = k as f64;
            let c_k = std::f64::consts::PI * m24.sqrt() / (3.0 * 2f64.sqrt() * kf);
            let base = bessel_i_over_pow(1.5, c_k).unwrap().ln_abs() + 1.5 * c_k.ln();
            let f = |x: f64| {
                let u2 = 1.0 - x * x;
                let w = (x / 6f64.sqrt() - nu as f64 - 0.5) / (2.0 * kf);
                let cot = cot_deriv(0, Complex64::new(w, 0.0));
                // I_{3/2}(C u)(1-x²)^{3/4} = C^{3/2}·(I/y^{3/2})(Cu)·u³
                let b = bessel_i_over_pow(1.5, c_k * u2.sqrt()).unwrap();
                cot * b.to_f64_shifted(base - 1.5 * c_k.ln()) * u2.powf(1.5)
            };
            let quad = adaptive(&f, -1.0, 1.0, quad_tol, 30);
            let kk = kloosterman_k(k, n as i64, nu);
            TermRecord {
                key: (k, nu, [0; 6]),
                value: ScaledComplex::new(kk * quad.value / (kf * kf), base),
            }
        })
        .collect();
    Ok(AsymptoticReport::assemble(n, 0, k_max, terms, pref))
}

/// Full moment series for `u_ℓ(n)`, ℓ even.
pub fn ul_series(
    n: usize,
    ell: usize,
    k_max: i64,
    quad_tol: f64,
) -> Result<AsymptoticReport, AsympError> {
    if ell % 2 != 0 {
        return Err(AsympError::OddMoment(ell));
    }
    let cache = BernoulliCache::new(2 * ell + 8);
    let m24 = 24.0 * n as f64 + 1.0;
    let pref = ScaledComplex::new(
        Complex64::new(
            std::f64::consts::PI / (2f64.powf(0.75) * 3f64.sqrt()),
            0.0,
        ),
        -0.75 * m24.ln(),
    );
    // outer index tuples (j, a, b, c) with their exact rational weights
    let mut tuples = Vec::new();
    for j in 0..=ell / 2 {
        for (a, b, c) in compositions3(j) {
            let kap = kappa(a, b, c, &cache).as_f64();
            let weight = binom_f(ell, 2 * j) * kap / 2f64.powf(a as f64 / 2.0 + c as f64);
            tuples.push((j, a, b, c, weight));
        }
    }
    let descriptors: Vec<(i64, i64, usize)> = (1..=k_max)
        .flat_map(|k| (0..2 * k).map(move |nu| (k, nu)))
        .flat_map(|(k, nu)| (0..tuples.len()).map(move |t| (k, nu, t)))
        .collect();
    let terms: Vec<TermRecord> = descriptors
        .par_iter()
        .map(|&(k, nu, t_idx)| {
            let (j, a, b, c, weight) = tuples[t_idx];
            let kf = k as f64;
            let big_l = ell - 2 * j;
            let nu_prime = a as f64 + 2.0 * c as f64 - 1.5;
            let c_k = std::f64::consts::PI * m24.sqrt() / (3.0 * 2f64.sqrt() * kf);
            // scale: the over-power Bessel at the peak plus the C^{ν'} factor
            let peak = bessel_i_over_pow(nu_prime, c_k).unwrap().ln_abs();
            let f = |x: f64| {
                let u = (1.0 - x * x).sqrt();
                let w = (x / 6f64.sqrt() - nu as f64 - 0.5) / (2.0 * kf);
                let kernel = cot_deriv(big_l, Complex64::new(w, 0.0));
                let bes = bessel_i_over_pow(nu_prime, c_k * u).unwrap();
                kernel * bes.to_f64_shifted(peak)
            };
            let quad = adaptive(&f, -1.0, 1.0, quad_tol, 30);
            let kk = kloosterman_k(k, n as i64, nu);
            let log = peak
                + nu_prime * c_k.ln()
                + (a as f64 / 2.0 + c as f64) * m24.ln()
                + (a as f64 - 2.0) * kf.ln();
            TermRecord {
                key: (k, nu, [j as i64, a as i64, b as i64, c as i64, 0, 0]),
                value: ScaledComplex::new(kk * quad.value * weight, log),
            }
        })
        .collect();
    Ok(AsymptoticReport::assemble(n, ell, k_max, terms, pref))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrand_kernel_vanishes_at_endpoints() {
        // the (1-x²)^{3/4} factor kills the u(n)-series integrand at ±1
        let m24: f64 = 24.0 * 100.0 + 1.0;
        let c_k = std::f64::consts::PI * m24.sqrt() / (3.0 * 2f64.sqrt());
        let base = bessel_i_over_pow(1.5, c_k).unwrap().ln_abs();
        for x in [-1.0f64, 1.0] {
            let u2: f64 = 1.0 - x * x;
            let v = bessel_i_over_pow(1.5, c_k * u2.sqrt())
                .unwrap()
                .to_f64_shifted(base)
                * u2.powf(1.5);
            assert_eq!(v, 0.0);
        }
    }

    #[test]
    fn u_series_matches_exact_small() {
        // frozen oracle: u(100) = 962542413673
        let rep = u_exact_series(100, 10, 1e-10).unwrap();
        let rel = (rep.value - 962542413673.0).abs() / 962542413673.0;
        assert!(rel < 1e-2, "rel err {rel}");
        assert!(rep.value_imag_ratio < 1e-6);
    }

    #[test]
    fn odd_ell_rejected() {
        assert!(matches!(ul_series(100, 3, 5, 1e-9), Err(AsympError::OddMoment(3))));
    }

    #[test]
    fn ul2_matches_exact_small() {
        // frozen oracle: u_2(200) = 272422313119054111276
        let rep = ul_series(200, 2, 14, 1e-10).unwrap();
        let oracle = 272422313119054111276.0f64;
        let rel = (rep.value - oracle).abs() / oracle;
        assert!(rel < 2e-2, "rel err {rel}");
        assert!(rep.value_imag_ratio < 1e-6);
    }

    #[test]
    fn k1_dominates_at_moderate_n() {
        let rep = u_exact_series(400, 20, 1e-10).unwrap();
        let k1: f64 = rep.partial_sums[0].1.norm();
        let total = rep.partial_sums.last().unwrap().1.norm();
        assert!(k1 / total > 0.9, "k=1 fraction {}", k1 / total);
    }
}
