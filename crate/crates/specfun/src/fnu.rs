//! The even entire function `f_ν(z;τ) = sin(πz)/sinh(πz/τ) · e^{πνz²/τ}`
//! and its expansion coefficients
//! `b_r(ν;τ) = Σ_{a+b+c=r} ν^a κ(a,b,c) τ^{1-a-2c}`, so that
//! `f_ν = Σ_{r≥0} (2πiz)^{2r}/(2r)! · b_r(ν;τ)`.

use num_complex::Complex64;

use crate::bernoulli::BernoulliCache;
use crate::bessel::SpecFunError;
use crate::kappa::kappa;

/// `b_r(ν;τ)`; `b_0 = τ`.
pub fn b_r(nu: f64, tau: Complex64, r: usize, cache: &BernoulliCache) -> Result<Complex64, SpecFunError> {
    if tau.norm() == 0.0 {
        return Err(SpecFunError::SingularTau);
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for a in 0..=r {
        for b in 0..=r - a {
            let c = r - a - b;
            let k = kappa(a, b, c, cache).as_f64();
            let power = 1.0 - a as f64 - 2.0 * c as f64;
            acc += nu.powi(a as i32) * k * tau.powf(power);
        }
    }
    Ok(acc)
}

/// Closed form `sin(πz)/sinh(πz/τ) · e^{πνz²/τ}` (the removable `z = 0`
/// value is `τ`).
pub fn f_nu_closed(nu: f64, z: Complex64, tau: Complex64) -> Result<Complex64, SpecFunError> {
    let pi = std::f64::consts::PI;
    let w = pi * z / tau;
    if w.norm() < 1e-150 {
        return Ok(tau);
    }
    let s = w.sinh();
    if s.norm() == 0.0 {
        return Err(SpecFunError::SingularTau);
    }
    Ok((pi * z).sin() / s * (nu * pi * z * z / tau).exp())
}

/// Truncated even series `Σ_{r<terms} (2πiz)^{2r}/(2r)! · b_r(ν;τ)`.
pub fn f_nu_series(
    nu: f64,
    z: Complex64,
    tau: Complex64,
    terms: usize,
    cache: &BernoulliCache,
) -> Result<Complex64, SpecFunError> {
    let two_pi_i_z = Complex64::new(0.0, 2.0 * std::f64::consts::PI) * z;
    let zz = two_pi_i_z * two_pi_i_z;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut pow = Complex64::new(1.0, 0.0); // (2πiz)^{2r}/(2r)!
    for r in 0..terms {
        acc += pow * b_r(nu, tau, r, cache)?;
        pow *= zz / ((2 * r + 1) as f64 * (2 * r + 2) as f64);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c64(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn b0_is_tau() {
        let cache = BernoulliCache::new(8);
        let tau = c64(0.3, 0.2);
        let b0 = b_r(3.0, tau, 0, &cache).unwrap();
        assert!((b0 - tau).norm() < 1e-15);
    }

    #[test]
    fn series_matches_closed_form() {
        let cache = BernoulliCache::new(40);
        let tau = c64(0.3, 0.2);
        let z = c64(0.05, 0.0);
        let closed = f_nu_closed(3.0, z, tau).unwrap();
        let series = f_nu_series(3.0, z, tau, 12, &cache).unwrap();
        assert!(
            (closed - series).norm() < 1e-12,
            "closed {closed} vs series {series}"
        );
    }

    #[test]
    fn f_nu_is_even() {
        let cache = BernoulliCache::new(40);
        let tau = c64(0.4, 0.1);
        for &x in &[0.01, 0.03, 0.07] {
            let z = c64(x, 0.005);
            let plus = f_nu_closed(2.0, z, tau).unwrap();
            let minus = f_nu_closed(2.0, -z, tau).unwrap();
            assert!((plus - minus).norm() < 1e-12 * plus.norm());
            let _ = &cache;
        }
    }

    #[test]
    fn b_r_frame_bound() {
        // |b_r(jk; Z)| · |Z|^{2r-1} stays bounded on a frame grid
        // Z = k/n - ikΘ with k ≤ √n
        let cache = BernoulliCache::new(24);
        for r in 0..=3usize {
            let mut worst: f64 = 0.0;
            for &n in &[400.0f64, 2500.0] {
                for k in [1.0f64, 3.0, 10.0] {
                    if k > n.sqrt() {
                        continue;
                    }
                    for &theta in &[-1.0, -0.3, 0.3, 1.0] {
                        let th = theta / (k * n.sqrt());
                        let z = c64(k / n, -k * th);
                        let b = b_r(3.0 * k, z, r, &cache).unwrap();
                        worst = worst.max(b.norm() * z.norm().powi(2 * r as i32 - 1));
                    }
                }
            }
            assert!(worst < 50.0, "r={r}: bound {worst}");
        }
    }
}
