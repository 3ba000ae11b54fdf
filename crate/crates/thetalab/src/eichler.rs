//! Eichler integrals `ℰ_{a/c}(z;τ)` and their restricted variants `𝔼`.
//!
//! The defining path runs from the cusp `a/c` up to `τ + i∞ + ε`, passing
//! right of the branch cut of `√(i(𝔷-τ))` (the vertical ray above τ). The
//! quadrature path is the straight vertical ray above the cusp when that
//! already stays right of the cut, and otherwise bends: up to `Im τ / 2`,
//! across to the right of `Re τ`, then up.
//!
//! Each half-integer index contributes
//! `(-1)^{m-1/2}(m+r) e^{πi(m+r)²𝔷} e^{2πim(z-τr)} / √(i(𝔷-τ))`
//! with `r = z₂/τ₂`; note `z - τr` is real, so the `m`-linear factor has
//! modulus one and the Gaussian tail bound governs truncation.
//!
//! A single bad index can be integrated in closed form: the same integral
//! evaluates through the incomplete-Gaussian identity to
//! `e^{-πi(a/c)r²}(-1)^{m-1/2} e^{2πim(z-τr)} e^{πi(m+r)²τ}
//!  (sgn(m+r) + erf(i(m+r)√(πi(a/c-τ))))`,
//! which is what the `full ℰ = restricted 𝔼 + erf terms` decomposition uses.

use num_complex::Complex64;

use crate::eval::{series_cut, LabError, MRestriction};
use crate::quad::{adaptive, semi_infinite};
use specfun::erf_complex;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EichlerKind {
    /// straight vertical ray above the cusp (requires the cut to its left)
    StraightRay,
    /// explicit bend right of the cut
    BentPath,
    /// pick automatically
    Auto,
}

fn sqrt_principal(v: Complex64) -> Complex64 {
    v.sqrt()
}

/// Theta-numerator of the Eichler integrand at the point `zpt` on the path.
fn eichler_numerator(
    zpt: Complex64,
    z: Complex64,
    tau: Complex64,
    restrict: MRestriction,
    tol: f64,
) -> Complex64 {
    let r = z.im / tau.im;
    let lin = z - tau * r; // real by construction
    let cut = series_cut(zpt.im, r.abs(), tol);
    let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
    let pi_i = Complex64::new(0.0, std::f64::consts::PI);
    let mut acc = Complex64::new(0.0, 0.0);
    for j in -cut..=cut {
        let keeps = match restrict {
            MRestriction::All => true,
            MRestriction::Generic(f) => !f.is_bad(j),
            MRestriction::BadOnly(f) => f.is_bad(j),
        };
        if !keeps {
            continue;
        }
        let m = j as f64 + 0.5;
        let sign = if j.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let term = sign
            * (m + r)
            * (pi_i * (m + r) * (m + r) * zpt).exp()
            * (two_pi_i * m * lin).exp();
        acc += term;
    }
    acc
}

/// `ℰ_{a/c}(z;τ)` (or the restricted `𝔼` with a filter) by adaptive
/// quadrature along the cut-respecting path.
pub fn eichler_e(
    cusp: f64,
    z: Complex64,
    tau: Complex64,
    restrict: MRestriction,
    abs_tol: f64,
    max_depth: usize,
    kind: EichlerKind,
) -> Result<Complex64, LabError> {
    let r = z.im / tau.im;
    // prefactor e^{-πi(a/c)r²}
    let pre = (Complex64::new(0.0, -std::f64::consts::PI) * cusp * r * r).exp();

    let integrand = |zpt: Complex64| -> Complex64 {
        eichler_numerator(zpt, z, tau, restrict, abs_tol * 1e-3)
            / sqrt_principal(Complex64::new(0.0, 1.0) * (zpt - tau))
    };

    let straight_ok = tau.re < cusp - 1e-12;
    let use_straight = match kind {
        EichlerKind::StraightRay => true,
        EichlerKind::BentPath => false,
        EichlerKind::Auto => straight_ok,
    };

    let mut total = Complex64::new(0.0, 0.0);
    let mut worst_err = 0.0f64;
    let mut converged = true;

    // lower piece: vertical from the cusp, refined dyadically toward t = 0
    let t_knee = if use_straight { tau.im } else { tau.im / 2.0 };
    {
        let f = |t: f64| integrand(Complex64::new(cusp, t)) * Complex64::new(0.0, 1.0);
        let mut hi = t_knee;
        for _ in 0..46 {
            let lo = hi / 2.0;
            let res = adaptive(&f, lo, hi, abs_tol / 20.0, max_depth);
            total += res.value;
            worst_err = worst_err.max(res.err_estimate);
            converged &= res.converged;
            if res.value.norm() < abs_tol / 20.0 && hi < t_knee / 8.0 {
                break;
            }
            hi = lo;
            if hi < 1e-9 {
                break;
            }
        }
    }

    if use_straight {
        // upward tail along the same ray
        let f = |t: f64| integrand(Complex64::new(cusp, t)) * Complex64::new(0.0, 1.0);
        let res = semi_infinite(&f, t_knee, tau.im.max(0.5), abs_tol / 10.0, max_depth);
        total += res.value;
        worst_err = worst_err.max(res.err_estimate);
        converged &= res.converged;
    } else {
        // horizontal jog right of the cut, then up
        let x1 = tau.re.max(cusp) + 0.5 * tau.im.max(0.2);
        let f = |x: f64| integrand(Complex64::new(x, t_knee));
        let res = adaptive(&f, cusp, x1, abs_tol / 10.0, max_depth);
        total += res.value;
        worst_err = worst_err.max(res.err_estimate);
        converged &= res.converged;
        let f = |t: f64| integrand(Complex64::new(x1, t)) * Complex64::new(0.0, 1.0);
        let res = semi_infinite(&f, t_knee, tau.im.max(0.5), abs_tol / 10.0, max_depth);
        total += res.value;
        worst_err = worst_err.max(res.err_estimate);
        converged &= res.converged;
    }

    if !converged && worst_err > abs_tol {
        return Err(LabError::QuadratureFailure(worst_err));
    }
    Ok(pre * total)
}

/// Two-parameterization consistency helper: evaluates along the straight
/// ray regardless of the cut side (only legal when `Re τ < cusp`).
pub fn eichler_e_path(
    cusp: f64,
    z: Complex64,
    tau: Complex64,
    restrict: MRestriction,
    abs_tol: f64,
    max_depth: usize,
) -> Result<Complex64, LabError> {
    eichler_e(cusp, z, tau, restrict, abs_tol, max_depth, EichlerKind::StraightRay)
}

/// Closed form of a single `m`-index piece of `ℰ_{a/c}(z;τ)`:
/// `e^{-πi(a/c)r²}(-1)^{m-1/2} e^{2πim(z-τr)} e^{πi(m+r)²τ}
///  (sgn(m+r) + erf(i(m+r)√(πi(a/c-τ))))` at `m = j + 1/2`.
pub fn erf_term_closed_form(cusp: f64, z: Complex64, tau: Complex64, j: i64) -> Complex64 {
    let r = z.im / tau.im;
    let m = j as f64 + 0.5;
    let sign = if j.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let lin = z - tau * r;
    let pre = (Complex64::new(0.0, -std::f64::consts::PI) * cusp * r * r).exp();
    let sgn = if m + r >= 0.0 { 1.0 } else { -1.0 };
    let root = (Complex64::new(0.0, std::f64::consts::PI) * (cusp - tau)).sqrt();
    let erf_val = erf_complex(Complex64::new(0.0, 1.0) * (m + r) * root);
    pre * sign
        * (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * m * lin).exp()
        * (Complex64::new(0.0, std::f64::consts::PI) * (m + r) * (m + r) * tau).exp()
        * (sgn + erf_val)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::BadMFilter;
    use modsums::ModularFrame;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn tail_decay_is_gaussian() {
        // the integrand at height t decays like e^{-π m_min² t}
        let z = c(0.01, 0.005);
        let tau = c(0.3, 0.4);
        let f = |t: f64| {
            eichler_numerator(c(0.0, t), z, tau, MRestriction::All, 1e-14).norm()
        };
        let ratio1 = f(8.0) / f(4.0);
        let m_min = 0.5 - (z.im / tau.im).abs();
        let predict = (-std::f64::consts::PI * m_min * m_min * 4.0).exp();
        assert!(
            (ratio1.ln() - predict.ln()).abs() < 0.35,
            "decay {} vs {}",
            ratio1,
            predict
        );
    }

    #[test]
    fn contour_independence() {
        // straight ray and bent path agree when both are legal
        let z = c(0.012, 0.004);
        let tau = c(-0.21, 0.33); // Re τ < cusp = 0
        let a = eichler_e(0.0, z, tau, MRestriction::All, 1e-10, 28, EichlerKind::StraightRay)
            .unwrap();
        let b =
            eichler_e(0.0, z, tau, MRestriction::All, 1e-10, 28, EichlerKind::BentPath).unwrap();
        assert!((a - b).norm() < 1e-9, "{a} vs {b}: {:e}", (a - b).norm());
    }

    #[test]
    fn full_equals_restricted_plus_erf_terms() {
        // ℰ = 𝔼 + Σ_{bad m} closed-form erf terms on Durfee frames
        for (h, k) in [(0i64, 1i64), (1, 2), (1, 3), (2, 3), (1, 4), (1, 6), (3, 4), (2, 5)] {
            let frame = ModularFrame::new(h, k).unwrap();
            let filter = BadMFilter::new(&frame);
            let cusp = frame.neg_inv_cap as f64 / frame.k_cap as f64;
            // a generic (z, τ) pair at the capital frame; Re τ on either
            // side of the cusp exercises both path shapes
            let tau = c(cusp + if k % 2 == 0 { -0.13 } else { 0.11 }, 0.47);
            let z = c(0.02, 0.013);
            let full = eichler_e(cusp, z, tau, MRestriction::All, 1e-10, 30, EichlerKind::Auto)
                .unwrap();
            let restricted = eichler_e(
                cusp,
                z,
                tau,
                MRestriction::Generic(filter),
                1e-10,
                30,
                EichlerKind::Auto,
            )
            .unwrap();
            let erf_sum: Complex64 = filter
                .bad_indices()
                .into_iter()
                .map(|j| erf_term_closed_form(cusp, z, tau, j))
                .sum();
            let resid = (full - restricted - erf_sum).norm();
            assert!(
                resid < 1e-8,
                "frame ({h},{k}): residual {resid:e} full={full} restr={restricted} erf={erf_sum}"
            );
        }
    }

    #[test]
    fn bad_only_matches_erf_closed_form_termwise() {
        let frame = ModularFrame::new(1, 5).unwrap();
        let filter = BadMFilter::new(&frame);
        let cusp = frame.neg_inv_cap as f64 / frame.k_cap as f64;
        let tau = c(cusp - 0.2, 0.52);
        let z = c(0.015, 0.007);
        let bad_integral = eichler_e(
            cusp,
            z,
            tau,
            MRestriction::BadOnly(filter),
            1e-10,
            30,
            EichlerKind::Auto,
        )
        .unwrap();
        let erf_sum: Complex64 = filter
            .bad_indices()
            .into_iter()
            .map(|j| erf_term_closed_form(cusp, z, tau, j))
            .sum();
        assert!(
            (bad_integral - erf_sum).norm() < 1e-8,
            "{bad_integral} vs {erf_sum}"
        );
    }
}
