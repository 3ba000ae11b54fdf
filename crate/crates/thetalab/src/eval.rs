//! Floating-point evaluation of the modular building blocks:
//! η, ϑ, 𝒞*, the false theta ψ, its completion ψ̂, and the correction ψ*.
//!
//! Evaluators are generic over [`Value`] so the same series code produces
//! plain complex values and `z`-jets (for derivative extraction). Series
//! cutoffs come from the Gaussian tail bound
//! `e^{-π·Im τ·(M - |z₂/τ₂|)²} < tol/10`, not fixed counts.

use num_complex::Complex64;
use thiserror::Error;

use crate::cjet::CJet;
use specfun::erf_complex;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("Im tau = {0} is too small for direct series evaluation; transform to a cusp-distant frame first")]
    SlowConvergence(f64),
    #[error("quadrature did not converge: estimated error {0}")]
    QuadratureFailure(f64),
}

/// Scalar-or-jet abstraction for the series evaluators.
pub trait Value: Clone {
    fn from_c(c: Complex64) -> Self;
    fn zero_like(&self) -> Self;
    fn add_v(&self, rhs: &Self) -> Self;
    fn mul_v(&self, rhs: &Self) -> Self;
    fn scale_c(&self, c: Complex64) -> Self;
    fn exp_v(&self) -> Self;
    fn inv_v(&self) -> Self;
    /// Add a scalar to the constant term, preserving shape.
    fn add_c(&self, c: Complex64) -> Self;
    /// Constant (z = 0) part, used for truncation bounds and sign decisions.
    fn c0(&self) -> Complex64;
}

impl Value for Complex64 {
    fn from_c(c: Complex64) -> Self {
        c
    }
    fn zero_like(&self) -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn add_v(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul_v(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale_c(&self, c: Complex64) -> Self {
        self * c
    }
    fn exp_v(&self) -> Self {
        self.exp()
    }
    fn inv_v(&self) -> Self {
        1.0 / self
    }
    fn add_c(&self, c: Complex64) -> Self {
        self + c
    }
    fn c0(&self) -> Complex64 {
        *self
    }
}

impl Value for CJet {
    fn from_c(c: Complex64) -> Self {
        // order is inherited from the jet arguments in arithmetic; scalars
        // entering a jet computation are injected by scale/add on jets, so
        // a bare constant jet of order 0 is only a fallback
        CJet::constant(c, 0)
    }
    fn zero_like(&self) -> Self {
        CJet::zero(self.order())
    }
    fn add_v(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn mul_v(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn scale_c(&self, c: Complex64) -> Self {
        self.scale(c)
    }
    fn exp_v(&self) -> Self {
        self.exp()
    }
    fn inv_v(&self) -> Self {
        self.inv()
    }
    fn add_c(&self, c: Complex64) -> Self {
        let mut out = self.clone();
        out.coeffs[0] += c;
        out
    }
    fn c0(&self) -> Complex64 {
        self.constant_term()
    }
}

/// `exp(a·z + b)` for a value/jet `z`.
pub fn exp_affine<V: Value>(z: &V, a: Complex64, b: Complex64) -> V {
    z.scale_c(a).add_c(b).exp_v()
}

const MIN_IM_TAU: f64 = 1e-3;

/// Half-integer index cutoff `M` with `e^{-π τ₂ (M - |r|)²} < tol/10`.
pub fn series_cut(tau2: f64, r_abs: f64, tol: f64) -> i64 {
    let margin = ((10.0 / tol).ln() / (std::f64::consts::PI * tau2)).sqrt();
    (r_abs + margin).ceil() as i64 + 3
}

fn check_tau(tau: Complex64) -> Result<(), LabError> {
    if tau.im < MIN_IM_TAU {
        Err(LabError::SlowConvergence(tau.im))
    } else {
        Ok(())
    }
}

/// Dedekind `η(τ) = q^{1/24} Π (1 - q^n)`.
pub fn eval_eta(tau: Complex64, tol: f64) -> Result<Complex64, LabError> {
    check_tau(tau)?;
    let q = (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * tau).exp();
    let mut prod = Complex64::new(1.0, 0.0);
    let mut qn = Complex64::new(1.0, 0.0);
    let n_max = ((tol / 10.0).ln() / q.norm().ln()).ceil() as usize + 2;
    for _ in 0..n_max {
        qn *= q;
        prod *= Complex64::new(1.0, 0.0) - qn;
    }
    Ok((Complex64::new(0.0, 2.0 * std::f64::consts::PI) * tau / 24.0).exp() * prod)
}

/// Which sign convention multiplies each half-integer index term.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum ThetaKind {
    /// `ϑ`: plain alternating theta.
    Theta,
    /// `ψ`: false theta with `sgn(m + z₂/τ₂)`.
    Psi,
}

/// Restriction filter on half-integer indices `m = j + 1/2` for the Durfee
/// starred sums: keeps either the generic (`|m - α| > 1/g`) part or only
/// the bad part.
#[derive(Clone, Copy, Debug)]
pub struct BadMFilter {
    /// `6·(3K - H)` — α = (3K-H)/6 so `m - α = (6j + 3 - (3K-H))/6`.
    three_k_minus_h: i64,
    /// `g = gcd(k, 6)`
    g: i64,
}

impl BadMFilter {
    pub fn new(frame: &modsums::ModularFrame) -> Self {
        BadMFilter {
            three_k_minus_h: 3 * frame.k_cap - frame.h_cap,
            g: frame.g,
        }
    }

    /// Is `m = j + 1/2` within `1/g` of `α_{H,K}`? Decided in integers:
    /// `|6j + 3 - (3K - H)| ≤ 6/g`.
    pub fn is_bad(&self, j: i64) -> bool {
        (6 * j + 3 - self.three_k_minus_h).abs() * self.g <= 6
    }

    /// Bad half-integers as `(j, m = j + 1/2)` values.
    pub fn bad_indices(&self) -> Vec<i64> {
        // |m - α| ≤ 1/g keeps at most three consecutive half-integers
        let center = (self.three_k_minus_h - 3) as f64 / 6.0;
        let lo = center.floor() as i64 - 2;
        (lo..=lo + 4).filter(|&j| self.is_bad(j)).collect()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub enum MRestriction {
    #[default]
    All,
    /// Keep only `|m - α| > 1/g` (the starred sums `Ψ`, `𝔼`).
    Generic(BadMFilter),
    /// Keep only `|m - α| ≤ 1/g`.
    BadOnly(BadMFilter),
}

impl MRestriction {
    fn keeps(&self, j: i64) -> bool {
        match self {
            MRestriction::All => true,
            MRestriction::Generic(f) => !f.is_bad(j),
            MRestriction::BadOnly(f) => f.is_bad(j),
        }
    }
}

fn theta_like<V: Value>(
    kind: ThetaKind,
    z: &V,
    tau: Complex64,
    tol: f64,
    restrict: MRestriction,
) -> Result<V, LabError> {
    check_tau(tau)?;
    let z0 = z.c0();
    let ratio = z0.im / tau.im;
    let cut = series_cut(tau.im, ratio.abs(), tol);
    let mut acc = z.zero_like();
    let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
    for j in -cut..=cut {
        if !restrict.keeps(j) {
            continue;
        }
        let m = j as f64 + 0.5;
        let sign = if j.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let sgn_factor = match kind {
            ThetaKind::Theta => 1.0,
            ThetaKind::Psi => {
                if m + ratio >= 0.0 {
                    1.0
                } else {
                    -1.0
                }
            }
        };
        // i (-1)^{m-1/2} sgn · e^{πi m² τ} · e^{2πi m z}
        let prefactor = Complex64::new(0.0, sign * sgn_factor)
            * (Complex64::new(0.0, std::f64::consts::PI) * m * m * tau).exp();
        let term = exp_affine(z, two_pi_i * m, Complex64::new(0.0, 0.0)).scale_c(prefactor);
        acc = acc.add_v(&term);
    }
    Ok(acc)
}

/// Jacobi `ϑ(z;τ) = i Σ_{m∈ℤ+1/2} (-1)^{m-1/2} q^{m²/2} ζ^m`.
pub fn eval_theta<V: Value>(z: &V, tau: Complex64, tol: f64) -> Result<V, LabError> {
    theta_like(ThetaKind::Theta, z, tau, tol, MRestriction::All)
}

/// False theta `ψ(z;τ)` with the `sgn(m + z₂/τ₂)` factor (the sign is taken
/// from the constant term of a jet argument, where it is locally constant).
pub fn eval_psi<V: Value>(z: &V, tau: Complex64, tol: f64) -> Result<V, LabError> {
    theta_like(ThetaKind::Psi, z, tau, tol, MRestriction::All)
}

/// Restricted `Ψ(z;τ)`: the false theta with bad `m` omitted.
pub fn eval_psi_restricted<V: Value>(
    z: &V,
    tau: Complex64,
    tol: f64,
    filter: BadMFilter,
) -> Result<V, LabError> {
    theta_like(ThetaKind::Psi, z, tau, tol, MRestriction::Generic(filter))
}

/// `𝒞*(z;τ) = q^{-1/24}(q;q)_∞ / ((ζq;q)_∞ (ζ^{-1}q;q)_∞)`.
pub fn eval_cstar<V: Value>(z: &V, tau: Complex64, tol: f64) -> Result<V, LabError> {
    check_tau(tau)?;
    let q = (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * tau).exp();
    let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
    let zeta_plus = exp_affine(z, two_pi_i, Complex64::new(0.0, 0.0));
    let zeta_minus = exp_affine(z, -two_pi_i, Complex64::new(0.0, 0.0));
    // |ζ^{±1}| shifts the convergence margin
    let shift = zeta_plus.c0().norm().max(zeta_minus.c0().norm()).max(1.0);
    let n_max = (((tol / 10.0).ln() - shift.ln()) / q.norm().ln()).ceil() as usize + 2;
    let one = Complex64::new(1.0, 0.0);
    let mut acc = z.zero_like().add_c(one);
    let mut qn = Complex64::new(1.0, 0.0);
    for _ in 0..n_max {
        qn *= q;
        let euler = one - qn;
        // (1 - q^n) / ((1 - ζq^n)(1 - ζ^{-1}q^n))
        let dp = zeta_plus.scale_c(-qn).add_c(one);
        let dm = zeta_minus.scale_c(-qn).add_c(one);
        acc = acc
            .scale_c(euler)
            .mul_v(&dp.inv_v())
            .mul_v(&dm.inv_v());
    }
    Ok(acc.scale_c((-two_pi_i * tau / 24.0).exp()))
}

/// Completion `ψ̂(z;τ,w) = i Σ erf(-i√(πi(w-τ))(m + z₂/τ₂))(-1)^{m-1/2} q^{m²/2} ζ^m`.
pub fn eval_psi_hat(
    z: Complex64,
    tau: Complex64,
    w: Complex64,
    tol: f64,
) -> Result<Complex64, LabError> {
    check_tau(tau)?;
    check_tau(w)?;
    let ratio = z.im / tau.im;
    let cut = series_cut(tau.im, ratio.abs(), tol);
    let root = (Complex64::new(0.0, std::f64::consts::PI) * (w - tau)).sqrt();
    let arg_scale = Complex64::new(0.0, -1.0) * root;
    let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
    let mut acc = Complex64::new(0.0, 0.0);
    for j in -cut..=cut {
        let m = j as f64 + 0.5;
        let sign = if j.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let erf_val = erf_complex(arg_scale * (m + ratio));
        let term = Complex64::new(0.0, sign)
            * erf_val
            * (Complex64::new(0.0, std::f64::consts::PI) * m * m * tau).exp()
            * (two_pi_i * m * z).exp();
        acc += term;
    }
    Ok(acc)
}

/// `ψ* = ψ̂ - ψ` by the erf-minus-sgn series (terms decay like
/// `e^{-π(m+r)²·Im(w-τ)}` on top of the theta decay).
pub fn eval_psi_star_series(
    z: Complex64,
    tau: Complex64,
    w: Complex64,
    tol: f64,
) -> Result<Complex64, LabError> {
    check_tau(tau)?;
    let ratio = z.im / tau.im;
    let cut = series_cut(tau.im.min(tau.im + (w - tau).im), ratio.abs(), tol);
    let root = (Complex64::new(0.0, std::f64::consts::PI) * (w - tau)).sqrt();
    let arg_scale = Complex64::new(0.0, -1.0) * root;
    let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
    let mut acc = Complex64::new(0.0, 0.0);
    for j in -cut..=cut {
        let m = j as f64 + 0.5;
        let sign = if j.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let sgn = if m + ratio >= 0.0 { 1.0 } else { -1.0 };
        let diff = erf_complex(arg_scale * (m + ratio)) - sgn;
        if diff.norm() == 0.0 {
            continue;
        }
        acc += Complex64::new(0.0, sign)
            * diff
            * (Complex64::new(0.0, std::f64::consts::PI) * m * m * tau).exp()
            * (two_pi_i * m * z).exp();
    }
    Ok(acc)
}
