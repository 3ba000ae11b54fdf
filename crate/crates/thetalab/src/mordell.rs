//! Mordell-type integral representations of the split Eichler pieces.
//!
//! The split writes `e^{2πD/(kZ)}·ℰ = ℰ*_D + ℰ^e_D` with `ℰ*_D` carrying the
//! Gaussian over `|x| ≤ √(2D)` and `ℰ^e_D` the rest. At the special widths
//! (`D = 1/12` unrestricted, `D = 1/(2g²)` Durfee) the starred piece
//! collapses into cot-kernel integrals over `[-1, 1]`:
//!
//! unrestricted (`w_ν(x) = (x/√6 - ν - 1/2)/(2k)`, `ν = 0..2k-1`):
//! `[∂_z^ℓ ℰ*] = (2πi)^ℓ/(2√6 ki) Σ_ν (-1)^ν e^{πi(ν+1/2)²[-h]_k/k}
//!   ∫_{-1}^1 C_ℓ(w_ν) e^{π(1-x²)/(6kZ)} dx`
//!
//! Durfee (`w_ν(x) = (x - g(ν+1/2) + k/2 - ϱ)/(6k)`, `ν = 0..6K-1`), with the
//! `δ`-pole subtracted so the integrand is finite at `x = -γ`:
//! `[∂_z^ℓ 𝔼*] = (πi)^ℓ e^{-πi/(6K)}/(6ki) Σ_ν (-1)^{ν+μ}
//!   e^{πi((μ-ν)/(3K) + [-H]_K(ν-μ+1/2)²/K)}
//!   ∫_{-1}^1 (C_ℓ(w_ν) - δ(-1)^{ℓ/2} 2 ℓ! (3k/(π(x+γ)))^{ℓ+1})
//!   e^{π(1-x²)/(6kZ)} dx`
//!
//! The x-integral forms (Gaussians against `(x - p_m)^{-(ℓ+1)}` kernels,
//! accelerated by cot-closed-form lattice sums) provide the independent
//! route for certifying the rewrite lemmas and the reassembly of the split.

use num_complex::Complex64;

use crate::eval::{BadMFilter, LabError};
use crate::quad::{adaptive, principal_value};
use modsums::{singularity_data, ModularFrame};
use specfun::{cot_deriv, cot_deriv_regularized, BernoulliCache};

/// `Σ_{r∈ℤ, r≠r₀} (u + r)^{-j}` with the excluded lattice point folded into
/// the regularized cot derivative when `u` is close to `-r₀` (the naive
/// closed-form-minus-term split cancels catastrophically there).
fn lattice_inverse_power_sum_excluding(
    u: Complex64,
    j: usize,
    r0: i64,
    cache: &BernoulliCache,
) -> Complex64 {
    let fact: f64 = (1..j).map(|x| x as f64).product();
    let pi = std::f64::consts::PI;
    let sign = if (j - 1) % 2 == 0 { 1.0 } else { -1.0 };
    let scale = Complex64::new(pi, 0.0) * Complex64::new(0.0, 2.0 * pi).powu(j as u32 - 1) * sign
        / fact;
    let dist = (u + r0 as f64).norm();
    if dist < 0.1 {
        // kept-class sum = scale · (C_{j-1}(u) - pole at -r₀), exactly
        scale * cot_deriv_regularized(j - 1, u, -r0, cache, 14)
    } else {
        scale * cot_deriv(j - 1, u) - (u + r0 as f64).powu(j as u32).inv()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MordellVariant {
    Unrestricted,
    Durfee,
}

fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn phase(x: f64) -> Complex64 {
    Complex64::from_polar(1.0, x)
}

/// `(2πi)^ℓ` and `(πi)^ℓ`.
fn two_pi_i_pow(ell: usize) -> Complex64 {
    Complex64::new(0.0, 2.0 * std::f64::consts::PI).powu(ell as u32)
}
fn pi_i_pow(ell: usize) -> Complex64 {
    Complex64::new(0.0, std::f64::consts::PI).powu(ell as u32)
}

/// `[∂_z^ℓ ℰ*]` (unrestricted) or `[∂_z^ℓ 𝔼*]` (Durfee) at real `z`, by the
/// cot-kernel forms. `ℓ` must be even for the Durfee variant.
pub fn mordell_cot_integral(
    variant: MordellVariant,
    frame: &ModularFrame,
    z: f64,
    big_z: Complex64,
    ell: usize,
    abs_tol: f64,
    max_depth: usize,
) -> Result<Complex64, LabError> {
    let k = frame.k as f64;
    let pi = std::f64::consts::PI;
    let inv6kz = 1.0 / (6.0 * k * big_z);
    match variant {
        MordellVariant::Unrestricted => {
            let hk = frame.neg_inv as f64 / frame.k as f64;
            let mut acc = Complex64::new(0.0, 0.0);
            for nu in 0..2 * frame.k {
                let sign = if nu % 2 == 0 { 1.0 } else { -1.0 };
                let pref = phase(pi * (nu as f64 + 0.5).powi(2) * hk) * sign;
                let f = |x: f64| {
                    let w = (x / 6f64.sqrt() - nu as f64 - 0.5) / (2.0 * k) + z;
                    cot_deriv(ell, c64(w, 0.0)) * (pi * (1.0 - x * x) * inv6kz).exp()
                };
                let r = adaptive(&f, -1.0, 1.0, abs_tol, max_depth);
                if !r.converged {
                    return Err(LabError::QuadratureFailure(r.err_estimate));
                }
                acc += pref * r.value;
            }
            Ok(acc * two_pi_i_pow(ell) / (2.0 * 6f64.sqrt() * k * Complex64::new(0.0, 1.0)))
        }
        MordellVariant::Durfee => {
            assert!(ell % 2 == 0, "Durfee cot kernels are assembled at even orders");
            let cache = BernoulliCache::new(2 * ell + 24);
            let g = frame.g;
            let k_cap = frame.k_cap;
            let hh = frame.neg_inv_cap as f64 / k_cap as f64;
            let mu = frame.mu as f64;
            let mut acc = Complex64::new(0.0, 0.0);
            for nu in 0..6 * k_cap {
                let s = singularity_data(frame.k, frame.rho, nu);
                let sign = if (nu + frame.mu) % 2 == 0 { 1.0 } else { -1.0 };
                let pref = phase(pi * ((mu - nu as f64) / (3.0 * k_cap as f64)
                    + hh * (nu as f64 - mu + 0.5).powi(2)))
                    * sign;
                // w(x) = (x - g(ν+1/2) + k/2 - ϱ)/(6k) + z/2; with δ = 1 the
                // nearby integer is -r̂ where g(2ν+1) - k + 2ϱ + 2γ = 12k·r̂
                let shift = (-(g * (2 * nu + 1)) + frame.k - 2 * frame.rho) as f64 / 2.0;
                let r_hat = if s.delta {
                    let num = g * (2 * nu + 1) - frame.k + 2 * frame.rho + 2 * s.gamma;
                    debug_assert_eq!(num % (12 * frame.k), 0);
                    Some(num / (12 * frame.k))
                } else {
                    None
                };
                let ell_fact: f64 = (1..=ell).map(|x| x as f64).product();
                let pole_scale = if ell % 4 == 0 { 1.0 } else { -1.0 }; // (-1)^{ℓ/2}
                let f = |x: f64| {
                    let w = (x + shift) / (6.0 * k) + z / 2.0;
                    let weight = (pi * (1.0 - x * x) * inv6kz).exp();
                    let kernel = if let Some(r_hat) = r_hat {
                        let dist = w + r_hat as f64;
                        if dist.abs() < 0.05 {
                            // removable singularity: Laurent-difference band
                            cot_deriv_regularized(ell, c64(w, 0.0), -r_hat, &cache, 10)
                        } else {
                            let pole = pole_scale
                                * 2.0
                                * ell_fact
                                * (3.0 * k / (pi * (x + s.gamma as f64 + 3.0 * k * z)))
                                    .powi(ell as i32 + 1);
                            cot_deriv(ell, c64(w, 0.0)) - pole
                        }
                    } else {
                        cot_deriv(ell, c64(w, 0.0))
                    };
                    kernel * weight
                };
                let r = adaptive(&f, -1.0, 1.0, abs_tol, max_depth);
                if !r.converged {
                    return Err(LabError::QuadratureFailure(r.err_estimate));
                }
                acc += pref * r.value;
            }
            Ok(acc
                * pi_i_pow(ell)
                * phase(-pi / (6.0 * k_cap as f64))
                / (6.0 * k * Complex64::new(0.0, 1.0)))
        }
    }
}

/// Gaussian moments `∫_{-d}^{d} x^{2j} e^{-a x²} dx` for `j = 0, 1, 2`.
fn gauss_moments(a: Complex64, d: f64) -> [Complex64; 3] {
    let mut out = [Complex64::new(0.0, 0.0); 3];
    for (j, slot) in out.iter_mut().enumerate() {
        let f = |x: f64| x.powi(2 * j as i32) * (-a * x * x).exp();
        *slot = adaptive(&f, -d, d, 1e-14, 20).value;
    }
    out
}

/// `Σ_{r∈ℤ} (u + r)^{-j} = π (2πi)^{j-1} (-1)^{j-1} C_{j-1}(u) / (j-1)!`.
fn lattice_inverse_power_sum(u: Complex64, j: usize) -> Complex64 {
    let fact: f64 = (1..j).map(|x| x as f64).product();
    let pi = std::f64::consts::PI;
    let sign = if (j - 1) % 2 == 0 { 1.0 } else { -1.0 };
    Complex64::new(pi, 0.0) * Complex64::new(0.0, 2.0 * pi).powu(j as u32 - 1) * sign
        * cot_deriv(j - 1, u)
        / fact
}

struct IndexData {
    /// phase coefficient c_m (unit modulus times sign)
    c: Complex64,
    /// pole location p_m(z)
    p: f64,
}

/// Shared x-integral evaluator: `(prefactor/πi)·ℓ!·(-s)^ℓ Σ_m c_m K_m` with
/// `K_m = ∫_{-d}^{d} e^{-ax²}(x - p_m)^{-(ℓ+1)} dx`, accelerated by the
/// lattice closed forms beyond the direct window.
#[allow(clippy::too_many_arguments)]
fn estar_x_generic(
    a: Complex64,
    d: f64,
    ell: usize,
    slope: f64, // dp/dz = -slope  (2k unrestricted, 3K durfee)
    indices: impl Iterator<Item = IndexData>,
    class_sums: impl Fn(usize) -> Complex64, // Σ_m c_m p_m^{-j} closed form
    prefactor: Complex64,
    tol: f64,
    max_depth: usize,
) -> Complex64 {
    let p_direct = 45.0;
    let moments = gauss_moments(a, d);
    let mut direct = Complex64::new(0.0, 0.0);
    for item in indices {
        if item.p.abs() > p_direct {
            continue; // covered by the closed-form sums below
        }
        let f = |x: f64| (-a * x * x).exp() / c64(x - item.p, 0.0).powu(ell as u32 + 1);
        let quad = adaptive(&f, -d, d, tol, max_depth).value;
        // subtract the three-term large-p expansion, which the class sums add back
        let sign = if (ell + 1) % 2 == 0 { 1.0 } else { -1.0 };
        let b0 = 1.0;
        let b2 = binom(ell + 2, 2);
        let b4 = binom(ell + 4, 4);
        let asym = sign
            * (moments[0] * b0 / item.p.powi(ell as i32 + 1)
                + moments[1] * b2 / item.p.powi(ell as i32 + 3)
                + moments[2] * b4 / item.p.powi(ell as i32 + 5));
        direct += item.c * (quad - asym);
    }
    let sign = if (ell + 1) % 2 == 0 { 1.0 } else { -1.0 };
    let closed = sign
        * (moments[0] * class_sums(ell + 1)
            + moments[1] * binom(ell + 2, 2) * class_sums(ell + 3)
            + moments[2] * binom(ell + 4, 4) * class_sums(ell + 5));
    let ell_fact: f64 = (1..=ell).map(|x| x as f64).product();
    let deriv_scale = ell_fact * (-slope).powi(ell as i32);
    prefactor * deriv_scale * (direct + closed) / (Complex64::new(0.0, std::f64::consts::PI))
}

fn binom(n: usize, k: usize) -> f64 {
    let mut b = 1.0f64;
    for j in 0..k {
        b = b * (n - j) as f64 / (j + 1) as f64;
    }
    b
}

/// `[∂_z^ℓ ℰ*_D(2z/(iZ); ...)]` by the x-integral route, unrestricted frame,
/// window `|x| ≤ d` (so `D = d²/2`), real `z`.
pub fn estar_x_unrestricted(
    frame: &ModularFrame,
    z: f64,
    big_z: Complex64,
    d: f64,
    ell: usize,
    tol: f64,
    max_depth: usize,
) -> Complex64 {
    let k = frame.k;
    let hk = frame.neg_inv as f64 / k as f64;
    let pi = std::f64::consts::PI;
    let a = pi / (k as f64 * big_z);
    let big_d = d * d / 2.0;
    let pre = (2.0 * pi * big_d / (k as f64 * big_z)).exp();
    let cut = 45i64 + 2 * k;
    let indices = (-cut..=cut).map(move |j| {
        let m = j as f64 + 0.5;
        let sign = if j.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        IndexData {
            c: phase(pi * m * m * hk) * sign,
            p: m - 2.0 * k as f64 * z,
        }
    });
    let class_sums = move |jpow: usize| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for nu in 0..2 * k {
            let m0 = nu as f64 + 0.5;
            let sign = if nu % 2 == 0 { 1.0 } else { -1.0 };
            let u = c64((m0 - 2.0 * k as f64 * z) / (2.0 * k as f64), 0.0);
            acc += phase(pi * m0 * m0 * hk) * sign
                * lattice_inverse_power_sum(u, jpow)
                / (2.0 * k as f64).powi(jpow as i32);
        }
        acc
    };
    estar_x_generic(
        a,
        d,
        ell,
        2.0 * k as f64,
        indices,
        class_sums,
        pre,
        tol,
        max_depth,
    )
}

/// `[𝔼*_{1/(2g²)}]` (ℓ-differentiated) by the x-integral route at a Durfee
/// frame, real `z`; bad indices `|m - α| ≤ 1/g` are excluded.
pub fn estar_x_durfee(
    frame: &ModularFrame,
    z: f64,
    big_z: Complex64,
    ell: usize,
    tol: f64,
    max_depth: usize,
) -> Complex64 {
    let pi = std::f64::consts::PI;
    let g = frame.g as f64;
    let k_cap = frame.k_cap;
    let hh = frame.neg_inv_cap as f64 / k_cap as f64;
    let w_cap = 6.0 * big_z / g; // W = 6Z/g
    let a = pi / (k_cap as f64 * w_cap);
    let d = 1.0 / g;
    let pre = (2.0 * pi / (2.0 * g * g) / (k_cap as f64 * w_cap)).exp();
    let filter = BadMFilter::new(frame);
    let beta = 3.0 * z - frame.h as f64 / frame.k as f64 + 0.5;
    let kb = k_cap as f64 * beta;
    let cphase = move |j: i64| -> Complex64 {
        let m = j as f64 + 0.5;
        let sign = if j.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        phase(pi * (-m / (3.0 * k_cap as f64) + hh * m * m)) * sign
    };
    let cut = 45i64 + 6 * k_cap;
    let indices = (-cut..=cut).filter(|&j| !filter.is_bad(j)).map(move |j| IndexData {
        c: cphase(j),
        p: j as f64 + 0.5 - kb,
    });
    let cache = BernoulliCache::new(40);
    let bad = filter.bad_indices();
    let class_sums = move |jpow: usize| -> Complex64 {
        let period = 6 * k_cap;
        let mut acc = Complex64::new(0.0, 0.0);
        for nu in 0..period {
            let u = c64((nu as f64 + 0.5 - kb) / period as f64, 0.0);
            // at most one excluded index can fall in this residue class
            let excluded = bad
                .iter()
                .find(|&&j| (j - nu).rem_euclid(period) == 0)
                .map(|&j| (j - nu) / period);
            let lattice = match excluded {
                Some(r0) => lattice_inverse_power_sum_excluding(u, jpow, r0, &cache),
                None => lattice_inverse_power_sum(u, jpow),
            };
            acc += cphase(nu) * lattice / (period as f64).powi(jpow as i32);
        }
        acc
    };
    estar_x_generic(
        a,
        d,
        ell,
        3.0 * k_cap as f64,
        indices,
        class_sums,
        pre,
        tol,
        max_depth,
    )
}

/// `ℰ^e_D` at ℓ = 0 (unrestricted): the `|x| ≥ d` remainder with the
/// `(1+iε)` pole prescription, `PV + iπ·sgn(p)·e^{-ap²}` per index.
pub fn eremainder_x_unrestricted(
    frame: &ModularFrame,
    z: f64,
    big_z: Complex64,
    d: f64,
    tol: f64,
    max_depth: usize,
) -> Complex64 {
    let k = frame.k;
    let pi = std::f64::consts::PI;
    let hk = frame.neg_inv as f64 / k as f64;
    let a = pi / (k as f64 * big_z);
    let big_d = d * d / 2.0;
    let pre = (2.0 * pi * big_d / (k as f64 * big_z)).exp();
    let re_a = a.re.max(1e-6);
    let x_far = d + (40.0 / re_a).sqrt();
    let moments = gauss_moments(a, d);
    let f0_full = adaptive(&|x: f64| (-a * x * x).exp(), -x_far, x_far, 1e-14, 24).value;
    let f2_full =
        adaptive(&|x: f64| x * x * (-a * x * x).exp(), -x_far, x_far, 1e-14, 24).value;
    let f4_full = adaptive(
        &|x: f64| x.powi(4) * (-a * x * x).exp(),
        -x_far,
        x_far,
        1e-14,
        24,
    )
    .value;

    let p_direct = 45.0;
    let cut = 45i64 + 2 * k;
    let mut direct = Complex64::new(0.0, 0.0);
    for j in -cut..=cut {
        let m = j as f64 + 0.5;
        let sign = if j.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let c = phase(pi * m * m * hk) * sign;
        let p = m - 2.0 * k as f64 * z;
        if p.abs() > p_direct {
            continue;
        }
        debug_assert!(p.abs() > d, "pole must lie outside the inner window");
        let gauss = move |x: f64| (-a * x * x).exp();
        // side containing the pole: principal value, then + iπ sgn(p) e^{-ap²}
        let (pole_side, plain_side) = if p > 0.0 {
            ((d, x_far.max(p + 5.0)), (-x_far, -d))
        } else {
            (((-x_far).min(p - 5.0), -d), (d, x_far))
        };
        let pv = principal_value(
            &gauss,
            pole_side.0,
            pole_side.1,
            p,
            tol / 4.0,
            max_depth,
        );
        let plain = adaptive(
            &|x: f64| gauss(x) / c64(x - p, 0.0),
            plain_side.0,
            plain_side.1,
            tol / 4.0,
            max_depth,
        );
        let sok = Complex64::new(0.0, pi) * p.signum() * (-a * p * p).exp();
        let val = pv.value + plain.value + sok;
        // subtract the three-term outer expansion (the class sums add it back)
        let asym = -((f0_full - moments[0]) / p
            + (f2_full - moments[1]) / p.powi(3)
            + (f4_full - moments[2]) / p.powi(5));
        direct += c * (val - asym);
    }
    let class_sums = |jpow: usize| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for nu in 0..2 * k {
            let m0 = nu as f64 + 0.5;
            let sign = if nu % 2 == 0 { 1.0 } else { -1.0 };
            let u = c64((m0 - 2.0 * k as f64 * z) / (2.0 * k as f64), 0.0);
            acc += phase(pi * m0 * m0 * hk) * sign
                * lattice_inverse_power_sum(u, jpow)
                / (2.0 * k as f64).powi(jpow as i32);
        }
        acc
    };
    let closed = -((f0_full - moments[0]) * class_sums(1)
        + (f2_full - moments[1]) * class_sums(3)
        + (f4_full - moments[2]) * class_sums(5));
    pre * (direct + closed) / Complex64::new(0.0, pi)
}
