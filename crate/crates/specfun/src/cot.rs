//! Cot-derivative kernels `C_j(w) = ((1/2πi) d/dw)^j cot(πw)` and their
//! pole-regularized companions.
//!
//! Each derivative of `cot(πw)` is a polynomial in `c = cot(πw)`:
//! `d/dw [π^j p_j(c)] = π^{j+1} (-p_j'(c))(1 + c²)`, so
//! `C_j(w) = p_j(cot πw) / (2i)^j` with integer-coefficient `p_j`.
//! No finite differences anywhere.
//!
//! Near an integer `r`, `C_j(w) ~ A_j/(w-r)^{j+1}` with
//! `A_j = j!(-1)^j / ((2πi)^j π)`; the regularized value `C_j - pole` is
//! needed by the Durfee removable-singularity handler and is computed from
//! the Laurent expansion of `cot`, whose coefficients are Bernoulli data.

use num_complex::Complex64;

use crate::bernoulli::{rational_to_f64, BernoulliCache};

const MAX_J: usize = 12;

/// Integer coefficient polynomials `p_j` with `p_0(c) = c`,
/// `p_{j+1} = -(1 + c²) p_j'`.
fn cot_polynomials() -> Vec<Vec<i128>> {
    let mut polys: Vec<Vec<i128>> = vec![vec![0, 1]]; // p_0 = c
    for _ in 0..MAX_J {
        let p = polys.last().unwrap();
        // derivative
        let mut d = vec![0i128; p.len().max(2) - 1];
        for (k, &a) in p.iter().enumerate().skip(1) {
            d[k - 1] = a * k as i128;
        }
        // multiply by -(1 + c^2)
        let mut next = vec![0i128; d.len() + 2];
        for (k, &a) in d.iter().enumerate() {
            next[k] -= a;
            next[k + 2] -= a;
        }
        polys.push(next);
    }
    polys
}

fn eval_poly(p: &[i128], c: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &a in p.iter().rev() {
        acc = acc * c + Complex64::new(a as f64, 0.0);
    }
    acc
}

/// `(2i)^{-j}` with the principal phases.
fn two_i_pow_neg(j: usize) -> Complex64 {
    let mag = 2f64.powi(-(j as i32));
    let phase = match j % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    };
    phase * mag
}

/// `C_j(w)`; panics if `w` is an integer (pole) or `j > 12`.
pub fn cot_deriv(j: usize, w: Complex64) -> Complex64 {
    assert!(j <= MAX_J, "cot polynomials tabulated through j = {MAX_J}");
    let dist = (w.re - w.re.round()).hypot(w.im);
    assert!(dist > 0.0, "cot derivative evaluated at a pole");
    let c = (std::f64::consts::PI * w).cos() / (std::f64::consts::PI * w).sin();
    let polys = cot_polys_cached();
    eval_poly(&polys[j], c) * two_i_pow_neg(j)
}

fn cot_polys_cached() -> &'static Vec<Vec<i128>> {
    use std::sync::OnceLock;
    static POLYS: OnceLock<Vec<Vec<i128>>> = OnceLock::new();
    POLYS.get_or_init(cot_polynomials)
}

/// Leading Laurent coefficient: `C_j(w) ~ pole_coeff(j)/(w-r)^{j+1}` as
/// `w → r ∈ ℤ`; equals `j!(-1)^j / ((2πi)^j π)`.
pub fn cot_deriv_pole_coeff(j: usize) -> Complex64 {
    let fact: f64 = (1..=j).map(|x| x as f64).product();
    let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
    let two_pi_i_pow = {
        let mag = (2.0 * std::f64::consts::PI).powi(j as i32);
        let phase = match j % 4 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
        phase * mag
    };
    Complex64::new(fact * sign / std::f64::consts::PI, 0.0) / two_pi_i_pow
}

/// `C_j(w) - pole_coeff(j)/(w-r)^{j+1}` for `w` near the integer `r`,
/// via the Laurent-difference expansion (terms through `(w-r)^{2·terms}`).
///
/// `cot(πw) - 1/(π(w-r)) = Σ_{n≥1} t_n (w-r)^{2n-1}`,
/// `t_n = (-1)^n 2^{2n} B_{2n} π^{2n-1} / (2n)!`; differentiating term by
/// term keeps everything explicit. Ten terms give ~1e-14 inside |w-r| < 0.3.
pub fn cot_deriv_regularized(
    j: usize,
    w: Complex64,
    r: i64,
    cache: &BernoulliCache,
    terms: usize,
) -> Complex64 {
    let u = w - Complex64::new(r as f64, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 1..=terms {
        let e = 2 * n - 1; // power of u in the cot Laurent tail
        if e < j {
            continue;
        }
        let b2n = rational_to_f64(cache.b(2 * n));
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let t_n = sign * 2f64.powi(2 * n as i32) * b2n * std::f64::consts::PI.powi(2 * n as i32 - 1)
            / factorial_f64(2 * n);
        // d^j/dw^j u^e = e!/(e-j)! u^{e-j}
        let fall: f64 = (e - j + 1..=e).map(|x| x as f64).product();
        acc += u.powi((e - j) as i32) * (t_n * fall);
    }
    acc * two_i_pow_neg(j) * std::f64::consts::PI.powi(-(j as i32))
}

fn factorial_f64(n: usize) -> f64 {
    (1..=n).map(|x| x as f64).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c64(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn c0_is_cot() {
        let v = cot_deriv(0, c64(0.25, 0.0));
        assert!((v - c64(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn c1_at_quarter_is_i() {
        // C_1(1/4) = (1/2πi)(-π csc²(π/4)) = i
        let v = cot_deriv(1, c64(0.25, 0.0));
        assert!((v - c64(0.0, 1.0)).norm() < 1e-14, "{v}");
    }

    #[test]
    fn reference_values() {
        // frozen from independent multiprecision differentiation
        let cases = [
            (2, c64(0.3, 0.1), c64(-0.25331730954421850131, 0.44071662660163736872)),
            (3, c64(0.3, 0.1), c64(-0.72321651195112308321, -0.24558099287380439273)),
            (5, c64(-0.2, 0.4), c64(-0.16976407053768530093, 0.44895486249131889619)),
            (4, c64(0.37, 0.0), c64(0.65809067754912628677, 0.0)),
        ];
        for (j, w, expect) in cases {
            let v = cot_deriv(j, w);
            assert!((v - expect).norm() < 1e-13 * expect.norm(), "C_{j}({w}): {v}");
        }
    }

    #[test]
    fn finite_difference_cross_check() {
        // central differences of C_{j-1} approximate 2πi·C_j
        let w = c64(0.3, 0.1);
        let h = 1e-5;
        for j in 1..=3usize {
            let num = (cot_deriv(j - 1, w + c64(h, 0.0)) - cot_deriv(j - 1, w - c64(h, 0.0)))
                / c64(2.0 * h, 0.0);
            let v = cot_deriv(j, w) * c64(0.0, 2.0 * std::f64::consts::PI);
            assert!((num - v).norm() < 1e-8 * v.norm().max(1.0), "j={j}");
        }
    }

    #[test]
    fn pole_coefficient_limit() {
        // C_j(w)(w-r)^{j+1} -> j!(-1)^j/((2πi)^j π) as w -> r
        let cache = BernoulliCache::new(24);
        for j in 0..=4usize {
            let a = cot_deriv_pole_coeff(j);
            for &eps in &[1e-2, 1e-3] {
                for r in [-1i64, 0, 2] {
                    let w = c64(r as f64 + eps, eps * 0.5);
                    let u = w - c64(r as f64, 0.0);
                    let approached = cot_deriv(j, w) * u.powi(j as i32 + 1);
                    assert!(
                        (approached - a).norm() < 10.0 * eps * a.norm(),
                        "j={j} r={r} eps={eps}: {approached} vs {a}"
                    );
                }
            }
        }
        let _ = cache;
    }

    #[test]
    fn regularized_matches_direct_subtraction() {
        let cache = BernoulliCache::new(24);
        for j in 0..=4usize {
            let a = cot_deriv_pole_coeff(j);
            for r in [0i64, 1, -2] {
                for &d in &[0.04, 0.02, 0.008] {
                    let w = c64(r as f64 + d, -0.3 * d);
                    let direct =
                        cot_deriv(j, w) - a / (w - c64(r as f64, 0.0)).powi(j as i32 + 1);
                    let reg = cot_deriv_regularized(j, w, r, &cache, 10);
                    // the direct subtraction cancels ~|pole|/|reg| digits, so
                    // it only pins the expansion down to that precision
                    let pole_size = (a / (w - c64(r as f64, 0.0)).powi(j as i32 + 1)).norm();
                    let tol = 1e-13 * pole_size + 1e-12 * reg.norm();
                    assert!(
                        (direct - reg).norm() < tol,
                        "j={j} r={r} d={d}: {direct} vs {reg}"
                    );
                }
            }
        }
    }
}
