//! The Bessel path-integral lemma:
//! `∫_{k/n - ikϑ₁}^{k/n + ikϑ₂} Z^{-ν} e^{AZ + B/Z} dZ
//!   = 2πi (A/B)^{(ν-1)/2} I_{ν-1}(2√(AB)) + error`,
//! with the error scaling like `n^{ν-1/2}` (ν ≥ 0) or `n^{(ν-1)/2}` (ν < 0).
//!
//! The check integrates the displayed segment numerically, and optionally
//! closes the whole Watson loop (the rectangle completed by real-axis tails,
//! whose two banks combine to a `-2i sin(πν)` jump integral) to reproduce
//! the Bessel value itself at quadrature tolerance.

use num_complex::Complex64;

use specfun::bessel_i;
use thetalab::quad::{adaptive, semi_infinite};

#[derive(Clone, Copy, Debug)]
pub struct BesselPathSpec {
    pub k: f64,
    pub n: f64,
    pub nu: f64,
    pub a_coef: f64,
    pub b_coef: f64,
    pub theta1: f64,
    pub theta2: f64,
}

impl BesselPathSpec {
    /// Standard frame scales: `A ≍ n/k`, `B ≍ 1/k`, `kϑ ≍ 1/√n`.
    pub fn frame(n: f64, k: f64, nu: f64) -> Self {
        assert!(k >= 1.0 && n >= k * k, "regime needs k ≲ √n");
        let a_coef = 2.0 * std::f64::consts::PI * n / k;
        let b_coef = std::f64::consts::PI / (6.0 * k);
        // guard: the integrand peak exp(A·k/n + B·n/k) must stay in range
        assert!(
            a_coef * k / n + b_coef * n / k < 600.0,
            "path integrand overflows; pick k closer to √n"
        );
        BesselPathSpec {
            k,
            n,
            nu,
            a_coef,
            b_coef,
            theta1: 1.0 / (k * n.sqrt()),
            theta2: 1.0 / (k * n.sqrt()),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct PathCheckReport {
    pub segment_value: Complex64,
    pub bessel_value: Complex64,
    pub difference: f64,
    pub loop_value: Option<Complex64>,
}

fn integrand(spec: &BesselPathSpec, z: Complex64) -> Complex64 {
    z.powf(-spec.nu) * (spec.a_coef * z + spec.b_coef / z).exp()
}

/// Integrate the displayed segment and compare with the Bessel main term;
/// `close_loop` adds the remaining six pieces of the Watson contour.
pub fn bessel_path_check(spec: &BesselPathSpec, quad_tol: f64, close_loop: bool) -> PathCheckReport {
    let x0 = spec.k / spec.n;
    let seg = adaptive(
        &|t: f64| integrand(spec, Complex64::new(x0, spec.k * t)) * Complex64::new(0.0, spec.k),
        -spec.theta1,
        spec.theta2,
        quad_tol,
        30,
    );
    let ab = spec.a_coef * spec.b_coef;
    let bes = bessel_i(spec.nu - 1.0, 2.0 * ab.sqrt()).unwrap();
    let main = Complex64::new(0.0, 2.0 * std::f64::consts::PI)
        * (spec.a_coef / spec.b_coef).powf((spec.nu - 1.0) / 2.0)
        * bes.to_f64();
    let loop_value = if close_loop {
        Some(close_watson_loop(spec, seg.value, quad_tol))
    } else {
        None
    };
    PathCheckReport {
        segment_value: seg.value,
        bessel_value: main,
        difference: (seg.value - main).norm(),
        loop_value,
    }
}

/// J₂..J₆ plus the combined real-axis banks `J₁+J₇`.
fn close_watson_loop(spec: &BesselPathSpec, j4: Complex64, tol: f64) -> Complex64 {
    let x0 = spec.k / spec.n;
    let h1 = spec.k * spec.theta1;
    let h2 = spec.k * spec.theta2;
    // J₂: from -x0 down to -x0 - ih1
    let j2 = adaptive(
        &|t: f64| integrand(spec, Complex64::new(-x0, -t)) * Complex64::new(0.0, -1.0),
        0.0,
        h1,
        tol,
        30,
    )
    .value;
    // J₃: bottom edge, -x0 - ih1 to x0 - ih1
    let j3 = adaptive(
        &|x: f64| integrand(spec, Complex64::new(x, -h1)),
        -x0,
        x0,
        tol,
        30,
    )
    .value;
    // J₅: top edge, x0 + ih2 to -x0 + ih2 (leftward)
    let j5 = -adaptive(
        &|x: f64| integrand(spec, Complex64::new(x, h2)),
        -x0,
        x0,
        tol,
        30,
    )
    .value;
    // J₆: from -x0 + ih2 down to -x0
    let j6 = -adaptive(
        &|t: f64| integrand(spec, Complex64::new(-x0, t)) * Complex64::new(0.0, 1.0),
        0.0,
        h2,
        tol,
        30,
    )
    .value;
    // J₁+J₇: the banks along (-∞, -x0] combine to
    // 2i sin(πν) ∫_{x0}^{∞} u^{-ν} e^{-Au - B/u} du
    let banks = semi_infinite(
        &|u: f64| {
            Complex64::new(
                u.powf(-spec.nu) * (-spec.a_coef * u - spec.b_coef / u).exp(),
                0.0,
            )
        },
        x0,
        x0.max(1.0 / spec.a_coef),
        tol,
        30,
    )
    .value
        * Complex64::new(0.0, 2.0 * (std::f64::consts::PI * spec.nu).sin());
    j2 + j3 + j4 + j5 + j6 + banks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nu_one_prefactor_is_unity() {
        let spec = BesselPathSpec::frame(400.0, 18.0, 1.0);
        let r = bessel_path_check(&spec, 1e-12, false);
        // (A/B)^0 = 1: main term is 2πi·I₀(2√(AB))
        let i0 = bessel_i(0.0, 2.0 * (spec.a_coef * spec.b_coef).sqrt())
            .unwrap()
            .to_f64();
        assert!((r.bessel_value - Complex64::new(0.0, 2.0 * std::f64::consts::PI) * i0).norm()
            < 1e-10 * i0);
    }

    #[test]
    fn difference_scales_with_n() {
        // ν = 3/2: difference/n^{ν-1/2} = difference/n stays bounded as n
        // quadruples (k tracks √n)
        let mut ratios = Vec::new();
        for n in [10_000.0f64, 40_000.0] {
            let spec = BesselPathSpec::frame(n, (n.sqrt() / 2.0).round(), 1.5);
            let r = bessel_path_check(&spec, 1e-11, false);
            ratios.push(r.difference / n);
        }
        assert!(ratios[1] < 60.0 * ratios[0].max(1e-12), "{ratios:?}");
    }

    #[test]
    fn closed_loop_reproduces_bessel() {
        let spec = BesselPathSpec::frame(144.0, 9.0, 1.5);
        let r = bessel_path_check(&spec, 1e-12, true);
        let loop_v = r.loop_value.unwrap();
        assert!(
            (loop_v - r.bessel_value).norm() < 1e-7 * r.bessel_value.norm(),
            "loop {loop_v} vs bessel {}",
            r.bessel_value
        );
    }
}
