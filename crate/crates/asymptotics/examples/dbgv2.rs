use asymptotics::report::ScaledComplex;
use modsums::{durfee_k_plain, durfee_k_erf1, durfee_k_erf2, singularity_data, MuRange, Sign};
use num_complex::Complex64;
use specfun::{bessel_i, bessel_i_over_pow, BernoulliCache, cot_deriv};
use thetalab::quad::adaptive;
use std::time::Instant;

fn main() {
    let n = 60usize;
    let pi = std::f64::consts::PI;
    let m4 = 4.0 * n as f64 + 1.0;
    let c_k = pi * m4.sqrt() / 3f64.sqrt();
    eprintln!("c_k = {c_k}");
    let t0 = Instant::now();
    let kp = durfee_k_plain(1, 0, 0, n as i64).unwrap();
    eprintln!("durfee_k_plain ok {:?} {kp}", t0.elapsed());
    let t0 = Instant::now();
    let k1 = durfee_k_erf1(1, 0, n as i64, Sign::Plus, 0, 0, 0).unwrap();
    eprintln!("erf1 ok {:?} {k1}", t0.elapsed());
    let t0 = Instant::now();
    let k2 = durfee_k_erf2(1, 0, n as i64, Sign::Plus, 0, 0, MuRange::Inclusive).unwrap();
    eprintln!("erf2 ok {:?} {k2}", t0.elapsed());
    let t0 = Instant::now();
    let s = singularity_data(1, 0, 0);
    eprintln!("singular ok {:?} {s:?}", t0.elapsed());
    // the main-group integral by hand for nu=0..5
    let cache = BernoulliCache::new(28);
    for nu in 0..6i64 {
        let t0 = Instant::now();
        let s = singularity_data(1, 0, nu);
        let shift = (-(2 * nu + 1) + 1) as f64 / 2.0;
        let peak = bessel_i_over_pow(-1.5, c_k).unwrap().ln_abs();
        let r_hat = if s.delta { Some((2 * nu + 1 - 1 + 2 * s.gamma) / 12) } else { None };
        let f = |x: f64| {
            let u = (1.0f64 - x * x).sqrt();
            let w = (x + shift) / 6.0;
            let kernel = if let Some(r_hat) = r_hat {
                let dist = w + r_hat as f64;
                if dist.abs() < 0.05 {
                    specfun::cot_deriv_regularized(0, Complex64::new(w, 0.0), -r_hat, &cache, 12)
                } else {
                    cot_deriv(0, Complex64::new(w, 0.0))
                        - 2.0 * (3.0 / (pi * (x + s.gamma as f64))).powi(1)
                }
            } else {
                cot_deriv(0, Complex64::new(w, 0.0))
            };
            let bes = bessel_i_over_pow(-1.5, c_k * u).unwrap();
            kernel * bes.to_f64_shifted(peak)
        };
        let q = adaptive(&f, -1.0, 1.0, 1e-10, 30);
        eprintln!("nu={nu} delta={} gamma={} quad {:?} panels={} conv={} v={}", s.delta, s.gamma, t0.elapsed(), q.panels, q.converged, q.value);
    }
    // group (iii) t-integral
    let t0 = Instant::now();
    let peak = bessel_i_over_pow(-1.0, c_k).unwrap().ln_abs();
    let f = |t: f64| {
        let bes = bessel_i_over_pow(-1.0, c_k * t).unwrap();
        Complex64::new(bes.to_f64_shifted(peak), 0.0)
    };
    let q = adaptive(&f, 0.0, 1.0, 1e-10, 26);
    eprintln!("t-integral {:?} panels={} v={}", t0.elapsed(), q.panels, q.value);
    let _ = bessel_i(-2.0, c_k).unwrap();
    eprintln!("all done");
}
