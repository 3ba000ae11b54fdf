//! Log-gamma and reciprocal gamma on the real line (negative arguments
//! included), as needed by the Bessel power series at negative orders.

/// Lanczos coefficients, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma needs positive argument, got {x}");
    if x < 0.5 {
        // reflection keeps the Lanczos sum in its accurate range
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut a = LANCZOS[0];
    let t = x + LANCZOS_G + 0.5;
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
}

/// `1/Γ(x)` for any real `x`; zero at the poles `x = 0, -1, -2, …`.
pub fn recip_gamma(x: f64) -> f64 {
    if x > 0.0 {
        if x > 170.0 {
            return 0.0; // 1/Γ underflows
        }
        (-ln_gamma(x)).exp()
    } else {
        if x == x.floor() {
            return 0.0; // pole of Γ
        }
        // 1/Γ(x) = Γ(1-x) sin(πx) / π, and Γ(1-x) may overflow for very
        // negative x; our domain is x ≥ -10 or so where it cannot.
        let pi = std::f64::consts::PI;
        (ln_gamma(1.0 - x)).exp() * (pi * x).sin() / pi
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_small_integers_and_halves() {
        assert!((ln_gamma(1.0)).abs() < 1e-14);
        assert!((ln_gamma(5.0) - 24f64.ln()).abs() < 1e-13);
        let sqrt_pi = std::f64::consts::PI.sqrt();
        assert!((ln_gamma(0.5) - sqrt_pi.ln()).abs() < 1e-13);
        assert!((ln_gamma(1.5) - (0.5 * sqrt_pi).ln()).abs() < 1e-13);
    }

    #[test]
    fn reciprocal_at_negative_half_integers() {
        // 1/Γ(-1/2) = -1/(2√π)
        let expect = -0.28209479177387814347;
        assert!((recip_gamma(-0.5) - expect).abs() < 1e-14);
        // poles give exactly zero
        assert_eq!(recip_gamma(0.0), 0.0);
        assert_eq!(recip_gamma(-3.0), 0.0);
    }

    #[test]
    fn recurrence_holds() {
        // Γ(x+1) = xΓ(x) => recip_gamma(x) = x * recip_gamma(x+1)
        for &x in &[-4.5, -2.3, -0.7, 0.3, 2.2, 7.9] {
            let lhs = recip_gamma(x);
            let rhs = x * recip_gamma(x + 1.0);
            assert!(
                (lhs - rhs).abs() <= 1e-13 * lhs.abs().max(1e-3),
                "x={x}: {lhs} vs {rhs}"
            );
        }
    }
}
