//! Rademacher's exact formula
//! `p(n) = 2π/(24n-1)^{3/4} Σ_{k≥1} (A_k(n)/k) I_{3/2}(π√(24n-1)/(6k))`,
//! truncated at `k ≤ K_max`.

use modsums::kloosterman_a;
use specfun::bessel_i;

/// Truncated Rademacher series; rounds to the exact `p(n)` once `K_max`
/// clears `⌈√n⌉ + O(1)`. Panics on `n = 0` (the formula is stated for
/// positive `n`).
pub fn rademacher_p(n: usize, k_max: i64) -> f64 {
    assert!(n >= 1, "the exact formula is stated for n >= 1");
    let m = 24.0 * n as f64 - 1.0;
    let base_log = bessel_i(1.5, std::f64::consts::PI * m.sqrt() / 6.0)
        .expect("argument is positive")
        .ln_abs();
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for k in 1..=k_max {
        let a_k = kloosterman_a(k, n as i64);
        let bessel = bessel_i(1.5, std::f64::consts::PI * m.sqrt() / (6.0 * k as f64))
            .expect("argument is positive");
        let term = a_k.re / k as f64 * bessel.to_f64_shifted(base_log);
        let y = term - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    2.0 * std::f64::consts::PI / m.powf(0.75) * base_log.exp() * sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values_round_exactly() {
        assert_eq!(rademacher_p(1, 5).round() as i64, 1);
        assert_eq!(rademacher_p(4, 4).round() as i64, 5);
        assert_eq!(rademacher_p(9, 5).round() as i64, 30);
        assert_eq!(rademacher_p(20, 7).round() as i64, 627);
    }

    #[test]
    fn n_100_at_k12() {
        let v = rademacher_p(100, 12);
        assert!((v - 190569292.0).abs() < 0.5, "{v}");
    }

    #[test]
    fn partial_sums_tighten() {
        let exact = 190569292.0f64;
        let e2 = (rademacher_p(100, 2) - exact).abs();
        let e4 = (rademacher_p(100, 4) - exact).abs();
        let e8 = (rademacher_p(100, 8) - exact).abs();
        assert!(e8 < e2, "errors {e2} {e4} {e8}");
        assert!(e4 < 2.0 * e2);
    }
}
