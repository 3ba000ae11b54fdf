//! Leading rank/crank moment asymptotics
//! `N_{2ℓ}(n) ~ M_{2ℓ}(n) ~ (2^{2ℓ} - 2)|B_{2ℓ}|(6n)^ℓ p(n)`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use specfun::BernoulliCache;

/// `(2^{2ℓ} - 2)|B_{2ℓ}|(6n)^ℓ · p(n)` with `p(n)` supplied exactly.
pub fn rank_crank_leading(n: usize, ell: usize, p_n: &BigInt) -> f64 {
    assert!(ell >= 1);
    let cache = BernoulliCache::new(2 * ell);
    let b = cache.b_f64(2 * ell).abs();
    let p = p_n.to_f64().expect("p(n) fits in f64 range for n <= 10^4");
    (2f64.powi(2 * ell as i32) - 2.0) * b * (6.0 * n as f64).powi(ell as i32) * p
}

#[cfg(test)]
mod tests {
    use super::*;
    use qseries::partition_numbers;

    #[test]
    fn ell_one_is_two_n_p() {
        // (4-2)·|1/6|·6n = 2n
        let p = partition_numbers(100);
        let v = rank_crank_leading(100, 1, &p[100]);
        let expect = 2.0 * 100.0 * 190569292.0;
        assert!((v - expect).abs() < 1e-6 * expect);
    }

    #[test]
    fn second_moment_ratios_approach_one() {
        use qseries::{jet_moments, Family};
        let p = partition_numbers(500);
        let n2 = jet_moments(Family::Rank, 2, 500);
        let m2 = jet_moments(Family::Crank, 2, 500);
        let mut prev_n = f64::INFINITY;
        for n in [100usize, 200, 500] {
            let lead = rank_crank_leading(n, 1, &p[n]);
            let rn = n2[1].value(n).unwrap().to_f64().unwrap() / lead;
            let rm = m2[1].value(n).unwrap().to_f64().unwrap() / lead;
            assert!((rn - 1.0).abs() < prev_n + 1e-12, "N2 ratio not improving at n={n}");
            assert!((rm - 1.0).abs() < 1e-12, "crank second moment is exactly 2n·p(n)");
            prev_n = (rn - 1.0).abs();
        }
        let lead = rank_crank_leading(500, 1, &p[500]);
        let rn = n2[1].value(500).unwrap().to_f64().unwrap() / lead;
        assert!((rn - 1.0).abs() <= 0.2);
    }
}
