//! Partition numbers by the pentagonal-number recurrence.

use num_bigint::BigInt;
use num_traits::Zero;

/// Exact `p(0..=n_max)` via Euler's pentagonal recurrence,
/// `p(n) = Σ_{k≥1} (-1)^{k-1} (p(n - k(3k-1)/2) + p(n - k(3k+1)/2))`,
/// with `p(0) = 1`.
pub fn partition_numbers(n_max: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n_max + 1];
    p[0] = BigInt::from(1);
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        let mut k: usize = 1;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 > n && g2 > n {
                break;
            }
            if k % 2 == 1 {
                if g1 <= n {
                    acc += &p[n - g1];
                }
                if g2 <= n {
                    acc += &p[n - g2];
                }
            } else {
                if g1 <= n {
                    acc -= &p[n - g1];
                }
                if g2 <= n {
                    acc -= &p[n - g2];
                }
            }
            k += 1;
        }
        p[n] = acc;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: enumerate partitions of `n` directly.
    fn count_partitions(n: usize) -> u64 {
        fn go(n: usize, max_part: usize) -> u64 {
            if n == 0 {
                return 1;
            }
            (1..=max_part.min(n)).map(|p| go(n - p, p)).sum()
        }
        go(n, n)
    }

    #[test]
    fn base_case() {
        assert_eq!(partition_numbers(0), vec![BigInt::from(1)]);
    }

    #[test]
    fn matches_enumeration() {
        let p = partition_numbers(12);
        for n in 0..=12usize {
            assert_eq!(p[n], BigInt::from(count_partitions(n)), "p({n})");
        }
        assert_eq!(p[4], BigInt::from(5));
        assert_eq!(p[9], BigInt::from(30));
    }

    #[test]
    fn known_large_values() {
        let p = partition_numbers(500);
        assert_eq!(p[100], "190569292".parse::<BigInt>().unwrap());
        assert_eq!(p[200], "3972999029388".parse::<BigInt>().unwrap());
        assert_eq!(p[500], "2300165032574323995027".parse::<BigInt>().unwrap());
    }

    #[test]
    fn ramanujan_congruence_mod_five() {
        let p = partition_numbers(9);
        
        assert_eq!(&p[9] % BigInt::from(5), BigInt::from(0));
    }
}
