//! Brute-force enumeration oracles for unimodal and Durfee-unimodal ranks.
//!
//! A unimodal sequence of size `n` is data `a_1 ≤ … ≤ a_r ≤ c ≥ b_1 ≥ … ≥ b_s`
//! with `a_1 + … + c + … + b_s = n`; its rank is `s - r`. The Durfee variant
//! additionally requires every falling part to be at most `c - k`, where `k`
//! is the side of the Durfee square of the rising partition `(a_1, …, a_r)`.
//! (The generating function pins this reading down: bounding only the
//! smallest falling part disagrees with the series at `n = 6`.)
//!
//! Enumeration is exponential, so sizes are capped at 25.

use std::collections::BTreeMap;

use crate::error::QSeriesError;
use crate::table::Family;

const MAX_BRUTE_N: usize = 25;

/// Multiset of ranks (rank -> count) over all size-`n` sequences of `family`.
pub fn brute_force_table(family: Family, n: usize) -> Result<BTreeMap<i64, u64>, QSeriesError> {
    if n > MAX_BRUTE_N {
        return Err(QSeriesError::SizeLimit(n));
    }
    let durfee = match family {
        Family::Unimodal => false,
        Family::Durfee => true,
        _ => panic!("brute force only enumerates unimodal and durfee families"),
    };
    let mut ranks: BTreeMap<i64, u64> = BTreeMap::new();
    if n == 0 {
        ranks.insert(0, 1); // the empty sequence
        return Ok(ranks);
    }
    for c in 1..=n {
        let rem = n - c;
        for a_sum in 0..=rem {
            let b_sum = rem - a_sum;
            for &(r, k) in &partitions_with_stats(a_sum, c) {
                let b_bound = if durfee {
                    if c < k {
                        continue;
                    }
                    c - k
                } else {
                    c
                };
                for (s, count) in partition_counts_by_parts(b_sum, b_bound) {
                    *ranks.entry(s as i64 - r as i64).or_insert(0) += count;
                }
            }
        }
    }
    Ok(ranks)
}

/// All partitions of `n` with parts ≤ `max_part`, reported as
/// (number of parts, Durfee-square side) pairs.
fn partitions_with_stats(n: usize, max_part: usize) -> Vec<(usize, usize)> {
    fn go(n: usize, max_part: usize, parts: &mut Vec<usize>, out: &mut Vec<(usize, usize)>) {
        if n == 0 {
            let durfee = parts.iter().enumerate().filter(|(i, &p)| p >= i + 1).count();
            out.push((parts.len(), durfee));
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            parts.push(p);
            go(n - p, p, parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, &mut Vec::new(), &mut out);
    out
}

/// Counts of partitions of `n` with parts ≤ `max_part`, by number of parts.
fn partition_counts_by_parts(n: usize, max_part: usize) -> BTreeMap<usize, u64> {
    // dp[s][r]: partitions of s into r parts from {1..=p}, p sweeping upward;
    // the in-place ascending-s update admits unbounded multiplicity per part.
    let mut dp = vec![vec![0u64; n + 1]; n + 1];
    dp[0][0] = 1;
    for p in 1..=max_part.min(n) {
        for s in p..=n {
            for r in 1..=s {
                let add = dp[s - p][r - 1];
                if add > 0 {
                    dp[s][r] += add;
                }
            }
        }
    }
    dp[n]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(r, &c)| (r, c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moments::moments;
    use crate::table::build_rank_table;
    use num_bigint::BigInt;

    #[test]
    fn unimodal_tiny_cases() {
        let r1 = brute_force_table(Family::Unimodal, 1).unwrap();
        assert_eq!(r1, BTreeMap::from([(0, 1)]));
        let r2 = brute_force_table(Family::Unimodal, 2).unwrap();
        assert_eq!(r2, BTreeMap::from([(-1, 1), (0, 1), (1, 1)]));
        let r3 = brute_force_table(Family::Unimodal, 3).unwrap();
        assert_eq!(
            r3,
            BTreeMap::from([(-2, 1), (-1, 1), (0, 2), (1, 1), (2, 1)])
        );
    }

    #[test]
    fn size_limit_enforced() {
        assert!(matches!(
            brute_force_table(Family::Unimodal, 26),
            Err(QSeriesError::SizeLimit(26))
        ));
    }

    #[test]
    fn matches_generating_function_rows() {
        for fam in [Family::Unimodal, Family::Durfee] {
            let t = build_rank_table(fam, 16, 16).unwrap();
            for n in 0..=16usize {
                let brute = brute_force_table(fam, n).unwrap();
                let gf: BTreeMap<i64, u64> = t
                    .row(n)
                    .into_iter()
                    .map(|(m, c)| (m, c.to_string().parse::<u64>().unwrap()))
                    .collect();
                assert_eq!(brute, gf, "{fam:?} row n={n}");
            }
        }
    }

    #[test]
    fn durfee_moment_cross_check() {
        let t = build_rank_table(Family::Durfee, 12, 12).unwrap();
        let m2 = moments(&t, 2);
        for n in 0..=12usize {
            let brute = brute_force_table(Family::Durfee, n).unwrap();
            let expect: i64 = brute.iter().map(|(m, c)| m * m * *c as i64).sum();
            assert_eq!(m2.value(n).unwrap(), &BigInt::from(expect), "n={n}");
        }
    }
}
