//! Singularity bookkeeping for the Durfee cot-kernel integrals: the
//! indicators γ_{k,ϱ,ν}, δ_{k,ϱ,ν}, ε±_{k,ϱ} and the "bad m" set
//! `{m ∈ ℤ+1/2 : |m - α_{H,K}| ≤ 1/gcd(k,6)}`.
//!
//! The congruences involve `k/2` and `g(ν+1/2)`; both sides are doubled and
//! decided mod `12k` in integers, so nothing touches floating point.

use num_integer::Integer;
use num_rational::Ratio;

use crate::frame::ModularFrame;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SingularityData {
    /// -1, 0, or 1; nonzero only when `delta` is set.
    pub gamma: i64,
    /// 1 iff some `r ∈ ℤ` has `|6kr + g(ν+1/2) - k/2 + ϱ| ≤ 1`.
    pub delta: bool,
    pub eps_plus: bool,
    pub eps_minus: bool,
}

/// γ, δ for the triple `(k, ϱ, ν)` and ε± for `(k, ϱ)`.
pub fn singularity_data(k: i64, rho: i64, nu: i64) -> SingularityData {
    let g = k.gcd(&6);
    // doubled: x = g(2ν+1) - k + 2ϱ reduced into (-6k, 6k]
    let x = (g * (2 * nu + 1) - k + 2 * rho).rem_euclid(12 * k);
    let x = if x > 6 * k { x - 12 * k } else { x };
    // parity forces x even, so |x| ≤ 2 means x ∈ {-2, 0, 2}
    let delta = x.abs() <= 2;
    let gamma = match x {
        -2 => 1,  // g(ν+1/2) ≡ k/2 - ϱ - 1
        2 => -1,  // g(ν+1/2) ≡ k/2 - ϱ + 1
        _ => 0,
    };
    let (eps_plus, eps_minus) = eps_pm(k, rho);
    SingularityData {
        gamma: if delta { gamma } else { 0 },
        delta,
        eps_plus,
        eps_minus,
    }
}

fn eps_pm(k: i64, rho: i64) -> (bool, bool) {
    let g12 = k.gcd(&12);
    if ![1, 2, 3, 6].contains(&g12) {
        return (false, false);
    }
    let g3 = k.gcd(&3);
    let plus = rho.rem_euclid(g3) == 1i64.rem_euclid(g3);
    let minus = rho.rem_euclid(g3) == (-1i64).rem_euclid(g3);
    (plus, minus)
}

/// `{m ∈ ℤ+1/2 : |m - α_{H,K}| ≤ 1/g}` as exact rationals (halves).
pub fn bad_m_set(frame: &ModularFrame) -> Vec<Ratio<i64>> {
    let alpha = frame.alpha();
    let bound = Ratio::new(1, frame.g);
    let mut out = Vec::new();
    // scan half-integers in a window of width 2 around α
    let lo = (alpha - bound).floor().to_integer() - 1;
    let hi = (alpha + bound).ceil().to_integer() + 1;
    for j in lo..=hi {
        let m = Ratio::new(2 * j + 1, 2);
        let d = if m > alpha { m - alpha } else { alpha - m };
        if d <= bound {
            out.push(m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_matches_brute_scan() {
        for k in 1..=30i64 {
            let g = num_integer::gcd(k, 6);
            for rho in (0..g).filter(|r| num_integer::gcd(*r, g) == 1) {
                let k_cap = k / g;
                for nu in 0..6 * k_cap {
                    let s = singularity_data(k, rho, nu);
                    // brute-force scan over r: |6kr + g(ν+1/2) - k/2 + ϱ| ≤ 1,
                    // doubled to stay in integers
                    let mut found = false;
                    let mut found_gamma = 0i64;
                    for r in -2 * k..=2 * k {
                        let doubled = 12 * k * r + g * (2 * nu + 1) - k + 2 * rho;
                        if doubled.abs() <= 2 {
                            found = true;
                            found_gamma = match doubled {
                                -2 => 1,
                                2 => -1,
                                _ => 0,
                            };
                        }
                    }
                    assert_eq!(s.delta, found, "delta k={k} rho={rho} nu={nu}");
                    assert_eq!(s.gamma, found_gamma, "gamma k={k} rho={rho} nu={nu}");
                    assert!(s.gamma == 0 || s.delta);
                }
            }
        }
    }

    #[test]
    fn bad_m_cardinalities_follow_the_case_table() {
        // number of bad m: 3 / 2 / 1 / 1 / 1 / 0 for
        // gcd(k,12) = 1 / 2 / 4 / {3,6} h≡1 / {3,6} h≡2 / 12
        for k in 1..=48i64 {
            for h in 0..k.max(1) {
                if num_integer::gcd(h, k) != 1 {
                    continue;
                }
                let f = ModularFrame::new(h, k).unwrap();
                let set = bad_m_set(&f);
                let g12 = num_integer::gcd(k, 12);
                let expect: usize = match g12 {
                    1 => 3,
                    2 => 2,
                    4 => 1,
                    3 | 6 => 1,
                    12 => 0,
                    _ => unreachable!(),
                };
                assert_eq!(set.len(), expect, "k={k} h={h} set={set:?}");
                // and the located elements match the table
                let alpha = f.alpha();
                match g12 {
                    1 => {
                        assert!(set.contains(&alpha));
                        assert!(set.contains(&(alpha + Ratio::new(1, 1))));
                        assert!(set.contains(&(alpha - Ratio::new(1, 1))));
                    }
                    2 => {
                        assert!(set.contains(&(alpha + Ratio::new(1, 2))));
                        assert!(set.contains(&(alpha - Ratio::new(1, 2))));
                    }
                    4 => assert_eq!(set, vec![alpha]),
                    3 | 6 => {
                        let shift = Ratio::new(1, f.g);
                        if h.rem_euclid(3) == 1 {
                            assert_eq!(set, vec![alpha + shift], "k={k} h={h}");
                        } else {
                            assert_eq!(set, vec![alpha - shift], "k={k} h={h}");
                        }
                    }
                    _ => {}
                }
            }
        }
    }

    #[test]
    fn gcd4_means_alpha_itself() {
        let f = ModularFrame::new(1, 4).unwrap();
        assert_eq!(bad_m_set(&f), vec![f.alpha()]);
    }

    #[test]
    fn eps_flags() {
        // gcd(k,12) = 12 kills both
        let s = singularity_data(12, 1, 0);
        assert!(!s.eps_plus && !s.eps_minus);
        // gcd(k,3) = 1 (and gcd(k,12) ∈ {1,2}) sets both
        let s = singularity_data(2, 1, 0);
        assert!(s.eps_plus && s.eps_minus);
        let s = singularity_data(1, 0, 0);
        assert!(s.eps_plus && s.eps_minus);
        // gcd(k,3) = 3: ϱ ≡ 1 vs ϱ ≡ 2 picks one
        let s = singularity_data(3, 1, 0);
        assert!(s.eps_plus && !s.eps_minus);
        let s = singularity_data(3, 2, 0);
        assert!(!s.eps_plus && s.eps_minus);
    }
}
