//! Rank moments `Σ_m m^ℓ c(m, n)`, by table summation and by jets.
//!
//! The jet route replaces the ζ-dimension with order-`ℓ_max` jets: the
//! coefficient of `q^n` in the jet-valued expansion is the jet of
//! `Σ_m c(m,n) ζ^m` at `z = 0`, whose scaled component `ℓ` is exactly the
//! `ℓ`-th moment. This scales to `n ≈ 2000` where full tables do not.

use num_bigint::BigInt;
use std::collections::BTreeMap;

use crate::jet::Jet;
use crate::ring::Coeff;
use crate::series::QSeries;
use crate::table::{Family, RankTable};

/// One moment order of one family: `values[n] = Σ_m m^ℓ c(m, n)`.
#[derive(Clone, PartialEq, Debug)]
pub struct MomentSequence {
    pub family: Family,
    pub ell: usize,
    pub values: BTreeMap<usize, BigInt>,
}

impl MomentSequence {
    pub fn value(&self, n: usize) -> Option<&BigInt> {
        self.values.get(&n)
    }
}

/// Moments from a full bivariate table.
pub fn moments(table: &RankTable, ell: usize) -> MomentSequence {
    let mut values = BTreeMap::new();
    for n in 0..=table.n_max() {
        let mut acc = BigInt::from(0);
        for (m, c) in table.row(n) {
            let mut p = BigInt::from(1);
            for _ in 0..ell {
                p *= m;
            }
            acc += p * c;
        }
        values.insert(n, acc);
    }
    MomentSequence {
        family: table.family,
        ell,
        values,
    }
}

/// Jet-valued expansion of the family's generating function to order
/// `q^{n_max}`, jets of order `ell_max`.
pub fn jet_expansion(family: Family, ell_max: usize, n_max: usize) -> QSeries<Jet<BigInt>> {
    let zp = Jet::<BigInt>::zeta_pow(1, ell_max);
    let zm = Jet::<BigInt>::zeta_pow(-1, ell_max);
    let len = n_max + 1;
    let one = Jet::<BigInt>::one(ell_max);
    let zseries = |off: i64| QSeries::filled(off, len, Jet::<BigInt>::zero(ell_max));
    match family {
        Family::Unimodal => {
            let mut total = zseries(0);
            total.coeff_mut(0).add_assign(&one);
            let mut term = zseries(0);
            term.coeff_mut(0).add_assign(&one);
            for j in 1..=n_max {
                term.shift(24);
                term = renormalize(term, len, ell_max);
                term.div_one_minus(&zp, j);
                term.div_one_minus(&zm, j);
                add_into(&mut total, &term);
            }
            total
        }
        Family::Durfee => {
            // single-sum footnote form, term ratio
            // q (1-q^{2m-1})(1-q^{2m}) / ((1-q^m)(1-ζq^m)(1-ζ^{-1}q^m))
            let mut total = zseries(0);
            total.coeff_mut(0).add_assign(&one);
            let mut term = zseries(0);
            term.coeff_mut(0).add_assign(&one);
            for m in 1..=n_max {
                term.shift(24);
                term = renormalize(term, len, ell_max);
                term.mul_one_minus(&one, 2 * m - 1);
                term.mul_one_minus(&one, 2 * m);
                term.div_one_minus(&one, m);
                term.div_one_minus(&zp, m);
                term.div_one_minus(&zm, m);
                add_into(&mut total, &term);
            }
            total
        }
        Family::Rank => {
            let mut total = zseries(0);
            total.coeff_mut(0).add_assign(&one);
            let mut term = zseries(0);
            term.coeff_mut(0).add_assign(&one);
            let mut j = 1usize;
            while j * j <= n_max {
                term.shift(24 * (2 * j as i64 - 1));
                term = renormalize(term, len, ell_max);
                term.div_one_minus(&zp, j);
                term.div_one_minus(&zm, j);
                add_into(&mut total, &term);
                j += 1;
            }
            total
        }
        Family::Crank => {
            let mut t = zseries(0);
            t.coeff_mut(0).add_assign(&one);
            for j in 1..=n_max {
                t.mul_one_minus(&one, j);
                t.div_one_minus(&zp, j);
                t.div_one_minus(&zm, j);
            }
            t
        }
    }
}

/// Re-materialize a shifted series on the `[0, len)` window with zero jets
/// of the right order below its offset.
fn renormalize(s: QSeries<Jet<BigInt>>, len: usize, ell_max: usize) -> QSeries<Jet<BigInt>> {
    let off = (s.offset24 / 24) as usize;
    let mut out = QSeries::filled(0, len, Jet::<BigInt>::zero(ell_max));
    for i in 0..len {
        *out.coeff_mut(i) = if i >= off && i - off < s.len() {
            s.coeff(i - off).clone()
        } else {
            Jet::zero(ell_max)
        };
    }
    out
}

fn add_into(total: &mut QSeries<Jet<BigInt>>, term: &QSeries<Jet<BigInt>>) {
    debug_assert_eq!(total.offset24, 0);
    debug_assert_eq!(term.offset24, 0);
    for i in 0..total.len().min(term.len()) {
        let t = term.coeff(i).clone();
        total.coeff_mut(i).add_assign(&t);
    }
}

/// Even moments `ℓ = 0, 2, …, ℓ_max` for `n ≤ n_max`, extracted from one
/// jet-valued expansion. Scaled jet component `ℓ` is the moment directly
/// (the `ℓ!` from the Taylor coefficient cancels the stored scaling).
pub fn jet_moments(family: Family, ell_max: usize, n_max: usize) -> Vec<MomentSequence> {
    let series = jet_expansion(family, ell_max, n_max);
    let mut out = Vec::new();
    let mut ell = 0usize;
    while ell <= ell_max {
        let mut values = BTreeMap::new();
        for n in 0..=n_max {
            values.insert(n, series.coeff(n).scaled(ell).clone());
        }
        out.push(MomentSequence {
            family,
            ell,
            values,
        });
        ell += 2;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partition_numbers;
    use crate::table::build_rank_table;

    #[test]
    fn odd_moments_vanish() {
        for fam in [Family::Rank, Family::Crank, Family::Unimodal, Family::Durfee] {
            let t = build_rank_table(fam, 20, 20).unwrap();
            for ell in [1usize, 3] {
                let m = moments(&t, ell);
                assert!(
                    m.values.values().all(|v| v == &BigInt::from(0)),
                    "{fam:?} moment {ell} not identically zero"
                );
            }
        }
    }

    #[test]
    fn zeroth_rank_moment_is_partition_count() {
        let t = build_rank_table(Family::Rank, 25, 25).unwrap();
        let m = moments(&t, 0);
        let p = partition_numbers(25);
        for n in 0..=25usize {
            assert_eq!(m.value(n).unwrap(), &p[n]);
        }
    }

    #[test]
    fn unimodal_second_moment_at_three() {
        // ranks of size-3 unimodal sequences are {-2,-1,0,0,1,2};
        // second moment 4+1+0+0+1+4 = 10
        let t = build_rank_table(Family::Unimodal, 5, 5).unwrap();
        assert_eq!(moments(&t, 2).value(3).unwrap(), &BigInt::from(10));
    }

    #[test]
    fn jet_moments_match_table_moments() {
        for fam in [Family::Rank, Family::Crank, Family::Unimodal, Family::Durfee] {
            let t = build_rank_table(fam, 40, 40).unwrap();
            let jets = jet_moments(fam, 4, 40);
            for ms in &jets {
                let tm = moments(&t, ms.ell);
                assert_eq!(ms.values, tm.values, "{fam:?} ell={}", ms.ell);
            }
        }
    }

    #[test]
    fn jet_moments_frozen_oracle_values() {
        // frozen from an independent dynamic-programming run
        let u = jet_moments(Family::Unimodal, 2, 100);
        assert_eq!(u[0].value(100).unwrap(), &"962542413673".parse().unwrap());
        assert_eq!(
            u[1].value(100).unwrap(),
            &"95450708518644".parse().unwrap()
        );
        let v = jet_moments(Family::Durfee, 2, 100);
        assert_eq!(v[0].value(6).unwrap(), &BigInt::from(31));
    }
}
