//! The sparse series `H₁`, `H₂` split off the unimodal generating functions.
//!
//! `H₁(ζ;q) = (1-ζ) Σ_{m≥0} (-1)^m (1 - ζ² q^{2m+1}) q^{m(3m+1)/2} ζ^{3m}`
//! `H₂(ζ;q) = (1-ζ) Σ_{m≥0} q^{m(m+1)} ζ^m`
//!
//! Both have O(√N) base exponents below `q^N`, which is what makes them
//! "sparse": they contribute only polynomially to coefficient growth.

use num_bigint::BigInt;

use crate::jet::Jet;
use crate::ring::Coeff;
use crate::series::QSeries;
use crate::table::BiPoly;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SparseKind {
    H1,
    H2,
}

/// Signed monomials `sign · ζ^m q^e` of the inner sum (before the `(1-ζ)`
/// factor), listed for exponents `e ≤ n_max`.
pub fn base_monomials(kind: SparseKind, n_max: usize) -> Vec<(i64, i64, usize)> {
    let mut out = Vec::new();
    match kind {
        SparseKind::H1 => {
            let mut m = 0usize;
            loop {
                let e = m * (3 * m + 1) / 2;
                if e > n_max {
                    break;
                }
                let sign = if m % 2 == 0 { 1 } else { -1 };
                out.push((sign, 3 * m as i64, e));
                let e2 = e + 2 * m + 1;
                if e2 <= n_max {
                    out.push((-sign, 3 * m as i64 + 2, e2));
                }
                m += 1;
            }
        }
        SparseKind::H2 => {
            let mut m = 0usize;
            loop {
                let e = m * (m + 1);
                if e > n_max {
                    break;
                }
                out.push((1, m as i64, e));
                m += 1;
            }
        }
    }
    out
}

/// Number of distinct base exponents `≤ n_max` (grows like O(√N)).
pub fn base_exponent_count(kind: SparseKind, n_max: usize) -> usize {
    let mut m = 0usize;
    loop {
        let e = match kind {
            SparseKind::H1 => m * (3 * m + 1) / 2,
            SparseKind::H2 => m * (m + 1),
        };
        if e > n_max {
            return m;
        }
        m += 1;
    }
}

/// Jet-valued expansion of `H₁` or `H₂` to order `q^{n_max}`.
pub fn sparse_series(kind: SparseKind, n_max: usize, jet_order: usize) -> QSeries<Jet<BigInt>> {
    let mut s = QSeries::filled(0, n_max + 1, Jet::<BigInt>::zero(jet_order));
    for (sign, m, e) in base_monomials(kind, n_max) {
        let jet = Jet::<BigInt>::zeta_pow(m, jet_order).mul_i64(sign);
        s.coeff_mut(e).add_assign(&jet);
        // the (1-ζ) factor: subtract the ζ-shifted copy
        let jet_shift = Jet::<BigInt>::zeta_pow(m + 1, jet_order).mul_i64(sign);
        s.coeff_mut(e).sub_assign(&jet_shift);
    }
    s
}

/// Bivariate expansion of `H₁` or `H₂` on an `(m, n)` grid.
pub fn sparse_bipoly(kind: SparseKind, n_max: usize, m_max: usize) -> BiPoly {
    let mut p = BiPoly::zero(m_max, n_max);
    let one = BigInt::from(1);
    let neg = BigInt::from(-1);
    for (sign, m, e) in base_monomials(kind, n_max) {
        let (c, d) = if sign > 0 { (&one, &neg) } else { (&neg, &one) };
        p.add_monomial(c, m, e);
        p.add_monomial(d, m + 1, e);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_series_vanish_at_jet_order_zero() {
        // the (1-ζ) factor kills the constant jet component identically
        for kind in [SparseKind::H1, SparseKind::H2] {
            let s = sparse_series(kind, 50, 3);
            for i in 0..=50usize {
                assert_eq!(s.coeff(i).scaled(0), &BigInt::from(0), "{kind:?} at q^{i}");
            }
        }
    }

    #[test]
    fn exponent_count_is_square_root_scale() {
        for kind in [SparseKind::H1, SparseKind::H2] {
            for n in [100usize, 400, 1600] {
                let c = base_exponent_count(kind, n);
                let bound = (n as f64).sqrt();
                assert!(
                    (c as f64) <= 1.5 * bound + 2.0,
                    "{kind:?}: {c} exponents below {n}"
                );
                assert!((c as f64) >= 0.4 * bound);
            }
        }
    }
}
