//! Bivariate tables `c(m, n)` for the four rank families.
//!
//! Each family is expanded from its generating function by dynamic
//! programming on a dense `(m, n)` grid. Pochhammer inverses are applied as
//! geometric prefix recurrences, `1/(1 - ζ^s q^j)`: `T'(m,n) = T(m,n) +
//! T'(m-s, n-j)`, which costs one addition per cell per factor.
//!
//! - rank:     `R(ζ;q) = Σ_{n≥0} q^{n²} / ((ζq;q)_n (ζ^{-1}q;q)_n)`
//! - crank:    `C(ζ;q) = (q;q)_∞ / ((ζq;q)_∞ (ζ^{-1}q;q)_∞)`
//! - unimodal: `U(ζ;q) = Σ_{n≥0} q^n / ((ζq;q)_n (ζ^{-1}q;q)_n)`
//! - Durfee:   built both from the defining double sum over `0 ≤ ℓ ≤ m` and
//!   from the single-sum rewriting `Σ_m (q^{m+1};q)_m q^m / ((ζq,ζ^{-1}q;q)_m)`;
//!   the two must agree cell for cell.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::QSeriesError;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Family {
    Rank,
    Crank,
    Unimodal,
    Durfee,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Rank => "rank",
            Family::Crank => "crank",
            Family::Unimodal => "unimodal",
            Family::Durfee => "durfee",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "rank" => Some(Family::Rank),
            "crank" => Some(Family::Crank),
            "unimodal" => Some(Family::Unimodal),
            "durfee" => Some(Family::Durfee),
            _ => None,
        }
    }
}

/// Dense bivariate polynomial over `ζ^m q^n`, `|m| ≤ m_max`, `0 ≤ n ≤ n_max`.
#[derive(Clone, PartialEq, Debug)]
pub struct BiPoly {
    pub m_max: usize,
    pub n_max: usize,
    data: Vec<BigInt>,
}

impl BiPoly {
    pub fn zero(m_max: usize, n_max: usize) -> Self {
        BiPoly {
            m_max,
            n_max,
            data: vec![BigInt::zero(); (2 * m_max + 1) * (n_max + 1)],
        }
    }

    pub fn one(m_max: usize, n_max: usize) -> Self {
        let mut p = Self::zero(m_max, n_max);
        let idx = p.index(0, 0);
        p.data[idx] = BigInt::from(1);
        p
    }

    #[inline]
    fn index(&self, m: i64, n: usize) -> usize {
        debug_assert!(m.unsigned_abs() as usize <= self.m_max);
        n * (2 * self.m_max + 1) + (m + self.m_max as i64) as usize
    }

    pub fn get(&self, m: i64, n: usize) -> &BigInt {
        &self.data[self.index(m, n)]
    }

    fn width(&self) -> usize {
        2 * self.m_max + 1
    }

    /// Multiply by `q^k` in place.
    pub fn shift_q(&mut self, k: usize) {
        if k == 0 {
            return;
        }
        let w = self.width();
        for n in (k..=self.n_max).rev() {
            let (dst, src) = (n * w, (n - k) * w);
            for i in 0..w {
                self.data[dst + i] = std::mem::take(&mut self.data[src + i]);
            }
        }
        for n in 0..k.min(self.n_max + 1) {
            for i in 0..w {
                self.data[n * w + i] = BigInt::zero();
            }
        }
    }

    /// Multiply by `ζ^s` in place (entries shifted past the window are
    /// dropped; callers keep `m_max ≥ n_max` so nothing nonzero is lost).
    pub fn shift_zeta(&mut self, s: i64) {
        if s == 0 {
            return;
        }
        let w = self.width() as i64;
        for n in 0..=self.n_max {
            let row = n * self.width();
            if s > 0 {
                for m in (0..w).rev() {
                    self.data[row + m as usize] = if m - s >= 0 {
                        std::mem::take(&mut self.data[row + (m - s) as usize])
                    } else {
                        BigInt::zero()
                    };
                }
            } else {
                for m in 0..w {
                    self.data[row + m as usize] = if m - s < w {
                        std::mem::take(&mut self.data[row + (m - s) as usize])
                    } else {
                        BigInt::zero()
                    };
                }
            }
        }
    }

    /// Multiply by `1/(1 - ζ^s q^j)` in place, `j ≥ 1`, `s ∈ {-1, 0, 1}`.
    pub fn div_one_minus(&mut self, s: i64, j: usize) {
        assert!(j >= 1);
        let w = self.width();
        for n in j..=self.n_max {
            let (dst_row, src_row) = (n * w, (n - j) * w);
            for m in 0..w as i64 {
                let sm = m - s;
                if sm < 0 || sm >= w as i64 {
                    continue;
                }
                let v = self.data[src_row + sm as usize].clone();
                if !v.is_zero() {
                    self.data[dst_row + m as usize] += v;
                }
            }
        }
    }

    /// Multiply by `(1 - ζ^s q^j)` in place, `j ≥ 1`.
    pub fn mul_one_minus(&mut self, s: i64, j: usize) {
        assert!(j >= 1);
        let w = self.width();
        for n in (j..=self.n_max).rev() {
            let (dst_row, src_row) = (n * w, (n - j) * w);
            for m in 0..w as i64 {
                let sm = m - s;
                if sm < 0 || sm >= w as i64 {
                    continue;
                }
                let v = self.data[src_row + sm as usize].clone();
                if !v.is_zero() {
                    self.data[dst_row + m as usize] -= v;
                }
            }
        }
    }

    pub fn add_assign(&mut self, rhs: &BiPoly) {
        debug_assert_eq!(self.m_max, rhs.m_max);
        debug_assert_eq!(self.n_max, rhs.n_max);
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    pub fn sub_assign(&mut self, rhs: &BiPoly) {
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }

    /// `self += sign · ζ^{m_shift} q^{q_shift} · src`, dropping anything
    /// shifted outside the window.
    pub fn add_shifted(&mut self, src: &BiPoly, sign: i64, m_shift: i64, q_shift: usize) {
        let mm = self.m_max as i64;
        for n in 0..=self.n_max.saturating_sub(q_shift) {
            for m in -mm..=mm {
                let v = src.get(m, n);
                if v.is_zero() {
                    continue;
                }
                let tm = m + m_shift;
                if tm.unsigned_abs() as usize > self.m_max {
                    continue;
                }
                let idx = self.index(tm, n + q_shift);
                if sign >= 0 {
                    self.data[idx] += v;
                } else {
                    self.data[idx] -= v;
                }
            }
        }
    }

    pub fn add_monomial(&mut self, c: &BigInt, m: i64, n: usize) {
        if m.unsigned_abs() as usize <= self.m_max && n <= self.n_max {
            let idx = self.index(m, n);
            self.data[idx] += c;
        }
    }

    /// Convolve with a univariate polynomial in `q` (coefficients `poly[k]`
    /// of `q^k`), truncated at `n_max`.
    pub fn mul_scalar_poly(&self, poly: &[BigInt]) -> BiPoly {
        let mut out = BiPoly::zero(self.m_max, self.n_max);
        let w = self.width();
        for (k, c) in poly.iter().enumerate().take(self.n_max + 1) {
            if c.is_zero() {
                continue;
            }
            for n in 0..=self.n_max - k {
                let (src_row, dst_row) = (n * w, (n + k) * w);
                for i in 0..w {
                    let v = &self.data[src_row + i];
                    if !v.is_zero() {
                        out.data[dst_row + i] += v * c;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    /// First nonzero cell `(m, n)` in row-major order, if any.
    pub fn first_nonzero(&self) -> Option<(i64, usize)> {
        for n in 0..=self.n_max {
            for m in -(self.m_max as i64)..=self.m_max as i64 {
                if !self.get(m, n).is_zero() {
                    return Some((m, n));
                }
            }
        }
        None
    }
}

/// Bivariate table of counts `c(m, n)` for one family.
#[derive(Clone, PartialEq, Debug)]
pub struct RankTable {
    pub family: Family,
    poly: BiPoly,
}

impl RankTable {
    pub fn n_max(&self) -> usize {
        self.poly.n_max
    }

    pub fn m_max(&self) -> usize {
        self.poly.m_max
    }

    pub fn get(&self, m: i64, n: usize) -> &BigInt {
        self.poly.get(m, n)
    }

    pub fn poly(&self) -> &BiPoly {
        &self.poly
    }

    /// Row `n` as `(m, count)` pairs with nonzero count.
    pub fn row(&self, n: usize) -> Vec<(i64, BigInt)> {
        let mm = self.poly.m_max as i64;
        (-mm..=mm)
            .filter_map(|m| {
                let c = self.poly.get(m, n);
                if c.is_zero() {
                    None
                } else {
                    Some((m, c.clone()))
                }
            })
            .collect()
    }

    /// Check `c(m, n) = c(-m, n)` on the whole table.
    pub fn is_symmetric(&self) -> bool {
        let mm = self.poly.m_max as i64;
        for n in 0..=self.poly.n_max {
            for m in 1..=mm {
                if self.poly.get(m, n) != self.poly.get(-m, n) {
                    return false;
                }
            }
        }
        true
    }
}

/// Expand the generating function of `family` to an exact table.
///
/// `m_max` must be at least `n_max`: ranks of size-`n` objects are bounded
/// by `n`, so that window guarantees complete rows.
pub fn build_rank_table(
    family: Family,
    n_max: usize,
    m_max: usize,
) -> Result<RankTable, QSeriesError> {
    if m_max < n_max {
        return Err(QSeriesError::TruncationTooSmall { m_max, n_max });
    }
    let poly = match family {
        Family::Rank => build_rank(n_max, m_max),
        Family::Crank => build_crank(n_max, m_max),
        Family::Unimodal => build_unimodal(n_max, m_max),
        Family::Durfee => build_durfee_double_sum(n_max, m_max),
    };
    Ok(RankTable { family, poly })
}

/// The footnote single-sum form of the Durfee generating function,
/// `Σ_{m≥0} (q^{m+1};q)_m q^m / ((ζq;q)_m (ζ^{-1}q;q)_m)`.
pub fn build_durfee_single_sum_table(
    n_max: usize,
    m_max: usize,
) -> Result<RankTable, QSeriesError> {
    if m_max < n_max {
        return Err(QSeriesError::TruncationTooSmall { m_max, n_max });
    }
    Ok(RankTable {
        family: Family::Durfee,
        poly: build_durfee_single_sum(n_max, m_max),
    })
}

fn build_rank(n_max: usize, m_max: usize) -> BiPoly {
    let mut total = BiPoly::one(m_max, n_max);
    let mut term = BiPoly::one(m_max, n_max);
    let mut j = 1usize;
    while j * j <= n_max {
        term.shift_q(2 * j - 1);
        term.div_one_minus(1, j);
        term.div_one_minus(-1, j);
        total.add_assign(&term);
        j += 1;
    }
    total
}

fn build_crank(n_max: usize, m_max: usize) -> BiPoly {
    let mut t = BiPoly::one(m_max, n_max);
    for j in 1..=n_max {
        t.mul_one_minus(0, j);
        t.div_one_minus(1, j);
        t.div_one_minus(-1, j);
    }
    t
}

fn build_unimodal(n_max: usize, m_max: usize) -> BiPoly {
    let mut total = BiPoly::one(m_max, n_max);
    let mut term = BiPoly::one(m_max, n_max);
    for j in 1..=n_max {
        term.shift_q(1);
        term.div_one_minus(1, j);
        term.div_one_minus(-1, j);
        total.add_assign(&term);
    }
    total
}

/// Double sum over `0 ≤ ℓ ≤ m`, reindexed by `j = m - ℓ` so each term
/// updates incrementally:
///   `T_{ℓ,0} = q^{ℓ²+ℓ} ζ^ℓ / (ζq;q)_ℓ`,
///   `T_{ℓ,j} = T_{ℓ,j-1} · q (1-q^{j+ℓ}) / ((1-ζ^{-1}q^j)(1-q^j))`.
fn build_durfee_double_sum(n_max: usize, m_max: usize) -> BiPoly {
    let mut total = BiPoly::zero(m_max, n_max);
    let mut outer = BiPoly::one(m_max, n_max); // T_{ℓ,0}
    let mut ell = 0usize;
    loop {
        if ell > 0 {
            // T_{ℓ,0} = T_{ℓ-1,0} · q^{2ℓ} ζ / (1 - ζ q^ℓ)
            outer.shift_q(2 * ell);
            outer.shift_zeta(1);
            outer.div_one_minus(1, ell);
        }
        if ell * ell + ell > n_max || outer.is_zero() {
            break;
        }
        let mut term = outer.clone();
        total.add_assign(&term);
        let base = ell * ell + ell;
        for j in 1..=(n_max - base) {
            term.shift_q(1);
            term.mul_one_minus(0, j + ell);
            term.div_one_minus(0, j);
            term.div_one_minus(-1, j);
            total.add_assign(&term);
        }
        ell += 1;
    }
    total
}

fn build_durfee_single_sum(n_max: usize, m_max: usize) -> BiPoly {
    let mut total = BiPoly::one(m_max, n_max);
    let mut term = BiPoly::one(m_max, n_max);
    for m in 1..=n_max {
        term.shift_q(1);
        term.mul_one_minus(0, 2 * m - 1);
        term.mul_one_minus(0, 2 * m);
        term.div_one_minus(0, m);
        term.div_one_minus(1, m);
        term.div_one_minus(-1, m);
        total.add_assign(&term);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partition_numbers;

    #[test]
    fn unimodal_row_three() {
        // brute-force enumeration of unimodal sequences of size 3 gives
        // ranks {-2, -1, 0, 0, 1, 2}
        let t = build_rank_table(Family::Unimodal, 10, 10).unwrap();
        assert_eq!(
            t.row(3),
            vec![
                (-2, BigInt::from(1)),
                (-1, BigInt::from(1)),
                (0, BigInt::from(2)),
                (1, BigInt::from(1)),
                (2, BigInt::from(1)),
            ]
        );
    }

    #[test]
    fn all_families_symmetric() {
        for fam in [Family::Rank, Family::Crank, Family::Unimodal, Family::Durfee] {
            let t = build_rank_table(fam, 25, 25).unwrap();
            assert!(t.is_symmetric(), "{fam:?} table not symmetric");
        }
    }

    #[test]
    fn rank_and_crank_totals_are_partition_numbers() {
        let p = partition_numbers(30);
        for fam in [Family::Rank, Family::Crank] {
            let t = build_rank_table(fam, 30, 30).unwrap();
            for n in 0..=30usize {
                let total: BigInt = t.row(n).into_iter().map(|(_, c)| c).sum();
                assert_eq!(total, p[n], "{fam:?} total at n={n}");
            }
        }
    }

    #[test]
    fn durfee_double_and_single_sum_agree_small() {
        let a = build_rank_table(Family::Durfee, 30, 30).unwrap();
        let b = build_durfee_single_sum_table(30, 30).unwrap();
        assert_eq!(a.poly(), b.poly());
    }

    #[test]
    fn window_too_small_is_an_error() {
        assert!(matches!(
            build_rank_table(Family::Rank, 10, 5),
            Err(QSeriesError::TruncationTooSmall { .. })
        ));
    }

    #[test]
    fn unimodal_totals_match_factored_form() {
        // Σ_m u(m,n) = coeff of q^n in (1/(q;q)_∞²) Σ_{j≥0} (-1)^j q^{j(j+1)/2}
        use crate::series::{euler_product, QSeries};
        let n_max = 40;
        let t = build_rank_table(Family::Unimodal, n_max, n_max).unwrap();
        let e = euler_product::<BigInt>(n_max + 1);
        let inv = e.invert_unit().unwrap();
        let inv2 = inv.mul(&inv);
        let mut partial = QSeries::<BigInt>::zero(0, n_max + 1);
        let mut j = 0usize;
        while j * (j + 1) / 2 <= n_max {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            partial.add_monomial(&BigInt::from(sign), 24 * (j * (j + 1) / 2) as i64);
            j += 1;
        }
        let prod = inv2.mul(&partial);
        for n in 0..=n_max {
            let total: BigInt = t.row(n).into_iter().map(|(_, c)| c).sum();
            assert_eq!(&total, prod.coeff(n), "u(n) total at n={n}");
        }
    }
}
