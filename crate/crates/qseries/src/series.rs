//! Truncated power series in `q` with a rational exponent offset.
//!
//! `coeffs[i]` is the coefficient of `q^{(offset24 + 24·i)/24}`. All the
//! prefactors that occur here (`q^{1/24}` from η, `q^{1/8}` from θ,
//! `q^{-1/4}` from the shifted ψ) have exponents in `(1/24)ℤ`, so offsets
//! are stored as integer multiples of 1/24 and exponent steps are always 1.
//!
//! Truncation contract: a series knows `len()` coefficients starting at its
//! offset; a product of series known to `la` and `lb` coefficients is known
//! to `min(la, lb)` coefficients. Arithmetic below that bound is exact.

use crate::error::QSeriesError;
use crate::ring::Coeff;

#[derive(Clone, PartialEq, Debug)]
pub struct QSeries<C> {
    /// Exponent of the first stored coefficient, in units of 1/24.
    pub offset24: i64,
    coeffs: Vec<C>,
}

impl<C: Coeff> QSeries<C> {
    pub fn zero(offset24: i64, len: usize) -> Self {
        QSeries {
            offset24,
            coeffs: vec![C::zero(); len],
        }
    }

    /// The series `1` truncated to `len` coefficients.
    pub fn one(len: usize) -> Self {
        let mut s = Self::zero(0, len);
        s.coeffs[0] = C::one();
        s
    }

    pub fn from_coeffs(offset24: i64, coeffs: Vec<C>) -> Self {
        QSeries { offset24, coeffs }
    }

    /// Series of `len` copies of `fill` (used to seed jet-valued series,
    /// whose zero element carries a dynamic order).
    pub fn filled(offset24: i64, len: usize, fill: C) -> Self {
        QSeries {
            offset24,
            coeffs: vec![fill; len],
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    pub fn coeff_mut(&mut self, i: usize) -> &mut C {
        &mut self.coeffs[i]
    }

    /// Coefficient of `q^{e24/24}`, zero outside the stored window.
    pub fn coeff_at_exponent(&self, e24: i64) -> C {
        let d = e24 - self.offset24;
        if d < 0 || d % 24 != 0 {
            return self.coeffs[0].zero_like();
        }
        let i = (d / 24) as usize;
        if i < self.coeffs.len() {
            self.coeffs[i].clone()
        } else {
            self.coeffs[0].zero_like()
        }
    }

    /// Multiply by `q^{k24/24}`.
    pub fn shift(&mut self, k24: i64) {
        self.offset24 += k24;
    }

    pub fn truncate(&mut self, len: usize) {
        self.coeffs.truncate(len);
    }

    /// Add, aligning offsets. Errors if offsets differ by a non-integer.
    /// The result is truncated to the exactly-known common window.
    pub fn add(&self, rhs: &Self) -> Result<Self, QSeriesError> {
        if (self.offset24 - rhs.offset24) % 24 != 0 {
            return Err(QSeriesError::OffsetMismatch(self.offset24, rhs.offset24));
        }
        let off = self.offset24.min(rhs.offset24);
        let known_a = self.offset24 + 24 * self.coeffs.len() as i64;
        let known_b = rhs.offset24 + 24 * rhs.coeffs.len() as i64;
        let known = known_a.min(known_b);
        let len = ((known - off) / 24).max(0) as usize;
        let proto = self.coeffs.first().or_else(|| rhs.coeffs.first());
        let mut out = Self::filled(off, len, proto.map(|c| c.zero_like()).unwrap_or_else(C::zero));
        for (i, c) in self.coeffs.iter().enumerate() {
            let j = ((self.offset24 - off) / 24) as usize + i;
            if j < len {
                out.coeffs[j].add_assign(c);
            }
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            let j = ((rhs.offset24 - off) / 24) as usize + i;
            if j < len {
                out.coeffs[j].add_assign(c);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, QSeriesError> {
        let mut neg = rhs.clone();
        for c in neg.coeffs.iter_mut() {
            *c = c.neg();
        }
        self.add(&neg)
    }

    /// Full product, truncated to `min(len_a, len_b)` coefficients.
    pub fn mul(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().min(rhs.coeffs.len());
        let z = self.coeffs[0].zero_like();
        let mut out = Self::filled(self.offset24 + rhs.offset24, len, z);
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j].add_mul_assign(a, b);
            }
        }
        out
    }

    /// In-place multiplication by `(1 - c·q^j)`.
    pub fn mul_one_minus(&mut self, c: &C, j: usize) {
        if j == 0 {
            panic!("factor (1 - c q^0) is not a q-shifted binomial");
        }
        let n = self.coeffs.len();
        for i in (j..n).rev() {
            let t = self.coeffs[i - j].mul(c);
            self.coeffs[i].sub_assign(&t);
        }
    }

    /// In-place multiplication by `1/(1 - c·q^j) = Σ_i c^i q^{ij}`
    /// (geometric prefix recurrence `a'_i = a_i + c·a'_{i-j}`).
    pub fn div_one_minus(&mut self, c: &C, j: usize) {
        if j == 0 {
            panic!("factor 1/(1 - c q^0) is not a q-shifted geometric series");
        }
        let n = self.coeffs.len();
        for i in j..n {
            let t = self.coeffs[i - j].mul(c);
            self.coeffs[i].add_assign(&t);
        }
    }

    /// Invert a series whose leading coefficient is a unit.
    pub fn invert_unit(&self) -> Result<Self, QSeriesError> {
        let a0 = self.coeffs[0].inv().ok_or(QSeriesError::NonUnitLeading)?;
        let n = self.coeffs.len();
        let mut out = Self::filled(-self.offset24, n, self.coeffs[0].zero_like());
        out.coeffs[0] = a0.clone();
        for i in 1..n {
            let mut acc = self.coeffs[0].zero_like();
            for k in 1..=i {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc.add_mul_assign(&self.coeffs[k], &out.coeffs[i - k]);
            }
            out.coeffs[i] = acc.neg().mul(&a0);
        }
        Ok(out)
    }

    /// Scale every coefficient by `c`.
    pub fn scale(&mut self, c: &C) {
        for a in self.coeffs.iter_mut() {
            *a = a.mul(c);
        }
    }

    /// Add `c·q^{e24/24}` into the series (no-op above truncation).
    pub fn add_monomial(&mut self, c: &C, e24: i64) {
        let d = e24 - self.offset24;
        assert!(d >= 0 && d % 24 == 0, "monomial below offset or off-grid");
        let i = (d / 24) as usize;
        if i < self.coeffs.len() {
            self.coeffs[i].add_assign(c);
        }
    }
}

/// Euler product `(q; q)_∞ = Π_{j≥1} (1 - q^j)` truncated to `len` coefficients.
pub fn euler_product<C: Coeff>(len: usize) -> QSeries<C> {
    let mut s = QSeries::one(len);
    let c = C::one();
    for j in 1..len {
        s.mul_one_minus(&c, j);
    }
    s
}

/// Dedekind eta `η = q^{1/24} (q; q)_∞` as an exact series.
pub fn eta_series<C: Coeff>(len: usize) -> QSeries<C> {
    let mut s = euler_product(len);
    s.shift(1);
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn euler_product_pentagonal_numbers() {
        // (q;q)_inf = sum (-1)^k q^{k(3k±1)/2}
        let e = euler_product::<BigInt>(30);
        let mut expect = vec![0i64; 30];
        expect[0] = 1;
        let mut k: i64 = 1;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 >= 30 && g2 >= 30 {
                break;
            }
            let s = if k % 2 == 0 { 1 } else { -1 };
            if g1 < 30 {
                expect[g1 as usize] = s;
            }
            if g2 < 30 {
                expect[g2 as usize] = s;
            }
            k += 1;
        }
        for (i, e_i) in expect.iter().enumerate() {
            assert_eq!(e.coeff(i), &BigInt::from(*e_i), "coefficient {i}");
        }
    }

    #[test]
    fn geometric_div_mul_roundtrip() {
        let mut s = euler_product::<BigInt>(40);
        let orig = s.clone();
        let c = BigInt::from(1);
        s.div_one_minus(&c, 3);
        s.mul_one_minus(&c, 3);
        assert_eq!(s, orig);
    }

    #[test]
    fn invert_unit_roundtrip() {
        let e = euler_product::<BigInt>(25);
        let inv = e.invert_unit().unwrap();
        let prod = e.mul(&inv);
        assert_eq!(prod, QSeries::one(25));
    }
}
