//! The multiplier system χ of Dedekind's eta function,
//! `η((aτ+b)/(cτ+d)) = χ(M)(cτ+d)^{1/2}η(τ)`.

use num_complex::Complex64;

use crate::kronecker::kronecker;

/// Integer matrix with determinant one.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct UnimodularMatrix {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl UnimodularMatrix {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        let m = UnimodularMatrix { a, b, c, d };
        assert_eq!(m.det(), 1, "matrix {m:?} is not unimodular");
        m
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    /// Möbius action on a point of the upper half plane.
    pub fn apply(&self, tau: Complex64) -> Complex64 {
        (self.a as f64 * tau + self.b as f64) / (self.c as f64 * tau + self.d as f64)
    }
}

/// `e^{πi·e24/12}` with the integer `e24` reduced mod 24 first, keeping the
/// 24th-root-of-unity phases exact.
pub(crate) fn root24(e24: i128) -> Complex64 {
    let r = e24.rem_euclid(24) as f64;
    Complex64::from_polar(1.0, std::f64::consts::PI * r / 12.0)
}

/// χ(M) by the two displayed branches (odd/even lower-left entry):
/// a 24th root of unity times a Kronecker symbol.
pub fn eta_multiplier(m: &UnimodularMatrix) -> Complex64 {
    assert_eq!(m.det(), 1, "eta multiplier needs determinant one");
    let (a, b, c, d) = (m.a as i128, m.b as i128, m.c as i128, m.d as i128);
    if c % 2 != 0 {
        let kr = kronecker(m.d, m.c.abs()) as f64;
        let e = (a + d) * c - b * d * (c * c - 1) - 3 * c;
        root24(e) * kr
    } else {
        let kr = kronecker(m.c, m.d) as f64;
        let e = a * c * (1 - d * d) + d * (b - c + 3) - 3;
        root24(e) * kr
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_one() {
        let id = UnimodularMatrix::new(1, 0, 0, 1);
        let v = eta_multiplier(&id);
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn translation_matches_eta_shift() {
        // η(τ+1) = e^{πi/12} η(τ)
        let t = UnimodularMatrix::new(1, 1, 0, 1);
        let v = eta_multiplier(&t);
        let expect = Complex64::from_polar(1.0, std::f64::consts::PI / 12.0);
        assert!((v - expect).norm() < 1e-15, "{v}");
    }

    #[test]
    fn inversion_phase() {
        // η(-1/τ) = √(-iτ) η(τ) forces χ(S) = e^{-πi/4}
        let s = UnimodularMatrix::new(0, -1, 1, 0);
        let v = eta_multiplier(&s);
        let expect = Complex64::from_polar(1.0, -std::f64::consts::PI / 4.0);
        assert!((v - expect).norm() < 1e-15, "{v}");
    }

    #[test]
    fn always_unit_modulus() {
        // 100 deterministic pseudo-random unimodular matrices via products
        // of generators T^j and S
        let mut m = UnimodularMatrix::new(1, 0, 0, 1);
        let mut state = 12345u64;
        for _ in 0..100 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as i64 % 5 - 2;
            // m <- m · T^j
            m = UnimodularMatrix::new(m.a, m.a * j + m.b, m.c, m.c * j + m.d);
            // m <- m · S
            m = UnimodularMatrix::new(m.b, -m.a, m.d, -m.c);
            if m.a.abs().max(m.b.abs()).max(m.c.abs()).max(m.d.abs()) > 1 << 20 {
                m = UnimodularMatrix::new(1, 0, 0, 1);
            }
            let v = eta_multiplier(&m);
            let norm = v.norm();
            assert!((norm - 1.0).abs() < 1e-12, "|χ| = {norm} for {m:?}");
        }
    }
}
