//! Complex floating-point jets: truncated Taylor expansions in `z` around 0
//! with `Complex64` coefficients, used to push `∂^ℓ/∂z^ℓ|_{z=0}` through the
//! series evaluations of the lab.
//!
//! Unlike the exact jets of the q-series engine these are plain Taylor
//! coefficients (no factorial scaling) in the variable `z` itself.

use num_complex::Complex64;

#[derive(Clone, PartialEq, Debug)]
pub struct CJet {
    pub coeffs: Vec<Complex64>,
}

impl CJet {
    pub fn zero(order: usize) -> Self {
        CJet {
            coeffs: vec![Complex64::new(0.0, 0.0); order + 1],
        }
    }

    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut j = CJet::zero(order);
        j.coeffs[0] = c;
        j
    }

    /// The variable jet `z₀ + z`.
    pub fn variable(z0: Complex64, order: usize) -> Self {
        let mut j = CJet::zero(order);
        j.coeffs[0] = z0;
        if order >= 1 {
            j.coeffs[1] = Complex64::new(1.0, 0.0);
        }
        j
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn constant_term(&self) -> Complex64 {
        self.coeffs[0]
    }

    /// `ℓ! · coeffs[ℓ]` is the `ℓ`-th derivative at the expansion point.
    pub fn derivative(&self, ell: usize) -> Complex64 {
        let fact: f64 = (1..=ell).map(|x| x as f64).product();
        self.coeffs[ell] * fact
    }

    pub fn add(&self, rhs: &CJet) -> CJet {
        debug_assert_eq!(self.order(), rhs.order());
        CJet {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &CJet) -> CJet {
        debug_assert_eq!(self.order(), rhs.order());
        CJet {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> CJet {
        CJet {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, rhs: &CJet) -> CJet {
        debug_assert_eq!(self.order(), rhs.order());
        let l = self.order();
        let mut out = CJet::zero(l);
        for i in 0..=l {
            if self.coeffs[i].norm() == 0.0 {
                continue;
            }
            for j in 0..=l - i {
                out.coeffs[i + j] += self.coeffs[i] * rhs.coeffs[j];
            }
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> CJet {
        CJet {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse (constant term must be nonzero).
    pub fn inv(&self) -> CJet {
        let l = self.order();
        let c0 = self.coeffs[0];
        assert!(c0.norm() > 0.0, "inverting a jet with zero constant term");
        let mut out = CJet::zero(l);
        out.coeffs[0] = 1.0 / c0;
        for m in 1..=l {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 1..=m {
                acc += self.coeffs[k] * out.coeffs[m - k];
            }
            out.coeffs[m] = -acc / c0;
        }
        out
    }

    /// `exp` of the jet: `e^{c₀}·exp(nilpotent part)`.
    pub fn exp(&self) -> CJet {
        let l = self.order();
        let mut nil = self.clone();
        nil.coeffs[0] = Complex64::new(0.0, 0.0);
        let mut acc = CJet::constant(Complex64::new(1.0, 0.0), l);
        let mut term = CJet::constant(Complex64::new(1.0, 0.0), l);
        for k in 1..=l {
            term = term.mul(&nil).scale(Complex64::new(1.0 / k as f64, 0.0));
            acc = acc.add(&term);
        }
        acc.scale(self.coeffs[0].exp())
    }

    /// sin and cos via the exponentials of `±i·self`.
    pub fn sin(&self) -> CJet {
        let i = Complex64::new(0.0, 1.0);
        let a = self.scale(i).exp();
        let b = self.scale(-i).exp();
        a.sub(&b).scale(Complex64::new(0.0, -0.5))
    }

    pub fn cos(&self) -> CJet {
        let i = Complex64::new(0.0, 1.0);
        let a = self.scale(i).exp();
        let b = self.scale(-i).exp();
        a.add(&b).scale(Complex64::new(0.5, 0.0))
    }

    pub fn sqrt_principal(&self) -> CJet {
        // √(c₀) · √(1 + nil/c₀) via the binomial series
        let l = self.order();
        let c0 = self.coeffs[0];
        assert!(c0.norm() > 0.0);
        let mut u = self.scale(1.0 / c0);
        u.coeffs[0] = Complex64::new(0.0, 0.0);
        let mut acc = CJet::constant(Complex64::new(1.0, 0.0), l);
        let mut term = CJet::constant(Complex64::new(1.0, 0.0), l);
        let mut coeff = Complex64::new(1.0, 0.0);
        for k in 1..=l {
            coeff *= (1.5 - k as f64) / k as f64; // binomial(1/2, k) recurrence
            term = term.mul(&u);
            acc = acc.add(&term.scale(coeff));
        }
        acc.scale(c0.sqrt())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn exp_of_variable() {
        // e^{a(z0+z)}: coefficients a^k e^{a z0} / k!
        let a = c(0.7, -0.3);
        let j = CJet::variable(c(0.2, 0.1), 4).scale(a).exp();
        let base = (a * c(0.2, 0.1)).exp();
        let mut fact = 1.0;
        for k in 0..=4usize {
            if k > 0 {
                fact *= k as f64;
            }
            let expect = base * a.powu(k as u32) / fact;
            assert!((j.coeffs[k] - expect).norm() < 1e-14 * expect.norm());
        }
    }

    #[test]
    fn inv_roundtrip() {
        let j = CJet::variable(c(1.3, 0.4), 5).sin().add(&CJet::constant(c(2.0, 0.0), 5));
        let prod = j.mul(&j.inv());
        for k in 0..=5usize {
            let expect = if k == 0 { 1.0 } else { 0.0 };
            assert!((prod.coeffs[k] - c(expect, 0.0)).norm() < 1e-13);
        }
    }

    #[test]
    fn sin_cos_derivatives() {
        let j = CJet::variable(c(0.3, 0.2), 3);
        let s = j.sin();
        let z0 = c(0.3, 0.2);
        assert!((s.coeffs[0] - z0.sin()).norm() < 1e-14);
        assert!((s.derivative(1) - z0.cos()).norm() < 1e-14);
        assert!((s.derivative(2) + z0.sin()).norm() < 1e-13);
        let co = j.cos();
        assert!((co.derivative(1) + z0.sin()).norm() < 1e-14);
    }

    #[test]
    fn sqrt_squares_back() {
        let j = CJet::variable(c(2.0, 1.0), 4);
        let r = j.sqrt_principal();
        let sq = r.mul(&r);
        for k in 0..=4usize {
            assert!((sq.coeffs[k] - j.coeffs[k]).norm() < 1e-13);
        }
    }
}
