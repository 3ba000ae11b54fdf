//! Term bookkeeping and deterministic reduction for the asymptotic series.

use num_complex::Complex64;

/// A complex number carried as `val · e^{log}` with `|val|` kept near 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScaledComplex {
    pub val: Complex64,
    pub log: f64,
}

impl ScaledComplex {
    pub fn zero() -> Self {
        ScaledComplex {
            val: Complex64::new(0.0, 0.0),
            log: 0.0,
        }
    }

    pub fn new(val: Complex64, log: f64) -> Self {
        if val.norm() == 0.0 {
            return Self::zero();
        }
        let n = val.norm();
        ScaledComplex {
            val: val / n,
            log: log + n.ln(),
        }
    }

    pub fn from_complex(v: Complex64) -> Self {
        Self::new(v, 0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.val.norm() == 0.0
    }

    pub fn mul(&self, other: &ScaledComplex) -> ScaledComplex {
        ScaledComplex::new(self.val * other.val, self.log + other.log)
    }

    pub fn mul_complex(&self, c: Complex64) -> ScaledComplex {
        ScaledComplex::new(self.val * c, self.log)
    }

    pub fn scaled_by_log(&self, dlog: f64) -> ScaledComplex {
        ScaledComplex {
            val: self.val,
            log: self.log + dlog,
        }
    }

    /// Plain value at a shifted scale: `val · e^{log - base}`.
    pub fn to_complex_shifted(&self, base: f64) -> Complex64 {
        self.val * (self.log - base).exp()
    }
}

/// One term of a series: canonical sort key plus scaled value.
#[derive(Clone, Debug)]
pub struct TermRecord {
    /// canonical order: (k, ν-or-erf-index, index tuple)
    pub key: (i64, i64, [i64; 6]),
    pub value: ScaledComplex,
}

/// Compensated (Kahan) complex sum of terms in canonical key order, all
/// rescaled to the largest term's log.
pub fn reduce_terms(terms: &mut Vec<TermRecord>) -> (ScaledComplex, Vec<(i64, Complex64)>) {
    terms.sort_by(|a, b| a.key.cmp(&b.key));
    let base = terms
        .iter()
        .filter(|t| !t.value.is_zero())
        .map(|t| t.value.log)
        .fold(f64::NEG_INFINITY, f64::max);
    if base == f64::NEG_INFINITY {
        return (ScaledComplex::zero(), Vec::new());
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    let mut partials: Vec<(i64, Complex64)> = Vec::new();
    let mut current_k = terms.first().map(|t| t.key.0).unwrap_or(0);
    for t in terms.iter() {
        if t.key.0 != current_k {
            partials.push((current_k, sum));
            current_k = t.key.0;
        }
        let y = t.value.to_complex_shifted(base) - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    partials.push((current_k, sum));
    (ScaledComplex::new(sum, base), partials)
}

/// Evaluation report for one series run.
#[derive(Clone, Debug)]
pub struct AsymptoticReport {
    pub n: usize,
    pub ell: usize,
    pub k_max: i64,
    pub terms: Vec<TermRecord>,
    /// compensated partial sums after each k (at the common log base)
    pub partial_sums: Vec<(i64, Complex64)>,
    pub value: f64,
    pub value_imag_ratio: f64,
    pub oracle: Option<f64>,
    pub rel_err: Option<f64>,
}

impl AsymptoticReport {
    pub fn assemble(
        n: usize,
        ell: usize,
        k_max: i64,
        mut terms: Vec<TermRecord>,
        prefactor: ScaledComplex,
    ) -> Self {
        let (total, partial_sums) = reduce_terms(&mut terms);
        let scaled = total.mul(&prefactor);
        let value_c = scaled.val * scaled.log.exp();
        let value = value_c.re;
        let value_imag_ratio = if value_c.norm() > 0.0 {
            value_c.im.abs() / value_c.norm()
        } else {
            0.0
        };
        AsymptoticReport {
            n,
            ell,
            k_max,
            terms,
            partial_sums,
            value,
            value_imag_ratio,
            oracle: None,
            rel_err: None,
        }
    }

    pub fn with_oracle(mut self, oracle: f64) -> Self {
        self.oracle = Some(oracle);
        self.rel_err = Some((self.value - oracle).abs() / oracle.abs().max(f64::MIN_POSITIVE));
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_is_order_canonical() {
        let mk = |k: i64, idx: i64, v: f64| TermRecord {
            key: (k, idx, [0; 6]),
            value: ScaledComplex::from_complex(Complex64::new(v, 0.0)),
        };
        let mut a = vec![mk(2, 0, 1e-17), mk(1, 1, 1.0), mk(1, 0, 1e-17)];
        let mut b = vec![mk(1, 0, 1e-17), mk(1, 1, 1.0), mk(2, 0, 1e-17)];
        let (ra, _) = reduce_terms(&mut a);
        let (rb, _) = reduce_terms(&mut b);
        assert_eq!(ra, rb);
    }

    #[test]
    fn scaled_product_tracks_logs() {
        let a = ScaledComplex::new(Complex64::new(3.0, 4.0), 100.0);
        let b = ScaledComplex::new(Complex64::new(0.0, 2.0), -50.0);
        let p = a.mul(&b);
        assert!((p.log - (100.0 - 50.0 + 10f64.ln())).abs() < 1e-12);
        assert!((p.val.norm() - 1.0).abs() < 1e-12);
    }
}
