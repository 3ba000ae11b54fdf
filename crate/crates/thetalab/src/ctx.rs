//! Evaluation context: a point (τ, z, optionally w) with optional frame
//! attachment (h, k, Z) and the derived quantities the transformation laws
//! use, plus the truncation/tolerance policy.

use num_complex::Complex64;

use modsums::ModularFrame;

/// A fully-specified evaluation point.
#[derive(Clone, Debug)]
pub struct EvalContext {
    pub tau: Complex64,
    pub z: Complex64,
    /// second modular variable of the completion, when present
    pub w: Option<Complex64>,
    /// frame variable: `τ = h/k + iZ/k`, `Re Z > 0`
    pub frame: Option<(ModularFrame, Complex64)>,
    pub target_precision: f64,
}

impl EvalContext {
    pub fn new(tau: Complex64, z: Complex64, target_precision: f64) -> Self {
        assert!(tau.im > 0.0, "tau must lie in the upper half plane");
        EvalContext {
            tau,
            z,
            w: None,
            frame: None,
            target_precision,
        }
    }

    /// Attach a frame: sets `τ = h/k + iZ/k`.
    pub fn with_frame(frame: ModularFrame, big_z: Complex64, z: Complex64, tol: f64) -> Self {
        assert!(big_z.re > 0.0, "frame variable Z needs Re Z > 0");
        let k = frame.k as f64;
        let tau = Complex64::new(frame.h as f64 / k, 0.0) + Complex64::new(0.0, 1.0) * big_z / k;
        EvalContext {
            tau,
            z,
            w: None,
            frame: Some((frame, big_z)),
            target_precision: tol,
        }
    }

    pub fn with_w(mut self, w: Complex64) -> Self {
        assert!(w.im > 0.0, "w must lie in the upper half plane");
        self.w = Some(w);
        self
    }

    /// `W = (6/gcd(k,6)) Z`.
    pub fn w_cap(&self) -> Option<Complex64> {
        self.frame
            .as_ref()
            .map(|(f, z)| 6.0 * z / f.g as f64)
    }

    /// `β = 3z - h/k + 1/2` (real iff z is real).
    pub fn beta(&self) -> Option<Complex64> {
        self.frame.as_ref().map(|(f, _)| {
            3.0 * self.z - Complex64::new(f.h as f64 / f.k as f64 - 0.5, 0.0)
        })
    }
}
