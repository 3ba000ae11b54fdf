//! Special functions for the Kloosterman–Bessel asymptotic machinery:
//! exact Bernoulli data and κ(a,b,c) constants, cot-derivative kernels
//! `C_j(w)`, the `f_ν` expansion coefficients `b_r`, a scaled modified
//! Bessel `I_ν` at arbitrary real order, and the complex error function.
//!
//! Everything is implemented in-repo: the unusual requirements (negative
//! half-integer Bessel orders in log scale, erf of complex argument to
//! twelve digits) are not uniformly available elsewhere.

pub mod bernoulli;
pub mod bessel;
pub mod cot;
pub mod erf;
pub mod fnu;
pub mod gamma;
pub mod kappa;

pub use bernoulli::BernoulliCache;
pub use bessel::{bessel_i, bessel_i_over_pow, ScaledBessel, SpecFunError};
pub use cot::{cot_deriv, cot_deriv_pole_coeff, cot_deriv_regularized};
pub use erf::{erf_complex, erf_real, faddeeva_w};
pub use fnu::{b_r, f_nu_closed, f_nu_series};
pub use gamma::{ln_gamma, recip_gamma};
pub use kappa::{kappa, KappaValue};
