//! Numerical laboratory for the false-theta transformation theory:
//! floating-point evaluation of η, ϑ, 𝒞*, ψ, ψ̂, the restricted sums Ψ/𝔼,
//! Eichler and Mordell-type integrals, and seeded residual certification of
//! every transformation law the asymptotic series rest on.

pub mod cjet;
pub mod ctx;
pub mod eichler;
pub mod eval;
pub mod mordell;
pub mod quad;
pub mod transforms;

pub use cjet::CJet;
pub use ctx::EvalContext;
pub use eichler::{eichler_e, eichler_e_path, erf_term_closed_form, EichlerKind};
pub use eval::{
    eval_cstar, eval_eta, eval_psi, eval_psi_hat, eval_psi_restricted, eval_psi_star_series,
    eval_theta, exp_affine, series_cut, BadMFilter, LabError, MRestriction, Value,
};
pub use mordell::{mordell_cot_integral, MordellVariant};
pub use quad::{adaptive, principal_value, semi_infinite, QuadResult};
pub use transforms::{verify_transform, LawKind, ResidualReport, SampleSpec};
