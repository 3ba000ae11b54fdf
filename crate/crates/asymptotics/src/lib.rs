//! The Kloosterman–Bessel asymptotic series: Rademacher's exact formula for
//! p(n), the unimodal-rank series for u(n) and its moments u_ℓ(n), the
//! Durfee series for v_ℓ(n), the rank/crank leading asymptotics, the
//! Taylor-main-term evaluations behind them, and the Bessel path-integral
//! check they all rest on.
//!
//! Every term is assembled as `phase · e^{log-magnitude}` so that nothing
//! overflows at n = 10⁴, and sums are reduced in a fixed canonical order
//! with compensated summation: identical inputs give bit-identical output
//! regardless of thread count.

pub mod besselpath;
pub mod durfee;
pub mod rademacher;
pub mod rankcrank;
pub mod report;
pub mod taylor;
pub mod unimodal;

pub use besselpath::{bessel_path_check, BesselPathSpec, PathCheckReport};
pub use durfee::{vl_series, vl_series_remark0, MuRangeChoice};
pub use rademacher::rademacher_p;
pub use rankcrank::rank_crank_leading;
pub use report::{AsymptoticReport, ScaledComplex, TermRecord};
pub use taylor::{taylor_main_u1, taylor_main_v1, u1_jet_derivative, TaylorMain};
pub use unimodal::{u_exact_series, ul_series, AsympError};
