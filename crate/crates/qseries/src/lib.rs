//! Exact generating-function engines for partition and unimodal-sequence statistics.
//!
//! Everything in this crate is exact: coefficients are arbitrary-precision
//! integers or rationals, and re-running any computation with a larger
//! truncation extends earlier coefficients without changing them.
//!
//! The main pieces:
//! - [`QSeries`]: truncated power series in `q` with a rational exponent
//!   offset whose denominator divides 24 (houses `q^{1/24}`-type prefactors).
//! - [`Jet`]: truncated Taylor expansion in `(2πiz)`, the vehicle that carries
//!   rank-moment data through series arithmetic in place of a full ζ-dimension.
//! - [`RankTable`]: bivariate table `c(m, n)` for the rank, crank, unimodal,
//!   and Durfee-unimodal families.
//! - [`moments`] / [`jet_moments`]: moment extraction `Σ_m m^ℓ c(m, n)` by
//!   table summation and by jet differentiation, cross-checkable on overlap.
//! - [`decomp`]: the exact decomposition identities that split each
//!   generating function into modular pieces plus a sparse series.

pub mod brute;
pub mod decomp;
mod error;
pub mod jet;
pub mod moments;
pub mod partition;
pub mod ring;
pub mod series;
pub mod sparse;
pub mod table;

pub use brute::brute_force_table;
pub use decomp::{verify_decomposition, CheckOutcome, DecompositionReport};
pub use error::QSeriesError;
pub use jet::Jet;
pub use moments::{jet_moments, moments, MomentSequence};
pub use partition::partition_numbers;
pub use ring::{Coeff, GaussRat};
pub use series::QSeries;
pub use sparse::{sparse_series, SparseKind};
pub use table::{build_durfee_single_sum_table, build_rank_table, BiPoly, Family, RankTable};
