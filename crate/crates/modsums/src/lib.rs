//! Multiplier systems and exponential sums over residues:
//! the Dedekind-eta multiplier χ, the extended Kronecker symbol, modular
//! `(h, k)` frames with their Durfee refinements `(H, K, μ, ϱ, α_{H,K})`,
//! all the Kloosterman-type sums, and the γ/δ/ε± singularity indicators.

pub mod eta;
pub mod frame;
pub mod kloosterman;
pub mod kronecker;
pub mod singular;

pub use eta::{eta_multiplier, UnimodularMatrix};
pub use frame::{chi_hk, neg_inverse, ModularFrame, ModSumError};
pub use kloosterman::{
    durfee_k_erf1, durfee_k_erf2, durfee_k_plain, kloosterman_a, kloosterman_k, mu_term_count,
    MuRange, Sign,
};
pub use kronecker::kronecker;
pub use singular::{bad_m_set, singularity_data, SingularityData};
