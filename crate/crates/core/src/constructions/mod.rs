//! Explicit ideal families and their closed-form invariants.

pub mod diamonds;
pub mod kn;
pub mod leaf;
pub mod lines;
pub mod sp;

pub use diamonds::{
    diamond_depolarized_var, diamond_var, diamonds_betti_formula, diamonds_chain_partition,
    diamonds_depolarized, diamonds_generators_in_standard_order, diamonds_projdim,
    diamonds_regularity, diamonds_squarefree, k_closed_form, k_value, KTable,
};
pub use kn::{consecutive_kn, copolar_kn, copolar_kn_partition, k_out_of_n, kn_support_family};
pub use leaf::{leaf_ideal, reduce_forest, reduction_stages, ReducedForest};
pub use lines::{
    lines_betti_formula, lines_chain_partition, lines_depolarized, lines_generators_in_standard_order,
    lines_projdim, lines_regularity, lines_squarefree,
};
pub use sp::{sp_from_forest, sp_ideal, SpExpr};

use num_bigint::BigUint;

/// Binomial coefficient; zero when `k > n`.
pub(crate) fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}
