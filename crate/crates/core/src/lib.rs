//! Support posets of monomial ideals.
//!
//! Each variable `x_i` of an ideal gets the set `C_i` of variables present in
//! every minimal generator that `x_i` divides; ordering the distinct `C_i` by
//! inclusion gives the support poset. The modules below build
//! such posets, construct ideals with prescribed posets, and compute graded
//! Betti numbers through Mayer-Vietoris trees or a simplicial homology oracle.

pub mod constructions;
pub mod error;
pub mod monomial;
pub mod polarity;
pub mod poset;
pub mod random;
pub mod resolution;
pub mod support;

pub use error::{Error, Result};
pub use monomial::{find_variable_isomorphism, IndexSet, Monomial, MonomialIdeal, VariablePermutation};
pub use polarity::{are_copolar, depolarize_by_chains, polarize, ChainPartition, Polarization, PolarizationMap};
pub use poset::{Forest, Poset};
pub use support::{
    brute_force_realizability, ideal_from_sigma, is_support_poset_of, ordered_support_poset,
    sigma_conditions_hold, support_family, support_poset, SigmaCollection, SupportFamily,
    SupportPoset,
};
