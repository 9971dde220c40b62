//! Multigraded Betti numbers: Mayer-Vietoris trees, a homology oracle and
//! Taylor-minimality.

pub mod betti;
pub mod linalg;
pub mod mvt;
pub mod oracle;
pub mod taylor;

pub use betti::{derived_invariants, BettiTable, Invariants};
pub use mvt::{mvt_bounds, mvt_build, mvt_counts, MvTree, MvtBounds, MvtCounts, MvtNode, PivotOrder};
pub use oracle::{betti_oracle, betti_oracle_with_cap, oracle_cap, DEFAULT_MAX_SUBSETS};
pub use taylor::{taylor_is_minimal, taylor_is_minimal_list, TAYLOR_MAX_GENERATORS};
