//! Induced saturation of posets in the Boolean lattice.
//!
//! A family `F ⊆ 2^[n]` is induced `P`-saturated when it contains no induced
//! copy of `P` but adding any missing set creates one. This crate provides
//! posets with induced-embedding search, set families with saturation
//! checks and the standard constructions, the auxiliary digraph machinery
//! for transitive-cycle-free digraphs, and bounds and exact values for the
//! smallest saturated family size `sat*(n, P)`.
//!
//! ```
//! use posat::{catalog, exact_sat_star, SearchConfig};
//!
//! let x = catalog("X", None).unwrap();
//! let r = exact_sat_star(3, &[x], &SearchConfig::for_n(3)).unwrap();
//! assert_eq!(r.upper, 8);
//! assert!(r.exact);
//! ```

pub mod cli;
pub mod digraph;
pub mod embed;
pub mod error;
pub mod family;
pub mod poset;
pub mod search;
pub mod verify;

pub use digraph::{
    auxiliary_digraph, max_tc_free_edges_bruteforce, turan_bipartite, turan_bound, Contraction,
    Digraph, TransitiveCycle, TuranMax,
};
pub use embed::{EmbeddingWitness, Order, Pattern, SetOrder};
pub use error::{Error, Result};
pub use family::{
    block_residue_family, wedge_upper_family, x_upper_family, xell_upper_family, y_upper_family,
    SaturationReport, SetFamily, Subset, Violation,
};
pub use poset::{catalog, catalog_spec, catalog_up_to, LegsWitness, Poset, CATALOG_NAMES};
pub use search::{
    boundedness_witness_check, digraph_lower_bound_check, double_legs_images, exact_sat_star,
    greedy_saturate, legs_lower_bound, legs_witness_map, sat_star_bounds, saturated_families,
    LowerBound, LowerCertificate, SatStarResult, SearchConfig, SetOrdering,
};
