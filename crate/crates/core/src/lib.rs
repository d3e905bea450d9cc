//! Approximation algorithms for the girth (minimum cycle weight) of
//! undirected graphs with non-negative edge weights.
//!
//! | function | factor | weights |
//! |---|---|---|
//! | [`exact_girth`] | 1 | any |
//! | [`subquadratic_approx`] | 2 | integers in `1..=M` |
//! | [`approx_general`] | 2+ε | any |
//! | [`poly_girth`] | `max(9, 2|S|)` | any |
//! | [`controlled_density_approx`] | 8+ε | any |
//! | [`derandomized_4eps`] | 4+ε | any |
//! | [`derandomized_4`] | 4 | integers in `1..=M` |
//!
//! ```
//! use girth_core::{approx_general, WeightMode, WeightedGraph};
//!
//! let g = WeightedGraph::new(3, &[(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)], WeightMode::Real)?;
//! let est = approx_general(&g, 0.5)?;
//! assert_eq!(est.weight(), Some(3.0));
//! # Ok::<(), girth_core::GirthError>(())
//! ```

pub mod approx;
pub mod cycle;
pub mod dense;
pub mod error;
pub mod estimate;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod grid;
pub mod hbd;
pub mod hitting;
pub mod poly;
pub mod reductions;

pub use approx::{
    approx_general, approx_general_with, approx_short_close_cycle, small_girth, subquadratic_approx, subquadratic_approx_with, Config,
    SmallGirth, SmallGirthMethod,
};
pub use cycle::{validate_cycle, Cycle, CycleViolation};
pub use dense::{
    build_prefix_subgraph, controlled_density_approx, controlled_density_approx_with, density_threshold, derandomized_4,
    derandomized_4_with, derandomized_4eps, derandomized_4eps_with, find_c4, PrefixSubgraph,
};
pub use error::{GirthError, Result};
pub use estimate::{Branch, GirthEstimate, Outcome, Stats};
pub use exact::exact_girth;
pub use generate::{generate, GenKind, GenSpec, Weights};
pub use graph::{WeightMode, WeightedGraph};
pub use grid::SearchGrid;
pub use hbd::{hbd, min_detecting_threshold_exact, min_detecting_threshold_grid, min_detecting_threshold_int, Detection, HbdOutcome};
pub use hitting::{build_hitting_structure, default_r, greedy_hitting_set, r_nearest_set, HittingStructure, NearestSet};
pub use poly::{poly_girth, poly_girth_cfg, QuotientGraph, TreePartition};
pub use reductions::{ceil_weights, girth_with_reduction, lift_reduced_cycle, scale_weights, zero_weight_reduce, ZeroReduction};
