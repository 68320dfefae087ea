//! Smoothness measures for sampled and reconstructed functions.
//!
//! - [`natural`]: sign-change ratio of a 1-D sequence.
//! - [`extrema`]: extreme-point ratio of a grid field via discrete Hessians.
//! - [`ladder`]: iterated differences, their Lipschitz constants and the
//!   absolute / almost / K-order classification.
//! - [`decompose`]: macro (coarse reconstruction) plus micro (residual) split.

pub mod decompose;
pub mod extrema;
pub mod ladder;
pub mod natural;

pub use decompose::{coarse_vertices, decompose_micro_macro, Decomposition, MacroMethod};
pub use extrema::{
    classify_extrema, count_extreme_points, natural_smoothness_kd, ExtremaConfig, ExtremumKind,
    NaturalSmoothnessKD,
};
pub use ladder::{
    classify_discrete_smoothness, default_constants, difference_ladder, lip_pairwise,
    Classification, DifferenceLadder, SmoothnessClass, DEFAULT_LADDER_DEPTH,
};
pub use natural::{derivative_sign_changes, natural_smoothness_1d, NaturalSmoothness1D};
