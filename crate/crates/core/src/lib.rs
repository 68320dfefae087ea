//! Reconstruction of scalar functions on discrete domains from sparse guiding
//! samples, and measurement of how smooth the result is.
//!
//! Reconstruction:
//! - [`mwk`]: McShane-Whitney Lipschitz extensions (lower, upper, mid).
//! - [`gvf`]: gradually varied fill over a level sequence, with the pairwise
//!   feasibility test.
//!
//! Analysis and post-processing:
//! - [`smoothness`]: sign-change and extreme-point ratios, the iterated
//!   difference ladder, micro/macro decomposition.
//! - [`polish`]: second-difference relaxation with frozen guiding points.
//!
//! ```
//! use discrete_smooth::{Domain, RealSamples, mwk::{self, Metric}};
//!
//! let dom = Domain::path(5).unwrap();
//! let samples = RealSamples::new(&dom, [(0, 0.0), (4, 2.0)]).unwrap();
//! let tight = mwk::lipschitz_constant(&samples, &dom, Metric::Geodesic).unwrap();
//! let mid = mwk::mwk_mid_extension(&samples, &dom, tight.lip, Metric::Geodesic).unwrap();
//! assert_eq!(mid.values(), &[0.0, 0.5, 1.0, 1.5, 2.0]);
//! ```

pub mod cli;
pub mod domain;
pub mod error;
pub mod field;
pub mod formats;
pub mod gvf;
pub mod mwk;
pub mod polish;
pub mod smoothness;

pub use domain::{Adjacency, Domain, DomainKind};
pub use error::{Error, Result};
pub use field::{
    LevelField, LevelSamples, LevelSequence, RealSamples, Sample, SampleSet, ScalarField,
};
