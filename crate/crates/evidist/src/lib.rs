//! Dempster-Shafer evidence theory with a focus on comparing bodies of
//! evidence.
//!
//! The crate models frames of discernment of up to 64 elements
//! ([`Frame`]), subsets of them as bit patterns ([`FocalSet`]), and
//! basic probability assignments over them ([`Bpa`]). On top of that it
//! provides Dempster's rule of combination ([`dempster_combine`]) and
//! three distances between BPAs that share one quadratic form and
//! differ in their similarity matrix:
//!
//! * [`distance_jousselme`]: Jaccard similarity between focal sets;
//! * [`distance_sunberg`]: similarity `1/(1 + K·H)` from the Hausdorff
//!   distance between focal sets of a frame embedded on the real line;
//! * [`distance_generalized`]: the α-weighted convex blend of the two,
//!   exactly reproducing them at α = 1 and α = 0.
//!
//! Distances are computed sparsely over the union of the two supports,
//! so frames with large powersets are fine as long as the BPAs
//! themselves stay small. The [`experiments`] module bundles two
//! ready-made parameter sweeps contrasting the metrics' behavior, and
//! [`document`] defines a small text format for loading and storing
//! named BPAs.
//!
//! ```
//! use evidist::{distance_generalized, distance_jousselme, Bpa, DistanceParams, Frame};
//!
//! let frame = Frame::embedded(vec!["cold", "mild", "warm"], vec![5.0, 15.0, 25.0])?;
//! let m1 = Bpa::new(
//!     &frame,
//!     [
//!         (frame.subset(["cold"])?, 0.7),
//!         (frame.subset(["cold", "mild"])?, 0.3),
//!     ],
//! )?;
//! let m2 = Bpa::new(
//!     &frame,
//!     [
//!         (frame.subset(["warm"])?, 0.6),
//!         (frame.full_set(), 0.4),
//!     ],
//! )?;
//!
//! let structural = distance_jousselme(&m1, &m2)?;
//! let blended = distance_generalized(&m1, &m2, &DistanceParams::default())?;
//! assert!(structural > 0.0 && blended > 0.0);
//! # Ok::<(), evidist::Error>(())
//! ```

pub mod bpa;
pub mod combine;
pub mod document;
pub mod error;
pub mod experiments;
pub mod frame;
pub mod metrics;
pub mod sigfig;

pub use bpa::{Bpa, MASS_SUM_TOLERANCE};
pub use combine::{conflict, dempster_combine, TOTAL_CONFLICT_TOLERANCE};
pub use document::BpaDocument;
pub use error::{Error, Result};
pub use experiments::{
    run_sweep, scenario_growing, scenario_shifted, sweep_csv, Scenario, SweepResult,
};
pub use frame::{FocalSet, Frame};
pub use metrics::{
    distance_generalized, distance_jousselme, distance_sunberg, evidence_distance,
    evidence_distance_report, quadratic_distance, DistanceParams, DistanceReport, EvidenceMetric,
    JointSupport, SimilarityMatrix,
};
pub use sigfig::format_sig;
