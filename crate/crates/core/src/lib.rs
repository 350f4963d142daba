//! Change detection for view-sequence maps.
//!
//! A view-sequence map is an ordered list of frames (pose + local feature
//! descriptors) recorded along a robot trajectory. This crate partitions such
//! a map into place regions (by time or by appearance), trains two
//! place-specific linear classifiers per region — a nuisance predictor that
//! filters uninteresting query features and an anomaly predictor that ranks
//! the remainder by likelihood of change — and evaluates the whole pipeline
//! with a loop-closure, rank-based protocol on synthetic or precomputed
//! descriptor data.
//!
//! Module map:
//! - [`mapmodel`]: domain types, manifest/blob/ground-truth ingestion.
//! - [`matching`]: distance kernels, nearest neighbour, mutual matching, NBNN.
//! - [`linsvm`]: linear SVM trained by stochastic subgradient descent.
//! - [`upd`]: unsupervised place discovery (time cue and appearance cue).
//! - [`nuisance`]: non-nuisance harvesting, pseudo-positive mining, filtering.
//! - [`anomaly`]: pseudo-anomaly mining and change ranking.
//! - [`evalharness`]: relevant-pair selection, query ranks, pipeline runs.
//! - [`synthgen`]: deterministic synthetic benchmark generator.

pub mod anomaly;
pub mod error;
pub mod evalharness;
pub mod linsvm;
pub mod mapmodel;
pub mod matching;
pub mod nuisance;
pub mod synthgen;
pub mod upd;

pub use error::{Error, Result};
pub use mapmodel::{
    Descriptor, ExperienceSet, Feature, Frame, GroundTruthBox, Keypoint, ViewSequenceMap,
};
pub use upd::{PlacePartition, PlaceRegion};
