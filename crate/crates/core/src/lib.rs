//! Address-transaction graph analytics for tracing ransomware payment flows.
//!
//! The pipeline ingests a normalized transaction dump, expands n-step
//! address-transaction graphs from labelled seed addresses, classifies each
//! family's spreading pattern and temporal profile, labels address nodes with
//! topological behaviours, and compares families through their behaviour
//! distributions (Euclidean distances, 2-D PCA, threshold clustering).
//!
//! Modules map onto the pipeline stages:
//!
//! - [`ledger`]: immutable indexed transaction store and seed lists
//! - [`synth`]: synthetic ledgers with planted motifs for oracle testing
//! - [`graph`]: n-step bipartite graph expansion and per-family merging
//! - [`spread`]: spreading-pattern classification and block-height profiles
//! - [`behavior`]: topological behaviour labels for address nodes
//! - [`similarity`]: family profiles, distance matrices, PCA, clustering

pub mod behavior;
pub mod graph;
pub mod ledger;
pub mod similarity;
pub mod spread;
pub mod synth;

pub use behavior::{Behavior, BehaviorAssignment, DegreeContext, DegreeScope, TxFan};
pub use graph::AddressTxGraph;
pub use ledger::{LedgerIndex, SeedRecord, TransactionRecord, TxSlot};
pub use similarity::{ClusterReport, DistanceMatrix, FamilyProfile, PcaProjection};
pub use spread::{SpreadingPattern, TemporalProfile};
pub use synth::{CampaignSpec, GroundTruthManifest, MotifKind, MotifSpec};
