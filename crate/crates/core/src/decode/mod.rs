//! Decoding: projective Reed-Solomon error-and-erasure decoding, the query
//! generator, the local corrector for projective lifted codes, and a
//! reproducible Monte-Carlo harness around them.

mod experiment;
mod local;
mod prs;
mod query;

pub use experiment::{corrupt, mc_experiment, run_trial, ExperimentReport, TrialOutcome};
pub use local::{local_correct, CorrectionConfig, CountingOracle, SliceOracle, WordOracle};
pub use prs::{prs_decode, prs_encode};
pub use query::query_gen;
