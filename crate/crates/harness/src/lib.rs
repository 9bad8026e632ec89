//! Experiment orchestration for the `famv` optimizers: algorithm registry,
//! parallel run grids, CSV artifacts and statistical summaries.

pub mod algorithms;
pub mod config;
pub mod error;
pub mod experiment;
pub mod output;

pub use algorithms::{Algorithm, AlgorithmSpec, Overrides, ALGORITHM_NAMES};
pub use config::{build_spec, ConfigFile, RunOptions};
pub use error::{HarnessError, Result};
pub use experiment::{build_reports, compare_dir, run_experiment, ExperimentOutcome, ExperimentSpec};
pub use output::{ProblemReport, ResultRow, SummaryRow};
