//! Mixed-variable firefly optimization.
//!
//! The crate provides:
//!
//! - a mixed search space of continuous, integer and categorical dimensions
//!   ([`space`]),
//! - distances between mixed solutions ([`distance`]),
//! - the mixed-variable firefly algorithm with optional α/γ decay and the
//!   classical relaxed firefly baseline ([`firefly`]),
//! - a binary-encoded genetic algorithm baseline ([`ga`]),
//! - engineering and synthetic benchmark problems ([`problems`]),
//! - a Kruskal–Wallis / Dunn / Holm comparison pipeline ([`stats`]).
//!
//! ```
//! use famv::distance::DistanceKind;
//! use famv::firefly::{run_famv, FireflyConfig};
//! use famv::problems::{Problem, SyntheticFamily};
//! use famv::Objective;
//!
//! let problem = Problem::synthetic(SyntheticFamily::Sphere, 6).unwrap();
//! let config = FireflyConfig::fixed(DistanceKind::Gower).with_budget(2_000).with_seed(7);
//! let trace = run_famv(&problem, &config).unwrap();
//! assert!(trace.evaluations <= 2_000);
//! assert!(trace.best.fitness >= problem.reference_optimum());
//! ```

pub mod budget;
pub mod distance;
pub mod error;
pub mod firefly;
pub mod ga;
pub mod objective;
pub mod problems;
pub mod rng;
pub mod space;
pub mod stats;

pub use budget::{EvaluationBudget, Exhausted};
pub use error::{Error, Result};
pub use objective::{Evaluator, Objective, RunTrace, TracePoint};
pub use space::{Bounds, DimensionSpec, DiscreteDomain, Firefly, MixedSolution, SearchSpace};
