//! Firefly algorithms: the mixed-variable engine and the relaxed classical
//! baseline.

mod classical;
mod config;
mod famv;
mod operators;

pub use classical::{decode_relaxed, relaxed_bounds, run_classical_fa};
pub use config::*;
pub use famv::run_famv;
pub use operators::*;
