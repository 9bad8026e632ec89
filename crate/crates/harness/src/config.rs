//! Experiment configuration files.
//!
//! ```toml
//! [experiment]
//! problems = ["sphere", "vessel"]
//! algorithms = ["famv-h", "ga"]
//! runs = 30
//! budget = 20000
//! seed = 7
//! stride = 250
//! dim = 20
//! out = "results/desk"
//!
//! [algorithm.famv-h]
//! pop_size = 40
//! ```
//!
//! Every key is optional; command-line flags override file values.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use famv::problems::problem_names;

use crate::algorithms::{AlgorithmSpec, Overrides, ALGORITHM_NAMES};
use crate::error::{io_err, HarnessError, Result};
use crate::experiment::ExperimentSpec;

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSection {
    pub problems: Option<Vec<String>>,
    pub algorithms: Option<Vec<String>>,
    pub runs: Option<usize>,
    pub budget: Option<u64>,
    pub seed: Option<u64>,
    pub stride: Option<u64>,
    pub dim: Option<usize>,
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default)]
    pub experiment: ExperimentSection,
    /// Overrides keyed by algorithm name.
    #[serde(default)]
    pub algorithm: BTreeMap<String, Overrides>,
}

impl ConfigFile {
    pub fn parse(text: &str, path: &Path) -> Result<Self> {
        toml::from_str(text).map_err(|source| HarnessError::ConfigFile {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(io_err(path))?;
        ConfigFile::parse(&text, path)
    }
}

/// Settings given on the command line; each set field beats the file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunOptions {
    pub problems: Vec<String>,
    pub algorithms: Vec<String>,
    pub runs: Option<usize>,
    pub budget: Option<u64>,
    pub seed: Option<u64>,
    pub stride: Option<u64>,
    pub dim: Option<usize>,
    pub out: Option<PathBuf>,
}

fn expand(names: Vec<String>, all: &[&str]) -> Vec<String> {
    if names.iter().any(|n| n == "all") {
        all.iter().map(|s| s.to_string()).collect()
    } else {
        names
    }
}

/// Merges flags over the file. The name `all` selects a whole registry.
pub fn build_spec(flags: RunOptions, file: ConfigFile) -> Result<ExperimentSpec> {
    let exp = file.experiment;
    let out = flags.out.or(exp.out).ok_or_else(|| {
        HarnessError::Config("no output directory (use --out or `out` in the config file)".into())
    })?;
    let pick = |flag: Vec<String>, file: Option<Vec<String>>| if flag.is_empty() { file.unwrap_or_default() } else { flag };

    let mut spec = ExperimentSpec::new(out);
    spec.problems = expand(pick(flags.problems, exp.problems), &problem_names());
    for name in expand(pick(flags.algorithms, exp.algorithms), &ALGORITHM_NAMES) {
        let overrides = file.algorithm.get(&name).cloned().unwrap_or_default();
        spec.algorithms.push(AlgorithmSpec::by_name(&name)?.with_overrides(overrides));
    }
    if let Some(name) = file.algorithm.keys().find(|n| !spec.algorithms.iter().any(|a| &a.name() == *n)) {
        return Err(HarnessError::Config(format!("overrides given for unselected algorithm '{name}'")));
    }
    spec.runs = flags.runs.or(exp.runs).unwrap_or(spec.runs);
    spec.budget = flags.budget.or(exp.budget);
    spec.base_seed = flags.seed.or(exp.seed).unwrap_or(spec.base_seed);
    spec.stride = flags.stride.or(exp.stride).unwrap_or(spec.stride);
    spec.dim = flags.dim.or(exp.dim).unwrap_or(spec.dim);
    Ok(spec)
}
