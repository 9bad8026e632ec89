//! Algorithm registry: every variant addressable by name, plus per-variant
//! parameter overrides.

use famv::distance::DistanceKind;
use famv::firefly::{run_classical_fa, run_famv, FireflyConfig};
use famv::ga::{run_ga, GaConfig};
use famv::{Objective, RunTrace};
use serde::Deserialize;

use crate::error::{HarnessError, Result};

/// Registry order; also the column order of generated tables.
pub const ALGORITHM_NAMES: [&str; 10] = [
    "fa",
    "famv-h",
    "famv-h-adaptive",
    "famv-g",
    "famv-g-adaptive",
    "famv-h-alpha",
    "famv-h-gamma",
    "famv-g-alpha",
    "famv-g-gamma",
    "ga",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    /// Classical firefly algorithm on the relaxed continuous space.
    Fa,
    Famv {
        distance: DistanceKind,
        adapt_alpha: bool,
        adapt_gamma: bool,
    },
    Ga,
}

impl Algorithm {
    pub fn from_name(name: &str) -> Option<Self> {
        let famv = |distance, adapt_alpha, adapt_gamma| {
            Some(Algorithm::Famv {
                distance,
                adapt_alpha,
                adapt_gamma,
            })
        };
        use DistanceKind::{Gower as G, MixedEuclideanHamming as H};
        match name {
            "fa" => Some(Algorithm::Fa),
            "ga" => Some(Algorithm::Ga),
            "famv-h" => famv(H, false, false),
            "famv-h-adaptive" => famv(H, true, true),
            "famv-h-alpha" => famv(H, true, false),
            "famv-h-gamma" => famv(H, false, true),
            "famv-g" => famv(G, false, false),
            "famv-g-adaptive" => famv(G, true, true),
            "famv-g-alpha" => famv(G, true, false),
            "famv-g-gamma" => famv(G, false, true),
            _ => None,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Algorithm::Fa => "fa".into(),
            Algorithm::Ga => "ga".into(),
            Algorithm::Famv {
                distance,
                adapt_alpha,
                adapt_gamma,
            } => FireflyConfig::with_adaptation(*distance, *adapt_alpha, *adapt_gamma).variant_name(),
        }
    }

    fn is_firefly(&self) -> bool {
        !matches!(self, Algorithm::Ga)
    }
}

/// Optional parameter overrides; unset fields keep the variant's defaults.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Overrides {
    pub pop_size: Option<usize>,
    pub beta0: Option<f64>,
    pub alpha: Option<f64>,
    pub gamma: Option<f64>,
    pub k: Option<f64>,
    pub p_crossover: Option<f64>,
    pub p_mutation: Option<f64>,
    pub tournament_size: Option<usize>,
    pub elitism_count: Option<usize>,
    pub bits_per_continuous: Option<u32>,
}

impl Overrides {
    fn has_firefly_keys(&self) -> bool {
        self.beta0.is_some() || self.alpha.is_some() || self.gamma.is_some() || self.k.is_some()
    }

    fn has_ga_keys(&self) -> bool {
        self.p_crossover.is_some()
            || self.p_mutation.is_some()
            || self.tournament_size.is_some()
            || self.elitism_count.is_some()
            || self.bits_per_continuous.is_some()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgorithmSpec {
    pub algorithm: Algorithm,
    pub overrides: Overrides,
}

impl AlgorithmSpec {
    pub fn by_name(name: &str) -> Result<Self> {
        let algorithm = Algorithm::from_name(name).ok_or_else(|| {
            HarnessError::Config(format!("unknown algorithm '{name}' (known: {})", ALGORITHM_NAMES.join(", ")))
        })?;
        Ok(AlgorithmSpec {
            algorithm,
            overrides: Overrides::default(),
        })
    }

    pub fn with_overrides(mut self, overrides: Overrides) -> Self {
        self.overrides = overrides;
        self
    }

    pub fn name(&self) -> String {
        self.algorithm.name()
    }

    fn firefly_config(&self, max_fe: u64, seed: u64) -> FireflyConfig {
        let mut cfg = match self.algorithm {
            Algorithm::Famv {
                distance,
                adapt_alpha,
                adapt_gamma,
            } => FireflyConfig::with_adaptation(distance, adapt_alpha, adapt_gamma),
            _ => FireflyConfig::fixed(DistanceKind::EuclideanOnly),
        };
        let o = &self.overrides;
        cfg.pop_size = o.pop_size.unwrap_or(cfg.pop_size);
        cfg.beta0 = o.beta0.unwrap_or(cfg.beta0);
        cfg.alpha = o.alpha.unwrap_or(cfg.alpha);
        cfg.gamma = o.gamma.unwrap_or(cfg.gamma);
        cfg.k = o.k.unwrap_or(cfg.k);
        cfg.with_budget(max_fe).with_seed(seed)
    }

    fn ga_config(&self, max_fe: u64, seed: u64) -> GaConfig {
        let d = GaConfig::default();
        let o = &self.overrides;
        GaConfig {
            pop_size: o.pop_size.unwrap_or(d.pop_size),
            p_crossover: o.p_crossover.unwrap_or(d.p_crossover),
            p_mutation: o.p_mutation.unwrap_or(d.p_mutation),
            tournament_size: o.tournament_size.unwrap_or(d.tournament_size),
            elitism_count: o.elitism_count.unwrap_or(d.elitism_count),
            bits_per_continuous: o.bits_per_continuous.unwrap_or(d.bits_per_continuous),
            ..d
        }
        .with_budget(max_fe)
        .with_seed(seed)
    }

    /// Rejects overrides that do not apply to this algorithm or produce an
    /// invalid configuration.
    pub fn validate(&self) -> Result<()> {
        let name = self.name();
        if self.algorithm.is_firefly() {
            if self.overrides.has_ga_keys() {
                return Err(HarnessError::Config(format!("{name}: GA parameters do not apply")));
            }
            self.firefly_config(1, 0).validate()?;
        } else {
            if self.overrides.has_firefly_keys() {
                return Err(HarnessError::Config(format!("{name}: firefly parameters do not apply")));
            }
            self.ga_config(1, 0).validate()?;
        }
        Ok(())
    }

    pub fn run<O: Objective + ?Sized>(&self, problem: &O, max_fe: u64, seed: u64) -> famv::Result<RunTrace> {
        match self.algorithm {
            Algorithm::Fa => run_classical_fa(problem, &self.firefly_config(max_fe, seed)),
            Algorithm::Famv { .. } => run_famv(problem, &self.firefly_config(max_fe, seed)),
            Algorithm::Ga => run_ga(problem, &self.ga_config(max_fe, seed)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_registered_name_round_trips() {
        for name in ALGORITHM_NAMES {
            assert_eq!(Algorithm::from_name(name).unwrap().name(), name);
        }
        assert!(AlgorithmSpec::by_name("pso").is_err());
    }

    #[test]
    fn foreign_overrides_are_rejected() {
        let ga = AlgorithmSpec::by_name("ga").unwrap();
        let bad = ga.clone().with_overrides(Overrides {
            gamma: Some(1.0),
            ..Overrides::default()
        });
        assert!(bad.validate().is_err());
        let odd = ga.with_overrides(Overrides {
            pop_size: Some(11),
            ..Overrides::default()
        });
        assert!(odd.validate().is_err());
        let fa = AlgorithmSpec::by_name("famv-g").unwrap().with_overrides(Overrides {
            p_mutation: Some(0.1),
            ..Overrides::default()
        });
        assert!(fa.validate().is_err());
    }

    #[test]
    fn overrides_reach_the_run() {
        let spec = AlgorithmSpec::by_name("famv-h-alpha").unwrap().with_overrides(Overrides {
            pop_size: Some(5),
            ..Overrides::default()
        });
        let cfg = spec.firefly_config(10, 3);
        assert_eq!(cfg.pop_size, 5);
        assert!(cfg.adapt_alpha && !cfg.adapt_gamma);
        assert_eq!((cfg.max_fe, cfg.seed), (10, 3));
    }
}
