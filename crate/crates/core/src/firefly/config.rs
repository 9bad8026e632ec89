use crate::distance::DistanceKind;
use crate::error::{Error, Result};

/// Lower bound of the adaptive α schedule.
pub const ALPHA_FLOOR: f64 = 0.01;
/// Lower bound of the adaptive γ schedule.
pub const GAMMA_FLOOR: f64 = 0.01;

pub const DEFAULT_POP_SIZE: usize = 25;
pub const DEFAULT_BETA0: f64 = 1.5;
pub const FIXED_ALPHA: f64 = 1.5;
pub const FIXED_GAMMA: f64 = 0.1;
pub const ADAPTIVE_ALPHA_INIT: f64 = 2.0;
pub const ADAPTIVE_GAMMA_INIT: f64 = 0.05;
/// Steepness of the categorical replacement sigmoid.
pub const DEFAULT_K: f64 = 1.0;

/// Settings shared by the mixed-variable and classical firefly runs.
///
/// When a parameter is adapted, its field holds the initial value of the
/// schedule.
#[derive(Debug, Clone, PartialEq)]
pub struct FireflyConfig {
    pub pop_size: usize,
    pub beta0: f64,
    pub alpha: f64,
    pub gamma: f64,
    pub k: f64,
    pub distance: DistanceKind,
    pub adapt_alpha: bool,
    pub adapt_gamma: bool,
    pub max_fe: u64,
    pub seed: u64,
}

impl Default for FireflyConfig {
    fn default() -> Self {
        FireflyConfig::fixed(DistanceKind::MixedEuclideanHamming)
    }
}

impl FireflyConfig {
    /// Constant α = 1.5, γ = 0.1.
    pub fn fixed(distance: DistanceKind) -> Self {
        FireflyConfig::with_adaptation(distance, false, false)
    }

    /// α and γ both decay from 2 and 0.05.
    pub fn adaptive(distance: DistanceKind) -> Self {
        FireflyConfig::with_adaptation(distance, true, true)
    }

    /// Each adapted parameter starts from its adaptive initial value; the
    /// other keeps its fixed value.
    pub fn with_adaptation(distance: DistanceKind, adapt_alpha: bool, adapt_gamma: bool) -> Self {
        FireflyConfig {
            pop_size: DEFAULT_POP_SIZE,
            beta0: DEFAULT_BETA0,
            alpha: if adapt_alpha { ADAPTIVE_ALPHA_INIT } else { FIXED_ALPHA },
            gamma: if adapt_gamma { ADAPTIVE_GAMMA_INIT } else { FIXED_GAMMA },
            k: DEFAULT_K,
            distance,
            adapt_alpha,
            adapt_gamma,
            max_fe: 100_000,
            seed: 0,
        }
    }

    pub fn with_budget(mut self, max_fe: u64) -> Self {
        self.max_fe = max_fe;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::Config(format!("{name} must be a positive finite number, got {v}")))
            }
        };
        if self.pop_size < 2 {
            return Err(Error::Config(format!("pop_size must be at least 2, got {}", self.pop_size)));
        }
        positive("beta0", self.beta0)?;
        positive("alpha", self.alpha)?;
        positive("gamma", self.gamma)?;
        positive("k", self.k)?;
        if self.max_fe == 0 {
            return Err(Error::Config("max_fe must be positive".into()));
        }
        Ok(())
    }
}

impl FireflyConfig {
    /// Short variant name, e.g. `famv-g-adaptive` or `famv-h-alpha`.
    pub fn variant_name(&self) -> String {
        let base = match self.distance {
            DistanceKind::MixedEuclideanHamming => "famv-h",
            DistanceKind::Gower => "famv-g",
            DistanceKind::EuclideanOnly => "famv-e",
        };
        let suffix = match (self.adapt_alpha, self.adapt_gamma) {
            (true, true) => "-adaptive",
            (true, false) => "-alpha",
            (false, true) => "-gamma",
            (false, false) => "",
        };
        format!("{base}{suffix}")
    }
}
