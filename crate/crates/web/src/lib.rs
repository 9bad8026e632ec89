//! WebAssembly bindings for the demo page in `www/`.
//!
//! Each export wraps a plain Rust function so the numerics are testable
//! without a browser.

use famv::distance::{gower, mixed_euclidean_hamming};
use famv::firefly::{attractiveness, replacement_prob, DEFAULT_BETA0};
use famv::problems::{problem_by_name, Problem};
use famv::rng::seeded;
use famv::Objective;
use wasm_bindgen::prelude::*;

/// Largest budget the page may request, to keep the tab responsive.
pub const MAX_DEMO_BUDGET: u64 = 200_000;

#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub algorithm: String,
    pub fe: Vec<f64>,
    /// Best-so-far absolute error at each `fe`.
    pub ae: Vec<f64>,
}

fn problem(name: &str, dim: usize) -> Result<Problem, String> {
    problem_by_name(name, dim).map_err(|e| e.to_string())
}

/// Best-so-far AE curves, one per algorithm, sampled at `points` evenly
/// spaced evaluation counts.
pub fn convergence_curves(
    problem_name: &str,
    algorithms: &[&str],
    dim: usize,
    budget: u64,
    seed: u64,
    points: u64,
) -> Result<Vec<Curve>, String> {
    if budget == 0 || budget > MAX_DEMO_BUDGET {
        return Err(format!("budget must lie in 1..={MAX_DEMO_BUDGET}"));
    }
    let problem = problem(problem_name, dim)?;
    let stride = (budget / points.max(1)).max(1);
    algorithms
        .iter()
        .map(|name| {
            let spec = registry::spec(name)?;
            let trace = spec(&problem, budget, seed).map_err(|e| e.to_string())?;
            let sampled = trace.sampled(stride);
            Ok(Curve {
                algorithm: trace.algorithm.clone(),
                fe: sampled.iter().map(|p| p.fe as f64).collect(),
                ae: sampled.iter().map(|p| (p.best - problem.reference_optimum()).abs()).collect(),
            })
        })
        .collect()
}

/// Name-to-runner table. Mirrors the CLI registry without pulling the
/// harness (and its file I/O) into the wasm build.
mod registry {
    use famv::distance::DistanceKind::{self, EuclideanOnly, Gower, MixedEuclideanHamming as Hamming};
    use famv::firefly::{run_classical_fa, run_famv, FireflyConfig};
    use famv::ga::{run_ga, GaConfig};
    use famv::problems::Problem;
    use famv::RunTrace;

    type Runner = Box<dyn Fn(&Problem, u64, u64) -> famv::Result<RunTrace>>;

    fn famv(distance: DistanceKind, alpha: bool, gamma: bool) -> Runner {
        Box::new(move |p, fe, seed| {
            run_famv(p, &FireflyConfig::with_adaptation(distance, alpha, gamma).with_budget(fe).with_seed(seed))
        })
    }

    pub fn spec(name: &str) -> Result<Runner, String> {
        Ok(match name {
            "fa" => Box::new(|p, fe, seed| {
                run_classical_fa(p, &FireflyConfig::fixed(EuclideanOnly).with_budget(fe).with_seed(seed))
            }),
            "ga" => Box::new(|p, fe, seed| run_ga(p, &GaConfig::default().with_budget(fe).with_seed(seed))),
            "famv-h" => famv(Hamming, false, false),
            "famv-h-adaptive" => famv(Hamming, true, true),
            "famv-h-alpha" => famv(Hamming, true, false),
            "famv-h-gamma" => famv(Hamming, false, true),
            "famv-g" => famv(Gower, false, false),
            "famv-g-adaptive" => famv(Gower, true, true),
            "famv-g-alpha" => famv(Gower, true, false),
            "famv-g-gamma" => famv(Gower, false, true),
            other => return Err(format!("unknown algorithm '{other}'")),
        })
    }
}

/// Categorical replacement probability over `n` evenly spaced α values in
/// `[0, alpha_max]`; returns `[α_0, p_0, α_1, p_1, …]`.
pub fn replacement_curve(alpha_init: f64, alpha_max: f64, k: f64, adaptive: bool, n: usize) -> Vec<f64> {
    let n = n.max(2);
    (0..n)
        .flat_map(|i| {
            let alpha = alpha_max * i as f64 / (n - 1) as f64;
            [alpha, replacement_prob(alpha, alpha_init, k, adaptive)]
        })
        .collect()
}

/// Distances between random solution pairs of a problem, under the mixed
/// Euclidean–Hamming and Gower measures.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceSample {
    pub hamming: Vec<f64>,
    pub gower: Vec<f64>,
}

pub fn distance_sample(problem_name: &str, dim: usize, pairs: usize, seed: u64) -> Result<DistanceSample, String> {
    let problem = problem(problem_name, dim)?;
    let space = problem.space();
    let mut rng = seeded(seed);
    let mut out = DistanceSample {
        hamming: Vec::with_capacity(pairs),
        gower: Vec::with_capacity(pairs),
    };
    for _ in 0..pairs {
        let x = space.random_solution(&mut rng);
        let y = space.random_solution(&mut rng);
        out.hamming.push(mixed_euclidean_hamming(space, &x, &y).map_err(|e| e.to_string())?);
        out.gower.push(gower(space, &x, &y).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

#[wasm_bindgen]
pub struct Curves(Vec<Curve>);

#[wasm_bindgen]
impl Curves {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> String {
        self.0[i].algorithm.clone()
    }

    pub fn fe(&self, i: usize) -> Vec<f64> {
        self.0[i].fe.clone()
    }

    pub fn ae(&self, i: usize) -> Vec<f64> {
        self.0[i].ae.clone()
    }
}

/// `algorithms` is a comma-separated list of registry names.
#[wasm_bindgen(js_name = runConvergence)]
pub fn run_convergence(problem: &str, algorithms: &str, dim: usize, budget: u32, seed: u32) -> Result<Curves, JsError> {
    let names: Vec<&str> = algorithms.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    convergence_curves(problem, &names, dim, budget as u64, seed as u64, 200)
        .map(Curves)
        .map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = replacementCurve)]
pub fn replacement_curve_js(alpha_init: f64, alpha_max: f64, k: f64, adaptive: bool, n: usize) -> Vec<f64> {
    replacement_curve(alpha_init, alpha_max, k, adaptive, n)
}

/// Returns `[r_h…, r_g…]`, `pairs` values each.
#[wasm_bindgen(js_name = distanceSample)]
pub fn distance_sample_js(problem: &str, dim: usize, pairs: usize, seed: u32) -> Result<Vec<f64>, JsError> {
    let s = distance_sample(problem, dim, pairs, seed as u64).map_err(|e| JsError::new(&e))?;
    Ok(s.hamming.into_iter().chain(s.gower).collect())
}

#[wasm_bindgen(js_name = attractiveness)]
pub fn attractiveness_js(gamma: f64, r: f64) -> f64 {
    attractiveness(DEFAULT_BETA0, gamma, r)
}
