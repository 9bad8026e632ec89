//! Whole-run behaviour of the firefly engines and the GA baseline.

use std::sync::atomic::{AtomicU64, Ordering};

use famv::distance::DistanceKind;
use famv::firefly::{run_classical_fa, run_famv, FireflyConfig};
use famv::ga::{run_ga, GaConfig};
use famv::problems::{Problem, SyntheticFamily};
use famv::{DimensionSpec, MixedSolution, Objective, RunTrace, SearchSpace};

/// `(x − 1.3)² + cost[category]`, unique optimum at `(1.3, "c")`.
struct Toy {
    space: SearchSpace,
    calls: AtomicU64,
}

const TOY_COST: [f64; 4] = [1.0, 0.5, 0.0, 2.0];

impl Toy {
    fn new() -> Self {
        Toy {
            space: SearchSpace::new(vec![
                DimensionSpec::continuous(-5.0, 5.0),
                DimensionSpec::categorical(["a", "b", "c", "d"]),
            ])
            .unwrap(),
            calls: AtomicU64::new(0),
        }
    }

    fn value(x: f64, cat: i64) -> f64 {
        (x - 1.3) * (x - 1.3) + TOY_COST[cat as usize]
    }
}

impl Objective for Toy {
    fn name(&self) -> &str {
        "toy"
    }
    fn space(&self) -> &SearchSpace {
        &self.space
    }
    fn evaluate(&self, x: &MixedSolution) -> f64 {
        self.calls.fetch_add(1, Ordering::Relaxed);
        Toy::value(x.cont[0], x.disc[0])
    }
    fn reference_optimum(&self) -> f64 {
        0.0
    }
}

struct Constant(SearchSpace);

impl Objective for Constant {
    fn name(&self) -> &str {
        "constant"
    }
    fn space(&self) -> &SearchSpace {
        &self.0
    }
    fn evaluate(&self, _: &MixedSolution) -> f64 {
        7.25
    }
    fn reference_optimum(&self) -> f64 {
        7.25
    }
}

fn assert_trace_sane(trace: &RunTrace, max_fe: u64) {
    assert!(trace.evaluations <= max_fe);
    assert!(trace.samples.windows(2).all(|w| w[0].fe < w[1].fe && w[1].best < w[0].best));
    assert_eq!(trace.samples.last().unwrap().best, trace.best.fitness);
}

#[test]
fn toy_grid_oracle_locates_unique_optimum() {
    let mut best = (f64::INFINITY, 0.0, 0);
    for step in 0..=10_000 {
        let x = -5.0 + step as f64 * 1e-3;
        for cat in 0..4 {
            let f = Toy::value(x, cat);
            if f < best.0 {
                best = (f, x, cat);
            }
        }
    }
    assert!(best.0 < 1e-12);
    assert!((best.1 - 1.3).abs() < 1e-9);
    assert_eq!(best.2, 2);
}

#[test]
fn famv_solves_toy_problem() {
    let toy = Toy::new();
    for distance in [DistanceKind::MixedEuclideanHamming, DistanceKind::Gower] {
        let solved = (0..30)
            .filter(|&seed| {
                let cfg = FireflyConfig::fixed(distance).with_budget(5000).with_seed(seed);
                run_famv(&toy, &cfg).unwrap().best.fitness < 1e-2
            })
            .count();
        assert!(solved >= 28, "{distance:?}: {solved}/30");
    }
}

#[test]
fn famv_charges_one_fe_per_evaluate_call() {
    for max_fe in [1, 24, 25, 26, 777] {
        let toy = Toy::new();
        let cfg = FireflyConfig::adaptive(DistanceKind::Gower).with_budget(max_fe).with_seed(1);
        let trace = run_famv(&toy, &cfg).unwrap();
        assert_eq!(trace.evaluations, max_fe);
        assert_eq!(toy.calls.load(Ordering::Relaxed), max_fe);
        assert_trace_sane(&trace, max_fe);
    }
}

#[test]
fn constant_objective_gives_flat_trace() {
    let space = SearchSpace::new(vec![DimensionSpec::continuous(0.0, 1.0), DimensionSpec::integer(0, 5)]).unwrap();
    let problem = Constant(space);
    let traces = [
        run_famv(&problem, &FireflyConfig::fixed(DistanceKind::Gower).with_budget(500)).unwrap(),
        run_classical_fa(&problem, &FireflyConfig::fixed(DistanceKind::EuclideanOnly).with_budget(500)).unwrap(),
        run_ga(&problem, &GaConfig::default().with_budget(500)).unwrap(),
    ];
    for trace in traces {
        assert_eq!(trace.best.fitness, 7.25);
        assert_eq!(trace.samples.len(), 1);
        assert_eq!(trace.samples[0].fe, 1);
    }
}

#[test]
fn runs_are_reproducible_from_seed() {
    let problem = Problem::vessel();
    let fa = FireflyConfig::adaptive(DistanceKind::MixedEuclideanHamming).with_budget(2000).with_seed(11);
    assert_eq!(run_famv(&problem, &fa).unwrap(), run_famv(&problem, &fa).unwrap());
    let ga = GaConfig::default().with_budget(2000).with_seed(11);
    assert_eq!(run_ga(&problem, &ga).unwrap(), run_ga(&problem, &ga).unwrap());
    let other = run_famv(&problem, &fa.clone().with_seed(12)).unwrap();
    assert_ne!(run_famv(&problem, &fa).unwrap().samples, other.samples);
}

#[test]
fn every_engine_respects_budget_and_monotone_trace() {
    let problem = Problem::synthetic(SyntheticFamily::Rastrigin, 6).unwrap();
    for seed in 0..5 {
        let max_fe = 1500 + seed * 37;
        let famv = FireflyConfig::with_adaptation(DistanceKind::Gower, seed % 2 == 0, seed % 3 == 0)
            .with_budget(max_fe)
            .with_seed(seed);
        assert_trace_sane(&run_famv(&problem, &famv).unwrap(), max_fe);
        let fa = FireflyConfig::fixed(DistanceKind::EuclideanOnly).with_budget(max_fe).with_seed(seed);
        assert_trace_sane(&run_classical_fa(&problem, &fa).unwrap(), max_fe);
        let ga = GaConfig::default().with_budget(max_fe).with_seed(seed);
        let trace = run_ga(&problem, &ga).unwrap();
        assert_eq!(trace.evaluations, max_fe);
        assert_trace_sane(&trace, max_fe);
    }
}

#[test]
fn results_stay_inside_the_space() {
    let problem = Problem::csd();
    let cfg = FireflyConfig::fixed(DistanceKind::MixedEuclideanHamming).with_budget(1000);
    for trace in [
        run_famv(&problem, &cfg).unwrap(),
        run_classical_fa(&problem, &cfg).unwrap(),
        run_ga(&problem, &GaConfig::default().with_budget(1000)).unwrap(),
    ] {
        assert!(problem.space().contains(&trace.best.solution), "{}", trace.algorithm);
    }
}

#[test]
fn frozen_ga_population_never_improves() {
    let problem = Problem::synthetic(SyntheticFamily::Sphere, 4).unwrap();
    let cfg = GaConfig {
        p_crossover: 0.0,
        p_mutation: 0.0,
        elitism_count: 20,
        pop_size: 20,
        ..GaConfig::default()
    }
    .with_budget(1000);
    let trace = run_ga(&problem, &cfg).unwrap();
    // only generation 0 is ever evaluated
    assert_eq!(trace.evaluations, 20);
    assert!(trace.samples.iter().all(|p| p.fe <= 20));
}

#[test]
fn classical_fa_is_worse_than_famv_h_on_mixed_sphere() {
    let problem = Problem::synthetic(SyntheticFamily::Sphere, 20).unwrap();
    let mean = |f: &dyn Fn(u64) -> f64| (0..30).map(f).sum::<f64>() / 30.0;
    let fa = mean(&|s| {
        let cfg = FireflyConfig::fixed(DistanceKind::EuclideanOnly).with_budget(20_000).with_seed(s);
        run_classical_fa(&problem, &cfg).unwrap().best.fitness
    });
    let famv = mean(&|s| {
        let cfg = FireflyConfig::fixed(DistanceKind::MixedEuclideanHamming).with_budget(20_000).with_seed(s);
        run_famv(&problem, &cfg).unwrap().best.fitness
    });
    assert!(famv < fa, "famv-h {famv:.3e} vs fa {fa:.3e}");
}

#[test]
fn ga_on_50d_mixed_sphere_is_within_an_order_of_magnitude_of_reference() {
    // reference GA mean AE on this benchmark: 1.93e3
    let problem = Problem::synthetic(SyntheticFamily::Sphere, 50).unwrap();
    let runs = 10;
    let mean = (0..runs)
        .map(|s| run_ga(&problem, &GaConfig::default().with_budget(100_000).with_seed(s)).unwrap().best.fitness)
        .sum::<f64>()
        / runs as f64;
    assert!((193.0..19_300.0).contains(&mean), "{mean:.3e}");
}

#[test]
fn famv_h_gap_over_classical_fa_at_50d() {
    let problem = Problem::synthetic(SyntheticFamily::Sphere, 50).unwrap();
    let runs = 10;
    let mean = |f: &dyn Fn(u64) -> f64| (0..runs).map(f).sum::<f64>() / runs as f64;
    let fa = mean(&|s| {
        let cfg = FireflyConfig::fixed(DistanceKind::EuclideanOnly).with_budget(100_000).with_seed(s);
        run_classical_fa(&problem, &cfg).unwrap().best.fitness
    });
    let famv = mean(&|s| {
        let cfg = FireflyConfig::fixed(DistanceKind::MixedEuclideanHamming).with_budget(100_000).with_seed(s);
        run_famv(&problem, &cfg).unwrap().best.fitness
    });
    assert!(famv * 10.0 <= fa, "famv-h {famv:.3e} vs fa {fa:.3e}");
}
