//! Objective contract, budget-aware evaluation and run traces.

use crate::budget::EvaluationBudget;
use crate::space::{Firefly, MixedSolution, SearchSpace};

/// A minimization problem over a [`SearchSpace`].
///
/// `evaluate` must be deterministic and free of side effects; runs on
/// different threads share one instance.
pub trait Objective: Send + Sync {
    fn name(&self) -> &str;
    fn space(&self) -> &SearchSpace;
    fn evaluate(&self, x: &MixedSolution) -> f64;
    /// Target value used to report absolute error.
    fn reference_optimum(&self) -> f64;
}

/// Best-so-far value observed after `fe` evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracePoint {
    pub fe: u64,
    pub best: f64,
}

/// Outcome of one optimization run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunTrace {
    /// One point per strict improvement of the global best, starting with the
    /// first evaluation.
    pub samples: Vec<TracePoint>,
    /// Total evaluations charged to the budget.
    pub evaluations: u64,
    pub best: Firefly,
    pub seed: u64,
    pub algorithm: String,
}

impl RunTrace {
    /// Best-so-far at every multiple of `stride`, plus the final evaluation.
    ///
    /// Points before the first recorded sample are skipped.
    pub fn sampled(&self, stride: u64) -> Vec<TracePoint> {
        let stride = stride.max(1);
        let mut out = Vec::new();
        let mut idx = 0;
        let mut current: Option<f64> = None;
        let mut fe = stride;
        while fe <= self.evaluations {
            while idx < self.samples.len() && self.samples[idx].fe <= fe {
                current = Some(self.samples[idx].best);
                idx += 1;
            }
            if let Some(best) = current {
                out.push(TracePoint { fe, best });
            }
            fe += stride;
        }
        if self.evaluations > 0 && out.last().is_none_or(|p| p.fe < self.evaluations) {
            out.push(TracePoint {
                fe: self.evaluations,
                best: self.best.fitness,
            });
        }
        out
    }
}

/// Wraps an objective with budget accounting and global-best tracking.
pub struct Evaluator<'a, O: Objective + ?Sized> {
    objective: &'a O,
    budget: EvaluationBudget,
    best: Option<Firefly>,
    samples: Vec<TracePoint>,
}

impl<'a, O: Objective + ?Sized> Evaluator<'a, O> {
    pub fn new(objective: &'a O, max_fe: u64) -> Self {
        Evaluator {
            objective,
            budget: EvaluationBudget::new(max_fe),
            best: None,
            samples: Vec::new(),
        }
    }

    pub fn budget(&self) -> &EvaluationBudget {
        &self.budget
    }

    pub fn best(&self) -> Option<&Firefly> {
        self.best.as_ref()
    }

    /// Charges one evaluation and returns the objective value, or `None`
    /// once the budget is spent.
    pub fn evaluate(&mut self, x: &MixedSolution) -> Option<f64> {
        let fe = self.budget.consume(1).ok()?;
        let f = self.objective.evaluate(x);
        let improved = match &self.best {
            None => true,
            Some(b) => f < b.fitness,
        };
        if improved {
            self.best = Some(Firefly {
                solution: x.clone(),
                fitness: f,
            });
            self.samples.push(TracePoint { fe, best: f });
        }
        Some(f)
    }

    /// Closes the run. A run that never evaluated reports `+inf` and an empty
    /// solution.
    pub fn finish(self, seed: u64, algorithm: impl Into<String>) -> RunTrace {
        let best = self.best.unwrap_or_else(|| Firefly {
            solution: MixedSolution::new(Vec::new(), Vec::new()),
            fitness: f64::INFINITY,
        });
        RunTrace {
            samples: self.samples,
            evaluations: self.budget.consumed(),
            best,
            seed,
            algorithm: algorithm.into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::DimensionSpec;

    struct Identity(SearchSpace);

    impl Objective for Identity {
        fn name(&self) -> &str {
            "identity"
        }
        fn space(&self) -> &SearchSpace {
            &self.0
        }
        fn evaluate(&self, x: &MixedSolution) -> f64 {
            x.cont[0]
        }
        fn reference_optimum(&self) -> f64 {
            0.0
        }
    }

    fn identity() -> Identity {
        Identity(SearchSpace::new(vec![DimensionSpec::continuous(0.0, 10.0)]).unwrap())
    }

    fn pt(v: f64) -> MixedSolution {
        MixedSolution::new(vec![v], vec![])
    }

    #[test]
    fn records_strict_improvements_only() {
        let obj = identity();
        let mut ev = Evaluator::new(&obj, 10);
        for v in [5.0, 6.0, 5.0, 3.0, 4.0] {
            ev.evaluate(&pt(v)).unwrap();
        }
        let trace = ev.finish(0, "t");
        assert_eq!(
            trace.samples,
            vec![TracePoint { fe: 1, best: 5.0 }, TracePoint { fe: 4, best: 3.0 }]
        );
        assert_eq!(trace.evaluations, 5);
        assert_eq!(trace.best.fitness, 3.0);
    }

    #[test]
    fn stops_at_budget() {
        let obj = identity();
        let mut ev = Evaluator::new(&obj, 2);
        assert!(ev.evaluate(&pt(1.0)).is_some());
        assert!(ev.evaluate(&pt(1.0)).is_some());
        assert!(ev.evaluate(&pt(0.0)).is_none());
        assert_eq!(ev.finish(0, "t").evaluations, 2);
    }

    #[test]
    fn sampling_with_stride() {
        let obj = identity();
        let mut ev = Evaluator::new(&obj, 1000);
        for i in 0..1000 {
            ev.evaluate(&pt(10.0 - i as f64 * 0.01)).unwrap();
        }
        let trace = ev.finish(0, "t");
        let rows = trace.sampled(100);
        assert!(rows.len() <= 11);
        assert_eq!(rows.last().unwrap().fe, 1000);
        assert!(rows.windows(2).all(|w| w[0].fe < w[1].fe && w[0].best >= w[1].best));

        let three = RunTrace {
            samples: vec![
                TracePoint { fe: 1, best: 3.0 },
                TracePoint { fe: 2, best: 2.0 },
                TracePoint { fe: 3, best: 1.0 },
            ],
            evaluations: 3,
            best: trace.best.clone(),
            seed: 0,
            algorithm: "t".into(),
        };
        assert_eq!(three.sampled(1), three.samples);
    }

    #[test]
    fn final_point_appended_off_stride() {
        let obj = identity();
        let mut ev = Evaluator::new(&obj, 1000);
        for _ in 0..7 {
            ev.evaluate(&pt(2.0)).unwrap();
        }
        let rows = ev.finish(0, "t").sampled(5);
        assert_eq!(rows, vec![TracePoint { fe: 5, best: 2.0 }, TracePoint { fe: 7, best: 2.0 }]);
    }
}
