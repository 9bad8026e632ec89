//! Experiment grids: resolution, parallel execution and aggregation.

use std::path::{Path, PathBuf};

use famv::problems::{absolute_error, problem_by_name, problem_names, Problem};
use famv::stats::{compare, SampleSet};
use famv::{Objective, RunTrace};
use rayon::prelude::*;

use crate::algorithms::AlgorithmSpec;
use crate::error::{HarnessError, Result};
use crate::output::{
    emit_reports, emit_trace, ensure_dir, read_rows, trace_file_name, write_rows, ProblemReport, SummaryRow,
    SUMMARY_FILE, TRACE_DIR,
};

pub const DEFAULT_RUNS: usize = 30;
pub const DEFAULT_SYNTHETIC_BUDGET: u64 = 100_000;
pub const DEFAULT_ENGINEERING_BUDGET: u64 = 10_000;
pub const DEFAULT_STRIDE: u64 = 250;
pub const DEFAULT_DIM: usize = 50;
/// Constraint tolerance used for the `feasible` column.
pub const FEASIBILITY_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub problems: Vec<String>,
    pub algorithms: Vec<AlgorithmSpec>,
    pub runs: usize,
    /// One budget for every problem; `None` picks the per-kind default.
    pub budget: Option<u64>,
    /// Run `r` uses seed `base_seed + r`.
    pub base_seed: u64,
    pub out_dir: PathBuf,
    pub stride: u64,
    /// Dimension of the synthetic problems.
    pub dim: usize,
}

impl ExperimentSpec {
    pub fn new(out_dir: impl Into<PathBuf>) -> Self {
        ExperimentSpec {
            problems: Vec::new(),
            algorithms: Vec::new(),
            runs: DEFAULT_RUNS,
            budget: None,
            base_seed: 0,
            out_dir: out_dir.into(),
            stride: DEFAULT_STRIDE,
            dim: DEFAULT_DIM,
        }
    }

    pub fn seed_for(&self, run: usize) -> u64 {
        self.base_seed.wrapping_add(run as u64)
    }

    pub fn budget_for(&self, problem: &Problem) -> u64 {
        self.budget.unwrap_or(if problem.is_engineering() {
            DEFAULT_ENGINEERING_BUDGET
        } else {
            DEFAULT_SYNTHETIC_BUDGET
        })
    }

    /// Resolves every name and checks every setting without running anything.
    pub fn resolve(&self) -> Result<Vec<Problem>> {
        let cfg = |m: String| Err(HarnessError::Config(m));
        if self.problems.is_empty() {
            return cfg("no problems selected".into());
        }
        if self.algorithms.is_empty() {
            return cfg("no algorithms selected".into());
        }
        if self.runs == 0 {
            return cfg("runs must be at least 1".into());
        }
        if self.budget == Some(0) {
            return cfg("budget must be at least 1".into());
        }
        if self.stride == 0 {
            return cfg("stride must be at least 1".into());
        }
        for (i, a) in self.algorithms.iter().enumerate() {
            a.validate()?;
            if self.algorithms[..i].iter().any(|b| b.name() == a.name()) {
                return cfg(format!("algorithm '{}' listed twice", a.name()));
            }
        }
        let mut problems: Vec<Problem> = Vec::with_capacity(self.problems.len());
        for name in &self.problems {
            let p = problem_by_name(name, self.dim).map_err(|e| match e {
                famv::Error::UnknownProblem(n) => {
                    HarnessError::Config(format!("unknown problem '{n}' (known: {})", problem_names().join(", ")))
                }
                other => HarnessError::Config(format!("problem '{name}': {other}")),
            })?;
            if problems.iter().any(|q| q.name() == p.name()) {
                return cfg(format!("problem '{name}' listed twice"));
            }
            problems.push(p);
        }
        Ok(problems)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentOutcome {
    pub summary: Vec<SummaryRow>,
    pub reports: Vec<ProblemReport>,
}

struct Cell {
    problem: usize,
    algorithm: usize,
    run: usize,
}

fn summary_row(problem: &Problem, run: usize, trace: &RunTrace) -> SummaryRow {
    SummaryRow {
        problem: problem.name().to_string(),
        algorithm: trace.algorithm.clone(),
        run,
        seed: trace.seed,
        evaluations: trace.evaluations,
        best: trace.best.fitness,
        ae: absolute_error(problem, trace.best.fitness),
        feasible: problem.is_feasible(&trace.best.solution, FEASIBILITY_TOL),
    }
}

/// Runs the full grid and writes traces, `summary.csv` and the report
/// tables under `spec.out_dir`.
///
/// Runs execute on the current rayon pool; output is identical for any
/// pool size. A failing run is reported after all other outputs are written.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentOutcome> {
    let problems = spec.resolve()?;
    let trace_dir = spec.out_dir.join(TRACE_DIR);
    ensure_dir(&trace_dir)?;

    let cells: Vec<Cell> = (0..problems.len())
        .flat_map(|p| (0..spec.algorithms.len()).flat_map(move |a| (0..spec.runs).map(move |run| (p, a, run))))
        .map(|(problem, algorithm, run)| Cell { problem, algorithm, run })
        .collect();

    let outcomes: Vec<Result<SummaryRow>> = cells
        .par_iter()
        .map(|c| {
            let problem = &problems[c.problem];
            let algo = &spec.algorithms[c.algorithm];
            let trace = algo.run(problem, spec.budget_for(problem), spec.seed_for(c.run))?;
            let path = trace_dir.join(trace_file_name(problem.name(), &algo.name(), c.run));
            emit_trace(&trace, spec.stride, &path)?;
            Ok(summary_row(problem, c.run, &trace))
        })
        .collect();

    let mut summary = Vec::with_capacity(outcomes.len());
    let mut failures = Vec::new();
    for (cell, outcome) in cells.iter().zip(outcomes) {
        match outcome {
            Ok(row) => summary.push(row),
            Err(e) => failures.push(format!(
                "{}/{}/run{}: {e}",
                problems[cell.problem].name(),
                spec.algorithms[cell.algorithm].name(),
                cell.run
            )),
        }
    }
    write_rows(&spec.out_dir.join(SUMMARY_FILE), &summary)?;
    let reports = build_reports(&summary)?;
    emit_reports(&spec.out_dir, &reports)?;
    if !failures.is_empty() {
        return Err(HarnessError::RunsFailed(failures));
    }
    Ok(ExperimentOutcome { summary, reports })
}

/// Compares AE samples per problem. Problems and algorithms keep their
/// order of first appearance in `summary`.
pub fn build_reports(summary: &[SummaryRow]) -> Result<Vec<ProblemReport>> {
    type Groups = Vec<(String, Vec<f64>)>;
    let mut problems: Vec<(&str, Groups)> = Vec::new();
    for row in summary {
        let pi = match problems.iter().position(|(p, _)| *p == row.problem) {
            Some(i) => i,
            None => {
                problems.push((&row.problem, Vec::new()));
                problems.len() - 1
            }
        };
        let groups = &mut problems[pi].1;
        match groups.iter_mut().find(|(a, _)| *a == row.algorithm) {
            Some((_, v)) => v.push(row.ae),
            None => groups.push((row.algorithm.clone(), vec![row.ae])),
        }
    }
    problems
        .into_iter()
        .map(|(problem, groups)| {
            Ok(ProblemReport {
                problem: problem.to_string(),
                report: compare(&SampleSet::new(groups)?),
            })
        })
        .collect()
}

/// Recomputes the report tables from an existing `summary.csv` in `dir`.
pub fn compare_dir(dir: &Path) -> Result<Vec<ProblemReport>> {
    let summary: Vec<SummaryRow> = read_rows(&dir.join(SUMMARY_FILE))?;
    if summary.is_empty() {
        return Err(HarnessError::Config(format!("{}: no runs recorded", dir.join(SUMMARY_FILE).display())));
    }
    let reports = build_reports(&summary)?;
    emit_reports(dir, &reports)?;
    Ok(reports)
}
