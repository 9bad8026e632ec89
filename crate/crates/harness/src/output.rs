//! CSV artifacts: traces, per-run summaries, result tables and counts.

use std::fs;
use std::path::{Path, PathBuf};

use famv::stats::ComparisonReport;
use famv::RunTrace;
use serde::{Deserialize, Serialize};

use crate::error::{csv_err, io_err, Result};

pub const TRACE_DIR: &str = "traces";
pub const SUMMARY_FILE: &str = "summary.csv";
pub const RESULTS_FILE: &str = "results.csv";
pub const COUNTS_FILE: &str = "counts.csv";
pub const KRUSKAL_FILE: &str = "kruskal.csv";
pub const PAIRWISE_FILE: &str = "pairwise.csv";

/// One row of `summary.csv`: the outcome of a single run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub problem: String,
    pub algorithm: String,
    pub run: usize,
    pub seed: u64,
    pub evaluations: u64,
    pub best: f64,
    pub ae: f64,
    /// All constraints within tolerance; always true for unconstrained problems.
    pub feasible: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub problem: String,
    pub algorithm: String,
    pub mean_ae: f64,
    pub std_ae: f64,
    pub is_best: bool,
    pub is_similar_to_best: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountRow {
    pub algorithm: String,
    pub best: usize,
    pub similar_to_best: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KruskalRow {
    pub problem: String,
    pub h: Option<f64>,
    pub p: Option<f64>,
    pub significant: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairRow {
    pub problem: String,
    /// `all` or `versus_best`; each family is Holm-adjusted on its own.
    pub family: String,
    pub algorithm_i: String,
    pub algorithm_j: String,
    pub z: f64,
    pub raw_p: f64,
    pub adjusted_p: f64,
    pub significant: bool,
}

/// Comparison of all algorithms on one problem, groups in table order.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemReport {
    pub problem: String,
    pub report: ComparisonReport,
}

pub fn trace_file_name(problem: &str, algorithm: &str, run: usize) -> String {
    format!("{problem}__{algorithm}__run{run:03}.csv")
}

pub(crate) fn ensure_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(io_err(dir))
}

/// Writes `fe,best` rows at every multiple of `stride` plus the final point.
pub fn emit_trace(trace: &RunTrace, stride: u64, path: &Path) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err(path))?;
    w.write_record(["fe", "best"]).map_err(csv_err(path))?;
    for p in trace.sampled(stride) {
        w.write_record([p.fe.to_string(), p.best.to_string()]).map_err(csv_err(path))?;
    }
    w.flush().map_err(io_err(path))
}

pub fn read_trace(path: &Path) -> Result<Vec<(u64, f64)>> {
    let mut r = csv::Reader::from_path(path).map_err(csv_err(path))?;
    r.deserialize().map(|row| row.map_err(csv_err(path))).collect()
}

pub fn write_rows<T: Serialize>(path: &Path, rows: &[T]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err(path))?;
    for row in rows {
        w.serialize(row).map_err(csv_err(path))?;
    }
    w.flush().map_err(io_err(path))
}

pub fn read_rows<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<Vec<T>> {
    let mut r = csv::Reader::from_path(path).map_err(csv_err(path))?;
    r.deserialize().map(|row| row.map_err(csv_err(path))).collect()
}

pub fn result_rows(reports: &[ProblemReport]) -> Vec<ResultRow> {
    reports
        .iter()
        .flat_map(|pr| {
            pr.report.groups.iter().enumerate().map(|(g, s)| ResultRow {
                problem: pr.problem.clone(),
                algorithm: s.name.clone(),
                mean_ae: s.mean,
                std_ae: s.std,
                is_best: g == pr.report.best,
                is_similar_to_best: pr.report.is_similar_to_best(g),
            })
        })
        .collect()
}

/// Per-algorithm tallies in order of first appearance.
pub fn count_rows(results: &[ResultRow]) -> Vec<CountRow> {
    let mut counts: Vec<CountRow> = Vec::new();
    for r in results {
        let idx = match counts.iter().position(|c| c.algorithm == r.algorithm) {
            Some(i) => i,
            None => {
                counts.push(CountRow {
                    algorithm: r.algorithm.clone(),
                    best: 0,
                    similar_to_best: 0,
                });
                counts.len() - 1
            }
        };
        counts[idx].best += usize::from(r.is_best);
        counts[idx].similar_to_best += usize::from(r.is_similar_to_best);
    }
    counts
}

fn kruskal_rows(reports: &[ProblemReport]) -> Vec<KruskalRow> {
    reports
        .iter()
        .map(|pr| KruskalRow {
            problem: pr.problem.clone(),
            h: pr.report.kruskal.map(|k| k.h),
            p: pr.report.kruskal.map(|k| k.p),
            significant: pr.report.omnibus_significant,
        })
        .collect()
}

fn pair_rows(reports: &[ProblemReport]) -> Vec<PairRow> {
    let mut rows = Vec::new();
    for pr in reports {
        let name = |g: usize| pr.report.groups[g].name.clone();
        for (family, pairs) in [("all", &pr.report.pairwise), ("versus_best", &pr.report.versus_best)] {
            rows.extend(pairs.iter().map(|c| PairRow {
                problem: pr.problem.clone(),
                family: family.to_string(),
                algorithm_i: name(c.i),
                algorithm_j: name(c.j),
                z: c.z,
                raw_p: c.raw_p,
                adjusted_p: c.adjusted_p,
                significant: c.significant,
            }));
        }
    }
    rows
}

/// Writes results, counts, Kruskal–Wallis and pairwise tables into `dir`.
pub fn emit_reports(dir: &Path, reports: &[ProblemReport]) -> Result<Vec<PathBuf>> {
    let results = result_rows(reports);
    let paths: Vec<PathBuf> = [RESULTS_FILE, COUNTS_FILE, KRUSKAL_FILE, PAIRWISE_FILE]
        .iter()
        .map(|f| dir.join(f))
        .collect();
    write_rows(&paths[0], &results)?;
    write_rows(&paths[1], &count_rows(&results))?;
    write_rows(&paths[2], &kruskal_rows(reports))?;
    write_rows(&paths[3], &pair_rows(reports))?;
    Ok(paths)
}
