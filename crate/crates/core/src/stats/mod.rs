//! Nonparametric comparison of algorithms over repeated runs.
//!
//! The pipeline is: Kruskal–Wallis omnibus test; if it rejects at 0.05,
//! Dunn's pairwise z tests on the pooled mid-ranks; Holm step-down
//! adjustment of the resulting p-values. A group is "similar to best" when
//! its Holm-adjusted comparison against the lowest-mean group does not
//! reject.

mod special;

pub use special::{chi_square_sf, gamma_q, ln_gamma, normal_two_sided_p};

use crate::error::{Error, Result};

/// Significance level used throughout.
pub const SIGNIFICANCE: f64 = 0.05;

/// Final errors of several algorithms, one group per algorithm.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    groups: Vec<(String, Vec<f64>)>,
}

impl SampleSet {
    pub fn new(groups: Vec<(String, Vec<f64>)>) -> Result<Self> {
        if groups.is_empty() {
            return Err(Error::Samples("no groups".into()));
        }
        for (name, values) in &groups {
            if values.is_empty() {
                return Err(Error::Samples(format!("group `{name}` is empty")));
            }
            if values.iter().any(|v| v.is_nan()) {
                return Err(Error::Samples(format!("group `{name}` contains NaN")));
            }
        }
        Ok(SampleSet { groups })
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.groups[i].0
    }

    pub fn values(&self, i: usize) -> &[f64] {
        &self.groups[i].1
    }

    pub fn total(&self) -> usize {
        self.groups.iter().map(|(_, v)| v.len()).sum()
    }
}

/// Pooled mid-ranks summarized per group.
#[derive(Debug, Clone)]
struct Ranking {
    mean_ranks: Vec<f64>,
    sizes: Vec<usize>,
    n: usize,
    /// `Σ (t³ − t)` over tie blocks.
    tie_sum: f64,
}

fn rank(samples: &SampleSet) -> Ranking {
    let mut pooled: Vec<(f64, usize)> = samples
        .groups
        .iter()
        .enumerate()
        .flat_map(|(g, (_, vs))| vs.iter().map(move |&v| (v, g)))
        .collect();
    pooled.sort_by(|a, b| a.0.total_cmp(&b.0));
    let n = pooled.len();
    let mut rank_sums = vec![0.0; samples.len()];
    let mut tie_sum = 0.0;
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && pooled[end].0 == pooled[start].0 {
            end += 1;
        }
        // ranks start+1 ..= end share their mean
        let mid = (start + 1 + end) as f64 / 2.0;
        for &(_, g) in &pooled[start..end] {
            rank_sums[g] += mid;
        }
        let t = (end - start) as f64;
        tie_sum += t * t * t - t;
        start = end;
    }
    let sizes: Vec<usize> = samples.groups.iter().map(|(_, v)| v.len()).collect();
    let mean_ranks = rank_sums.iter().zip(&sizes).map(|(s, &k)| s / k as f64).collect();
    Ranking {
        mean_ranks,
        sizes,
        n,
        tie_sum,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KruskalWallis {
    pub h: f64,
    pub p: f64,
}

fn check_testable(samples: &SampleSet) -> Result<()> {
    if samples.len() < 2 {
        return Err(Error::Samples("at least two groups are required".into()));
    }
    if samples.total() < 3 {
        return Err(Error::Samples("at least three observations are required".into()));
    }
    Ok(())
}

/// Tie-corrected Kruskal–Wallis H with its chi-square p-value.
pub fn kruskal_wallis(samples: &SampleSet) -> Result<KruskalWallis> {
    check_testable(samples)?;
    let r = rank(samples);
    Ok(kruskal_from_ranking(&r))
}

fn kruskal_from_ranking(r: &Ranking) -> KruskalWallis {
    let n = r.n as f64;
    let centre = (n + 1.0) / 2.0;
    let spread: f64 = r
        .mean_ranks
        .iter()
        .zip(&r.sizes)
        .map(|(m, &k)| k as f64 * (m - centre) * (m - centre))
        .sum();
    let correction = 1.0 - r.tie_sum / (n * n * n - n);
    if correction <= 0.0 {
        return KruskalWallis { h: 0.0, p: 1.0 };
    }
    let h = 12.0 / (n * (n + 1.0)) * spread / correction;
    let df = (r.mean_ranks.len() - 1) as f64;
    KruskalWallis {
        h,
        p: chi_square_sf(h, df),
    }
}

/// One Dunn comparison; `z > 0` when group `i` ranks above group `j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DunnPair {
    pub i: usize,
    pub j: usize,
    pub z: f64,
    pub p: f64,
}

fn dunn_from_ranking(r: &Ranking, i: usize, j: usize) -> DunnPair {
    let n = r.n as f64;
    let variance = n * (n + 1.0) / 12.0 - r.tie_sum / (12.0 * (n - 1.0));
    let se = (variance * (1.0 / r.sizes[i] as f64 + 1.0 / r.sizes[j] as f64)).sqrt();
    let diff = r.mean_ranks[i] - r.mean_ranks[j];
    let z = if se > 0.0 { diff / se } else { 0.0 };
    DunnPair {
        i,
        j,
        z,
        p: normal_two_sided_p(z),
    }
}

/// Dunn z statistics and two-sided p-values for every pair `i < j`.
pub fn dunn_pairwise(samples: &SampleSet) -> Result<Vec<DunnPair>> {
    check_testable(samples)?;
    let r = rank(samples);
    let k = samples.len();
    Ok((0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .map(|(i, j)| dunn_from_ranking(&r, i, j))
        .collect())
}

/// Holm step-down adjustment, returned in input order.
pub fn holm_adjust(raw: &[f64]) -> Vec<f64> {
    let m = raw.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| raw[a].total_cmp(&raw[b]));
    let mut adjusted = vec![0.0; m];
    let mut running = 0.0f64;
    for (rank, &idx) in order.iter().enumerate() {
        running = running.max((m - rank) as f64 * raw[idx]);
        adjusted[idx] = running.min(1.0);
    }
    adjusted
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroupSummary {
    pub name: String,
    pub n: usize,
    pub mean: f64,
    /// Sample standard deviation (`n − 1` divisor); zero for a single value.
    pub std: f64,
}

fn summarize_group(name: &str, values: &[f64]) -> GroupSummary {
    let n = values.len();
    let mean = values.iter().sum::<f64>() / n as f64;
    let std = if n > 1 {
        (values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1) as f64).sqrt()
    } else {
        0.0
    };
    GroupSummary {
        name: name.to_string(),
        n,
        mean,
        std,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairComparison {
    pub i: usize,
    pub j: usize,
    pub z: f64,
    pub raw_p: f64,
    pub adjusted_p: f64,
    pub significant: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub groups: Vec<GroupSummary>,
    /// `None` when fewer than two groups or three observations exist.
    pub kruskal: Option<KruskalWallis>,
    pub omnibus_significant: bool,
    /// All pairs, Holm-adjusted as one family.
    pub pairwise: Vec<PairComparison>,
    /// Best against each other group, Holm-adjusted as one family.
    pub versus_best: Vec<PairComparison>,
    pub best: usize,
    pub similar_to_best: Vec<usize>,
}

impl ComparisonReport {
    pub fn is_similar_to_best(&self, group: usize) -> bool {
        self.similar_to_best.contains(&group)
    }
}

fn adjust_family(pairs: Vec<DunnPair>, gate: bool) -> Vec<PairComparison> {
    let raw: Vec<f64> = pairs.iter().map(|p| p.p).collect();
    let adjusted = holm_adjust(&raw);
    pairs
        .into_iter()
        .zip(adjusted)
        .map(|(p, adjusted_p)| PairComparison {
            i: p.i,
            j: p.j,
            z: p.z,
            raw_p: p.p,
            adjusted_p,
            significant: gate && adjusted_p < SIGNIFICANCE,
        })
        .collect()
}

/// Runs the whole comparison pipeline.
pub fn compare(samples: &SampleSet) -> ComparisonReport {
    let groups: Vec<GroupSummary> = (0..samples.len())
        .map(|g| summarize_group(samples.name(g), samples.values(g)))
        .collect();
    let best = groups
        .iter()
        .enumerate()
        .fold(0, |b, (g, s)| if s.mean < groups[b].mean { g } else { b });

    if check_testable(samples).is_err() {
        return ComparisonReport {
            similar_to_best: (0..groups.len()).collect(),
            groups,
            kruskal: None,
            omnibus_significant: false,
            pairwise: Vec::new(),
            versus_best: Vec::new(),
            best,
        };
    }

    let ranking = rank(samples);
    let kw = kruskal_from_ranking(&ranking);
    let gate = kw.p < SIGNIFICANCE;
    let k = samples.len();
    let all_pairs = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .map(|(i, j)| dunn_from_ranking(&ranking, i, j))
        .collect();
    let best_pairs = (0..k)
        .filter(|&g| g != best)
        .map(|g| dunn_from_ranking(&ranking, best, g))
        .collect();
    let pairwise = adjust_family(all_pairs, gate);
    let versus_best = adjust_family(best_pairs, gate);
    let mut similar_to_best: Vec<usize> = std::iter::once(best)
        .chain(versus_best.iter().filter(|c| !c.significant).map(|c| c.j))
        .collect();
    similar_to_best.sort_unstable();

    ComparisonReport {
        groups,
        kruskal: Some(kw),
        omnibus_significant: gate,
        pairwise,
        versus_best,
        best,
        similar_to_best,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(groups: &[&[f64]]) -> SampleSet {
        SampleSet::new(
            groups
                .iter()
                .enumerate()
                .map(|(i, g)| (format!("g{i}"), g.to_vec()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn sample_set_validation() {
        assert!(SampleSet::new(vec![]).is_err());
        assert!(SampleSet::new(vec![("a".into(), vec![])]).is_err());
        assert!(SampleSet::new(vec![("a".into(), vec![f64::NAN])]).is_err());
    }

    #[test]
    fn identical_groups() {
        let s = set(&[&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]]);
        assert_eq!(kruskal_wallis(&s).unwrap(), KruskalWallis { h: 0.0, p: 1.0 });
        let d = dunn_pairwise(&s).unwrap();
        assert_eq!((d[0].z, d[0].p), (0.0, 1.0));
    }

    #[test]
    fn all_values_equal_is_degenerate() {
        let s = set(&[&[4.0, 4.0], &[4.0, 4.0, 4.0]]);
        assert_eq!(kruskal_wallis(&s).unwrap(), KruskalWallis { h: 0.0, p: 1.0 });
        assert_eq!(dunn_pairwise(&s).unwrap()[0].p, 1.0);
    }

    #[test]
    fn too_few_observations() {
        assert!(kruskal_wallis(&set(&[&[1.0, 2.0]])).is_err());
        assert!(kruskal_wallis(&set(&[&[1.0], &[2.0]])).is_err());
    }

    #[test]
    fn dunn_antisymmetry() {
        let a: &[f64] = &[1.0, 5.0, 2.5, 7.0];
        let b: &[f64] = &[3.0, 3.5, 9.0];
        let ab = dunn_pairwise(&set(&[a, b])).unwrap()[0];
        let ba = dunn_pairwise(&set(&[b, a])).unwrap()[0];
        assert!((ab.z + ba.z).abs() < 1e-15);
        assert!((ab.p - ba.p).abs() < 1e-15);
    }

    #[test]
    fn holm_examples() {
        let adj = holm_adjust(&[0.01, 0.02, 0.04]);
        for (a, e) in adj.iter().zip([0.03, 0.04, 0.04]) {
            assert!((a - e).abs() < 1e-15);
        }
        assert_eq!(holm_adjust(&[0.3]), vec![0.3]);
        assert_eq!(holm_adjust(&[1.0, 1.0]), vec![1.0, 1.0]);
        assert_eq!(holm_adjust(&[]), Vec::<f64>::new());
    }

    #[test]
    fn summarize_single_group() {
        let r = compare(&set(&[&[2.0, 4.0]]));
        assert_eq!(r.best, 0);
        assert_eq!(r.similar_to_best, vec![0]);
        assert_eq!(r.groups[0].mean, 3.0);
        assert!((r.groups[0].std - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn separated_groups_classified() {
        let low: Vec<f64> = (0..30).map(|i| 1.0 + 0.01 * ((i as f64 * 0.7).sin())).collect();
        let high: Vec<f64> = (0..30).map(|i| 100.0 + 0.01 * ((i as f64 * 1.3).cos())).collect();
        let r = compare(&set(&[&high, &low]));
        assert_eq!(r.best, 1);
        assert!(r.omnibus_significant);
        assert_eq!(r.similar_to_best, vec![1]);
    }

    #[test]
    fn duplicate_groups_both_similar() {
        let g: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let r = compare(&set(&[&g, &g]));
        assert_eq!(r.similar_to_best, vec![0, 1]);
    }
}
