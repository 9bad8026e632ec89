//! Binary-encoded genetic algorithm baseline.
//!
//! All variable types share one bit-string genome: continuous dimensions are
//! quantized on `bits_per_continuous` bits, discrete dimensions use the
//! smallest width that covers their cardinality and are decoded modulo it.
//! Segments are big-endian.

use rand::Rng;

use crate::error::{Error, Result};
use crate::objective::{Evaluator, Objective, RunTrace};
use crate::rng::seeded;
use crate::space::{Bounds, DiscreteDomain, MixedSolution, SearchSpace};

#[derive(Debug, Clone, PartialEq)]
pub struct GaConfig {
    pub pop_size: usize,
    pub p_crossover: f64,
    /// Per-bit flip probability.
    pub p_mutation: f64,
    pub tournament_size: usize,
    pub elitism_count: usize,
    pub bits_per_continuous: u32,
    pub max_fe: u64,
    pub seed: u64,
}

impl Default for GaConfig {
    fn default() -> Self {
        GaConfig {
            pop_size: 100,
            p_crossover: 0.9,
            p_mutation: 0.01,
            tournament_size: 3,
            elitism_count: 1,
            bits_per_continuous: 16,
            max_fe: 100_000,
            seed: 0,
        }
    }
}

impl GaConfig {
    pub fn with_budget(mut self, max_fe: u64) -> Self {
        self.max_fe = max_fe;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let cfg = |m: String| Err(Error::Config(m));
        if self.pop_size < 2 || !self.pop_size.is_multiple_of(2) {
            return cfg(format!("pop_size must be even and at least 2, got {}", self.pop_size));
        }
        for (name, p) in [("p_crossover", self.p_crossover), ("p_mutation", self.p_mutation)] {
            if !(0.0..=1.0).contains(&p) {
                return cfg(format!("{name} must lie in [0, 1], got {p}"));
            }
        }
        if self.tournament_size == 0 {
            return cfg("tournament_size must be positive".into());
        }
        if self.elitism_count == 0 || self.elitism_count > self.pop_size {
            return cfg(format!("elitism_count must lie in 1..={}, got {}", self.pop_size, self.elitism_count));
        }
        if !(1..=52).contains(&self.bits_per_continuous) {
            return cfg(format!("bits_per_continuous must lie in 1..=52, got {}", self.bits_per_continuous));
        }
        if self.max_fe == 0 {
            return cfg("max_fe must be positive".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum SegmentKind {
    Continuous(Bounds),
    Discrete { lo: i64, cardinality: u64 },
}

#[derive(Debug, Clone, PartialEq)]
struct Segment {
    bits: u32,
    kind: SegmentKind,
}

/// Bit layout of a genome, derived from a search space.
#[derive(Debug, Clone, PartialEq)]
pub struct Layout {
    segments: Vec<Segment>,
    n_continuous: usize,
    len: usize,
}

/// Width needed to address `cardinality` values.
pub fn bits_for(cardinality: u64) -> u32 {
    if cardinality <= 1 {
        0
    } else {
        64 - (cardinality - 1).leading_zeros()
    }
}

fn segment_value(bits: &[bool]) -> u64 {
    bits.iter().fold(0, |acc, &b| (acc << 1) | b as u64)
}

/// Maps a segment value onto `cardinality` codes by modulo.
pub fn decode_discrete_segment(bits: &[bool], cardinality: u64) -> u64 {
    segment_value(bits) % cardinality.max(1)
}

/// `lo + v / (2^b − 1) · (hi − lo)`.
pub fn decode_continuous_segment(bits: &[bool], bounds: Bounds) -> f64 {
    if bits.is_empty() {
        return bounds.lo;
    }
    let max = ((1u64 << bits.len()) - 1) as f64;
    bounds.lo + segment_value(bits) as f64 / max * bounds.range()
}

impl Layout {
    pub fn new(space: &SearchSpace, bits_per_continuous: u32) -> Self {
        let mut segments: Vec<Segment> = space
            .continuous()
            .iter()
            .map(|b| Segment {
                bits: bits_per_continuous,
                kind: SegmentKind::Continuous(*b),
            })
            .collect();
        segments.extend(space.discrete().iter().map(|d| {
            let cardinality = d.cardinality();
            let lo = match d {
                DiscreteDomain::Integer { lo, .. } => *lo,
                DiscreteDomain::Categorical { .. } => 0,
            };
            Segment {
                bits: bits_for(cardinality),
                kind: SegmentKind::Discrete { lo, cardinality },
            }
        }));
        let len = segments.iter().map(|s| s.bits as usize).sum();
        Layout {
            segments,
            n_continuous: space.n_continuous(),
            len,
        }
    }

    /// Total genome length in bits.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn decode(&self, chrom: &Chromosome) -> Result<MixedSolution> {
        if chrom.bits.len() != self.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                actual: chrom.bits.len(),
            });
        }
        let mut cont = Vec::with_capacity(self.n_continuous);
        let mut disc = Vec::with_capacity(self.segments.len() - self.n_continuous);
        let mut offset = 0;
        for seg in &self.segments {
            let bits = &chrom.bits[offset..offset + seg.bits as usize];
            offset += seg.bits as usize;
            match seg.kind {
                SegmentKind::Continuous(b) => cont.push(decode_continuous_segment(bits, b)),
                SegmentKind::Discrete { lo, cardinality } => {
                    disc.push(lo + decode_discrete_segment(bits, cardinality) as i64)
                }
            }
        }
        Ok(MixedSolution::new(cont, disc))
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Chromosome {
        Chromosome {
            bits: (0..self.len).map(|_| rng.gen::<bool>()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chromosome {
    pub bits: Vec<bool>,
}

/// Swaps suffixes at a cut drawn uniformly from `1..L`.
pub fn one_point_crossover<R: Rng + ?Sized>(a: &Chromosome, b: &Chromosome, rng: &mut R) -> Result<(Chromosome, Chromosome)> {
    if a.bits.len() != b.bits.len() {
        return Err(Error::LengthMismatch {
            expected: a.bits.len(),
            actual: b.bits.len(),
        });
    }
    if a.bits.len() < 2 {
        return Err(Error::Config("crossover needs chromosomes of at least two bits".into()));
    }
    let cut = rng.gen_range(1..a.bits.len());
    Ok(crossover_at(a, b, cut))
}

/// Children of a one-point crossover with the cut before position `cut`.
pub fn crossover_at(a: &Chromosome, b: &Chromosome, cut: usize) -> (Chromosome, Chromosome) {
    let mut c1 = a.bits[..cut].to_vec();
    c1.extend_from_slice(&b.bits[cut..]);
    let mut c2 = b.bits[..cut].to_vec();
    c2.extend_from_slice(&a.bits[cut..]);
    (Chromosome { bits: c1 }, Chromosome { bits: c2 })
}

/// Flips each bit independently with probability `p`.
pub fn mutate<R: Rng + ?Sized>(chrom: &mut Chromosome, p: f64, rng: &mut R) {
    for bit in chrom.bits.iter_mut() {
        if rng.gen::<f64>() < p {
            *bit = !*bit;
        }
    }
}

/// Samples `size` indices with replacement and returns the fittest. Ties go
/// to the earliest draw.
///
/// # Panics
/// If `fitness` is empty.
pub fn tournament_select<R: Rng + ?Sized>(fitness: &[f64], size: usize, rng: &mut R) -> usize {
    assert!(!fitness.is_empty(), "tournament over an empty population");
    let mut best = rng.gen_range(0..fitness.len());
    for _ in 1..size {
        let c = rng.gen_range(0..fitness.len());
        if fitness[c] < fitness[best] {
            best = c;
        }
    }
    best
}

/// Generational GA with elitism. A run whose elites fill the whole
/// population stops after the initial generation.
pub fn run_ga<O: Objective + ?Sized>(problem: &O, config: &GaConfig) -> Result<RunTrace> {
    config.validate()?;
    let layout = Layout::new(problem.space(), config.bits_per_continuous);
    let mut rng = seeded(config.seed);
    let mut ev = Evaluator::new(problem, config.max_fe);
    let name = "ga";

    let mut pop: Vec<Chromosome> = Vec::with_capacity(config.pop_size);
    let mut fit: Vec<f64> = Vec::with_capacity(config.pop_size);
    for _ in 0..config.pop_size {
        let c = layout.random(&mut rng);
        let Some(f) = ev.evaluate(&layout.decode(&c)?) else {
            return Ok(ev.finish(config.seed, name));
        };
        pop.push(c);
        fit.push(f);
    }

    loop {
        if config.elitism_count >= config.pop_size {
            return Ok(ev.finish(config.seed, name));
        }
        let mut order: Vec<usize> = (0..pop.len()).collect();
        order.sort_by(|&a, &b| fit[a].total_cmp(&fit[b]));

        let mut next: Vec<Chromosome> = Vec::with_capacity(config.pop_size);
        let mut next_fit: Vec<f64> = Vec::with_capacity(config.pop_size);
        for &e in &order[..config.elitism_count] {
            next.push(pop[e].clone());
            next_fit.push(fit[e]);
        }
        while next.len() < config.pop_size {
            let a = &pop[tournament_select(&fit, config.tournament_size, &mut rng)];
            let b = &pop[tournament_select(&fit, config.tournament_size, &mut rng)];
            let (c1, c2) = if layout.len() >= 2 && rng.gen::<f64>() < config.p_crossover {
                one_point_crossover(a, b, &mut rng)?
            } else {
                (a.clone(), b.clone())
            };
            for mut child in [c1, c2] {
                if next.len() == config.pop_size {
                    break;
                }
                mutate(&mut child, config.p_mutation, &mut rng);
                let Some(f) = ev.evaluate(&layout.decode(&child)?) else {
                    return Ok(ev.finish(config.seed, name));
                };
                next.push(child);
                next_fit.push(f);
            }
        }
        pop = next;
        fit = next_fit;
    }
}
