//! Textbook continuous firefly algorithm applied to mixed problems by
//! relaxation.
//!
//! Every dimension becomes a real interval: integers keep their bounds,
//! categoricals span `[0, n − 1]` over their indices. Positions stay real;
//! they are rounded to the nearest admissible code only when evaluated.

use super::config::FireflyConfig;
use super::operators::{adapt_parameters, attractiveness, continuous_move};
use crate::distance::euclidean;
use crate::error::Result;
use crate::objective::{Evaluator, Objective, RunTrace};
use crate::rng::seeded;
use crate::space::{Bounds, DiscreteDomain, MixedSolution, SearchSpace};

/// Real interval of every dimension, continuous block first.
pub fn relaxed_bounds(space: &SearchSpace) -> Vec<Bounds> {
    let mut out = space.continuous().to_vec();
    out.extend(space.discrete().iter().map(|d| {
        let (lo, hi) = d.code_range();
        Bounds {
            lo: lo as f64,
            hi: hi as f64,
        }
    }));
    out
}

/// Maps a relaxed position back into the mixed space.
pub fn decode_relaxed(space: &SearchSpace, relaxed: &[f64]) -> MixedSolution {
    let nc = space.n_continuous();
    let cont = relaxed[..nc]
        .iter()
        .zip(space.continuous())
        .map(|(v, b)| b.clamp(*v))
        .collect();
    let disc = relaxed[nc..]
        .iter()
        .zip(space.discrete())
        .map(|(v, d)| nearest_code(d, *v))
        .collect();
    MixedSolution::new(cont, disc)
}

fn nearest_code(domain: &DiscreteDomain, v: f64) -> i64 {
    let (lo, hi) = domain.code_range();
    (v.round() as i64).clamp(lo, hi)
}

/// Runs the classical firefly algorithm on the relaxed problem.
///
/// The configured distance kind is ignored: attraction always uses the
/// Euclidean distance over the full relaxed vector. Unlike the mixed variant
/// there is no random walk for the brightest firefly, so a sweep in which no
/// firefly moves ends the run.
pub fn run_classical_fa<O: Objective + ?Sized>(problem: &O, config: &FireflyConfig) -> Result<RunTrace> {
    config.validate()?;
    let space = problem.space();
    let bounds = relaxed_bounds(space);
    let mut rng = seeded(config.seed);
    let mut ev = Evaluator::new(problem, config.max_fe);
    let name = "fa";

    let mut pos: Vec<Vec<f64>> = Vec::with_capacity(config.pop_size);
    let mut fit: Vec<f64> = Vec::with_capacity(config.pop_size);
    for _ in 0..config.pop_size {
        let x = space.random_solution(&mut rng);
        let Some(f) = ev.evaluate(&x) else {
            return Ok(ev.finish(config.seed, name));
        };
        let mut relaxed = x.cont;
        relaxed.extend(x.disc.iter().map(|&c| c as f64));
        pos.push(relaxed);
        fit.push(f);
    }

    let n = pos.len();
    loop {
        let (mut alpha, mut gamma) = (config.alpha, config.gamma);
        if config.adapt_alpha || config.adapt_gamma {
            let (a, g) = adapt_parameters(config.alpha, config.gamma, ev.budget());
            if config.adapt_alpha {
                alpha = a;
            }
            if config.adapt_gamma {
                gamma = g;
            }
        }
        let mut moves = 0usize;
        for i in 0..n {
            for j in 0..n {
                if fit[j] < fit[i] {
                    let r = euclidean(&pos[i], &pos[j])?;
                    let beta = attractiveness(config.beta0, gamma, r);
                    let mut moved = continuous_move(&pos[i], &pos[j], beta, alpha, &mut rng)?;
                    for (v, b) in moved.iter_mut().zip(&bounds) {
                        *v = b.clamp(*v);
                    }
                    let Some(f) = ev.evaluate(&decode_relaxed(space, &moved)) else {
                        return Ok(ev.finish(config.seed, name));
                    };
                    pos[i] = moved;
                    fit[i] = f;
                    moves += 1;
                }
            }
        }
        if moves == 0 {
            return Ok(ev.finish(config.seed, name));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::DimensionSpec;

    #[test]
    fn nearest_index_decode() {
        let s = SearchSpace::new(vec![
            DimensionSpec::continuous(0.0, 1.0),
            DimensionSpec::categorical(["a", "b", "c"]),
            DimensionSpec::integer(-2, 2),
        ])
        .unwrap();
        let x = decode_relaxed(&s, &[0.3, 1.4, -1.6]);
        assert_eq!(x, MixedSolution::new(vec![0.3], vec![1, -2]));
        assert_eq!(s.discrete_label(0, x.disc[0]).as_deref(), Some("b"));
        assert_eq!(decode_relaxed(&s, &[2.0, 2.6, 9.0]), MixedSolution::new(vec![1.0], vec![2, 2]));
    }

    #[test]
    fn relaxed_bounds_cover_codes() {
        let s = SearchSpace::new(vec![DimensionSpec::categorical(["a", "b", "c"]), DimensionSpec::continuous(-1.0, 1.0)]).unwrap();
        assert_eq!(relaxed_bounds(&s), vec![Bounds { lo: -1.0, hi: 1.0 }, Bounds { lo: 0.0, hi: 2.0 }]);
    }
}
