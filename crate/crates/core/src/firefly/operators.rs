//! Attraction and movement operators.
//!
//! Every operator that consumes randomness documents its draw order so that
//! runs stay reproducible from a seed.

use rand::Rng;

use super::config::{ALPHA_FLOOR, GAMMA_FLOOR};
use crate::budget::EvaluationBudget;
use crate::error::{Error, Result};
use crate::space::{DiscreteDomain, SearchSpace};

/// `β0 · exp(−γ r²)`.
pub fn attractiveness(beta0: f64, gamma: f64, r: f64) -> f64 {
    beta0 * (-gamma * r * r).exp()
}

/// Per-component copy probability of the discrete β-step, `exp(−γ r²)`.
pub fn discrete_attraction_prob(gamma: f64, r: f64) -> f64 {
    (-gamma * r * r).exp()
}

fn same_len(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::LengthMismatch { expected: a, actual: b });
    }
    Ok(())
}

/// `x_i + β (x_j − x_i) + α (u − ½)` componentwise, one uniform draw per
/// component. The result is not clamped.
pub fn continuous_move<R: Rng + ?Sized>(xi: &[f64], xj: &[f64], beta: f64, alpha: f64, rng: &mut R) -> Result<Vec<f64>> {
    same_len(xi.len(), xj.len())?;
    Ok(xi
        .iter()
        .zip(xj)
        .map(|(a, b)| a + beta * (b - a) + alpha * (rng.gen::<f64>() - 0.5))
        .collect())
}

/// Random walk `x + α (u − ½)` used when no brighter firefly exists.
pub fn continuous_walk<R: Rng + ?Sized>(x: &[f64], alpha: f64, rng: &mut R) -> Vec<f64> {
    x.iter().map(|v| v + alpha * (rng.gen::<f64>() - 0.5)).collect()
}

/// Copies each differing component of `xj` into `xi` with probability
/// `prob`. One draw per differing position; agreeing positions draw nothing.
pub fn beta_step<R: Rng + ?Sized>(xi: &[i64], xj: &[i64], prob: f64, rng: &mut R) -> Result<Vec<i64>> {
    same_len(xi.len(), xj.len())?;
    Ok(xi
        .iter()
        .zip(xj)
        .map(|(&a, &b)| if a != b && rng.gen::<f64>() < prob { b } else { a })
        .collect())
}

/// `INT(x + α ε)` with `ε ~ U[−1, 1]`, rounded half away from zero and
/// clamped to `[lo, hi]`.
pub fn alpha_step_integer<R: Rng + ?Sized>(lo: i64, hi: i64, x: i64, alpha: f64, rng: &mut R) -> i64 {
    let eps: f64 = rng.gen_range(-1.0..=1.0);
    let moved = (x as f64 + alpha * eps).round();
    // saturating cast before clamping keeps huge α finite
    (moved as i64).clamp(lo, hi)
}

/// With probability `p_alpha`, resamples uniformly over all `n_values`
/// codes (the current one included).
pub fn alpha_step_categorical<R: Rng + ?Sized>(n_values: usize, x: i64, p_alpha: f64, rng: &mut R) -> i64 {
    if rng.gen::<f64>() < p_alpha {
        rng.gen_range(0..n_values.max(1)) as i64
    } else {
        x
    }
}

/// Applies the α-step to every discrete component, in order.
pub fn alpha_step<R: Rng + ?Sized>(space: &SearchSpace, disc: &[i64], alpha: f64, p_alpha: f64, rng: &mut R) -> Result<Vec<i64>> {
    same_len(space.n_discrete(), disc.len())?;
    Ok(space
        .discrete()
        .iter()
        .zip(disc)
        .map(|(dom, &x)| match dom {
            DiscreteDomain::Integer { lo, hi } => alpha_step_integer(*lo, *hi, x, alpha, rng),
            DiscreteDomain::Categorical { values } => alpha_step_categorical(values.len(), x, p_alpha, rng),
        })
        .collect())
}

/// Probability of categorical replacement as a sigmoid of α.
///
/// Adaptive: `1 / (1 + exp(−k (α − α_init / 2)))`.
/// Constant: `1 / (1 + exp(−k α / 2))`.
pub fn replacement_prob(alpha: f64, alpha_init: f64, k: f64, adaptive: bool) -> f64 {
    let x = if adaptive { alpha - alpha_init / 2.0 } else { alpha / 2.0 };
    1.0 / (1.0 + (-k * x).exp())
}

/// Linearly decaying α and γ with a floor of 0.01, driven by the share of the
/// budget already consumed.
pub fn adapt_parameters(alpha_init: f64, gamma_init: f64, budget: &EvaluationBudget) -> (f64, f64) {
    schedule_at(alpha_init, gamma_init, budget.progress())
}

pub(crate) fn schedule_at(alpha_init: f64, gamma_init: f64, progress: f64) -> (f64, f64) {
    let remaining = 1.0 - progress;
    (
        ALPHA_FLOOR.max(alpha_init * remaining),
        GAMMA_FLOOR.max(gamma_init * remaining),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::seeded;

    #[test]
    fn attractiveness_examples() {
        assert_eq!(attractiveness(1.5, 0.1, 0.0), 1.5);
        assert!((attractiveness(1.5, 0.1, 1.0) - 1.3572561270539394).abs() < 1e-12);
        assert_eq!(attractiveness(1.5, 0.0, 123.0), 1.5);
    }

    #[test]
    fn discrete_prob_examples() {
        assert_eq!(discrete_attraction_prob(0.1, 0.0), 1.0);
        assert!((discrete_attraction_prob(0.1, 2.0) - 0.6703200460356393).abs() < 1e-12);
        assert!((discrete_attraction_prob(0.1, 10.0) - 4.5399929762484854e-05).abs() < 1e-15);
    }

    #[test]
    fn continuous_move_degenerate_cases() {
        let mut rng = seeded(1);
        let (xi, xj) = ([1.0, -2.0, 3.5], [0.25, 4.0, -1.0]);
        assert_eq!(continuous_move(&xi, &xj, 1.0, 0.0, &mut rng).unwrap(), xj.to_vec());
        assert_eq!(continuous_move(&xi, &xj, 0.0, 0.0, &mut rng).unwrap(), xi.to_vec());
        assert!(continuous_move(&xi, &xj[..2], 0.5, 0.0, &mut rng).is_err());
    }

    #[test]
    fn continuous_move_noise_law() {
        let mut rng = seeded(2);
        let n = 10_000;
        let mut sum = 0.0;
        for _ in 0..n {
            let v = continuous_move(&[0.0], &[0.0], 0.0, 2.0, &mut rng).unwrap()[0];
            assert!((-1.0..=1.0).contains(&v));
            sum += v;
        }
        assert!((sum / n as f64).abs() < 0.05);
    }

    #[test]
    fn beta_step_examples() {
        let mut rng = seeded(3);
        let (xi, xj) = ([0, 1, 2, 3], [0, 5, 2, 7]);
        assert_eq!(beta_step(&xi, &xj, 1.0, &mut rng).unwrap(), xj.to_vec());
        assert_eq!(beta_step(&xi, &xj, 0.0, &mut rng).unwrap(), xi.to_vec());
        assert!(beta_step(&xi, &xj[..3], 0.5, &mut rng).is_err());

        let trials = 10_000;
        let copies = (0..trials)
            .filter(|_| beta_step(&[1], &[2], 0.5, &mut rng).unwrap()[0] == 2)
            .count();
        assert!((copies as f64 / trials as f64 - 0.5).abs() < 0.02);
    }

    #[test]
    fn alpha_step_integer_examples() {
        let mut rng = seeded(4);
        for x in [0, 3, 10] {
            assert_eq!(alpha_step_integer(0, 10, x, 0.0, &mut rng), x);
        }
        for _ in 0..1000 {
            let v = alpha_step_integer(0, 10, 0, 1.5, &mut rng);
            assert!((0..=2).contains(&v));
        }

        let trials = 10_000;
        let mut hist = [0usize; 11];
        for _ in 0..trials {
            hist[alpha_step_integer(0, 10, 5, 1.5, &mut rng) as usize] += 1;
        }
        assert!(hist.iter().enumerate().all(|(v, &c)| c == 0 || (3..=7).contains(&v)));
        let freq = |v: usize| hist[v] as f64 / trials as f64;
        for d in 1..=2 {
            assert!((freq(5 - d) - freq(5 + d)).abs() < 0.05, "{hist:?}");
        }
        // 5 + 1.5 ε spans [3.5, 6.5]: each of 4, 5, 6 covers a third of it
        for v in 4..=6 {
            assert!((freq(v) - 1.0 / 3.0).abs() < 0.02, "{hist:?}");
        }
    }

    #[test]
    fn alpha_step_categorical_examples() {
        let mut rng = seeded(5);
        for _ in 0..100 {
            assert_eq!(alpha_step_categorical(3, 1, 0.0, &mut rng), 1);
            assert_eq!(alpha_step_categorical(1, 0, 1.0, &mut rng), 0);
        }
        let trials = 30_000;
        let mut counts = [0usize; 3];
        for _ in 0..trials {
            counts[alpha_step_categorical(3, 0, 1.0, &mut rng) as usize] += 1;
        }
        for c in counts {
            assert!((c as f64 / trials as f64 - 1.0 / 3.0).abs() < 0.02, "{counts:?}");
        }
    }

    #[test]
    fn replacement_prob_examples() {
        assert_eq!(replacement_prob(1.0, 2.0, 3.0, true), 0.5);
        assert!((replacement_prob(2.0, 2.0, 1.0, true) - 0.7310585786300049).abs() < 1e-12);
        assert!((replacement_prob(1.5, 1.5, 1.0, false) - 0.679178699175393).abs() < 1e-12);
    }

    #[test]
    fn adapt_examples() {
        assert_eq!(schedule_at(2.0, 0.05, 0.0), (2.0, 0.05));
        assert_eq!(schedule_at(2.0, 0.05, 0.75).0, 0.5);
        assert_eq!(schedule_at(2.0, 0.05, 1.0), (0.01, 0.01));

        let mut b = EvaluationBudget::new(100);
        assert_eq!(adapt_parameters(2.0, 0.05, &b), (2.0, 0.05));
        b.consume(75).unwrap();
        assert_eq!(adapt_parameters(2.0, 0.05, &b).0, 0.5);
        b.consume(25).unwrap();
        assert_eq!(adapt_parameters(2.0, 0.05, &b), (0.01, 0.01));
    }
}
