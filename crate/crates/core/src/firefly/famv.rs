//! The mixed-variable firefly run loop.

use rand::Rng;

use super::config::FireflyConfig;
use super::operators::{
    adapt_parameters, alpha_step, attractiveness, beta_step, continuous_move, continuous_walk,
    discrete_attraction_prob, replacement_prob,
};
use crate::error::Result;
use crate::objective::{Evaluator, Objective, RunTrace};
use crate::rng::seeded;
use crate::space::{Firefly, MixedSolution, SearchSpace};

struct Params {
    alpha: f64,
    gamma: f64,
    p_alpha: f64,
}

impl Params {
    fn at_iteration_start<O: Objective + ?Sized>(config: &FireflyConfig, ev: &Evaluator<'_, O>) -> Self {
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
        let p_alpha = replacement_prob(alpha, config.alpha, config.k, config.adapt_alpha);
        Params { alpha, gamma, p_alpha }
    }
}

fn attracted_move<R: Rng + ?Sized>(
    space: &SearchSpace,
    config: &FireflyConfig,
    params: &Params,
    xi: &MixedSolution,
    xj: &MixedSolution,
    rng: &mut R,
) -> Result<MixedSolution> {
    let r = config.distance.measure(space, xi, xj)?;
    let beta = attractiveness(config.beta0, params.gamma, r);
    let prob = discrete_attraction_prob(params.gamma, r);
    let cont = continuous_move(&xi.cont, &xj.cont, beta, params.alpha, rng)?;
    let disc = beta_step(&xi.disc, &xj.disc, prob, rng)?;
    let disc = alpha_step(space, &disc, params.alpha, params.p_alpha, rng)?;
    let mut moved = MixedSolution::new(cont, disc);
    space.clamp_in_place(&mut moved)?;
    Ok(moved)
}

fn random_walk<R: Rng + ?Sized>(space: &SearchSpace, params: &Params, x: &MixedSolution, rng: &mut R) -> Result<MixedSolution> {
    let cont = continuous_walk(&x.cont, params.alpha, rng);
    let disc = alpha_step(space, &x.disc, params.alpha, params.p_alpha, rng)?;
    let mut moved = MixedSolution::new(cont, disc);
    space.clamp_in_place(&mut moved)?;
    Ok(moved)
}

/// Runs the mixed-variable firefly algorithm until the budget is spent.
///
/// Each outer iteration refreshes α and γ (when adapted) from the budget
/// consumed so far, then sweeps every firefly `i` toward every strictly
/// brighter `j`. Each move is evaluated immediately, so later comparisons in
/// the same sweep see the updated fitness. A firefly with no brighter
/// neighbour takes one random walk instead.
pub fn run_famv<O: Objective + ?Sized>(problem: &O, config: &FireflyConfig) -> Result<RunTrace> {
    config.validate()?;
    let space = problem.space();
    let mut rng = seeded(config.seed);
    let mut ev = Evaluator::new(problem, config.max_fe);
    let name = config.variant_name();

    let mut pop: Vec<Firefly> = Vec::with_capacity(config.pop_size);
    for _ in 0..config.pop_size {
        let solution = space.random_solution(&mut rng);
        let Some(fitness) = ev.evaluate(&solution) else {
            return Ok(ev.finish(config.seed, name));
        };
        pop.push(Firefly { solution, fitness });
    }

    let n = pop.len();
    loop {
        let params = Params::at_iteration_start(config, &ev);
        for i in 0..n {
            let mut updated = false;
            for j in 0..n {
                if pop[j].fitness < pop[i].fitness {
                    let moved = attracted_move(space, config, &params, &pop[i].solution, &pop[j].solution, &mut rng)?;
                    let Some(fitness) = ev.evaluate(&moved) else {
                        return Ok(ev.finish(config.seed, name));
                    };
                    pop[i] = Firefly { solution: moved, fitness };
                    updated = true;
                }
            }
            if !updated {
                let moved = random_walk(space, &params, &pop[i].solution, &mut rng)?;
                let Some(fitness) = ev.evaluate(&moved) else {
                    return Ok(ev.finish(config.seed, name));
                };
                pop[i] = Firefly { solution: moved, fitness };
            }
        }
    }
}
