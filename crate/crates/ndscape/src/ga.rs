//! Generational GA used as the search-difficulty benchmark: 3-tournament
//! selection, one-point crossover, one-bit mutation, no elitism by default,
//! success when any evaluated individual reaches the landscape maximum.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::genotype::Genotype;
use crate::landscape::Evaluate;

/// GA protocol parameters.
#[derive(Clone, Debug)]
pub struct GaParams {
    pub population: usize,
    pub generations: usize,
    /// Per-child probability of flipping exactly one uniformly chosen bit.
    pub mutation_rate: f64,
    /// Per-pair probability of one-point crossover.
    pub crossover_rate: f64,
    pub tournament: usize,
    pub elitism: bool,
    /// Independent repetitions used by [`success_rate`].
    pub runs: u64,
}

impl Default for GaParams {
    fn default() -> Self {
        GaParams {
            population: 50,
            generations: 50,
            mutation_rate: 0.8,
            crossover_rate: 0.2,
            tournament: 3,
            elitism: false,
            runs: 1000,
        }
    }
}

impl GaParams {
    pub fn validate(&self) -> Result<()> {
        if self.population == 0 || self.population % 2 != 0 {
            return Err(Error::invalid("population must be even and positive"));
        }
        if !(0.0..=1.0).contains(&self.mutation_rate) {
            return Err(Error::invalid("mutation rate must lie in [0,1]"));
        }
        if !(0.0..=1.0).contains(&self.crossover_rate) {
            return Err(Error::invalid("crossover rate must lie in [0,1]"));
        }
        if self.tournament < 1 {
            return Err(Error::invalid("tournament size must be at least 1"));
        }
        if self.runs < 1 {
            return Err(Error::invalid("at least one run is required"));
        }
        Ok(())
    }
}

/// Outcome of a single GA run.
#[derive(Clone, Copy, Debug)]
pub struct GaRunResult {
    pub success: bool,
    pub best_fitness: f64,
}

/// Best of `tournament` uniform picks; ties keep the earliest drawn.
fn select(fitness: &[f64], tournament: usize, rng: &mut impl Rng) -> usize {
    let mut winner = rng.random_range(0..fitness.len());
    for _ in 1..tournament {
        let challenger = rng.random_range(0..fitness.len());
        if fitness[challenger] > fitness[winner] {
            winner = challenger;
        }
    }
    winner
}

/// One generational GA run with the given seed.
///
/// Per generation, `population / 2` pairs are formed by two independent
/// tournaments each; one-point crossover (cut uniform in `[1, N-1]`) applies
/// with `crossover_rate`, then each child flips one uniformly chosen bit with
/// `mutation_rate`. Children wholly replace the parents unless `elitism`
/// copies the best parent over the first child. Success means some evaluated
/// individual, the initial population included, reaches the landscape
/// maximum.
pub fn ga_run(l: &impl Evaluate, params: &GaParams, seed: u64) -> GaRunResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = l.n_bits();
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let target = l.max_fitness();

    let mut population: Vec<Genotype> = (0..params.population)
        .map(|_| Genotype(rng.random::<u64>() & mask))
        .collect();
    let mut fitness: Vec<f64> = population.iter().map(|&g| l.evaluate(g)).collect();
    let mut best = f64::NEG_INFINITY;
    let mut success = false;
    score(&fitness, target, &mut best, &mut success);

    for _ in 0..params.generations {
        if success {
            break;
        }
        let mut children = Vec::with_capacity(params.population);
        for _ in 0..params.population / 2 {
            let a = population[select(&fitness, params.tournament, &mut rng)];
            let b = population[select(&fitness, params.tournament, &mut rng)];
            let (mut x, mut y) = (a, b);
            if n > 1 && rng.random::<f64>() < params.crossover_rate {
                let cut = rng.random_range(1..n);
                let low = (1u64 << cut) - 1;
                x = Genotype((a.0 & low) | (b.0 & !low & mask));
                y = Genotype((b.0 & low) | (a.0 & !low & mask));
            }
            if rng.random::<f64>() < params.mutation_rate {
                x = x.flip(rng.random_range(0..n));
            }
            if rng.random::<f64>() < params.mutation_rate {
                y = y.flip(rng.random_range(0..n));
            }
            children.push(x);
            children.push(y);
        }
        if params.elitism {
            let best_parent = (0..params.population)
                .max_by(|&i, &j| fitness[i].total_cmp(&fitness[j]))
                .unwrap();
            children[0] = population[best_parent];
        }
        population = children;
        fitness = population.iter().map(|&g| l.evaluate(g)).collect();
        score(&fitness, target, &mut best, &mut success);
    }

    GaRunResult {
        success,
        best_fitness: best,
    }
}

fn score(fitness: &[f64], target: f64, best: &mut f64, success: &mut bool) {
    for &f in fitness {
        if f > *best {
            *best = f;
        }
        if f == target {
            *success = true;
        }
    }
}

/// Success-rate estimate with a 95% normal-approximation half-width.
#[derive(Clone, Copy, Debug)]
pub struct SuccessRate {
    pub rate: f64,
    pub half_width: f64,
    pub successes: u64,
    pub runs: u64,
}

/// Success rate over `params.runs` independent runs.
///
/// Run `i` uses seed `base_seed ^ i`, so the estimate does not depend on
/// execution order and parallel runs reproduce the sequential result.
pub fn success_rate(l: &(impl Evaluate + Sync), params: &GaParams, base_seed: u64) -> Result<SuccessRate> {
    success_rate_with_jobs(l, params, base_seed, 1)
}

/// [`success_rate`] spread over `jobs` worker threads.
pub fn success_rate_with_jobs(
    l: &(impl Evaluate + Sync),
    params: &GaParams,
    base_seed: u64,
    jobs: usize,
) -> Result<SuccessRate> {
    params.validate()?;
    let successes = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::invalid(format!("cannot build thread pool: {e}")))?;
        pool.install(|| {
            (0..params.runs)
                .into_par_iter()
                .filter(|&i| ga_run(l, params, base_seed ^ i).success)
                .count() as u64
        })
    } else {
        (0..params.runs)
            .filter(|&i| ga_run(l, params, base_seed ^ i).success)
            .count() as u64
    };
    let runs = params.runs;
    let rate = successes as f64 / runs as f64;
    let half_width = 1.96 * (rate * (1.0 - rate) / runs as f64).sqrt();
    Ok(SuccessRate {
        rate,
        half_width,
        successes,
        runs,
    })
}
