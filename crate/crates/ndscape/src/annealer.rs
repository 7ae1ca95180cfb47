//! Simulated-annealing refinement of a landscape toward a target
//! neutral-degree distribution.
//!
//! The construction alone leaves a gap between the realized and requested
//! distributions, because every fitness value is fixed before the later
//! solutions have been considered. Annealing closes the gap: the move is a
//! change of one solution's fitness value, which can alter at most N+1
//! neutral degrees, and the energy is the distance between the current and
//! target distributions. Copying a neighbour's value lets networks merge;
//! drawing a fresh value lets a solution split off.

use rand::Rng;

use crate::distribution::DegreeDistribution;
use crate::error::{Error, Result};
use crate::genotype::Genotype;
use crate::landscape::Landscape;

/// Geometric cooling schedule.
#[derive(Clone, Debug)]
pub struct AnnealSchedule {
    pub initial_temperature: f64,
    /// Temperature multiplier applied once per epoch.
    pub cooling_factor: f64,
    pub moves_per_epoch: usize,
    pub total_moves: usize,
}

impl AnnealSchedule {
    /// Default schedule for an `n_bits`-wide landscape: 4096 epochs of `2^N`
    /// moves, cooling by 0.999 per epoch from two histogram bins' worth of
    /// energy.
    ///
    /// A single move shifts the degree histogram by a few units of `1/2^N`,
    /// so the temperature has to live on that scale: start a couple of bins
    /// hot, spend several hundred epochs above one bin (where merges that
    /// transiently worsen the fit can still happen), and end far below one
    /// bin so the chain freezes into the best basin it found. Sharp
    /// high-mean targets are the binding case for the budget.
    pub fn default_for(n_bits: u32) -> Self {
        AnnealSchedule {
            initial_temperature: 2.0 / (1u64 << n_bits) as f64,
            cooling_factor: 0.999,
            moves_per_epoch: 1usize << n_bits,
            total_moves: 4096usize << n_bits,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.initial_temperature > 0.0) || !self.initial_temperature.is_finite() {
            return Err(Error::invalid("initial temperature must be positive"));
        }
        if !(self.cooling_factor > 0.0 && self.cooling_factor < 1.0) {
            return Err(Error::invalid("cooling factor must lie in (0,1)"));
        }
        if self.moves_per_epoch == 0 || self.total_moves == 0 {
            return Err(Error::invalid("schedule needs at least one move"));
        }
        Ok(())
    }
}

/// One neutral-degree change caused by a candidate move.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeChange {
    pub genotype: Genotype,
    pub old_degree: u32,
    pub new_degree: u32,
}

/// The degree changes caused by setting `s`'s fitness to `new_fitness`.
///
/// Only `s` and its N neighbours can be affected; entries are emitted for
/// the solutions whose degree actually changes, so a no-op move yields an
/// empty delta. Applying the entries to a degree histogram gives the same
/// result as recomputing it from scratch.
pub fn degree_delta(l: &Landscape, s: Genotype, new_fitness: f64) -> Vec<DegreeChange> {
    collect_delta(l.values(), l.n_bits(), s.index(), new_fitness, |g| {
        l.neutral_degree(Genotype(g as u64))
    })
}

fn collect_delta(
    fitness: &[f64],
    n_bits: u32,
    s: usize,
    new_fitness: f64,
    degree_of: impl Fn(usize) -> u32,
) -> Vec<DegreeChange> {
    let old_fitness = fitness[s];
    if new_fitness == old_fitness {
        return Vec::new();
    }
    let mut changes = Vec::with_capacity(n_bits as usize + 1);
    let mut s_new_degree = 0u32;
    for i in 0..n_bits {
        let h = s ^ (1usize << i);
        let fh = fitness[h];
        if fh == new_fitness {
            s_new_degree += 1;
        }
        let old = degree_of(h);
        let new = old + (fh == new_fitness) as u32 - (fh == old_fitness) as u32;
        if new != old {
            changes.push(DegreeChange {
                genotype: Genotype(h as u64),
                old_degree: old,
                new_degree: new,
            });
        }
    }
    let s_old_degree = degree_of(s);
    if s_new_degree != s_old_degree {
        changes.push(DegreeChange {
            genotype: Genotype(s as u64),
            old_degree: s_old_degree,
            new_degree: s_new_degree,
        });
    }
    changes
}

/// A point of the annealing trajectory: energy after `moves` moves.
#[derive(Clone, Copy, Debug)]
pub struct TracePoint {
    pub moves: u64,
    pub energy: f64,
}

/// Anneals `l` toward `target` and returns the best landscape seen.
///
/// The energy of a state is the distance between its degree distribution and
/// `target`; a move re-values one uniformly chosen solution, half the time to
/// a uniformly chosen neighbour's value and half the time to a fresh uniform
/// `[0,1)` value, accepted when the energy does not increase and otherwise
/// with probability `exp(-ΔE/T)`. Best-state tracking makes the result's
/// distance never worse than the input's.
pub fn refine(
    l: &Landscape,
    target: &DegreeDistribution,
    schedule: &AnnealSchedule,
    rng: &mut impl Rng,
) -> Result<Landscape> {
    refine_traced(l, target, schedule, rng).map(|(l, _)| l)
}

/// [`refine`] recording the energy at the start, at every epoch boundary and
/// after the final move.
pub fn refine_traced(
    l: &Landscape,
    target: &DegreeDistribution,
    schedule: &AnnealSchedule,
    rng: &mut impl Rng,
) -> Result<(Landscape, Vec<TracePoint>)> {
    schedule.validate()?;
    target.require_normalized()?;
    let n_bits = l.n_bits();
    if target.len() != n_bits as usize + 1 {
        return Err(Error::LengthMismatch {
            left: target.len(),
            right: n_bits as usize + 1,
        });
    }

    let size = l.size();
    let mut fitness = l.values().to_vec();
    let mut degrees: Vec<u8> = (0..size)
        .map(|g| l.neutral_degree(Genotype(g as u64)) as u8)
        .collect();
    let mut counts = vec![0u64; n_bits as usize + 1];
    for &d in &degrees {
        counts[d as usize] += 1;
    }
    let target_weights = target.weights();
    let energy_of = |counts: &[u64]| -> f64 {
        let inv = 1.0 / size as f64;
        counts
            .iter()
            .zip(target_weights)
            .map(|(&c, &t)| {
                let diff = c as f64 * inv - t;
                diff * diff
            })
            .sum::<f64>()
            .sqrt()
    };

    let mut energy = energy_of(&counts);
    let mut best_energy = energy;
    let mut best_fitness = fitness.clone();
    // accepted moves not yet folded into `best_fitness`
    let mut pending: Vec<(usize, f64)> = Vec::new();

    let mut trace = vec![TracePoint {
        moves: 0,
        energy,
    }];
    let mut temperature = schedule.initial_temperature;

    for m in 0..schedule.total_moves {
        if m > 0 && m % schedule.moves_per_epoch == 0 {
            temperature *= schedule.cooling_factor;
            trace.push(TracePoint {
                moves: m as u64,
                energy,
            });
        }

        let s = rng.random_range(0..size);
        let proposal = if rng.random::<bool>() {
            let i = rng.random_range(0..n_bits);
            fitness[s ^ (1usize << i)]
        } else {
            rng.random::<f64>()
        };
        if proposal == fitness[s] {
            continue;
        }

        let changes = collect_delta(&fitness, n_bits, s, proposal, |g| degrees[g] as u32);
        for c in &changes {
            counts[c.old_degree as usize] -= 1;
            counts[c.new_degree as usize] += 1;
        }
        let candidate = energy_of(&counts);
        let delta = candidate - energy;
        let accept = delta <= 0.0 || rng.random::<f64>() < (-delta / temperature).exp();
        if accept {
            fitness[s] = proposal;
            for c in &changes {
                degrees[c.genotype.index()] = c.new_degree as u8;
            }
            energy = candidate;
            pending.push((s, proposal));
            if energy < best_energy {
                best_energy = energy;
                for &(g, v) in &pending {
                    best_fitness[g] = v;
                }
                pending.clear();
            }
        } else {
            for c in &changes {
                counts[c.old_degree as usize] += 1;
                counts[c.new_degree as usize] -= 1;
            }
        }
    }

    trace.push(TracePoint {
        moves: schedule.total_moves as u64,
        energy: best_energy,
    });
    let best = Landscape::new(n_bits, best_fitness).expect("annealed table stays finite");
    Ok((best, trace))
}
