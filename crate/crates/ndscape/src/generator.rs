//! Exhaustive construction of a landscape whose neutral-degree distribution
//! approximates a target.
//!
//! The construction walks the whole space outward from a random seed solution
//! in nondecreasing Hamming distance. Each visited solution is *frozen*: a
//! neutral degree is sampled from the (depleting) target budget, restricted
//! to the degrees the solution can still realize, and the degree is made
//! final on the spot by granting the solution's fitness value to some of its
//! still-unaffected neighbours and forbidding it to all the others. Forbidden
//! values are the bookkeeping that keeps every frozen degree stable for the
//! rest of the run: no assignment may ever hand a genotype a value its
//! forbidden set contains.
//!
//! An unaffected solution being frozen has a choice of values, every
//! admissible neighbour value (which merges it into a growing network) plus
//! a fresh one, and each choice realizes a different range of degrees; the
//! feasible set is the union over the choices, which is what lets solutions
//! deep in the walk still reach high neutral degrees. Fresh values are drawn
//! uniformly from `[0,1)` and rejected against the set of all values used so
//! far, which gives each neutral network its own fitness value.

use std::collections::HashSet;

use rand::Rng;

use crate::distribution::DegreeDistribution;
use crate::error::{Error, Result};
use crate::genotype::Genotype;
use crate::landscape::{Landscape, MAX_BITS};

/// Default cap on the bit width of generated landscapes. The construction
/// stores a forbidden-value list per solution, so memory grows as `2^N * N`;
/// wider landscapes must be requested explicitly.
pub const DEFAULT_MAX_GEN_BITS: u32 = 16;

/// One frozen solution: which genotype, and the neutral degree sampled for it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreezeRecord {
    pub genotype: Genotype,
    pub degree: u32,
}

/// Samples a degree from `weights` restricted to `feasible`.
///
/// Negative weights are treated as zero (the generation budget may overshoot
/// below zero). When every feasible weight is zero or negative the sample is
/// uniform over `feasible`.
pub fn roulette_wheel(weights: &[f64], feasible: &[u32], rng: &mut impl Rng) -> Result<u32> {
    if feasible.is_empty() {
        return Err(Error::EmptyFeasibleSet);
    }
    let weight_of = |d: u32| -> f64 { weights.get(d as usize).copied().unwrap_or(0.0).max(0.0) };
    let total: f64 = feasible.iter().map(|&d| weight_of(d)).sum();
    if total <= 0.0 {
        return Ok(feasible[rng.random_range(0..feasible.len())]);
    }
    let x = rng.random::<f64>() * total;
    let mut acc = 0.0;
    let mut last_positive = feasible[0];
    for &d in feasible {
        let w = weight_of(d);
        if w > 0.0 {
            last_positive = d;
            acc += w;
            if x < acc {
                return Ok(d);
            }
        }
    }
    // only reachable through floating-point rounding at x == total
    Ok(last_positive)
}

/// One value the solution being frozen could take, with the degree range
/// that value realizes.
struct Candidate {
    /// `None` is a fresh value, not drawn until actually chosen.
    value: Option<f64>,
    /// Affected neighbours already at this value.
    equal: u32,
    /// Unaffected neighbours whose forbidden set admits this value.
    admissible: Vec<usize>,
}

impl Candidate {
    fn realizes(&self, degree: u32) -> bool {
        degree >= self.equal && degree <= self.equal + self.admissible.len() as u32
    }
}

/// In-progress construction state.
pub struct GenerationState {
    n_bits: u32,
    /// Partial fitness table; `None` marks an unaffected solution.
    fitness: Vec<Option<f64>>,
    /// Per-solution values the solution must never receive, as `f64` bits.
    forbidden: Vec<Vec<u64>>,
    /// Depleting copy of the target distribution.
    budget: Vec<f64>,
    /// Bit patterns of every fitness value assigned so far.
    used: HashSet<u64>,
    /// Whole space sorted by Hamming distance from the seed solution,
    /// ties by ascending genotype index.
    order: Vec<u32>,
    cursor: usize,
    frozen: Vec<bool>,
    log: Vec<FreezeRecord>,
}

impl GenerationState {
    /// Starts a construction over `n_bits`-bit strings toward `target`.
    ///
    /// `target` must be normalized and have length `n_bits + 1`. Widths above
    /// [`DEFAULT_MAX_GEN_BITS`] are rejected here; use [`with_bit_limit`] to
    /// opt into larger (memory-hungry) spaces.
    ///
    /// [`with_bit_limit`]: GenerationState::with_bit_limit
    pub fn new(n_bits: u32, target: &DegreeDistribution, rng: &mut impl Rng) -> Result<Self> {
        Self::with_bit_limit(n_bits, target, DEFAULT_MAX_GEN_BITS, rng)
    }

    /// Same as [`new`](GenerationState::new) with a caller-chosen width cap.
    pub fn with_bit_limit(
        n_bits: u32,
        target: &DegreeDistribution,
        max_bits: u32,
        rng: &mut impl Rng,
    ) -> Result<Self> {
        let max_bits = max_bits.min(MAX_BITS);
        if n_bits < 1 || n_bits > max_bits {
            return Err(Error::BitsOutOfRange {
                n_bits,
                min: 1,
                max: max_bits,
            });
        }
        target.require_normalized()?;
        if target.len() != n_bits as usize + 1 {
            return Err(Error::LengthMismatch {
                left: target.len(),
                right: n_bits as usize + 1,
            });
        }

        let size = 1usize << n_bits;
        let seed = rng.random_range(0..size as u64);
        let mut order: Vec<u32> = (0..size as u32).collect();
        order.sort_by_key(|&g| ((g as u64 ^ seed).count_ones(), g));

        Ok(GenerationState {
            n_bits,
            fitness: vec![None; size],
            forbidden: vec![Vec::new(); size],
            budget: target.weights().to_vec(),
            used: HashSet::new(),
            order,
            cursor: 0,
            frozen: vec![false; size],
            log: Vec::with_capacity(size),
        })
    }

    pub fn n_bits(&self) -> u32 {
        self.n_bits
    }

    /// The values `s` could take if frozen now, each with the degree range
    /// it realizes.
    ///
    /// An affected solution keeps its value, so there is one candidate: its
    /// own value, realizing `a ..= a + u` where `a` counts affected
    /// neighbours already sharing the value and `u` the unaffected
    /// neighbours whose forbidden set admits it. An unaffected solution
    /// additionally gets one candidate per distinct admissible neighbour
    /// value, plus the fresh-value candidate (listed first, with `a = 0`
    /// since a fresh value is new to the whole run).
    ///
    /// Note that every frozen neighbour's value is already in `s`'s
    /// forbidden set (freezing forbids the value to all non-granted
    /// unaffected neighbours), so adoptable values can only come from
    /// affected-but-not-frozen neighbours and freezing `s` never disturbs a
    /// frozen degree.
    fn candidates(&self, s: Genotype) -> Vec<Candidate> {
        let mut out = Vec::new();
        match self.fitness[s.index()] {
            Some(value) => out.push(self.candidate_for(s, Some(value))),
            None => {
                out.push(self.candidate_for(s, None));
                let mut seen: Vec<u64> = Vec::new();
                for i in 0..self.n_bits {
                    let h = s.flip(i).index();
                    if let Some(v) = self.fitness[h] {
                        let bits = v.to_bits();
                        if !seen.contains(&bits) && !self.forbidden[s.index()].contains(&bits) {
                            seen.push(bits);
                            out.push(self.candidate_for(s, Some(v)));
                        }
                    }
                }
            }
        }
        out
    }

    fn candidate_for(&self, s: Genotype, value: Option<f64>) -> Candidate {
        let mut equal = 0u32;
        let mut admissible = Vec::with_capacity(self.n_bits as usize);
        for i in 0..self.n_bits {
            let h = s.flip(i).index();
            match (self.fitness[h], value) {
                (Some(fh), Some(v)) => {
                    if fh == v {
                        equal += 1;
                    }
                }
                // a fresh value is new to the whole run: it matches no
                // existing value and no forbidden set contains it
                (Some(_), None) => {}
                (None, Some(v)) => {
                    if !self.forbidden[h].contains(&v.to_bits()) {
                        admissible.push(h);
                    }
                }
                (None, None) => admissible.push(h),
            }
        }
        Candidate {
            value,
            equal,
            admissible,
        }
    }

    /// Degrees the solution `s` can still realize: the union of the degree
    /// ranges of its candidate values, ascending. Never empty, because the
    /// fresh-value candidate (or the present value) realizes at least its
    /// own count of equal neighbours.
    pub fn feasible_degrees(&self, s: Genotype) -> Vec<u32> {
        let candidates = self.candidates(s);
        let mut feasible: Vec<u32> = Vec::new();
        for c in &candidates {
            feasible.extend(c.equal..=c.equal + c.admissible.len() as u32);
        }
        feasible.sort_unstable();
        feasible.dedup();
        feasible
    }

    /// Freezes the next solution in the candidate order. Returns `None` once
    /// every solution has been processed.
    pub fn step(&mut self, rng: &mut impl Rng) -> Option<FreezeRecord> {
        if self.cursor >= self.order.len() {
            return None;
        }
        let s = Genotype(self.order[self.cursor] as u64);
        self.cursor += 1;

        let candidates = self.candidates(s);
        let mut feasible: Vec<u32> = Vec::new();
        for c in &candidates {
            feasible.extend(c.equal..=c.equal + c.admissible.len() as u32);
        }
        feasible.sort_unstable();
        feasible.dedup();

        let degree =
            roulette_wheel(&self.budget, &feasible, rng).expect("feasible set is never empty");

        // choose uniformly among the candidate values realizing the degree
        let realizing: Vec<usize> = (0..candidates.len())
            .filter(|&i| candidates[i].realizes(degree))
            .collect();
        let pick = if realizing.len() == 1 {
            realizing[0]
        } else {
            realizing[rng.random_range(0..realizing.len())]
        };
        let value = match candidates[pick].value {
            Some(v) => v,
            None => self.fresh_value(rng),
        };
        self.assign(s.index(), value);

        // grant the value to `degree - equal` admissible neighbours, chosen
        // uniformly; forbid it to every other unaffected neighbour so the
        // frozen degree can never grow
        let mut admissible = candidates[pick].admissible.clone();
        let grants = (degree - candidates[pick].equal) as usize;
        let pool = admissible.len();
        for i in 0..grants {
            let j = rng.random_range(i..pool);
            admissible.swap(i, j);
        }
        for &h in &admissible[..grants] {
            self.assign(h, value);
        }
        let bits = value.to_bits();
        for i in 0..self.n_bits {
            let h = s.flip(i).index();
            if self.fitness[h].is_none() && !self.forbidden[h].contains(&bits) {
                self.forbidden[h].push(bits);
            }
        }

        self.budget[degree as usize] -= 1.0 / self.fitness.len() as f64;
        self.frozen[s.index()] = true;
        let record = FreezeRecord {
            genotype: s,
            degree,
        };
        self.log.push(record);
        Some(record)
    }

    /// Finishes the construction, giving a fresh unique value to any solution
    /// somehow left unaffected, and returns the landscape with the freeze log.
    pub fn finish(mut self, rng: &mut impl Rng) -> (Landscape, Vec<FreezeRecord>) {
        for g in 0..self.fitness.len() {
            if self.fitness[g].is_none() {
                let v = self.fresh_value(rng);
                self.assign(g, v);
            }
        }
        let values: Vec<f64> = self.fitness.iter().map(|v| v.unwrap()).collect();
        let landscape =
            Landscape::new(self.n_bits, values).expect("construction yields a full finite table");
        (landscape, self.log)
    }

    fn assign(&mut self, g: usize, value: f64) {
        self.fitness[g] = Some(value);
        self.used.insert(value.to_bits());
    }

    /// A uniform `[0,1)` value distinct from every value used so far. Every
    /// forbidden value was used at some point, so the draw is admissible
    /// everywhere.
    fn fresh_value(&mut self, rng: &mut impl Rng) -> f64 {
        loop {
            let v: f64 = rng.random();
            if !self.used.contains(&v.to_bits()) {
                return v;
            }
        }
    }
}

/// Builds a landscape whose neutral-degree distribution approximates
/// `target`, which must be normalized with length `n_bits + 1`.
///
/// The same `(n_bits, target, rng seed)` triple always yields a bit-identical
/// landscape.
pub fn generate_nd(
    n_bits: u32,
    target: &DegreeDistribution,
    rng: &mut impl Rng,
) -> Result<Landscape> {
    generate_nd_traced(n_bits, target, rng).map(|(l, _)| l)
}

/// [`generate_nd`] keeping the freeze log: one record per solution, in
/// processing order, with the degree sampled for it.
pub fn generate_nd_traced(
    n_bits: u32,
    target: &DegreeDistribution,
    rng: &mut impl Rng,
) -> Result<(Landscape, Vec<FreezeRecord>)> {
    let mut state = GenerationState::new(n_bits, target, rng)?;
    while state.step(rng).is_some() {}
    Ok(state.finish(rng))
}
