//! Deceptiveness tuning: assign trap-function fitness to neutral networks.
//!
//! Re-valuing whole networks never changes the neutral-degree distribution as
//! long as no two adjacent networks receive the same value, so difficulty and
//! neutrality can be tuned independently. The trap function has two optima, a
//! global one at distance 0 and a deceptive one at distance 1, with basin
//! boundary `b` and relative importance `r`.

use rand::Rng;

use crate::distribution::DegreeDistribution;
use crate::error::{Error, Result};
use crate::genotype::Genotype;
use crate::landscape::Landscape;
use crate::network::NetworkPartition;

/// Trap-function parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrapParams {
    b: f64,
    r: f64,
}

impl TrapParams {
    /// `b` in (0,1) sets the basin boundary, `r` in (0,1] the height of the
    /// deceptive optimum. Low `b` and high `r` give the most deceptive trap.
    pub fn new(b: f64, r: f64) -> Result<Self> {
        if !(b > 0.0 && b < 1.0) {
            return Err(Error::invalid(format!("trap parameter b={b} not in (0,1)")));
        }
        if !(r > 0.0 && r <= 1.0) {
            return Err(Error::invalid(format!("trap parameter r={r} not in (0,1]")));
        }
        Ok(TrapParams { b, r })
    }

    /// The deceptive trap used in the experiments, `b=0.25`, `r=0.9`.
    pub fn deceptive() -> Self {
        TrapParams { b: 0.25, r: 0.9 }
    }

    /// The easy trap used in the experiments, `b=0.75`, `r=0.9`.
    pub fn easy() -> Self {
        TrapParams { b: 0.75, r: 0.9 }
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn r(&self) -> f64 {
        self.r
    }
}

/// The trap function of a normalized distance `d` in `[0,1]`:
/// `1 - d/b` inside the basin (`d <= b`), `r (d - b) / (1 - b)` outside.
///
/// `trap(0) = 1`, `trap(b) = 0`, `trap(1) = r`.
pub fn trap(d: f64, params: &TrapParams) -> Result<f64> {
    if !(0.0..=1.0).contains(&d) {
        return Err(Error::invalid(format!("trap distance {d} not in [0,1]")));
    }
    Ok(if d <= params.b {
        1.0 - d / params.b
    } else {
        params.r * (d - params.b) / (1.0 - params.b)
    })
}

/// The window target distribution: weight `1/w` on each degree in the
/// inclusive range `[p, p+w-1]`, zero elsewhere, over degrees `0..=n_bits`.
pub fn window_distribution(p: u32, w: u32, n_bits: u32) -> Result<DegreeDistribution> {
    if w < 1 {
        return Err(Error::invalid("window width must be at least 1"));
    }
    if p + w - 1 > n_bits {
        return Err(Error::invalid(format!(
            "window [{p}, {}] exceeds the degree range [0, {n_bits}]",
            p + w - 1
        )));
    }
    let mut weights = vec![0.0; n_bits as usize + 1];
    for d in p..=p + w - 1 {
        weights[d as usize] = 1.0 / w as f64;
    }
    DegreeDistribution::new(weights)
}

/// One row of the per-network assignment report.
#[derive(Clone, Debug)]
pub struct NetworkRecord {
    pub id: u32,
    pub size: usize,
    /// Normalized L1 distance between this network's centroid and the
    /// optimum network's centroid.
    pub centroid_distance: f64,
    pub fitness: f64,
}

/// Result of a trap assignment.
#[derive(Clone, Debug)]
pub struct TrapAssignment {
    pub landscape: Landscape,
    pub networks: Vec<NetworkRecord>,
    /// Set when the noise amplitude is large enough (at least half the
    /// minimum nonzero gap between trap values) to risk reordering the basin
    /// structure.
    pub noise_warning: Option<String>,
}

/// Re-values every neutral network of `l` with a trap of the distance to the
/// optimum network's centroid.
///
/// The network containing `anchor` becomes the optimum at fitness exactly
/// 1.0. Every other network gets `trap(d)` where `d` is the normalized L1
/// distance between centroids, plus, when `noise_amplitude > 0`, a uniform
/// draw from `[0, noise_amplitude)` redrawn so that no two adjacent networks
/// share a value and no perturbed value reaches 1.0. The network partition of
/// the output is then identical to the input's.
pub fn assign_trap(
    l: &Landscape,
    params: &TrapParams,
    noise_amplitude: f64,
    anchor: Genotype,
    rng: &mut impl Rng,
) -> Result<TrapAssignment> {
    if !noise_amplitude.is_finite() || noise_amplitude < 0.0 {
        return Err(Error::invalid("noise amplitude must be finite and >= 0"));
    }
    if anchor.index() >= l.size() {
        return Err(Error::invalid(format!(
            "anchor genotype {anchor} outside the {}-bit space",
            l.n_bits()
        )));
    }

    let part = NetworkPartition::extract(l);
    let opt = part.network_of(anchor);
    let opt_centroid = part.networks()[opt as usize].centroid().to_vec();

    let count = part.len();
    let mut distances = vec![0.0f64; count];
    let mut base = vec![1.0f64; count];
    for (id, nn) in part.networks().iter().enumerate() {
        if id as u32 == opt {
            continue;
        }
        let d = nn
            .centroid()
            .iter()
            .zip(&opt_centroid)
            .map(|(a, b)| (a - b).abs())
            .sum::<f64>()
            / l.n_bits() as f64;
        distances[id] = d;
        base[id] = trap(d.clamp(0.0, 1.0), params)?;
    }

    let noise_warning = warn_on_noise(&base, noise_amplitude);

    let mut values = base.clone();
    if noise_amplitude > 0.0 {
        for id in 0..count {
            if id as u32 != opt {
                values[id] = perturb(base[id], noise_amplitude, rng);
            }
        }
        // Resolve exact collisions between adjacent networks so the
        // partition is preserved.
        for _ in 0..1024 {
            let mut collided = false;
            for id in 0..count as u32 {
                if id == opt {
                    continue;
                }
                let v = values[id as usize];
                if part.adjacent(id).iter().any(|&o| values[o as usize] == v) {
                    values[id as usize] = perturb(base[id as usize], noise_amplitude, rng);
                    collided = true;
                }
            }
            if !collided {
                let fitness = part
                    .membership()
                    .iter()
                    .map(|&id| values[id as usize])
                    .collect();
                let landscape = Landscape::new(l.n_bits(), fitness)?;
                return Ok(TrapAssignment {
                    landscape,
                    networks: records(&part, &distances, &values),
                    noise_warning,
                });
            }
        }
        return Err(Error::invalid(
            "could not give adjacent networks distinct fitness values; \
             increase the noise amplitude",
        ));
    }

    let fitness = part
        .membership()
        .iter()
        .map(|&id| values[id as usize])
        .collect();
    let landscape = Landscape::new(l.n_bits(), fitness)?;
    Ok(TrapAssignment {
        landscape,
        networks: records(&part, &distances, &values),
        noise_warning,
    })
}

fn records(part: &NetworkPartition, distances: &[f64], values: &[f64]) -> Vec<NetworkRecord> {
    part.networks()
        .iter()
        .enumerate()
        .map(|(id, nn)| NetworkRecord {
            id: id as u32,
            size: nn.size(),
            centroid_distance: distances[id],
            fitness: values[id],
        })
        .collect()
}

/// Additive positive noise, capped below 1.0 so the optimum network stays
/// the unique maximum.
fn perturb(base: f64, amplitude: f64, rng: &mut impl Rng) -> f64 {
    for _ in 0..128 {
        let v = base + rng.random::<f64>() * amplitude;
        if v < 1.0 {
            return v;
        }
    }
    base
}

fn warn_on_noise(base: &[f64], noise_amplitude: f64) -> Option<String> {
    if noise_amplitude == 0.0 {
        return None;
    }
    let mut sorted: Vec<f64> = base.to_vec();
    sorted.sort_by(f64::total_cmp);
    let min_gap = sorted
        .windows(2)
        .map(|w| w[1] - w[0])
        .filter(|&g| g > 0.0)
        .fold(f64::INFINITY, f64::min);
    if min_gap.is_finite() && noise_amplitude >= min_gap / 2.0 {
        Some(format!(
            "noise amplitude {noise_amplitude} is at least half the minimum trap-value gap \
             {min_gap}; the basin structure may be reordered"
        ))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::extract_networks;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn trap_endpoints() {
        let p = TrapParams::new(0.25, 0.9).unwrap();
        assert_eq!(trap(0.0, &p).unwrap(), 1.0);
        assert_eq!(trap(0.25, &p).unwrap(), 0.0);
        assert_eq!(trap(1.0, &p).unwrap(), 0.9);
    }

    #[test]
    fn trap_is_continuous_at_the_boundary() {
        let p = TrapParams::new(0.25, 0.9).unwrap();
        let eps = 1e-12;
        let left = trap(0.25 - eps, &p).unwrap();
        let right = trap(0.25 + eps, &p).unwrap();
        assert!(left.abs() < 1e-10 && right.abs() < 1e-10);
    }

    #[test]
    fn trap_rejects_out_of_range_distance() {
        let p = TrapParams::deceptive();
        assert!(trap(-0.1, &p).is_err());
        assert!(trap(1.1, &p).is_err());
    }

    #[test]
    fn window_examples() {
        let d = window_distribution(3, 4, 16).unwrap();
        for deg in 0..=16usize {
            let expect = if (3..=6).contains(&deg) { 0.25 } else { 0.0 };
            assert_eq!(d.weights()[deg], expect);
        }
        assert_eq!(
            window_distribution(0, 1, 16).unwrap().weights()[0],
            1.0
        );
        let (mean, _) = window_distribution(7, 4, 16).unwrap().stats().unwrap();
        assert!((mean - 8.5).abs() < 1e-12);
        assert!(window_distribution(14, 4, 16).is_err());
    }

    #[test]
    fn flat_landscape_gets_all_ones() {
        let l = Landscape::flat(4, 0.37).unwrap();
        let out = assign_trap(&l, &TrapParams::deceptive(), 1e-6, Genotype::ZERO, &mut rng(50))
            .unwrap();
        assert!(out.landscape.values().iter().all(|&v| v == 1.0));
    }

    #[test]
    fn singleton_landscape_reduces_to_hamming_trap() {
        let n = 6u32;
        let fitness: Vec<f64> = (0..1u64 << n).map(|j| j as f64).collect();
        let l = Landscape::new(n, fitness).unwrap();
        let params = TrapParams::new(0.25, 0.9).unwrap();
        let out = assign_trap(&l, &params, 0.0, Genotype::ZERO, &mut rng(51)).unwrap();
        for g in l.genotypes() {
            let d = g.weight() as f64 / n as f64;
            assert_eq!(out.landscape.fitness(g), trap(d, &params).unwrap());
        }
        let ones = Genotype((1u64 << n) - 1);
        assert_eq!(out.landscape.fitness(ones), 0.9);
    }

    #[test]
    fn optimum_network_is_exactly_one() {
        let vals = [0.3, 0.6, 0.9];
        let fitness: Vec<f64> = (0..256).map(|j: usize| vals[j % 3]).collect();
        let l = Landscape::new(8, fitness).unwrap();
        let out =
            assign_trap(&l, &TrapParams::easy(), 1e-6, Genotype::ZERO, &mut rng(52)).unwrap();
        assert_eq!(out.landscape.fitness(Genotype::ZERO), 1.0);
        assert_eq!(out.landscape.max_fitness(), 1.0);
    }

    #[test]
    fn partition_and_distribution_are_preserved() {
        let vals = [0.2, 0.4, 0.6, 0.8];
        let fitness: Vec<f64> = (0..512).map(|j: usize| vals[(j * 13) % 4]).collect();
        let l = Landscape::new(9, fitness).unwrap();
        let before: Vec<Vec<Genotype>> = extract_networks(&l)
            .iter()
            .map(|nn| nn.members().to_vec())
            .collect();
        let out =
            assign_trap(&l, &TrapParams::deceptive(), 1e-6, Genotype::ZERO, &mut rng(53)).unwrap();
        let after: Vec<Vec<Genotype>> = extract_networks(&out.landscape)
            .iter()
            .map(|nn| nn.members().to_vec())
            .collect();
        assert_eq!(before, after);
        assert_eq!(
            l.degree_distribution().weights(),
            out.landscape.degree_distribution().weights()
        );
    }

    #[test]
    fn large_noise_warns() {
        let vals = [0.3, 0.7];
        let fitness: Vec<f64> = (0..64).map(|j: usize| vals[j % 2]).collect();
        let l = Landscape::new(6, fitness).unwrap();
        let out = assign_trap(&l, &TrapParams::easy(), 0.5, Genotype::ZERO, &mut rng(54)).unwrap();
        assert!(out.noise_warning.is_some());
    }

    #[test]
    fn anchor_selects_the_optimum_network() {
        let vals = [0.25, 0.5];
        let fitness: Vec<f64> = (0..32).map(|j: usize| vals[j % 2]).collect();
        let l = Landscape::new(5, fitness).unwrap();
        let anchor = Genotype(1);
        let out = assign_trap(&l, &TrapParams::easy(), 1e-6, anchor, &mut rng(55)).unwrap();
        assert_eq!(out.landscape.fitness(anchor), 1.0);
        assert!(out.landscape.fitness(Genotype::ZERO) < 1.0);
    }
}
