//! Brute-force oracles, written straight from the definitions and kept
//! independent of the library's implementations they check.

use ndscape::Landscape;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn brute_neutral_degree(fitness: &[f64], n_bits: u32, g: usize) -> u32 {
    let mut degree = 0;
    for i in 0..n_bits {
        if fitness[g ^ (1usize << i)] == fitness[g] {
            degree += 1;
        }
    }
    degree
}

pub fn brute_degree_counts(fitness: &[f64], n_bits: u32) -> Vec<u64> {
    let mut counts = vec![0u64; n_bits as usize + 1];
    for g in 0..fitness.len() {
        counts[brute_neutral_degree(fitness, n_bits, g) as usize] += 1;
    }
    counts
}

/// Connected components of the equal-fitness bit-flip graph by queue-based
/// flood fill. Members ascend within a component; components are ordered by
/// smallest member.
pub fn brute_networks(fitness: &[f64], n_bits: u32) -> Vec<Vec<usize>> {
    let size = fitness.len();
    let mut seen = vec![false; size];
    let mut components = Vec::new();
    for start in 0..size {
        if seen[start] {
            continue;
        }
        let mut queue = std::collections::VecDeque::from([start]);
        seen[start] = true;
        let mut members = Vec::new();
        while let Some(g) = queue.pop_front() {
            members.push(g);
            for i in 0..n_bits {
                let h = g ^ (1usize << i);
                if !seen[h] && fitness[h] == fitness[g] {
                    seen[h] = true;
                    queue.push_back(h);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components
}

/// Per-genotype minimum Hamming distance to the maximum-fitness set, by
/// direct minimization over the optima.
pub fn brute_distances(fitness: &[f64]) -> Vec<u32> {
    let max = fitness.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let optima: Vec<usize> = (0..fitness.len()).filter(|&g| fitness[g] == max).collect();
    (0..fitness.len())
        .map(|g| {
            optima
                .iter()
                .map(|&o| ((g ^ o) as u64).count_ones())
                .min()
                .unwrap()
        })
        .collect()
}

/// Random landscape with `levels` distinct fitness values, which gives the
/// neutral structure something to chew on.
pub fn quantized_landscape(n_bits: u32, levels: usize, seed: u64) -> Landscape {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fitness = (0..1u64 << n_bits)
        .map(|_| (rng.random_range(0..levels) as f64) / levels as f64)
        .collect();
    Landscape::new(n_bits, fitness).unwrap()
}

/// Random landscape with continuous values (degree 0 almost everywhere).
pub fn continuous_landscape(n_bits: u32, seed: u64) -> Landscape {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fitness = (0..1u64 << n_bits).map(|_| rng.random::<f64>()).collect();
    Landscape::new(n_bits, fitness).unwrap()
}
