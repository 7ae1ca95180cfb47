//! Search-difficulty measurement: fitness-distance correlation with the
//! Jones classification, fitness-distance scatter sampling, and
//! neutral-network size rankings.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::landscape::Landscape;
use crate::network::extract_networks;

/// Classification threshold on |FDC|.
pub const JONES_THRESHOLD: f64 = 0.15;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FdcClass {
    /// Fitness increases with distance to the optimum (`FDC >= 0.15`).
    Deceptive,
    /// No usable correlation (`-0.15 < FDC < 0.15`).
    Hard,
    /// Fitness increases as the optimum approaches (`FDC <= -0.15`).
    Easy,
}

impl FdcClass {
    pub fn from_fdc(fdc: f64) -> Self {
        if fdc >= JONES_THRESHOLD {
            FdcClass::Deceptive
        } else if fdc <= -JONES_THRESHOLD {
            FdcClass::Easy
        } else {
            FdcClass::Hard
        }
    }
}

impl fmt::Display for FdcClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FdcClass::Deceptive => "deceptive",
            FdcClass::Hard => "hard",
            FdcClass::Easy => "easy",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct FdcReport {
    pub fdc: f64,
    pub classification: FdcClass,
    /// Number of (fitness, distance) samples, `2^N` for the exhaustive
    /// computation.
    pub samples: usize,
    /// Number of genotypes at the landscape maximum.
    pub optima_count: usize,
}

/// Minimum Hamming distance from every genotype to the set of maximum-fitness
/// genotypes, by breadth-first traversal of the hypercube from all optima at
/// once. Also returns the optima count.
pub fn distances_to_optima(l: &Landscape) -> (Vec<u32>, usize) {
    let size = l.size();
    let n = l.n_bits();
    let max = l.max_fitness();
    let mut dist = vec![u32::MAX; size];
    let mut frontier: Vec<usize> = Vec::new();
    for g in 0..size {
        if l.values()[g] == max {
            dist[g] = 0;
            frontier.push(g);
        }
    }
    let optima = frontier.len();
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for &g in &frontier {
            for i in 0..n {
                let h = g ^ (1usize << i);
                if dist[h] == u32::MAX {
                    dist[h] = d;
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    (dist, optima)
}

/// Exhaustive fitness-distance correlation of `l`.
///
/// `FDC = C_FD / (σ_F σ_D)` where the covariance and both standard
/// deviations are taken with `1/m` normalization over all `m = 2^N`
/// genotypes, and the distance of a genotype is its minimum Hamming distance
/// to the set of maximum-fitness genotypes.
pub fn fdc(l: &Landscape) -> Result<FdcReport> {
    let (dist, optima_count) = distances_to_optima(l);
    let m = l.size() as f64;

    let mean_f = l.values().iter().sum::<f64>() / m;
    let mean_d = dist.iter().map(|&d| d as f64).sum::<f64>() / m;
    let mut cov = 0.0;
    let mut var_f = 0.0;
    let mut var_d = 0.0;
    for (&f, &d) in l.values().iter().zip(&dist) {
        let df = f - mean_f;
        let dd = d as f64 - mean_d;
        cov += df * dd;
        var_f += df * df;
        var_d += dd * dd;
    }
    if var_f == 0.0 {
        return Err(Error::FdcUndefined("fitness has zero variance"));
    }
    if var_d == 0.0 {
        return Err(Error::FdcUndefined("distance has zero variance"));
    }
    // the common 1/m factors cancel; clamp float overshoot at perfect
    // correlation
    let fdc = (cov / (var_f.sqrt() * var_d.sqrt())).clamp(-1.0, 1.0);
    Ok(FdcReport {
        fdc,
        classification: FdcClass::from_fdc(fdc),
        samples: l.size(),
        optima_count,
    })
}

/// One sampled point of the fitness-distance scatter plot.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScatterPoint {
    pub distance: u32,
    pub fitness: f64,
}

/// `(distance, fitness)` pairs for a uniform without-replacement sample of
/// `sample` genotypes, in ascending genotype order. `sample = 2^N` is the
/// exhaustive scatter.
pub fn fdc_scatter(
    l: &Landscape,
    sample: usize,
    rng: &mut impl Rng,
) -> Result<Vec<ScatterPoint>> {
    let size = l.size();
    if sample < 1 || sample > size {
        return Err(Error::invalid(format!(
            "sample size {sample} not in [1, {size}]"
        )));
    }
    let (dist, _) = distances_to_optima(l);
    let chosen: Vec<usize> = if sample == size {
        (0..size).collect()
    } else {
        let mut pool: Vec<usize> = (0..size).collect();
        for i in 0..sample {
            let j = rng.random_range(i..size);
            pool.swap(i, j);
        }
        let mut picked = pool[..sample].to_vec();
        picked.sort_unstable();
        picked
    };
    Ok(chosen
        .into_iter()
        .map(|g| ScatterPoint {
            distance: dist[g],
            fitness: l.values()[g],
        })
        .collect())
}

/// Neutral-network sizes in nonincreasing order, ranked from 1.
pub fn network_size_ranking(l: &Landscape) -> Vec<(usize, usize)> {
    let mut sizes: Vec<usize> = extract_networks(l).iter().map(|nn| nn.size()).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
        .into_iter()
        .enumerate()
        .map(|(i, s)| (i + 1, s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genotype::Genotype;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    /// fitness = -HammingWeight has its unique optimum at 0^N and is affine
    /// in the distance to it.
    #[test]
    fn anticorrelated_landscape_has_fdc_minus_one() {
        let n = 8u32;
        let fitness: Vec<f64> = (0..1u64 << n)
            .map(|g| -(Genotype(g).weight() as f64))
            .collect();
        let l = Landscape::new(n, fitness).unwrap();
        let report = fdc(&l).unwrap();
        assert!((report.fdc - -1.0).abs() < 1e-12);
        assert_eq!(report.classification, FdcClass::Easy);
        assert_eq!(report.optima_count, 1);
        assert_eq!(report.samples, 1 << n);
    }

    /// fitness = +HammingWeight: the optimum is 1^N and distance to it is
    /// N - weight, still perfectly anticorrelated with fitness; measured
    /// against distance-to-0^N instead, the sign flips.
    #[test]
    fn sign_symmetry() {
        let n = 7u32;
        let fitness: Vec<f64> = (0..1u64 << n).map(|g| Genotype(g).weight() as f64).collect();
        let l = Landscape::new(n, fitness).unwrap();
        let report = fdc(&l).unwrap();
        assert!((report.fdc - -1.0).abs() < 1e-12);

        let m = l.size() as f64;
        let d: Vec<f64> = l.genotypes().map(|g| g.weight() as f64).collect();
        let f: Vec<f64> = l.values().to_vec();
        let mean_d = d.iter().sum::<f64>() / m;
        let mean_f = f.iter().sum::<f64>() / m;
        let cov: f64 = d
            .iter()
            .zip(&f)
            .map(|(a, b)| (a - mean_d) * (b - mean_f))
            .sum::<f64>()
            / m;
        let sd = (d.iter().map(|a| (a - mean_d).powi(2)).sum::<f64>() / m).sqrt();
        let sf = (f.iter().map(|b| (b - mean_f).powi(2)).sum::<f64>() / m).sqrt();
        assert!((cov / (sd * sf) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn flat_landscape_fdc_is_undefined() {
        let l = Landscape::flat(5, 1.0).unwrap();
        assert!(matches!(fdc(&l), Err(Error::FdcUndefined(_))));
    }

    #[test]
    fn fdc_invariant_under_affine_transforms() {
        let mut r = rng(70);
        let n = 8u32;
        let fitness: Vec<f64> = (0..1 << n).map(|_| r.random::<f64>()).collect();
        let l = Landscape::new(n, fitness.clone()).unwrap();
        let base = fdc(&l).unwrap();
        let scaled: Vec<f64> = fitness.iter().map(|&v| 3.5 * v + 11.0).collect();
        let l2 = Landscape::new(n, scaled).unwrap();
        let transformed = fdc(&l2).unwrap();
        assert!((base.fdc - transformed.fdc).abs() < 1e-12);
        assert_eq!(base.optima_count, transformed.optima_count);
    }

    #[test]
    fn bfs_distances_match_popcount_oracle() {
        let mut r = rng(71);
        for _ in 0..20 {
            let n = 6u32;
            let vals = [0.2, 0.5, 0.8, 1.0];
            let fitness: Vec<f64> = (0..1 << n)
                .map(|_| vals[r.random_range(0..vals.len())])
                .collect();
            let l = Landscape::new(n, fitness).unwrap();
            let (dist, _) = distances_to_optima(&l);
            let max = l.max_fitness();
            let optima: Vec<u64> = l
                .genotypes()
                .filter(|&g| l.fitness(g) == max)
                .map(|g| g.0)
                .collect();
            for g in 0..1u64 << n {
                let expect = optima
                    .iter()
                    .map(|&o| (o ^ g).count_ones())
                    .min()
                    .unwrap();
                assert_eq!(dist[g as usize], expect);
            }
        }
    }

    #[test]
    fn exhaustive_scatter_covers_every_genotype() {
        let n = 5u32;
        let fitness: Vec<f64> = (0..1 << n).map(|j| (j % 7) as f64).collect();
        let l = Landscape::new(n, fitness).unwrap();
        let points = fdc_scatter(&l, 1 << n, &mut rng(72)).unwrap();
        assert_eq!(points.len(), 1 << n);
        for (g, p) in l.genotypes().zip(&points) {
            assert_eq!(p.fitness, l.fitness(g));
        }
    }

    #[test]
    fn partial_scatter_has_requested_size() {
        let n = 6u32;
        let fitness: Vec<f64> = (0..1 << n).map(|j| (j % 5) as f64).collect();
        let l = Landscape::new(n, fitness).unwrap();
        let points = fdc_scatter(&l, 10, &mut rng(73)).unwrap();
        assert_eq!(points.len(), 10);
    }

    #[test]
    fn ranking_orders_by_size() {
        let fitness: Vec<f64> = (0..32)
            .map(|j| if j < 24 { 0.5 } else { j as f64 })
            .collect();
        let l = Landscape::new(5, fitness).unwrap();
        let ranks = network_size_ranking(&l);
        assert_eq!(ranks[0], (1, 24));
        assert_eq!(ranks.len(), 9);
        let total: usize = ranks.iter().map(|&(_, s)| s).sum();
        assert_eq!(total, 32);
        for w in ranks.windows(2) {
            assert!(w[0].1 >= w[1].1);
        }
    }
}
