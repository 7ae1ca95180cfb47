//! Oracle equivalence: the library's neutral degrees, histograms, network
//! partitions, BFS distances and annealer deltas against independent
//! brute-force recomputation, plus the analytic and qualitative checks that
//! have closed-form answers.

mod common;

use common::*;
use ndscape::analysis::{distances_to_optima, fdc};
use ndscape::annealer::{degree_delta, refine, refine_traced, AnnealSchedule};
use ndscape::ga::{ga_run, GaParams};
use ndscape::generator::generate_nd_traced;
use ndscape::netfit::window_distribution;
use ndscape::reference::{nk_family, NkVariant};
use ndscape::{extract_networks, DegreeDistribution, Genotype, Landscape};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A varied bag of random landscapes with n in 4..=10.
fn landscape_bag(count: usize) -> Vec<Landscape> {
    (0..count)
        .map(|i| {
            let n = 4 + (i % 7) as u32;
            if i % 3 == 0 {
                continuous_landscape(n, i as u64)
            } else {
                quantized_landscape(n, 2 + i % 6, i as u64)
            }
        })
        .collect()
}

#[test]
fn neutral_degrees_match_brute_force() {
    for l in landscape_bag(120) {
        for g in l.genotypes() {
            assert_eq!(
                l.neutral_degree(g),
                brute_neutral_degree(l.values(), l.n_bits(), g.index())
            );
        }
    }
}

#[test]
fn degree_histograms_match_brute_force() {
    for l in landscape_bag(120) {
        assert_eq!(l.degree_counts(), brute_degree_counts(l.values(), l.n_bits()));
        let d = l.degree_distribution();
        let counts = brute_degree_counts(l.values(), l.n_bits());
        for (deg, &c) in counts.iter().enumerate() {
            assert_eq!(d.weights()[deg], c as f64 / l.size() as f64);
        }
    }
}

#[test]
fn network_partitions_match_flood_fill() {
    for l in landscape_bag(120) {
        let nets = extract_networks(&l);
        let expect = brute_networks(l.values(), l.n_bits());
        assert_eq!(nets.len(), expect.len());
        let total: usize = nets.iter().map(|nn| nn.size()).sum();
        assert_eq!(total, l.size());
        for (nn, members) in nets.iter().zip(&expect) {
            let got: Vec<usize> = nn.members().iter().map(|g| g.index()).collect();
            assert_eq!(&got, members);
            for &m in members {
                assert_eq!(l.values()[m], nn.fitness());
            }
            for (i, &c) in nn.centroid().iter().enumerate() {
                let ones = members.iter().filter(|&&m| m >> i & 1 == 1).count();
                assert_eq!(c, ones as f64 / members.len() as f64);
            }
        }
    }
}

#[test]
fn bfs_distances_match_popcount_minimum() {
    for l in landscape_bag(120) {
        let (dist, optima) = distances_to_optima(&l);
        assert!(optima >= 1);
        assert_eq!(dist, brute_distances(l.values()));
    }
}

#[test]
fn annealer_deltas_match_recomputation() {
    let mut rng = ChaCha8Rng::seed_from_u64(900);
    for l in landscape_bag(120) {
        for _ in 0..8 {
            let s = Genotype(rng.random_range(0..l.size() as u64));
            let new_fitness = if rng.random::<bool>() {
                l.values()[rng.random_range(0..l.size())]
            } else {
                rng.random::<f64>()
            };
            let mut counts = brute_degree_counts(l.values(), l.n_bits());
            for c in degree_delta(&l, s, new_fitness) {
                counts[c.old_degree as usize] -= 1;
                counts[c.new_degree as usize] += 1;
            }
            let mut moved = l.values().to_vec();
            moved[s.index()] = new_fitness;
            assert_eq!(counts, brute_degree_counts(&moved, l.n_bits()));
        }
    }
}

/// The energy the annealer tracked incrementally across millions of moves
/// must equal a from-scratch recomputation on its output.
#[test]
fn annealer_incremental_energy_matches_rescan() {
    for seed in 0..6u64 {
        let n = 9;
        let l = quantized_landscape(n, 3, 300 + seed);
        let target = window_distribution(2, 3, n).unwrap();
        let schedule = AnnealSchedule {
            initial_temperature: 2.0 / (1u64 << n) as f64,
            cooling_factor: 0.99,
            moves_per_epoch: 1 << n,
            total_moves: 200 << n,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (out, trace) = refine_traced(&l, &target, &schedule, &mut rng).unwrap();
        let energy = out.degree_distribution().rms_distance(&target).unwrap();
        let reported = trace.last().unwrap().energy;
        assert!(
            (energy - reported).abs() < 1e-12,
            "incremental energy drifted: {reported} vs {energy}"
        );
    }
}

/// Replay check: the degree sampled for a solution when it was frozen is its
/// degree in the finished landscape.
#[test]
fn generator_freeze_invariant_up_to_ten_bits() {
    for (i, n) in [8u32, 9, 10, 10, 10].into_iter().enumerate() {
        let target = window_distribution(1 + (i as u32 % 3), 3, n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(700 + i as u64);
        let (l, log) = generate_nd_traced(n, &target, &mut rng).unwrap();
        assert_eq!(log.len(), l.size());
        for rec in log {
            assert_eq!(l.neutral_degree(rec.genotype), rec.degree);
        }
        // distinct fitness per network on generator output
        let mut values: Vec<u64> = extract_networks(&l)
            .iter()
            .map(|nn| nn.fitness().to_bits())
            .collect();
        let count = values.len();
        values.sort_unstable();
        values.dedup();
        assert_eq!(values.len(), count);
    }
}

/// FDC against a naive two-pass implementation.
#[test]
fn fdc_matches_naive_two_pass() {
    for seed in 0..40u64 {
        let n = 4 + (seed % 9) as u32; // up to 12 bits
        let l = if seed % 2 == 0 {
            quantized_landscape(n, 4 + seed as usize % 5, seed)
        } else {
            continuous_landscape(n, seed)
        };
        let dist = brute_distances(l.values());
        let m = l.size() as f64;
        let mean_f = l.values().iter().sum::<f64>() / m;
        let mean_d = dist.iter().map(|&d| d as f64).sum::<f64>() / m;
        let cov = l
            .values()
            .iter()
            .zip(&dist)
            .map(|(&f, &d)| (f - mean_f) * (d as f64 - mean_d))
            .sum::<f64>()
            / m;
        let sf = (l.values().iter().map(|&f| (f - mean_f).powi(2)).sum::<f64>() / m).sqrt();
        let sd = (dist.iter().map(|&d| (d as f64 - mean_d).powi(2)).sum::<f64>() / m).sqrt();
        if sf == 0.0 || sd == 0.0 {
            continue;
        }
        let naive = cov / (sf * sd);
        let report = fdc(&l).unwrap();
        assert!(
            (report.fdc - naive).abs() < 1e-12,
            "n={n} seed={seed}: {} vs {naive}",
            report.fdc
        );
    }
}

/// Success probability of sampling the unique optimum among 50 uniform
/// draws: closed form `1 - (1 - 2^-16)^50`, checked at generation 0 within
/// five binomial standard deviations.
#[test]
fn ga_generation_zero_matches_analytic_probability() {
    let n = 16u32;
    let l = continuous_landscape(n, 424242);
    // continuous draws collide with probability ~2^32/2^53; make sure
    let mut sorted: Vec<u64> = l.values().iter().map(|v| v.to_bits()).collect();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(sorted.len(), l.size(), "fitness values must be distinct");

    let params = GaParams {
        generations: 0,
        ..GaParams::default()
    };
    let runs = 60_000u64;
    let successes = (0..runs)
        .filter(|&i| ga_run(&l, &params, 0xACCE55 ^ i).success)
        .count() as f64;

    let p = 1.0 - (1.0 - 0.5f64.powi(16)).powi(50);
    let expect = runs as f64 * p;
    let sigma = (runs as f64 * p * (1.0 - p)).sqrt();
    assert!(
        (successes - expect).abs() < 5.0 * sigma,
        "successes {successes}, expected {expect} (sigma {sigma})"
    );
}

/// Smooth low-mean targets anneal closer than a sharp two-spike target of
/// the same mean, on average over ten seeds.
#[test]
fn smooth_targets_anneal_closer_than_sharp_ones() {
    let n = 10u32;
    // binomial-ish hump at mean 4 vs two spikes at the same mean
    let smooth = {
        let mut w = vec![0.0; n as usize + 1];
        for (d, weight) in [(2, 0.1), (3, 0.2), (4, 0.4), (5, 0.2), (6, 0.1)] {
            w[d] = weight;
        }
        DegreeDistribution::new(w).unwrap()
    };
    let sharp = {
        let mut w = vec![0.0; n as usize + 1];
        w[1] = 0.5;
        w[7] = 0.5;
        DegreeDistribution::new(w).unwrap()
    };
    let schedule = AnnealSchedule {
        initial_temperature: 2.0 / (1u64 << n) as f64,
        cooling_factor: 0.995,
        moves_per_epoch: 1 << n,
        total_moves: 512 << n,
    };
    let mut total_smooth = 0.0;
    let mut total_sharp = 0.0;
    for seed in 0..10u64 {
        for (target, total) in [(&smooth, &mut total_smooth), (&sharp, &mut total_sharp)] {
            let mut rng = ChaCha8Rng::seed_from_u64(3000 + seed);
            let rough = ndscape::generator::generate_nd(n, target, &mut rng).unwrap();
            let out = refine(&rough, target, &schedule, &mut rng).unwrap();
            *total += out.degree_distribution().rms_distance(target).unwrap();
        }
    }
    assert!(
        total_smooth < total_sharp,
        "smooth {total_smooth} vs sharp {total_sharp}"
    );
}

/// NKp neutrality rises with p; NKq neutrality falls with q.
#[test]
fn reference_neutrality_trends() {
    let n = 12u32;
    let seeds = 30u64;
    let mean_degree = |variant: NkVariant, k: u32, seed: u64| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        nk_family(n, k, variant, &mut rng)
            .unwrap()
            .degree_distribution()
            .stats()
            .unwrap()
            .0
    };
    let avg = |variant: NkVariant| -> f64 {
        (0..seeds).map(|s| mean_degree(variant, 4, 5000 + s)).sum::<f64>() / seeds as f64
    };

    let p_low = avg(NkVariant::P(0.5));
    let p_high = avg(NkVariant::P(0.9));
    assert!(
        p_high > p_low,
        "NKp neutrality should rise with p: {p_low} vs {p_high}"
    );

    let q_low = avg(NkVariant::Q(2));
    let q_high = avg(NkVariant::Q(8));
    assert!(
        q_low > q_high,
        "NKq neutrality should fall with q: {q_low} vs {q_high}"
    );
}
