//! How does the anneal budget shape the network structure? Prints the
//! distance, the size of the network containing 0^N, the count of networks
//! and the deceptive-trap GA rate across anneal budgets.
//!
//!     cargo run --release -p ndscape --example structure_probe -- 16 6

use ndscape::analysis::fdc;
use ndscape::annealer::{refine, AnnealSchedule};
use ndscape::ga::{success_rate, GaParams};
use ndscape::generator::generate_nd;
use ndscape::netfit::{assign_trap, window_distribution, TrapParams};
use ndscape::{extract_networks, Genotype, Landscape};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn describe(tag: &str, p: u32, w: u32, seed: u64, nd: &Landscape, dist: f64) {
    let params = GaParams {
        runs: 200,
        ..GaParams::default()
    };
    let nets = extract_networks(nd);
    let opt_size = nets
        .iter()
        .find(|nn| nn.members().contains(&Genotype::ZERO))
        .unwrap()
        .size();
    let (mean, _) = nd.degree_distribution().stats().unwrap();
    let mut trng = ChaCha8Rng::seed_from_u64(31 + seed);
    let dec = assign_trap(nd, &TrapParams::deceptive(), 1e-6, Genotype::ZERO, &mut trng).unwrap();
    let rate = success_rate(&dec.landscape, &params, 77 + seed).unwrap();
    let f = fdc(&dec.landscape).unwrap();
    println!(
        "{tag} p{p}w{w} seed{seed} mean={mean:.2} dist={dist:.4} nets={} opt_frac={:.5} dec_fdc={:.3} dec_ga={:.3}",
        nets.len(),
        opt_size as f64 / nd.size() as f64,
        f.fdc,
        rate.rate
    );
}

fn main() {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().map_or(16, |a| a.parse().unwrap());
    let seeds: u64 = args.next().map_or(6, |a| a.parse().unwrap());

    for (p, w) in [(2u32, 4u32), (7, 4)] {
        let target = window_distribution(p, w, n).unwrap();
        for seed in 0..seeds {
            let mut rng = ChaCha8Rng::seed_from_u64(7000 + 100 * seed + (10 * p + w) as u64);
            let rough = generate_nd(n, &target, &mut rng).unwrap();
            let dist_raw = rough.degree_distribution().rms_distance(&target).unwrap();
            describe("raw    ", p, w, seed, &rough, dist_raw);
            for epochs in [256usize, 1024] {
                let schedule = AnnealSchedule {
                    initial_temperature: 2.0 / (1u64 << n) as f64,
                    cooling_factor: 0.995f64.powf(1024.0 / epochs as f64),
                    moves_per_epoch: 1 << n,
                    total_moves: epochs << n,
                };
                let mut arng = ChaCha8Rng::seed_from_u64(9000 + seed);
                let nd = refine(&rough, &target, &schedule, &mut arng).unwrap();
                let dist = nd.degree_distribution().rms_distance(&target).unwrap();
                describe(&format!("sa{epochs:<5}"), p, w, seed, &nd, dist);
            }
        }
    }
}
