//! Prints FDC and GA success rates for trap landscapes across the
//! neutrality bands:
//!
//!     cargo run --release -p ndscape --example trap_probe -- 16 2

use ndscape::analysis::fdc;
use ndscape::annealer::{refine, AnnealSchedule};
use ndscape::ga::{success_rate, GaParams};
use ndscape::generator::generate_nd;
use ndscape::netfit::{assign_trap, window_distribution, TrapParams};
use ndscape::Genotype;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().map_or(16, |a| a.parse().unwrap());
    let seeds: u64 = args.next().map_or(2, |a| a.parse().unwrap());

    let schedule = AnnealSchedule {
        initial_temperature: 2.0 / (1u64 << n) as f64,
        cooling_factor: 0.995,
        moves_per_epoch: 1 << n,
        total_moves: 1024 << n,
    };
    let params = GaParams {
        runs: 200,
        ..GaParams::default()
    };

    println!("p w seed mean dist nn_opt_frac trap fdc class ga_rate");
    for (p, w) in [(1u32, 3u32), (2, 4), (6, 3), (7, 4)] {
        let target = window_distribution(p, w, n).unwrap();
        for seed in 0..seeds {
            let mut rng = ChaCha8Rng::seed_from_u64(7000 + 100 * seed + (10 * p + w) as u64);
            let rough = generate_nd(n, &target, &mut rng).unwrap();
            let nd = refine(&rough, &target, &schedule, &mut rng).unwrap();
            let (mean, _) = nd.degree_distribution().stats().unwrap();
            let dist = nd.degree_distribution().rms_distance(&target).unwrap();
            for trap in ["deceptive", "easy"] {
                let tp = if trap == "deceptive" {
                    TrapParams::deceptive()
                } else {
                    TrapParams::easy()
                };
                let mut trng = ChaCha8Rng::seed_from_u64(8000 + seed);
                let out = assign_trap(&nd, &tp, 1e-6, Genotype::ZERO, &mut trng).unwrap();
                let opt_size = out
                    .networks
                    .iter()
                    .find(|r| r.fitness == 1.0)
                    .map(|r| r.size)
                    .unwrap();
                let report = fdc(&out.landscape).unwrap();
                let rate = success_rate(&out.landscape, &params, 9000 + seed).unwrap();
                println!(
                    "{p} {w} {seed} {mean:.2} {dist:.4} {:.4} {trap} {:.3} {} {:.3}",
                    opt_size as f64 / out.landscape.size() as f64,
                    report.fdc,
                    report.classification,
                    rate.rate
                );
            }
        }
    }
}
