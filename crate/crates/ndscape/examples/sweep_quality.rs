//! Prints the construction and post-annealing distances for the window
//! target sweep. Handy for judging schedule changes:
//!
//!     cargo run --release -p ndscape --example sweep_quality -- 16 2

use ndscape::annealer::{refine, AnnealSchedule};
use ndscape::generator::generate_nd;
use ndscape::netfit::window_distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().map_or(16, |a| a.parse().unwrap());
    let seeds: u64 = args.next().map_or(2, |a| a.parse().unwrap());
    let mut schedule = AnnealSchedule::default_for(n);
    if let Some(t0) = args.next() {
        schedule.initial_temperature = t0.parse().unwrap();
    }
    if let Some(cool) = args.next() {
        schedule.cooling_factor = cool.parse().unwrap();
    }
    if let Some(epochs) = args.next() {
        let epochs: usize = epochs.parse().unwrap();
        schedule.total_moves = epochs << n;
    }

    let only_p: Option<u32> = std::env::var("ONLY_P").ok().map(|v| v.parse().unwrap());
    let only_w: Option<u32> = std::env::var("ONLY_W").ok().map(|v| v.parse().unwrap());

    println!("p w seed mean_target dist_raw dist_annealed secs");
    for w in [3u32, 4] {
        if only_w.is_some_and(|x| x != w) {
            continue;
        }
        for p in 0..=7u32 {
            if only_p.is_some_and(|x| x != p) {
                continue;
            }
            let target = window_distribution(p, w, n).unwrap();
            let (mean, _) = target.stats().unwrap();
            for seed in 0..seeds {
                let t0 = std::time::Instant::now();
                let mut rng = ChaCha8Rng::seed_from_u64(1000 * seed + (10 * p + w) as u64);
                let rough = generate_nd(n, &target, &mut rng).unwrap();
                let d1 = rough
                    .degree_distribution()
                    .rms_distance(&target)
                    .unwrap();
                let refined = refine(&rough, &target, &schedule, &mut rng).unwrap();
                let d2 = refined
                    .degree_distribution()
                    .rms_distance(&target)
                    .unwrap();
                println!(
                    "{p} {w} {seed} {mean:.1} {d1:.4} {d2:.5} {:.2}",
                    t0.elapsed().as_secs_f64()
                );
                if std::env::var("HIST").is_ok() {
                    let weights: Vec<String> = rough
                        .degree_distribution()
                        .weights()
                        .iter()
                        .map(|w| format!("{w:.3}"))
                        .collect();
                    println!("  raw: {}", weights.join(" "));
                    let weights: Vec<String> = refined
                        .degree_distribution()
                        .weights()
                        .iter()
                        .map(|w| format!("{w:.3}"))
                        .collect();
                    println!("  ann: {}", weights.join(" "));
                }
            }
        }
    }
}
