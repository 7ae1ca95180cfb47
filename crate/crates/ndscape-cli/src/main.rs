//! `ndscape`: reproducible landscape experiments from the command line.
//!
//! Every stochastic subcommand runs from a single 64-bit seed (drawn and
//! echoed when not given) and every CSV output starts with a comment line
//! `# ndscape <version> seed=<seed> cmd=<canonical args>` so results can be
//! replayed exactly.
//!
//! Exit codes: 0 success, 1 usage, 2 I/O or malformed file, 3 numeric or
//! contract violation.

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ndscape::analysis::{fdc, fdc_scatter, network_size_ranking};
use ndscape::annealer::{refine_traced, AnnealSchedule};
use ndscape::extension::{convolve, ExtendedLandscape};
use ndscape::ga::{success_rate_with_jobs, GaParams};
use ndscape::generator::GenerationState;
use ndscape::io;
use ndscape::netfit::{assign_trap, window_distribution, TrapParams};
use ndscape::reference::{nk_family, royal_road, technological, NkVariant};
use ndscape::{Error, Genotype, Landscape, NetworkPartition, MAX_BITS};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "ndscape",
    version,
    about = "Construct, tune and measure landscapes with prescribed neutral-degree distributions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a landscape toward a target degree distribution, then anneal
    Gen(GenArgs),
    /// Emit a classic reference landscape (Royal Road, NK, NKp, NKq, Tech)
    Ref(RefArgs),
    /// Re-value the neutral networks of a landscape with a trap function
    Trap(TrapArgs),
    /// Report on a landscape: degrees, networks, ranks, fdc or scatter
    Analyze(AnalyzeArgs),
    /// Estimate the GA success rate on a landscape
    Ga(GaArgs),
    /// Concatenate landscapes into an additive extended landscape
    Extend(ExtendArgs),
    /// Convolve two degree distributions
    Convolve(ConvolveArgs),
    /// Emit a uniform window target distribution
    Window(WindowArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Bit width of the landscape
    #[arg(long)]
    n: u32,
    /// Target distribution CSV (degree,weight rows for 0..=N)
    #[arg(long)]
    target: String,
    /// RNG seed; drawn from the OS and echoed when omitted
    #[arg(long)]
    seed: Option<u64>,
    /// Output .ndl path
    #[arg(long)]
    out: String,
    /// Keep the raw construction, skip the annealing pass
    #[arg(long)]
    skip_anneal: bool,
    /// Total annealing moves (default 4096 * 2^N)
    #[arg(long)]
    anneal_budget: Option<usize>,
    /// Initial annealing temperature (default 2 / 2^N)
    #[arg(long)]
    anneal_t0: Option<f64>,
    /// Cooling factor per epoch (default 0.999)
    #[arg(long)]
    anneal_cooling: Option<f64>,
    /// Moves per epoch (default 2^N)
    #[arg(long)]
    anneal_epoch: Option<usize>,
    /// Write the annealing energy trace CSV (move,energy)
    #[arg(long)]
    trace: Option<String>,
    /// Write the construction log CSV (genotype,degree)
    #[arg(long)]
    log: Option<String>,
    /// Allow widths above 16 bits (memory grows as 2^N * N)
    #[arg(long)]
    allow_large: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Family {
    RoyalRoad,
    Nk,
    Nkp,
    Nkq,
    Tech,
}

#[derive(Args)]
struct RefArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Bit width
    #[arg(long)]
    n: u32,
    /// Number of Royal Road blocks (block size is n / blocks)
    #[arg(long)]
    blocks: Option<u32>,
    /// Epistatic links per locus (NK families)
    #[arg(long)]
    k: Option<u32>,
    /// NKp zero probability
    #[arg(long)]
    p: Option<f64>,
    /// NKq level count
    #[arg(long)]
    q: Option<u32>,
    /// Technological level count
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output .ndl path
    #[arg(long)]
    out: String,
}

#[derive(Args)]
struct TrapArgs {
    /// Input .ndl path
    #[arg(long = "in")]
    input: String,
    /// Basin boundary, in (0,1)
    #[arg(long)]
    b: f64,
    /// Relative importance of the deceptive optimum, in (0,1]
    #[arg(long)]
    r: f64,
    /// White-noise amplitude keeping adjacent networks distinct
    #[arg(long, default_value_t = 1e-6)]
    noise: f64,
    /// Genotype whose network becomes the optimum
    #[arg(long, default_value_t = 0)]
    anchor: u64,
    #[arg(long)]
    seed: Option<u64>,
    /// Output .ndl path
    #[arg(long)]
    out: String,
    /// Write the per-network report CSV
    #[arg(long)]
    networks_out: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Report {
    Degrees,
    Networks,
    Ranks,
    Fdc,
    Scatter,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long, value_enum)]
    report: Report,
    /// Input .ndl (or .xndl for --report degrees); `-` reads standard input
    #[arg(long = "in", default_value = "-")]
    input: String,
    /// Output CSV path; `-` writes standard output
    #[arg(long, default_value = "-")]
    out: String,
    /// Scatter sample size (default: the whole space)
    #[arg(long)]
    sample: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct GaArgs {
    /// Input .ndl or .xndl path
    #[arg(long = "in")]
    input: String,
    #[arg(long, default_value_t = 1000)]
    runs: u64,
    #[arg(long, default_value_t = 50)]
    pop: usize,
    #[arg(long, default_value_t = 50)]
    gens: usize,
    /// Per-child one-bit mutation probability
    #[arg(long, default_value_t = 0.8)]
    mut_rate: f64,
    /// Per-pair one-point crossover probability
    #[arg(long = "xover", default_value_t = 0.2)]
    xover: f64,
    #[arg(long, default_value_t = 3)]
    tour: usize,
    #[arg(long)]
    elitism: bool,
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads for the independent runs
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Label written to the `trap` CSV column
    #[arg(long, default_value = "-")]
    trap_label: String,
    /// Output CSV path; `-` writes standard output
    #[arg(long, default_value = "-")]
    out: String,
}

#[derive(Args)]
struct ExtendArgs {
    /// Input .ndl or .xndl paths, concatenated in order (lowest bits first)
    #[arg(required = true)]
    inputs: Vec<String>,
    /// Output .xndl path
    #[arg(long)]
    out: String,
}

#[derive(Args)]
struct ConvolveArgs {
    /// Two distribution CSV paths
    #[arg(required = true, num_args = 2)]
    inputs: Vec<String>,
    /// Output CSV path; `-` writes standard output
    #[arg(long, default_value = "-")]
    out: String,
}

#[derive(Args)]
struct WindowArgs {
    /// First degree of the window
    #[arg(long)]
    p: u32,
    /// Window width
    #[arg(long)]
    w: u32,
    /// Bit width the distribution is for (degrees 0..=n)
    #[arg(long)]
    n: u32,
    /// Output CSV path; `-` writes standard output
    #[arg(long, default_value = "-")]
    out: String,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version print on stdout and succeed
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            // dying downstream consumers (e.g. `| head`) are not an error
            if let Error::Io { source, .. } = &e {
                if source.kind() == std::io::ErrorKind::BrokenPipe {
                    return ExitCode::SUCCESS;
                }
            }
            eprintln!("ndscape: {e}");
            match e {
                Error::Io { .. } | Error::Format { .. } => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Gen(args) => cmd_gen(args),
        Command::Ref(args) => cmd_ref(args),
        Command::Trap(args) => cmd_trap(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Ga(args) => cmd_ga(args),
        Command::Extend(args) => cmd_extend(args),
        Command::Convolve(args) => cmd_convolve(args),
        Command::Window(args) => cmd_window(args),
    }
}

/// Resolves the seed (drawing one from the OS when absent) and echoes it.
fn resolve_seed(seed: Option<u64>, what: &str) -> u64 {
    let seed = seed.unwrap_or_else(|| rand::rng().random());
    eprintln!("ndscape {what}: seed={seed}");
    seed
}

fn stamp(seed: u64, cmd: &str) -> String {
    format!("ndscape {VERSION} seed={seed} cmd={cmd}")
}

fn open_out(path: &str) -> Result<Box<dyn Write>, Error> {
    if path == "-" {
        Ok(Box::new(std::io::stdout().lock()))
    } else {
        let file = File::create(path).map_err(|e| Error::Io {
            path: path.to_string(),
            source: e,
        })?;
        Ok(Box::new(BufWriter::new(file)))
    }
}

fn write_failed(path: &str, e: std::io::Error) -> Error {
    Error::Io {
        path: path.to_string(),
        source: e,
    }
}

/// Either kind of landscape input, detected from the first header token.
enum AnyLandscape {
    Plain(Landscape),
    Extended(ExtendedLandscape),
}

fn read_any_landscape(path: &str) -> Result<AnyLandscape, Error> {
    let (text, name) = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| write_failed("<stdin>", e))?;
        (buf, "<stdin>".to_string())
    } else {
        (
            std::fs::read_to_string(path).map_err(|e| write_failed(path, e))?,
            path.to_string(),
        )
    };
    if text.starts_with("XNDL") {
        Ok(AnyLandscape::Extended(io::read_xndl(text.as_bytes(), &name)?))
    } else {
        Ok(AnyLandscape::Plain(io::read_ndl(text.as_bytes(), &name)?))
    }
}

fn cmd_gen(args: GenArgs) -> Result<(), Error> {
    let seed = resolve_seed(args.seed, "gen");
    let target = io::load_distribution(&args.target)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let limit = if args.allow_large { MAX_BITS } else { 16 };
    let mut state = GenerationState::with_bit_limit(args.n, &target, limit, &mut rng)?;
    let mut log = Vec::new();
    while let Some(record) = state.step(&mut rng) {
        log.push(record);
    }
    let (rough, _) = state.finish(&mut rng);
    let raw_distance = rough.degree_distribution().rms_distance(&target)?;

    let canonical = canonical_gen(&args, seed);
    if let Some(path) = &args.log {
        let mut w = open_out(path)?;
        (|| -> std::io::Result<()> {
            writeln!(w, "# {}", stamp(seed, &canonical))?;
            writeln!(w, "genotype,degree")?;
            for rec in &log {
                writeln!(w, "{},{}", rec.genotype, rec.degree)?;
            }
            Ok(())
        })()
        .map_err(|e| write_failed(path, e))?;
    }

    let landscape = if args.skip_anneal {
        eprintln!("ndscape gen: distance={raw_distance}");
        rough
    } else {
        let mut schedule = AnnealSchedule::default_for(args.n);
        if let Some(t0) = args.anneal_t0 {
            schedule.initial_temperature = t0;
        }
        if let Some(cooling) = args.anneal_cooling {
            schedule.cooling_factor = cooling;
        }
        if let Some(moves) = args.anneal_epoch {
            schedule.moves_per_epoch = moves;
        }
        if let Some(total) = args.anneal_budget {
            schedule.total_moves = total;
        }
        let (refined, trace) = refine_traced(&rough, &target, &schedule, &mut rng)?;
        let annealed_distance = refined.degree_distribution().rms_distance(&target)?;
        eprintln!(
            "ndscape gen: raw_distance={raw_distance} annealed_distance={annealed_distance}"
        );
        if let Some(path) = &args.trace {
            let mut w = open_out(path)?;
            (|| -> std::io::Result<()> {
                writeln!(w, "# {}", stamp(seed, &canonical))?;
                writeln!(w, "move,energy")?;
                for point in &trace {
                    writeln!(w, "{},{}", point.moves, point.energy)?;
                }
                Ok(())
            })()
            .map_err(|e| write_failed(path, e))?;
        }
        refined
    };

    io::save_ndl(&landscape, &args.out)
}

fn canonical_gen(args: &GenArgs, seed: u64) -> String {
    let mut s = format!("gen --n {} --target {} --seed {seed}", args.n, args.target);
    if args.skip_anneal {
        s.push_str(" --skip-anneal");
    }
    if let Some(v) = args.anneal_budget {
        s.push_str(&format!(" --anneal-budget {v}"));
    }
    if let Some(v) = args.anneal_t0 {
        s.push_str(&format!(" --anneal-t0 {v}"));
    }
    if let Some(v) = args.anneal_cooling {
        s.push_str(&format!(" --anneal-cooling {v}"));
    }
    if let Some(v) = args.anneal_epoch {
        s.push_str(&format!(" --anneal-epoch {v}"));
    }
    if args.allow_large {
        s.push_str(" --allow-large");
    }
    s.push_str(&format!(" --out {}", args.out));
    s
}

fn cmd_ref(args: RefArgs) -> Result<(), Error> {
    let need = |value: Option<u32>, flag: &str| {
        value.ok_or_else(|| Error::InvalidParameter(format!("--{flag} is required here")))
    };
    let landscape = match args.family {
        Family::RoyalRoad => {
            let blocks = need(args.blocks, "blocks")?;
            if blocks == 0 || args.n % blocks != 0 {
                return Err(Error::InvalidParameter(format!(
                    "--n {} is not a multiple of --blocks {blocks}",
                    args.n
                )));
            }
            royal_road(args.n, blocks, args.n / blocks)?
        }
        Family::Nk => {
            let seed = resolve_seed(args.seed, "ref");
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            nk_family(args.n, need(args.k, "k")?, NkVariant::Plain, &mut rng)?
        }
        Family::Nkp => {
            let p = args
                .p
                .ok_or_else(|| Error::InvalidParameter("--p is required here".into()))?;
            let seed = resolve_seed(args.seed, "ref");
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            nk_family(args.n, need(args.k, "k")?, NkVariant::P(p), &mut rng)?
        }
        Family::Nkq => {
            let seed = resolve_seed(args.seed, "ref");
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            nk_family(
                args.n,
                need(args.k, "k")?,
                NkVariant::Q(need(args.q, "q")?),
                &mut rng,
            )?
        }
        Family::Tech => {
            let seed = resolve_seed(args.seed, "ref");
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            technological(args.n, need(args.k, "k")?, need(args.m, "m")?, &mut rng)?
        }
    };
    io::save_ndl(&landscape, &args.out)
}

fn cmd_trap(args: TrapArgs) -> Result<(), Error> {
    let seed = resolve_seed(args.seed, "trap");
    let landscape = io::load_ndl(&args.input)?;
    let params = TrapParams::new(args.b, args.r)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let out = assign_trap(
        &landscape,
        &params,
        args.noise,
        Genotype(args.anchor),
        &mut rng,
    )?;
    if let Some(warning) = &out.noise_warning {
        eprintln!("ndscape trap: warning: {warning}");
    }
    if let Some(path) = &args.networks_out {
        let canonical = format!(
            "trap --in {} --b {} --r {} --noise {} --anchor {} --seed {seed} --out {}",
            args.input, args.b, args.r, args.noise, args.anchor, args.out
        );
        let mut w = open_out(path)?;
        (|| -> std::io::Result<()> {
            writeln!(w, "# {}", stamp(seed, &canonical))?;
            writeln!(w, "network_id,size,centroid_distance,fitness")?;
            for r in &out.networks {
                writeln!(
                    w,
                    "{},{},{},{}",
                    r.id, r.size, r.centroid_distance, r.fitness
                )?;
            }
            Ok(())
        })()
        .map_err(|e| write_failed(path, e))?;
    }
    io::save_ndl(&out.landscape, &args.out)
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), Error> {
    let input = read_any_landscape(&args.input)?;
    let report_name = match args.report {
        Report::Degrees => "degrees",
        Report::Networks => "networks",
        Report::Ranks => "ranks",
        Report::Fdc => "fdc",
        Report::Scatter => "scatter",
    };

    let landscape = match &input {
        AnyLandscape::Plain(l) => Some(l),
        AnyLandscape::Extended(_) => None,
    };

    // only the scatter sampler draws randomness
    let seed = match (args.report, args.sample) {
        (Report::Scatter, Some(sample))
            if landscape.is_none_or(|l| sample < l.size()) =>
        {
            resolve_seed(args.seed, "analyze")
        }
        _ => args.seed.unwrap_or(0),
    };

    let mut canonical = format!("analyze --report {report_name} --in {}", args.input);
    if let Some(sample) = args.sample {
        canonical.push_str(&format!(" --sample {sample}"));
    }
    canonical.push_str(&format!(" --seed {seed} --out {}", args.out));
    let header = stamp(seed, &canonical);

    let mut w = open_out(&args.out)?;
    let io_err = |e: std::io::Error| write_failed(&args.out, e);

    match args.report {
        Report::Degrees => {
            let d = match &input {
                AnyLandscape::Plain(l) => l.degree_distribution(),
                AnyLandscape::Extended(x) => x.degree_distribution(),
            };
            io::write_distribution(&d, &mut w, Some(&header)).map_err(io_err)?;
        }
        Report::Networks => {
            let l = landscape.ok_or_else(|| {
                Error::InvalidParameter("the networks report needs a plain .ndl".into())
            })?;
            let part = NetworkPartition::extract(l);
            writeln!(w, "# {header}").map_err(io_err)?;
            writeln!(w, "network_id,size,fitness").map_err(io_err)?;
            for (id, nn) in part.networks().iter().enumerate() {
                writeln!(w, "{id},{},{}", nn.size(), nn.fitness()).map_err(io_err)?;
            }
        }
        Report::Ranks => {
            let l = landscape.ok_or_else(|| {
                Error::InvalidParameter("the ranks report needs a plain .ndl".into())
            })?;
            writeln!(w, "# {header}").map_err(io_err)?;
            writeln!(w, "rank,size").map_err(io_err)?;
            for (rank, size) in network_size_ranking(l) {
                writeln!(w, "{rank},{size}").map_err(io_err)?;
            }
        }
        Report::Fdc => {
            let l = landscape.ok_or_else(|| {
                Error::InvalidParameter("the fdc report needs a plain .ndl".into())
            })?;
            let report = fdc(l)?;
            writeln!(w, "# {header}").map_err(io_err)?;
            writeln!(w, "fdc,classification,samples,optima_count").map_err(io_err)?;
            writeln!(
                w,
                "{},{},{},{}",
                report.fdc, report.classification, report.samples, report.optima_count
            )
            .map_err(io_err)?;
        }
        Report::Scatter => {
            let l = landscape.ok_or_else(|| {
                Error::InvalidParameter("the scatter report needs a plain .ndl".into())
            })?;
            let sample = args.sample.unwrap_or(l.size());
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let points = fdc_scatter(l, sample, &mut rng)?;
            writeln!(w, "# {header}").map_err(io_err)?;
            writeln!(w, "distance,fitness").map_err(io_err)?;
            for p in points {
                writeln!(w, "{},{}", p.distance, p.fitness).map_err(io_err)?;
            }
        }
    }
    Ok(())
}

fn cmd_ga(args: GaArgs) -> Result<(), Error> {
    let seed = resolve_seed(args.seed, "ga");
    let params = GaParams {
        population: args.pop,
        generations: args.gens,
        mutation_rate: args.mut_rate,
        crossover_rate: args.xover,
        tournament: args.tour,
        elitism: args.elitism,
        runs: args.runs,
    };
    let input = read_any_landscape(&args.input)?;
    let (rate, mean_degree) = match &input {
        AnyLandscape::Plain(l) => (
            success_rate_with_jobs(l, &params, seed, args.jobs)?,
            l.degree_distribution().stats()?.0,
        ),
        AnyLandscape::Extended(x) => (
            success_rate_with_jobs(x, &params, seed, args.jobs)?,
            x.degree_distribution().stats()?.0,
        ),
    };

    let mut canonical = format!(
        "ga --in {} --runs {} --pop {} --gens {} --mut-rate {} --xover {} --tour {}",
        args.input, args.runs, args.pop, args.gens, args.mut_rate, args.xover, args.tour
    );
    if args.elitism {
        canonical.push_str(" --elitism");
    }
    canonical.push_str(&format!(" --seed {seed} --out {}", args.out));

    let mut w = open_out(&args.out)?;
    (|| -> std::io::Result<()> {
        writeln!(w, "# {}", stamp(seed, &canonical))?;
        writeln!(w, "landscape,mean_degree,trap,success_rate,ci_half_width")?;
        writeln!(
            w,
            "{},{},{},{},{}",
            args.input, mean_degree, args.trap_label, rate.rate, rate.half_width
        )
    })()
    .map_err(|e| write_failed(&args.out, e))
}

fn cmd_extend(args: ExtendArgs) -> Result<(), Error> {
    let mut components = Vec::new();
    for path in &args.inputs {
        match read_any_landscape(path)? {
            AnyLandscape::Plain(l) => components.push(l),
            AnyLandscape::Extended(x) => {
                components.extend(x.components().iter().cloned());
            }
        }
    }
    let ext = ExtendedLandscape::new(components)?;
    io::save_xndl(&ext, &args.out)
}

fn cmd_convolve(args: ConvolveArgs) -> Result<(), Error> {
    let d1 = io::load_distribution(&args.inputs[0])?;
    let d2 = io::load_distribution(&args.inputs[1])?;
    let out = convolve(&d1, &d2)?;
    let canonical = format!(
        "convolve {} {} --out {}",
        args.inputs[0], args.inputs[1], args.out
    );
    let mut w = open_out(&args.out)?;
    io::write_distribution(&out, &mut w, Some(&stamp(0, &canonical)))
        .map_err(|e| write_failed(&args.out, e))
}

fn cmd_window(args: WindowArgs) -> Result<(), Error> {
    let d = window_distribution(args.p, args.w, args.n)?;
    let canonical = format!(
        "window --p {} --w {} --n {} --out {}",
        args.p, args.w, args.n, args.out
    );
    let mut w = open_out(&args.out)?;
    io::write_distribution(&d, &mut w, Some(&stamp(0, &canonical)))
        .map_err(|e| write_failed(&args.out, e))
}
