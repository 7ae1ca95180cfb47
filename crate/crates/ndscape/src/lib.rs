//! Fitness landscapes with a prescribed neutral-degree distribution.
//!
//! The neutral degree of a solution is the number of its one-bit-flip
//! neighbours with exactly equal fitness, and the degree distribution over
//! the whole space is a key driver of how populations move through a
//! landscape. This crate constructs landscapes whose degree distribution
//! approximates any requested target, and provides the instruments around
//! them:
//!
//! * [`generator`] builds an exhaustive landscape toward a target
//!   distribution, one frozen solution at a time.
//! * [`annealer`] sharpens the fit by simulated annealing over single
//!   fitness values.
//! * [`netfit`] re-values whole neutral networks with trap functions, tuning
//!   deceptiveness without touching neutrality.
//! * [`reference`] supplies the classic baselines (Royal Road, NK, NKp, NKq,
//!   Technological).
//! * [`analysis`] measures difficulty: fitness-distance correlation,
//!   scatter sampling, network size rankings.
//! * [`ga`] runs the benchmark genetic algorithm and estimates success
//!   rates.
//! * [`extension`] concatenates small landscapes into large product spaces
//!   whose exact degree distribution is a convolution.
//!
//! ```
//! use ndscape::prelude::*;
//! use rand::SeedableRng;
//! use rand_chacha::ChaCha8Rng;
//!
//! let mut rng = ChaCha8Rng::seed_from_u64(7);
//! let target = window_distribution(2, 3, 10)?;
//! let rough = generate_nd(10, &target, &mut rng)?;
//! let refined = refine(&rough, &target, &AnnealSchedule::default_for(10), &mut rng)?;
//!
//! let before = rough.degree_distribution().rms_distance(&target)?;
//! let after = refined.degree_distribution().rms_distance(&target)?;
//! assert!(after <= before);
//! # Ok::<(), ndscape::Error>(())
//! ```
//!
//! The [`book`] module mirrors the project guide; its chapters double as
//! compiled examples.

pub mod analysis;
pub mod annealer;
pub mod distribution;
pub mod error;
pub mod extension;
pub mod ga;
pub mod generator;
pub mod genotype;
pub mod io;
pub mod landscape;
pub mod netfit;
pub mod network;
pub mod reference;

pub mod book;

pub use distribution::DegreeDistribution;
pub use error::{Error, Result};
pub use genotype::{neighbors, Genotype};
pub use landscape::{Evaluate, Landscape, MAX_BITS};
pub use network::{extract_networks, NetworkPartition, NeutralNetwork};

/// The common imports for working with this crate.
pub mod prelude {
    pub use crate::analysis::{fdc, fdc_scatter, network_size_ranking, FdcClass, FdcReport};
    pub use crate::annealer::{degree_delta, refine, refine_traced, AnnealSchedule};
    pub use crate::distribution::DegreeDistribution;
    pub use crate::error::{Error, Result};
    pub use crate::extension::{convolve, extend, ExtendedLandscape};
    pub use crate::ga::{ga_run, success_rate, success_rate_with_jobs, GaParams};
    pub use crate::generator::{generate_nd, generate_nd_traced, roulette_wheel};
    pub use crate::genotype::{neighbors, Genotype};
    pub use crate::landscape::{Evaluate, Landscape};
    pub use crate::netfit::{assign_trap, trap, window_distribution, TrapParams};
    pub use crate::network::{extract_networks, NetworkPartition, NeutralNetwork};
    pub use crate::reference::{nk_family, royal_road, technological, NkVariant};
}
