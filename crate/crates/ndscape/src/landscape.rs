use crate::distribution::DegreeDistribution;
use crate::error::{Error, Result};
use crate::genotype::{neighbors, Genotype};

/// Widest landscape this crate will store exhaustively (one `f64` per
/// genotype, so 2^26 values is half a gigabyte).
pub const MAX_BITS: u32 = 26;

/// An exhaustive fitness landscape over N-bit strings under the one-bit-flip
/// neighborhood: `fitness[g]` for every genotype index `g` in `[0, 2^N)`.
///
/// Neutrality is exact: two solutions are neutral neighbours iff their
/// fitness values are bitwise-equal reals. No tolerance is ever applied.
#[derive(Clone, Debug, PartialEq)]
pub struct Landscape {
    n_bits: u32,
    fitness: Vec<f64>,
}

impl Landscape {
    /// Builds a landscape from an exhaustive fitness table.
    ///
    /// The table must hold exactly `2^n_bits` finite values.
    pub fn new(n_bits: u32, fitness: Vec<f64>) -> Result<Self> {
        check_bits(n_bits)?;
        let expected = 1usize << n_bits;
        if fitness.len() != expected {
            return Err(Error::FitnessTableSize {
                n_bits,
                expected,
                got: fitness.len(),
            });
        }
        for (index, &value) in fitness.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFiniteFitness { index, value });
            }
        }
        Ok(Landscape { n_bits, fitness })
    }

    /// The constant landscape: every solution at `value`.
    pub fn flat(n_bits: u32, value: f64) -> Result<Self> {
        check_bits(n_bits)?;
        if !value.is_finite() {
            return Err(Error::NonFiniteFitness { index: 0, value });
        }
        Ok(Landscape {
            n_bits,
            fitness: vec![value; 1 << n_bits],
        })
    }

    pub fn n_bits(&self) -> u32 {
        self.n_bits
    }

    /// Number of solutions, `2^N`.
    pub fn size(&self) -> usize {
        self.fitness.len()
    }

    #[inline]
    pub fn fitness(&self, g: Genotype) -> f64 {
        self.fitness[g.index()]
    }

    pub fn values(&self) -> &[f64] {
        &self.fitness
    }

    pub fn genotypes(&self) -> impl Iterator<Item = Genotype> {
        (0..self.fitness.len() as u64).map(Genotype)
    }

    pub fn max_fitness(&self) -> f64 {
        self.fitness.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Count of one-bit-flip neighbours of `g` with exactly equal fitness.
    pub fn neutral_degree(&self, g: Genotype) -> u32 {
        let f = self.fitness[g.index()];
        neighbors(g, self.n_bits)
            .filter(|h| self.fitness[h.index()] == f)
            .count() as u32
    }

    /// Histogram of neutral degrees over the whole space, indexed by degree.
    pub fn degree_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.n_bits as usize + 1];
        for g in self.genotypes() {
            counts[self.neutral_degree(g) as usize] += 1;
        }
        counts
    }

    /// Normalized neutral-degree distribution of the landscape.
    pub fn degree_distribution(&self) -> DegreeDistribution {
        DegreeDistribution::from_counts(&self.degree_counts())
    }
}

fn check_bits(n_bits: u32) -> Result<()> {
    if (1..=MAX_BITS).contains(&n_bits) {
        Ok(())
    } else {
        Err(Error::BitsOutOfRange {
            n_bits,
            min: 1,
            max: MAX_BITS,
        })
    }
}

/// Anything a genetic algorithm can search: a bit width, a fitness value per
/// genotype and the known global maximum.
pub trait Evaluate {
    fn n_bits(&self) -> u32;
    fn evaluate(&self, g: Genotype) -> f64;
    /// The landscape maximum; reaching it is the GA success criterion.
    fn max_fitness(&self) -> f64;
}

impl Evaluate for Landscape {
    fn n_bits(&self) -> u32 {
        self.n_bits
    }

    fn evaluate(&self, g: Genotype) -> f64 {
        self.fitness(g)
    }

    fn max_fitness(&self) -> f64 {
        Landscape::max_fitness(self)
    }
}
