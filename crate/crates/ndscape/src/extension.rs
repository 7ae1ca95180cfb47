//! Additive extension: concatenate component landscapes into a product
//! search space with summed fitness and single-component moves.
//!
//! The extended landscape is never materialized; its exact neutral-degree
//! distribution is the convolution product of the component distributions,
//! so spaces far beyond exhaustive storage keep a known distribution.

use crate::distribution::DegreeDistribution;
use crate::error::{Error, Result};
use crate::genotype::Genotype;
use crate::landscape::{Evaluate, Landscape};

/// Genotypes are stored in a `u64`, which caps the concatenated width.
pub const MAX_TOTAL_BITS: u32 = 64;

/// Widest extended landscape [`ExtendedLandscape::flatten`] will materialize.
pub const MAX_FLATTEN_BITS: u32 = 20;

/// Convolution product of two normalized degree distributions:
/// `D[n] = Σ_i D1[i] · D2[n-i]`, over degrees `0 ..= max1 + max2`.
///
/// The mean adds and the variance adds.
pub fn convolve(
    d1: &DegreeDistribution,
    d2: &DegreeDistribution,
) -> Result<DegreeDistribution> {
    d1.require_normalized()?;
    d2.require_normalized()?;
    let a = d1.weights();
    let b = d2.weights();
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &wa) in a.iter().enumerate() {
        if wa == 0.0 {
            continue;
        }
        for (j, &wb) in b.iter().enumerate() {
            out[i + j] += wa * wb;
        }
    }
    DegreeDistribution::new(out)
}

/// An ordered concatenation of component landscapes with additive fitness.
///
/// Component 0 occupies the lowest bits of the concatenated genotype, each
/// following component the next `n_bits` above.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtendedLandscape {
    components: Vec<Landscape>,
    offsets: Vec<u32>,
    total_bits: u32,
}

impl ExtendedLandscape {
    pub fn new(components: Vec<Landscape>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::invalid("an extended landscape needs a component"));
        }
        let total: u32 = components.iter().map(|c| c.n_bits()).sum();
        if total > MAX_TOTAL_BITS {
            return Err(Error::invalid(format!(
                "concatenated width {total} exceeds the {MAX_TOTAL_BITS}-bit genotype limit"
            )));
        }
        let mut offsets = Vec::with_capacity(components.len());
        let mut acc = 0;
        for c in &components {
            offsets.push(acc);
            acc += c.n_bits();
        }
        Ok(ExtendedLandscape {
            components,
            offsets,
            total_bits: total,
        })
    }

    pub fn components(&self) -> &[Landscape] {
        &self.components
    }

    pub fn total_bits(&self) -> u32 {
        self.total_bits
    }

    fn slice(&self, g: Genotype, k: usize) -> Genotype {
        let c = &self.components[k];
        let mask = if c.n_bits() == 64 {
            u64::MAX
        } else {
            (1u64 << c.n_bits()) - 1
        };
        Genotype((g.0 >> self.offsets[k]) & mask)
    }

    /// Sum of the component fitness values of the genotype's slices.
    pub fn evaluate(&self, g: Genotype) -> f64 {
        (0..self.components.len())
            .map(|k| self.components[k].fitness(self.slice(g, k)))
            .sum()
    }

    /// Exact neutral-degree distribution: the left fold of [`convolve`] over
    /// the component distributions. Never enumerates the product space.
    pub fn degree_distribution(&self) -> DegreeDistribution {
        let mut acc = self.components[0].degree_distribution();
        for c in &self.components[1..] {
            acc = convolve(&acc, &c.degree_distribution())
                .expect("component distributions are normalized");
        }
        acc
    }

    /// Materializes the concatenation as an exhaustive landscape.
    ///
    /// Only available while the total width stays within
    /// [`MAX_FLATTEN_BITS`]; larger products are the reason extension exists.
    pub fn flatten(&self) -> Result<Landscape> {
        if self.total_bits > MAX_FLATTEN_BITS {
            return Err(Error::invalid(format!(
                "flattening {} bits would materialize 2^{} values (limit {MAX_FLATTEN_BITS} bits)",
                self.total_bits, self.total_bits
            )));
        }
        let fitness = (0..1u64 << self.total_bits)
            .map(|g| self.evaluate(Genotype(g)))
            .collect();
        Landscape::new(self.total_bits, fitness)
    }
}

impl From<Landscape> for ExtendedLandscape {
    fn from(l: Landscape) -> Self {
        let total_bits = l.n_bits();
        ExtendedLandscape {
            components: vec![l],
            offsets: vec![0],
            total_bits,
        }
    }
}

impl Evaluate for ExtendedLandscape {
    fn n_bits(&self) -> u32 {
        self.total_bits
    }

    fn evaluate(&self, g: Genotype) -> f64 {
        ExtendedLandscape::evaluate(self, g)
    }

    fn max_fitness(&self) -> f64 {
        self.components.iter().map(|c| c.max_fitness()).sum()
    }
}

/// Concatenates two landscapes (plain or already extended) into one extended
/// landscape; `b`'s components sit above `a`'s. Associative, and commutative
/// up to the coordinate relabeling.
pub fn extend(
    a: impl Into<ExtendedLandscape>,
    b: impl Into<ExtendedLandscape>,
) -> Result<ExtendedLandscape> {
    let mut components = a.into().components;
    components.extend(b.into().components);
    ExtendedLandscape::new(components)
}
