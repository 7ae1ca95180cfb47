use std::fmt;

/// A point of the search space: an N-bit string stored as an integer index.
///
/// Bit `i` of the integer is the allele at locus `i`, least significant bit
/// first, so genotype `j` is row `j` of an exhaustive fitness table.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Genotype(pub u64);

impl Genotype {
    pub const ZERO: Genotype = Genotype(0);

    #[inline]
    pub fn bit(self, locus: u32) -> bool {
        (self.0 >> locus) & 1 == 1
    }

    /// The genotype with the allele at `locus` flipped.
    #[inline]
    pub fn flip(self, locus: u32) -> Genotype {
        Genotype(self.0 ^ (1u64 << locus))
    }

    #[inline]
    pub fn hamming(self, other: Genotype) -> u32 {
        (self.0 ^ other.0).count_ones()
    }

    /// Number of loci set to 1.
    #[inline]
    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u64> for Genotype {
    fn from(value: u64) -> Self {
        Genotype(value)
    }
}

impl fmt::Debug for Genotype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Genotype({:#b})", self.0)
    }
}

impl fmt::Display for Genotype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The N genotypes at Hamming distance 1 from `g`, ordered by flipped locus.
///
/// Caller contract: `g` must be valid for `n_bits`, i.e. `g.0 < 2^n_bits`.
pub fn neighbors(g: Genotype, n_bits: u32) -> impl Iterator<Item = Genotype> {
    (0..n_bits).map(move |i| g.flip(i))
}
