//! Classic neutral-landscape families used as baselines: Royal Road, NK and
//! its neutral variants NKp and NKq, and Technological landscapes.

use rand::Rng;

use crate::error::{Error, Result};
use crate::genotype::Genotype;
use crate::landscape::{Landscape, MAX_BITS};

/// Royal Road over `n_blocks * block_size` bits: the fitness of a genotype
/// is the number of contiguous blocks entirely set to 1.
pub fn royal_road(n_bits: u32, n_blocks: u32, block_size: u32) -> Result<Landscape> {
    if n_blocks == 0 || block_size == 0 || n_blocks * block_size != n_bits {
        return Err(Error::invalid(format!(
            "royal road needs n_bits = n_blocks * block_size, got {n_bits} != {n_blocks} * {block_size}"
        )));
    }
    if n_bits > MAX_BITS {
        return Err(Error::BitsOutOfRange {
            n_bits,
            min: 1,
            max: MAX_BITS,
        });
    }
    let masks: Vec<u64> = (0..n_blocks)
        .map(|j| ((1u64 << block_size) - 1) << (j * block_size))
        .collect();
    let fitness = (0..1u64 << n_bits)
        .map(|g| masks.iter().filter(|&&m| g & m == m).count() as f64)
        .collect();
    Landscape::new(n_bits, fitness)
}

/// Which NK component-value scheme to use.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NkVariant {
    /// Component values uniform in `[0,1)`.
    Plain,
    /// Each component value is 0 with probability `p`, else uniform `[0,1)`.
    P(f64),
    /// Component values uniform over the integers `{0, .., q-1}`.
    Q(u32),
}

impl NkVariant {
    fn validate(&self) -> Result<()> {
        match *self {
            NkVariant::Plain => Ok(()),
            NkVariant::P(p) if (0.0..=1.0).contains(&p) => Ok(()),
            NkVariant::P(p) => Err(Error::invalid(format!("NKp probability {p} not in [0,1]"))),
            NkVariant::Q(q) if q >= 2 => Ok(()),
            NkVariant::Q(q) => Err(Error::invalid(format!("NKq level count {q} must be >= 2"))),
        }
    }
}

/// The tables defining an NK fitness function: per locus, K epistatic
/// partners and a component table over the 2^(K+1) values of (own bit,
/// partner bits).
#[derive(Clone, Debug)]
pub struct NkTables {
    n_bits: u32,
    k: u32,
    partners: Vec<Vec<u32>>,
    component_values: Vec<Vec<f64>>,
}

impl NkTables {
    /// Draws random tables: partner sets uniform among the K-subsets of the
    /// other loci, component values per `variant`.
    pub fn random(n_bits: u32, k: u32, variant: NkVariant, rng: &mut impl Rng) -> Result<Self> {
        if n_bits < 1 || n_bits > MAX_BITS {
            return Err(Error::BitsOutOfRange {
                n_bits,
                min: 1,
                max: MAX_BITS,
            });
        }
        if k >= n_bits {
            return Err(Error::invalid(format!(
                "epistasis K={k} must be below the bit count {n_bits}"
            )));
        }
        variant.validate()?;

        let mut partners = Vec::with_capacity(n_bits as usize);
        for i in 0..n_bits {
            let mut others: Vec<u32> = (0..n_bits).filter(|&j| j != i).collect();
            for slot in 0..k as usize {
                let j = rng.random_range(slot..others.len());
                others.swap(slot, j);
            }
            let mut chosen = others[..k as usize].to_vec();
            chosen.sort_unstable();
            partners.push(chosen);
        }

        let table_size = 1usize << (k + 1);
        let component_values = (0..n_bits)
            .map(|_| {
                (0..table_size)
                    .map(|_| match variant {
                        NkVariant::Plain => rng.random::<f64>(),
                        NkVariant::P(p) => {
                            if rng.random::<f64>() < p {
                                0.0
                            } else {
                                rng.random::<f64>()
                            }
                        }
                        NkVariant::Q(q) => rng.random_range(0..q) as f64,
                    })
                    .collect()
            })
            .collect();

        Ok(NkTables {
            n_bits,
            k,
            partners,
            component_values,
        })
    }

    pub fn n_bits(&self) -> u32 {
        self.n_bits
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Average of the N fitness components. Component `i` is indexed by the
    /// bit at locus `i` (index bit 0) followed by the partner bits in
    /// ascending locus order.
    pub fn evaluate(&self, g: Genotype) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.n_bits as usize {
            let mut idx = g.bit(i as u32) as usize;
            for (slot, &p) in self.partners[i].iter().enumerate() {
                idx |= (g.bit(p) as usize) << (slot + 1);
            }
            sum += self.component_values[i][idx];
        }
        sum / self.n_bits as f64
    }

    /// Exhaustive evaluation over the whole space.
    pub fn to_landscape(&self) -> Result<Landscape> {
        let fitness = (0..1u64 << self.n_bits)
            .map(|g| self.evaluate(Genotype(g)))
            .collect();
        Landscape::new(self.n_bits, fitness)
    }
}

/// An NK-family landscape with freshly drawn random tables.
pub fn nk_family(
    n_bits: u32,
    k: u32,
    variant: NkVariant,
    rng: &mut impl Rng,
) -> Result<Landscape> {
    NkTables::random(n_bits, k, variant, rng)?.to_landscape()
}

/// A Technological landscape: plain NK fitness quantized to `m_levels`
/// values, `floor(f * M) / M`.
pub fn technological(n_bits: u32, k: u32, m_levels: u32, rng: &mut impl Rng) -> Result<Landscape> {
    if m_levels < 1 {
        return Err(Error::invalid("M must be at least 1"));
    }
    let tables = NkTables::random(n_bits, k, NkVariant::Plain, rng)?;
    let m = m_levels as f64;
    let top = (m_levels - 1) as f64 / m;
    let fitness = (0..1u64 << n_bits)
        .map(|g| ((tables.evaluate(Genotype(g)) * m).floor() / m).min(top))
        .collect();
    Landscape::new(n_bits, fitness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn royal_road_extremes() {
        let l = royal_road(16, 4, 4).unwrap();
        assert_eq!(l.fitness(Genotype(0xFFFF)), 4.0);
        assert_eq!(l.fitness(Genotype(0)), 0.0);
        assert_eq!(l.fitness(Genotype(0x000F)), 1.0);
    }

    #[test]
    fn royal_road_16_4_4_moments() {
        let (mean, std) = royal_road(16, 4, 4)
            .unwrap()
            .degree_distribution()
            .stats()
            .unwrap();
        assert!((mean - 14.0).abs() < 1e-9, "mean {mean}");
        assert!((std - 2.0).abs() < 1e-9, "std {std}");
    }

    #[test]
    fn royal_road_dimension_mismatch() {
        assert!(royal_road(16, 3, 4).is_err());
    }

    #[test]
    fn nkp_with_p_one_is_flat_zero() {
        let l = nk_family(8, 3, NkVariant::P(1.0), &mut rng(60)).unwrap();
        assert!(l.values().iter().all(|&v| v == 0.0));
        assert_eq!(l.degree_distribution().weights()[8], 1.0);
    }

    #[test]
    fn nkq_fitness_lies_on_the_component_grid() {
        let l = nk_family(8, 2, NkVariant::Q(3), &mut rng(61)).unwrap();
        for &v in l.values() {
            let scaled = v * 8.0;
            assert!((scaled - scaled.round()).abs() < 1e-9);
        }
    }

    #[test]
    fn nk_same_seed_reproduces() {
        let a = nk_family(8, 3, NkVariant::Plain, &mut rng(62)).unwrap();
        let b = nk_family(8, 3, NkVariant::Plain, &mut rng(62)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn nk_k0_fitness_is_additive() {
        // with K=0 every locus contributes independently
        let tables = NkTables::random(6, 0, NkVariant::Plain, &mut rng(63)).unwrap();
        let l = tables.to_landscape().unwrap();
        let n = 6.0;
        for g in [0b000001u64, 0b001010, 0b110011] {
            let direct = l.fitness(Genotype(g));
            let from_parts: f64 = (0..6)
                .map(|i| {
                    let bit = (g >> i) & 1;
                    tables.component_values[i as usize][bit as usize]
                })
                .sum();
            assert!((direct - from_parts / n).abs() < 1e-12);
        }
    }

    #[test]
    fn technological_at_most_m_values() {
        let l = technological(8, 3, 5, &mut rng(64)).unwrap();
        let mut vals: Vec<u64> = l.values().iter().map(|v| v.to_bits()).collect();
        vals.sort_unstable();
        vals.dedup();
        assert!(vals.len() <= 5);
    }

    #[test]
    fn technological_single_level_is_flat() {
        let l = technological(6, 2, 1, &mut rng(65)).unwrap();
        assert!(l.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn partner_sets_are_valid() {
        let t = NkTables::random(10, 4, NkVariant::Plain, &mut rng(66)).unwrap();
        for (i, ps) in t.partners.iter().enumerate() {
            assert_eq!(ps.len(), 4);
            let mut sorted = ps.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), 4);
            assert!(!ps.contains(&(i as u32)));
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(nk_family(8, 8, NkVariant::Plain, &mut rng(67)).is_err());
        assert!(nk_family(8, 2, NkVariant::P(1.5), &mut rng(67)).is_err());
        assert!(nk_family(8, 2, NkVariant::Q(1), &mut rng(67)).is_err());
        assert!(technological(8, 2, 0, &mut rng(67)).is_err());
    }
}
