//! Property tests for the algebraic invariants.

mod common;

use ndscape::extension::{convolve, extend};
use ndscape::io::{read_ndl, write_ndl};
use ndscape::{extract_networks, DegreeDistribution, Genotype, Landscape};
use proptest::prelude::*;

fn weights(len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.0f64..1.0, len)
}

fn normalized(len: usize) -> impl Strategy<Value = DegreeDistribution> {
    weights(len).prop_filter_map("zero mass", |w| {
        let sum: f64 = w.iter().sum();
        if sum < 1e-3 {
            return None;
        }
        Some(DegreeDistribution::new(w.iter().map(|x| x / sum).collect()).unwrap())
    })
}

fn small_landscape() -> impl Strategy<Value = Landscape> {
    (3u32..=7, any::<u64>(), 1usize..6).prop_map(|(n, seed, levels)| {
        common::quantized_landscape(n, levels, seed)
    })
}

proptest! {
    #[test]
    fn rms_distance_is_a_norm_distance(
        a in weights(9), b in weights(9), c in weights(9)
    ) {
        let da = DegreeDistribution::new(a).unwrap();
        let db = DegreeDistribution::new(b).unwrap();
        let dc = DegreeDistribution::new(c).unwrap();
        let ab = da.rms_distance(&db).unwrap();
        let ba = db.rms_distance(&da).unwrap();
        let ac = da.rms_distance(&dc).unwrap();
        let cb = dc.rms_distance(&db).unwrap();
        prop_assert_eq!(ab, ba);
        prop_assert!(ab >= 0.0);
        prop_assert!(ab <= ac + cb + 1e-12);
        prop_assert_eq!(da.rms_distance(&da).unwrap(), 0.0);
    }

    #[test]
    fn convolution_moment_laws(d1 in normalized(7), d2 in normalized(9)) {
        let c = convolve(&d1, &d2).unwrap();
        prop_assert_eq!(c.len(), d1.len() + d2.len() - 1);
        let (m1, s1) = d1.stats().unwrap();
        let (m2, s2) = d2.stats().unwrap();
        let (m, s) = c.stats().unwrap();
        prop_assert!((m - (m1 + m2)).abs() < 1e-12);
        prop_assert!((s * s - (s1 * s1 + s2 * s2)).abs() < 1e-12);
    }

    #[test]
    fn networks_partition_the_space(l in small_landscape()) {
        let nets = extract_networks(&l);
        let total: usize = nets.iter().map(|nn| nn.size()).sum();
        prop_assert_eq!(total, l.size());
        let mut seen = vec![false; l.size()];
        for nn in &nets {
            for g in nn.members() {
                prop_assert!(!seen[g.index()], "genotype in two networks");
                seen[g.index()] = true;
                prop_assert_eq!(l.fitness(*g), nn.fitness());
            }
        }
    }

    #[test]
    fn degree_sum_is_even(l in small_landscape()) {
        let total: u32 = l.genotypes().map(|g| l.neutral_degree(g)).sum();
        prop_assert_eq!(total % 2, 0);
    }

    #[test]
    fn ndl_round_trips_exactly(l in small_landscape()) {
        let mut buf = Vec::new();
        write_ndl(&l, &mut buf).unwrap();
        prop_assert_eq!(read_ndl(&buf[..], "prop").unwrap(), l);
    }

    #[test]
    fn extended_degrees_split_by_slice(
        a in small_landscape(), b in small_landscape()
    ) {
        // a genotype's neutral degree in the extension is the sum of its
        // slices' degrees in the components
        let ext = extend(a.clone(), b.clone()).unwrap();
        if ext.total_bits() > 12 {
            return Ok(());
        }
        let flat = ext.flatten().unwrap();
        let low_mask = (1u64 << a.n_bits()) - 1;
        for g in flat.genotypes() {
            let low = Genotype(g.0 & low_mask);
            let high = Genotype(g.0 >> a.n_bits());
            prop_assert_eq!(
                flat.neutral_degree(g),
                a.neutral_degree(low) + b.neutral_degree(high)
            );
        }
    }
}
