use std::collections::{HashMap, HashSet};

use isoperimetric::exact::{expected_edge_count, expected_vertex_count, matchings_count};
use isoperimetric::pairing::{
    count_subsets_with_signature, enumerate_pairings, min_isoperimetric_exhaustive, replica_rng, sample_pairing,
    sample_pairing_with, sample_simple, Caps, Pairing,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use statrs::distribution::{ChiSquared, ContinuousCDF};

#[test]
fn sampler_is_uniform_over_all_pairings() {
    let samples = 100_000u64;
    let cells = 10_395usize;
    let mut rng = replica_rng(2024, 0);
    let mut counts: HashMap<Vec<usize>, u64> = HashMap::new();
    for _ in 0..samples {
        let p = sample_pairing_with(4, 3, &mut rng).unwrap();
        *counts.entry(p.mates().to_vec()).or_insert(0) += 1;
    }
    assert!(counts.len() <= cells);
    let expected = samples as f64 / cells as f64;
    let observed: f64 = counts.values().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
    let unseen = (cells - counts.len()) as f64 * expected;
    let chi2 = observed + unseen;
    let critical = ChiSquared::new((cells - 1) as f64).unwrap().inverse_cdf(0.999);
    assert!(chi2 < critical, "chi2 = {chi2:.1}, critical = {critical:.1}");
}

#[test]
fn enumeration_is_complete_for_small_point_sets() {
    for (n, d) in [(1, 2), (2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 4), (4, 1), (4, 2), (4, 3), (6, 1), (6, 2), (12, 1)]
    {
        let mut seen = HashSet::new();
        for p in enumerate_pairings(n, d, &Caps::default()).unwrap() {
            let g = p.project();
            assert_eq!(g.regular_degree(), Some(d));
            assert_eq!(g.edges().len(), n * d / 2);
            assert!(seen.insert(p.mates().to_vec()));
        }
        assert_eq!(matchings_count((n * d) as u64).unwrap(), seen.len().into(), "n={n} d={d}");
    }
}

#[test]
fn simple_projections_at_four_cells() {
    // The only simple cubic graph on four labelled vertices is K4; each
    // vertex's three points can be matched to its three neighbours in 3!
    // ways, so 6^4 pairings project to it.
    let simple = enumerate_pairings(4, 3, &Caps::default()).unwrap().filter(|p| p.project().is_simple()).count();
    assert_eq!(simple, 1296);
    let fraction = simple as f64 / 10_395.0;
    assert!((fraction - 0.124675).abs() < 1e-6);
}

#[test]
fn enumeration_mean_matches_closed_form() {
    let pairings: Vec<Pairing> = enumerate_pairings(4, 3, &Caps::default()).unwrap().collect();
    let total = |sn: Option<usize>, yn: usize| -> BigRational {
        let sum: u64 =
            pairings.iter().map(|p| count_subsets_with_signature(p, 2, sn, yn, &Caps::default()).unwrap()).sum();
        BigRational::new(BigInt::from(sum), BigInt::from(pairings.len()))
    };
    assert_eq!(&total(Some(2), 2), expected_vertex_count(4, 3, 2, 2, 2).unwrap().value());
    assert_eq!(&total(None, 2), expected_edge_count(4, 3, 2, 2).unwrap().value());
}

#[test]
fn connected_simple_cubic_graphs_have_positive_edge_expansion() {
    let samples = 10_000u64;
    let (mut connected, mut disconnected, mut rejections) = (0u64, 0u64, 0u64);
    for i in 0..samples {
        let s = sample_simple(14, 3, 31, i, 10_000).unwrap();
        rejections += s.rejections;
        if !s.graph.is_connected() {
            disconnected += 1;
            continue;
        }
        connected += 1;
        let iso = min_isoperimetric_exhaustive(&s.graph, 0.5, &Caps::default()).unwrap();
        assert!(iso.edge.to_f64().unwrap() > 0.0, "sample {i}");
        assert!(iso.vertex <= iso.edge && iso.edge <= iso.vertex * 3);
    }
    eprintln!("n=14 d=3: {connected} connected, {disconnected} disconnected, {rejections} rejected pairings");
    assert_eq!(connected + disconnected, samples);
    // Simplicity has probability about e^{-2} for cubic pairings.
    let rate = samples as f64 / (samples + rejections) as f64;
    assert!(rate > 0.08 && rate < 0.25, "simple rate {rate}");
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(64) })]

    #[test]
    fn sampled_pairings_are_fixed_point_free_involutions(n in 1usize..40, d in 1usize..8, seed in any::<u64>()) {
        prop_assume!(n * d % 2 == 0);
        let p = sample_pairing(n, d, seed).unwrap();
        for (i, &j) in p.mates().iter().enumerate() {
            prop_assert!(j != i && p.mate(j) == i);
        }
        prop_assert_eq!(p.project().regular_degree(), Some(d));
    }

    #[test]
    fn boundary_inequalities(n in 2usize..30, d in 1usize..7, seed in any::<u64>(), mask in any::<u32>()) {
        prop_assume!(n * d % 2 == 0);
        let g = sample_pairing(n, d, seed).unwrap().project();
        let subset: Vec<usize> = (0..n).filter(|&v| mask >> (v % 32) & 1 == 1).collect();
        let b = g.boundary_summary(&subset).unwrap();
        prop_assert!(b.vertex_boundary <= b.edge_boundary);
        prop_assert!(b.edge_boundary <= d * b.vertex_boundary);
        prop_assert!(b.edge_boundary <= d * b.subset_size);
        prop_assert_eq!(b.vertex_boundary == 0, b.edge_boundary == 0);
        // the complement sees the same cut edges
        let rest: Vec<usize> = (0..n).filter(|v| !subset.contains(v)).collect();
        prop_assert_eq!(g.boundary_summary(&rest).unwrap().edge_boundary, b.edge_boundary);
    }

    #[test]
    fn exhaustive_numbers_respect_boundary_inequality(seed in any::<u64>(), n in 4usize..13) {
        prop_assume!(n % 2 == 0);
        let g = sample_pairing(n, 3, seed).unwrap().project();
        let iso = min_isoperimetric_exhaustive(&g, 0.5, &Caps::default()).unwrap();
        prop_assert!(iso.vertex <= iso.edge);
        prop_assert!(iso.edge <= iso.vertex * 3);
    }
}
