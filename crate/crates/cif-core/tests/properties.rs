//! Property tests for structural invariants that must hold on arbitrary
//! inputs, not just the curated cases in the unit tests.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cif_core::eval::{auroc, wilcoxon_signed_rank};
use cif_core::features::{compute_feature, FeatureId};
use cif_core::forest::{find_best_split, sample_intervals_and_features};
use cif_core::tsdata::znormalize;

proptest! {
    #[test]
    fn sampled_intervals_stay_in_bounds(
        m in 5usize..300,
        d in 1usize..6,
        k in 1usize..40,
        a in 1usize..26,
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (intervals, features) = sample_intervals_and_features(m, d, k, a, &mut rng);
        prop_assert_eq!(intervals.len(), k);
        prop_assert_eq!(features.len(), a.min(25));
        prop_assert!(
            features.windows(2).all(|w| w[0].index() < w[1].index()),
            "features must be distinct and ascending"
        );
        for interval in intervals {
            prop_assert!(interval.length >= 3);
            prop_assert!(interval.start + interval.length <= m);
            prop_assert!(interval.dimension < d);
        }
    }

    #[test]
    fn every_feature_is_finite_after_sanitisation(
        window in prop::collection::vec(-1e3f64..1e3, 3..60),
    ) {
        for id in FeatureId::all() {
            let value = compute_feature(id, &window);
            prop_assert!(value.is_finite(), "{} produced {value}", id.name());
        }
    }

    #[test]
    fn znormalize_centres_and_scales(
        series in prop::collection::vec(-1e3f64..1e3, 1..100),
    ) {
        let z = znormalize(&series);
        prop_assert_eq!(z.len(), series.len());
        let n = z.len() as f64;
        let mean = z.iter().sum::<f64>() / n;
        prop_assert!(mean.abs() < 1e-9, "mean {mean}");
        let var = z.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
        prop_assert!(
            var.abs() < 1e-9 || (var - 1.0).abs() < 1e-6,
            "variance {var} is neither 0 nor 1"
        );
    }

    #[test]
    fn split_gain_is_positive_and_bounded(
        seed in any::<u64>(),
        n in 2usize..20,
        atts in 1usize..5,
        classes in 2usize..4,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..atts).map(|_| rng.gen_range(-1.0..1.0)).collect())
            .collect();
        let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..classes)).collect();
        let indices: Vec<usize> = (0..n).collect();
        if let Some(split) = find_best_split(&rows, &labels, &indices, classes) {
            prop_assert!(split.gain > 0.0);
            prop_assert!(split.gain <= (classes as f64).log2() + 1e-12);
            prop_assert!(split.attribute < atts);
            prop_assert!(split.margin > 0.0);
        }
    }

    #[test]
    fn auroc_is_rank_invariant_and_bounded(seed in any::<u64>(), n in 2usize..30) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let probabilities: Vec<Vec<f64>> = (0..n)
            .map(|_| {
                let p = rng.gen_range(0.0..1.0);
                vec![1.0 - p, p]
            })
            .collect();
        let truth: Vec<usize> = (0..n).map(|_| rng.gen_range(0..2)).collect();
        let base = auroc(&probabilities, &truth, 2).unwrap();
        prop_assert!((0.0..=1.0).contains(&base));
        // strictly monotone per-column transform preserves every rank
        let transformed: Vec<Vec<f64>> = probabilities
            .iter()
            .map(|row| row.iter().map(|v| (v * 3.0).exp()).collect())
            .collect();
        prop_assert_eq!(base, auroc(&transformed, &truth, 2).unwrap());
    }

    #[test]
    fn wilcoxon_is_symmetric_and_in_unit_interval(seed in any::<u64>(), n in 5usize..25) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..1.0)).collect();
        let b: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..1.0)).collect();
        let p_ab = wilcoxon_signed_rank(&a, &b).unwrap();
        let p_ba = wilcoxon_signed_rank(&b, &a).unwrap();
        prop_assert_eq!(p_ab, p_ba);
        prop_assert!(p_ab > 0.0 && p_ab <= 1.0);
    }
}
