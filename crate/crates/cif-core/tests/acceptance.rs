//! Release acceptance suite. Each test covers one numbered criterion and
//! prints a `criterion NN PASS` line with the measured quantities (visible
//! with `--nocapture`); the test name itself carries the number so the
//! standard harness output doubles as the pass/fail report.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use cif_core::eval::{
    accuracy, one_nn_predict, run_experiment_datasets, wilcoxon_signed_rank, ExperimentConfig,
};
use cif_core::features::{compute_raw, FeatureId};
use cif_core::forest::{
    find_best_split, fit, oob_estimate, sample_intervals_and_features, CIFConfig, Mode,
    TrainedTree, TreeNode,
};
use cif_core::interpret::temporal_importance;
use cif_core::synth;
use cif_core::tsdata::{parse_ts_file, TimeSeriesDataset};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn load_pair(name: &str) -> (TimeSeriesDataset, TimeSeriesDataset) {
    let dir = data_dir();
    let train = parse_ts_file(&dir.join(format!("{name}_TRAIN.ts")), false).unwrap_or_else(|e| {
        panic!("{name} train split missing (generate with the make_synth example): {e}")
    });
    let test = parse_ts_file(&dir.join(format!("{name}_TEST.ts")), false).unwrap();
    (train, test)
}

fn argmax(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate().skip(1) {
        if v > values[best] {
            best = i;
        }
    }
    best
}

fn budget(criterion: u32, started: Instant, limit_s: f64) {
    let elapsed = started.elapsed().as_secs_f64();
    assert!(
        elapsed < limit_s,
        "criterion {criterion} exceeded its {limit_s} s budget: {elapsed:.1} s"
    );
}

// --- criterion 1: feature values match the reference implementation -------

#[derive(Deserialize)]
struct OracleFile {
    series: Vec<OracleEntry>,
}

#[derive(Deserialize)]
struct OracleEntry {
    name: String,
    values: Vec<f64>,
    features: BTreeMap<String, f64>,
}

#[test]
fn criterion_01_feature_oracle() {
    let started = Instant::now();
    let mut entries = Vec::new();
    for file in ["catch22_reference_vectors.json", "catch22_oracle.json"] {
        let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("tests/data")
            .join(file);
        let text = std::fs::read_to_string(&path).unwrap();
        entries.extend(serde_json::from_str::<OracleFile>(&text).unwrap().series);
    }
    for len in [50usize, 100, 500] {
        let n = entries.iter().filter(|e| e.values.len() == len).count();
        assert!(
            n >= 20,
            "need >= 20 oracle series of length {len}, have {n}"
        );
    }
    let mut checked = 0usize;
    for entry in &entries {
        for (name, &expected) in &entry.features {
            let id = FeatureId::from_name(name).expect("oracle names are canonical");
            let actual = compute_raw(id, &entry.values);
            let tolerance = f64::max(1e-8, 1e-6 * expected.abs());
            assert!(
                (actual - expected).abs() <= tolerance,
                "{} / {name}: got {actual:.12e}, want {expected:.12e}",
                entry.name
            );
            checked += 1;
        }
    }
    budget(1, started, 60.0);
    println!(
        "criterion 01 PASS: {checked} feature values over {} series within 1e-6 relative",
        entries.len()
    );
}

// --- criterion 2: split search equals brute-force enumeration -------------

fn entropy(counts: &[usize], total: usize) -> f64 {
    counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / total as f64;
            -p * p.log2()
        })
        .sum()
}

fn gain_of(rows: &[Vec<f64>], labels: &[usize], n_classes: usize, att: usize, thr: f64) -> f64 {
    let n = rows.len();
    let mut parent = vec![0usize; n_classes];
    let mut left = vec![0usize; n_classes];
    let mut n_left = 0usize;
    for (row, &label) in rows.iter().zip(labels) {
        parent[label] += 1;
        if row[att] <= thr {
            left[label] += 1;
            n_left += 1;
        }
    }
    let right: Vec<usize> = parent.iter().zip(&left).map(|(&p, &l)| p - l).collect();
    let n_right = n - n_left;
    entropy(&parent, n)
        - (n_left as f64 / n as f64) * entropy(&left, n_left)
        - (n_right as f64 / n as f64) * entropy(&right, n_right)
}

#[test]
fn criterion_02_split_gain_brute_force() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for case in 0..100 {
        let n = rng.gen_range(4..=16);
        let atts = rng.gen_range(1..=4);
        let n_classes = rng.gen_range(2..=3);
        // quantise half the cases so exact ties between values are common
        let quant = if case % 2 == 0 { Some(4.0) } else { None };
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|_| {
                (0..atts)
                    .map(|_| {
                        let v: f64 = rng.gen_range(-2.0..2.0);
                        match quant {
                            Some(q) => (v * q).round() / q,
                            None => v,
                        }
                    })
                    .collect()
            })
            .collect();
        let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n_classes)).collect();
        let indices: Vec<usize> = (0..n).collect();

        // brute force: every midpoint between consecutive distinct values
        let mut best_gain = 0.0_f64;
        for att in 0..atts {
            let mut values: Vec<f64> = rows.iter().map(|r| r[att]).collect();
            values.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for w in values.windows(2) {
                let (lo, hi) = (w[0], w[1]);
                if lo >= hi {
                    continue;
                }
                let thr = lo + (hi - lo) / 2.0;
                if thr >= hi {
                    continue;
                }
                best_gain = best_gain.max(gain_of(&rows, &labels, n_classes, att, thr));
            }
        }

        let split = find_best_split(&rows, &labels, &indices, n_classes);
        match split {
            None => assert!(
                best_gain <= 0.0,
                "case {case}: search found nothing but brute force attains {best_gain}"
            ),
            Some(s) => {
                assert!(
                    (s.gain - best_gain).abs() <= 1e-12,
                    "case {case}: search gain {} vs brute force {best_gain}",
                    s.gain
                );
                let direct = gain_of(&rows, &labels, n_classes, s.attribute, s.threshold);
                assert!(
                    (direct - s.gain).abs() <= 1e-12,
                    "case {case}: reported gain {} but threshold re-evaluates to {direct}",
                    s.gain
                );
            }
        }
    }
    budget(2, started, 60.0);
    println!("criterion 02 PASS: 100 random nodes match exhaustive enumeration within 1e-12");
}

// --- criterion 3: CIF and Hybrid beat TSF on the bundled datasets ---------

#[test]
fn criterion_03_mode_ordering_over_resamples() {
    let started = Instant::now();
    let config_for = |mode: Mode, name: &str| ExperimentConfig {
        classifier: CIFConfig {
            num_trees: 100,
            mode,
            ..CIFConfig::default()
        },
        classifier_name: name.to_string(),
        folds: 5,
        train_estimate: false,
    };
    let mut means = BTreeMap::new();
    for (mode, name) in [
        (Mode::Cif, "cif"),
        (Mode::Tsf, "tsf"),
        (Mode::Hybrid, "hybrid"),
    ] {
        let mut scores = Vec::new();
        for dataset in ["NoiseVsAr1", "SineWavelength", "GaussVsLaplace"] {
            let (train, test) = load_pair(dataset);
            let results = run_experiment_datasets(&train, &test, &config_for(mode, name)).unwrap();
            scores.extend(results.into_iter().map(|r| r.accuracy));
        }
        assert_eq!(scores.len(), 15);
        means.insert(name, scores.iter().sum::<f64>() / scores.len() as f64);
    }
    assert!(
        means["cif"] >= means["tsf"],
        "cif mean {} below tsf mean {}",
        means["cif"],
        means["tsf"]
    );
    assert!(
        means["hybrid"] >= means["tsf"],
        "hybrid mean {} below tsf mean {}",
        means["hybrid"],
        means["tsf"]
    );
    budget(3, started, 900.0);
    println!(
        "criterion 03 PASS: mean accuracy cif {:.4} >= tsf {:.4}, hybrid {:.4} >= tsf, over 3 datasets x 5 resamples",
        means["cif"], means["tsf"], means["hybrid"]
    );
}

// --- criterion 4: CIF is no worse than 1-NN minus 0.02 --------------------

#[test]
fn criterion_04_beats_one_nn_baseline() {
    let started = Instant::now();
    let config = CIFConfig {
        num_trees: 200,
        ..CIFConfig::default()
    };
    let mut report = Vec::new();
    for dataset in ["NoiseVsAr1", "SineWavelength", "GaussVsLaplace"] {
        let (train, test) = load_pair(dataset);
        let truth = test.labels().unwrap();

        let model = fit(&train, &config).unwrap();
        let probabilities = model.predict_proba_dataset(&test).unwrap();
        let predictions: Vec<usize> = probabilities.iter().map(|row| argmax(row)).collect();
        let cif_acc = accuracy(&predictions, &truth).unwrap();

        let nn = one_nn_predict(&train, &test).unwrap();
        let nn_acc = accuracy(&nn, &truth).unwrap();
        assert!(
            cif_acc >= nn_acc - 0.02,
            "{dataset}: cif {cif_acc:.4} below 1-NN {nn_acc:.4} - 0.02"
        );
        report.push(format!("{dataset} cif {cif_acc:.3} vs 1nn {nn_acc:.3}"));
    }
    budget(4, started, 600.0);
    println!("criterion 04 PASS: {}", report.join("; "));
}

// --- criterion 5: bit-equal predictions for any worker count ---------------

#[cfg(feature = "parallel")]
fn on_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(f)
}

#[cfg(not(feature = "parallel"))]
fn on_pool<T>(_threads: usize, f: impl FnOnce() -> T) -> T {
    f()
}

#[test]
fn criterion_05_thread_count_determinism() {
    let started = Instant::now();
    let (train, test) = load_pair("NoiseVsAr1");
    let config = CIFConfig {
        num_trees: 24,
        seed: 5,
        ..CIFConfig::default()
    };
    let run = || {
        let model = fit(&train, &config).unwrap();
        let probabilities = model.predict_proba_dataset(&test).unwrap();
        (model, probabilities)
    };
    let (model_1, proba_1) = on_pool(1, run);
    let (model_8, proba_8) = on_pool(8, run);
    let (model_again, proba_again) = run();
    assert_eq!(model_1, model_8, "models differ across worker counts");
    assert_eq!(model_1, model_again, "models differ across runs");
    assert_eq!(
        proba_1, proba_8,
        "probability vectors not bit-equal across worker counts"
    );
    assert_eq!(
        proba_1, proba_again,
        "probability vectors not bit-equal across runs"
    );
    budget(5, started, 300.0);
    println!(
        "criterion 05 PASS: {} probability rows bit-equal across runs and 1 vs 8 workers",
        proba_1.len()
    );
}

// --- criterion 6: out-of-bag estimation ------------------------------------

#[test]
fn criterion_06_oob_estimate() {
    let started = Instant::now();
    let train = synth::planted_interval_mean(60, 30, 1, 8..22, 2.0, 17);
    let config = CIFConfig {
        num_trees: 60,
        seed: 9,
        ..CIFConfig::default()
    };
    let (estimate, full_model) = oob_estimate(&train, &config).unwrap();
    let plain = fit(&train, &config).unwrap();
    assert_eq!(
        full_model, plain,
        "full model must equal a plain fit on the same seed"
    );

    let truth = train.labels().unwrap();
    let predictions: Vec<usize> = train
        .instances
        .iter()
        .map(|i| full_model.predict(i).unwrap())
        .collect();
    let train_acc = accuracy(&predictions, &truth).unwrap();
    assert!(
        estimate >= 0.9,
        "separable planted data should give OOB >= 0.9, got {estimate}"
    );
    assert!(
        estimate <= train_acc,
        "OOB {estimate} exceeds full-data training accuracy {train_acc}"
    );
    budget(6, started, 120.0);
    println!("criterion 06 PASS: OOB {estimate:.4} <= train accuracy {train_acc:.4}, full model == plain fit");
}

// --- criterion 7: interval sampling distribution ---------------------------

#[test]
fn criterion_07_interval_sampling_bounds() {
    let started = Instant::now();
    for &(m, d) in &[(20usize, 1usize), (100, 3), (500, 6)] {
        let mut seen_dims = vec![false; d];
        let mut total = 0usize;
        for call in 0..100u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 * m as u64 + call);
            let (intervals, features) = sample_intervals_and_features(m, d, 100, 8, &mut rng);
            assert_eq!(features.len(), 8);
            assert!(features.windows(2).all(|w| w[0].index() < w[1].index()));
            for interval in intervals {
                assert!(interval.length >= 3, "length {} below 3", interval.length);
                assert!(
                    interval.start + interval.length <= m,
                    "interval [{}, {}) escapes series of length {m}",
                    interval.start,
                    interval.start + interval.length
                );
                assert!(interval.dimension < d);
                seen_dims[interval.dimension] = true;
                total += 1;
            }
        }
        assert_eq!(total, 10_000);
        if d > 1 {
            assert!(
                seen_dims.iter().all(|&s| s),
                "some dimension never sampled at (m={m}, d={d})"
            );
        }
    }
    budget(7, started, 10.0);
    println!("criterion 07 PASS: 10000 intervals in bounds at each of (20,1), (100,3), (500,6)");
}

// --- criterion 8: temporal importance curves --------------------------------

fn mass_walk(node: &TreeNode, tree: &TrainedTree) -> f64 {
    match node {
        TreeNode::Leaf { .. } => 0.0,
        TreeNode::Branch {
            attribute_index,
            gain,
            left,
            right,
            ..
        } => {
            let interval = &tree.intervals[attribute_index / tree.features.len()];
            gain * interval.length as f64 + mass_walk(left, tree) + mass_walk(right, tree)
        }
    }
}

#[test]
fn criterion_08_tic_mass_and_planted_window() {
    let started = Instant::now();

    let train = synth::planted_interval_mean(30, 40, 1, 12..28, 3.0, 23);
    let config = CIFConfig {
        num_trees: 30,
        seed: 23,
        ..CIFConfig::default()
    };
    let model = fit(&train, &config).unwrap();
    let curves = temporal_importance(&model);
    let oracle: f64 = model
        .trees
        .iter()
        .map(|tree| mass_walk(&tree.root, tree))
        .sum();
    let mass = curves.mass();
    assert!(
        (mass - oracle).abs() <= 1e-9 * oracle.max(1.0),
        "curve mass {mass} vs node-walk oracle {oracle}"
    );

    let mut hits = 0;
    for seed in 0..10u64 {
        let data = synth::planted_interval_mean(30, 40, 1, 12..28, 3.0, 100 + seed);
        let cfg = CIFConfig {
            num_trees: 50,
            seed,
            ..CIFConfig::default()
        };
        let curves = temporal_importance(&fit(&data, &cfg).unwrap());
        let peak = curves
            .mean_curve
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .unwrap()
            .0;
        if (12..28).contains(&peak) {
            hits += 1;
        }
    }
    assert!(
        hits >= 9,
        "mean-curve peak inside the planted window only {hits}/10 times"
    );
    budget(8, started, 300.0);
    println!(
        "criterion 08 PASS: mass {mass:.3} == node-walk oracle (1e-9 rel); planted-window peak {hits}/10 seeds"
    );
}

// --- criterion 9: time-contracted training ----------------------------------

#[test]
fn criterion_09_contract_training() {
    let started = Instant::now();
    let train = synth::white_noise_vs_ar1(160, 1400, 0.8, 4242);
    let config = CIFConfig {
        contract_minutes: Some(1.0),
        ..CIFConfig::default()
    };
    let fit_start = Instant::now();
    let model = fit(&train, &config).unwrap();
    let elapsed = fit_start.elapsed().as_secs_f64();
    let built = model.trees.len();

    assert!(built >= 1, "contract must keep at least one tree");
    assert!(
        built < 500,
        "contract never bound: all 500 trees built in {elapsed:.0} s"
    );
    assert!(
        elapsed <= 120.0,
        "contracted build took {elapsed:.1} s, beyond 60 s + one tree"
    );
    let per_tree = elapsed / built as f64;
    assert!(
        per_tree * 500.0 > 300.0,
        "full 500-tree build would only take {:.0} s; dataset too easy to exercise the contract",
        per_tree * 500.0
    );
    let probabilities = model.predict_proba(&train.instances[0]).unwrap();
    assert!((probabilities.iter().sum::<f64>() - 1.0).abs() < 1e-9);
    budget(9, started, 180.0);
    println!(
        "criterion 09 PASS: {built} trees in {elapsed:.1} s (projected full build {:.0} s > 300 s)",
        per_tree * 500.0
    );
}

// --- criterion 10: Wilcoxon signed-rank against exact enumeration -----------

fn wilcoxon_oracle(a: &[f64], b: &[f64]) -> f64 {
    let diffs: Vec<f64> = a
        .iter()
        .zip(b)
        .map(|(&x, &y)| x - y)
        .filter(|&d| d != 0.0)
        .collect();
    let n = diffs.len();
    if n == 0 {
        return 1.0;
    }
    // independent midranks: #smaller + (ties + 1) / 2
    let abs: Vec<f64> = diffs.iter().map(|d| d.abs()).collect();
    let ranks: Vec<f64> = abs
        .iter()
        .map(|&x| {
            let smaller = abs.iter().filter(|&&y| y < x).count() as f64;
            let ties = abs.iter().filter(|&&y| y == x).count() as f64;
            smaller + (ties + 1.0) / 2.0
        })
        .collect();
    let t_plus: f64 = ranks
        .iter()
        .zip(&diffs)
        .filter(|&(_, &d)| d > 0.0)
        .map(|(&r, _)| r)
        .sum();
    let total: f64 = ranks.iter().sum();
    let observed = t_plus.min(total - t_plus);
    let mut at_most = 0u64;
    for mask in 0u64..1 << n {
        let t: f64 = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| ranks[i])
            .sum();
        if t <= observed + 1e-12 {
            at_most += 1;
        }
    }
    (2.0 * at_most as f64 / (1u64 << n) as f64).min(1.0)
}

#[test]
fn criterion_10_wilcoxon_exact_oracle() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut trials = 0;
    while trials < 200 {
        let n = rng.gen_range(5..=12);
        // quantised scores make ties and zero differences common
        let quantised = |rng: &mut ChaCha8Rng| (rng.gen_range(0.0_f64..1.0) * 20.0).round() / 20.0;
        let a: Vec<f64> = (0..n).map(|_| quantised(&mut rng)).collect();
        let b: Vec<f64> = (0..n).map(|_| quantised(&mut rng)).collect();
        let nonzero = a.iter().zip(&b).filter(|(x, y)| x != y).count();
        if nonzero < 5 {
            continue;
        }
        let p = wilcoxon_signed_rank(&a, &b).unwrap();
        let oracle = wilcoxon_oracle(&a, &b);
        assert!(
            (p - oracle).abs() <= 1e-12,
            "trial {trials}: p {p} vs enumeration {oracle} for a={a:?} b={b:?}"
        );
        trials += 1;
    }
    let same = [0.3, 0.5, 0.2, 0.9, 0.4, 0.6];
    assert_eq!(wilcoxon_signed_rank(&same, &same).unwrap(), 1.0);
    budget(10, started, 30.0);
    println!("criterion 10 PASS: 200 exact p-values match full enumeration within 1e-12; p(a,a)=1");
}

// --- criterion 11: multivariate forests and per-dimension importance --------

#[test]
fn criterion_11_multivariate_informative_dimension() {
    let started = Instant::now();
    // class signal planted only on dimension 1 of 2
    let train = synth::planted_interval_mean(40, 30, 2, 8..22, 2.5, 77);
    let test = synth::planted_interval_mean(40, 30, 2, 8..22, 2.5, 78);
    let config = CIFConfig {
        num_trees: 80,
        ..CIFConfig::default()
    };
    let model = fit(&train, &config).unwrap();
    let truth = test.labels().unwrap();
    let predictions: Vec<usize> = test
        .instances
        .iter()
        .map(|i| model.predict(i).unwrap())
        .collect();
    let acc = accuracy(&predictions, &truth).unwrap();
    assert!(acc >= 0.95, "multivariate accuracy {acc} below 0.95");

    let curves = temporal_importance(&model);
    let informative = curves.dimension_mass(1);
    let total = curves.mass();
    assert!(
        informative >= 0.7 * total,
        "dimension 1 carries only {informative:.3} of {total:.3} total importance"
    );
    budget(11, started, 120.0);
    println!(
        "criterion 11 PASS: accuracy {acc:.3}, dimension 1 holds {:.0}% of importance mass",
        100.0 * informative / total
    );
}
