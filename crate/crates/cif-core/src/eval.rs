//! Experiment harness: seeded stratified resamples, classification metrics,
//! pairwise Wilcoxon signed-rank testing with Holm correction, a 1-NN
//! baseline, and CSV reporting.

use std::path::Path;
use std::time::Instant;

use statrs::distribution::{ContinuousCDF, Normal};
use thiserror::Error;

use crate::forest::{fit, oob_estimate, CIFConfig, ForestError};
use crate::tsdata::{
    parse_ts_file, stratified_resample, DataError, ResamplePlan, TimeSeriesDataset,
};

/// Errors raised by metric computations and experiment runs.
#[derive(Debug, Error)]
pub enum EvalError {
    #[error("input vectors have different lengths ({a} vs {b})")]
    LengthMismatch { a: usize, b: usize },
    #[error("metric inputs must be non-empty")]
    Empty,
    #[error("wilcoxon signed-rank needs at least 5 non-zero differences, found {n}")]
    TooFewSamples { n: usize },
    #[error(transparent)]
    Data(#[from] DataError),
    #[error(transparent)]
    Forest(#[from] ForestError),
}

fn check_lengths(a: usize, b: usize) -> Result<(), EvalError> {
    if a != b {
        return Err(EvalError::LengthMismatch { a, b });
    }
    if a == 0 {
        return Err(EvalError::Empty);
    }
    Ok(())
}

/// Fraction of exact matches.
pub fn accuracy(predictions: &[usize], truth: &[usize]) -> Result<f64, EvalError> {
    check_lengths(predictions.len(), truth.len())?;
    let hits = predictions
        .iter()
        .zip(truth)
        .filter(|(p, t)| p == t)
        .count();
    Ok(hits as f64 / truth.len() as f64)
}

/// Mean per-class recall over the classes present in `truth`.
pub fn balanced_accuracy(
    predictions: &[usize],
    truth: &[usize],
    n_classes: usize,
) -> Result<f64, EvalError> {
    check_lengths(predictions.len(), truth.len())?;
    let mut per_class = vec![(0usize, 0usize); n_classes];
    for (&p, &t) in predictions.iter().zip(truth) {
        per_class[t].1 += 1;
        if p == t {
            per_class[t].0 += 1;
        }
    }
    let recalls: Vec<f64> = per_class
        .iter()
        .filter(|(_, total)| *total > 0)
        .map(|&(hit, total)| hit as f64 / total as f64)
        .collect();
    Ok(recalls.iter().sum::<f64>() / recalls.len() as f64)
}

/// Macro-averaged F1 over all `n_classes` dataset classes, with 0/0 terms
/// defined as 0.
pub fn macro_f1(
    predictions: &[usize],
    truth: &[usize],
    n_classes: usize,
) -> Result<f64, EvalError> {
    check_lengths(predictions.len(), truth.len())?;
    let mut f1_sum = 0.0;
    for c in 0..n_classes {
        let tp = predictions
            .iter()
            .zip(truth)
            .filter(|&(&p, &t)| p == c && t == c)
            .count() as f64;
        let fp = predictions
            .iter()
            .zip(truth)
            .filter(|&(&p, &t)| p == c && t != c)
            .count() as f64;
        let fn_ = predictions
            .iter()
            .zip(truth)
            .filter(|&(&p, &t)| p != c && t == c)
            .count() as f64;
        let precision = if tp + fp > 0.0 { tp / (tp + fp) } else { 0.0 };
        let recall = if tp + fn_ > 0.0 { tp / (tp + fn_) } else { 0.0 };
        f1_sum += if precision + recall > 0.0 {
            2.0 * precision * recall / (precision + recall)
        } else {
            0.0
        };
    }
    Ok(f1_sum / n_classes as f64)
}

/// Midranks (1-based, ties averaged) of the values.
fn midranks(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).expect("finite scores"));
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        // positions i..=j (0-based) share the average of ranks i+1..=j+1
        let rank = (i + 1 + j + 1) as f64 / 2.0;
        for &idx in &order[i..=j] {
            ranks[idx] = rank;
        }
        i = j + 1;
    }
    ranks
}

/// Class-frequency-weighted one-vs-rest AUROC with midrank tie handling.
/// Classes absent from `truth` (or covering all of it) carry weight 0; if no
/// class separates, the result is the uninformative 0.5.
pub fn auroc(
    probabilities: &[Vec<f64>],
    truth: &[usize],
    n_classes: usize,
) -> Result<f64, EvalError> {
    check_lengths(probabilities.len(), truth.len())?;
    let n = truth.len();
    let mut weighted = 0.0;
    let mut weight = 0.0;
    for c in 0..n_classes {
        let n_pos = truth.iter().filter(|&&t| t == c).count();
        let n_neg = n - n_pos;
        if n_pos == 0 || n_neg == 0 {
            continue;
        }
        let scores: Vec<f64> = probabilities.iter().map(|row| row[c]).collect();
        let ranks = midranks(&scores);
        let r_pos: f64 = ranks
            .iter()
            .zip(truth)
            .filter(|&(_, &t)| t == c)
            .map(|(&r, _)| r)
            .sum();
        let auc = (r_pos - (n_pos * (n_pos + 1)) as f64 / 2.0) / (n_pos * n_neg) as f64;
        weighted += n_pos as f64 * auc;
        weight += n_pos as f64;
    }
    if weight == 0.0 {
        return Ok(0.5);
    }
    Ok(weighted / weight)
}

/// Two-sided Wilcoxon signed-rank p-value. Zero differences are dropped
/// (all-zero input gives p = 1), tied absolute differences receive
/// midranks, the distribution of the rank sum is exact for n <= 20 and a
/// tie-corrected normal approximation without continuity correction above.
pub fn wilcoxon_signed_rank(a: &[f64], b: &[f64]) -> Result<f64, EvalError> {
    check_lengths(a.len(), b.len())?;
    let diffs: Vec<f64> = a
        .iter()
        .zip(b)
        .map(|(&x, &y)| x - y)
        .filter(|&d| d != 0.0)
        .collect();
    let n = diffs.len();
    if n == 0 {
        return Ok(1.0);
    }
    if n < 5 {
        return Err(EvalError::TooFewSamples { n });
    }
    let abs: Vec<f64> = diffs.iter().map(|d| d.abs()).collect();
    let ranks = midranks(&abs);
    let t_plus: f64 = ranks
        .iter()
        .zip(&diffs)
        .filter(|&(_, &d)| d > 0.0)
        .map(|(&r, _)| r)
        .sum();
    let total = (n * (n + 1)) as f64 / 2.0;
    let t_min = t_plus.min(total - t_plus);

    if n <= 20 {
        // Exact: count sign assignments by doubled rank sum (midranks are
        // half-integral, so doubled ranks are exact integers).
        let ranks2: Vec<u64> = ranks.iter().map(|&r| (2.0 * r).round() as u64).collect();
        let max2: u64 = ranks2.iter().sum();
        let mut counts = vec![0.0_f64; (max2 + 1) as usize];
        counts[0] = 1.0;
        for &r in &ranks2 {
            for s in (r..=max2).rev() {
                counts[s as usize] += counts[(s - r) as usize];
            }
        }
        let t_min2 = (2.0 * t_min).round() as u64;
        let below: f64 = counts[..=(t_min2 as usize)].iter().sum();
        return Ok((2.0 * below / 2.0_f64.powi(n as i32)).min(1.0));
    }

    let nf = n as f64;
    let mean = nf * (nf + 1.0) / 4.0;
    let mut tie_term = 0.0;
    let mut i = 0;
    let mut sorted = abs.clone();
    sorted.sort_by(|x, y| x.partial_cmp(y).unwrap());
    while i < n {
        let mut j = i;
        while j + 1 < n && sorted[j + 1] == sorted[i] {
            j += 1;
        }
        let t = (j - i + 1) as f64;
        tie_term += t * t * t - t;
        i = j + 1;
    }
    let var = nf * (nf + 1.0) * (2.0 * nf + 1.0) / 24.0 - tie_term / 48.0;
    let z = (t_min - mean) / var.sqrt();
    let normal = Normal::new(0.0, 1.0).expect("unit normal");
    Ok((2.0 * normal.cdf(z)).min(1.0))
}

/// Holm step-down significance flags at level `alpha`, in input order.
pub fn holm_flags(p_values: &[f64], alpha: f64) -> Vec<bool> {
    let k = p_values.len();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| p_values[a].partial_cmp(&p_values[b]).unwrap());
    let mut flags = vec![false; k];
    for (step, &idx) in order.iter().enumerate() {
        if p_values[idx] <= alpha / (k - step) as f64 {
            flags[idx] = true;
        } else {
            break;
        }
    }
    flags
}

/// One entry of the pairwise significance matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct PairwiseComparison {
    pub classifier_a: String,
    pub classifier_b: String,
    pub p_value: f64,
    pub holm_significant: bool,
}

/// All unordered classifier pairs, Wilcoxon-tested on per-dataset score
/// vectors and Holm-flagged across the whole family.
pub fn pairwise_wilcoxon(
    scores: &[(String, Vec<f64>)],
    alpha: f64,
) -> Result<Vec<PairwiseComparison>, EvalError> {
    let mut pairs = Vec::new();
    let mut p_values = Vec::new();
    for i in 0..scores.len() {
        for j in i + 1..scores.len() {
            let p = wilcoxon_signed_rank(&scores[i].1, &scores[j].1)?;
            pairs.push((scores[i].0.clone(), scores[j].0.clone()));
            p_values.push(p);
        }
    }
    let flags = holm_flags(&p_values, alpha);
    Ok(pairs
        .into_iter()
        .zip(p_values)
        .zip(flags)
        .map(|(((a, b), p), sig)| PairwiseComparison {
            classifier_a: a,
            classifier_b: b,
            p_value: p,
            holm_significant: sig,
        })
        .collect())
}

/// 1-nearest-neighbour prediction under Euclidean distance on the raw
/// concatenated dimensions; distance ties keep the earliest training case.
pub fn one_nn_predict(
    train: &TimeSeriesDataset,
    test: &TimeSeriesDataset,
) -> Result<Vec<usize>, EvalError> {
    let labels = train.labels()?;
    if train.n_instances() == 0 {
        return Err(EvalError::Empty);
    }
    let dist2 = |a: &crate::tsdata::TimeSeriesInstance, b: &crate::tsdata::TimeSeriesInstance| {
        a.values
            .iter()
            .zip(&b.values)
            .flat_map(|(da, db)| da.iter().zip(db))
            .map(|(&x, &y)| (x - y) * (x - y))
            .sum::<f64>()
    };
    Ok(test
        .instances
        .iter()
        .map(|probe| {
            let mut best = 0;
            let mut best_d = dist2(probe, &train.instances[0]);
            for (i, candidate) in train.instances.iter().enumerate().skip(1) {
                let d = dist2(probe, candidate);
                if d < best_d {
                    best = i;
                    best_d = d;
                }
            }
            labels[best]
        })
        .collect())
}

/// One evaluated fold of one classifier on one dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct FoldResult {
    pub dataset: String,
    pub fold: u64,
    pub classifier: String,
    pub accuracy: f64,
    pub balanced_accuracy: f64,
    pub auroc: f64,
    pub f1: f64,
    pub train_time_s: f64,
    pub test_time_s: f64,
    pub train_estimate: Option<f64>,
}

/// Experiment description: the forest configuration acts as a template
/// whose seed is offset by the fold index.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub classifier: CIFConfig,
    pub classifier_name: String,
    pub folds: u64,
    /// Also compute the out-of-bag train estimate per fold (the bagged
    /// forest estimates accuracy; the full model predicts the test data).
    pub train_estimate: bool,
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

/// Evaluate every fold on already-loaded datasets. Fold 0 keeps the given
/// split; fold i reseeds both the resample and the classifier by i.
pub fn run_experiment_datasets(
    train: &TimeSeriesDataset,
    test: &TimeSeriesDataset,
    config: &ExperimentConfig,
) -> Result<Vec<FoldResult>, EvalError> {
    let mut results = Vec::with_capacity(config.folds as usize);
    for fold in 0..config.folds {
        let (tr, te) = stratified_resample(train, test, ResamplePlan { fold_index: fold })?;
        let mut forest_config = config.classifier.clone();
        forest_config.seed = config.classifier.seed.wrapping_add(fold);

        let fit_start = Instant::now();
        let (train_estimate, model) = if config.train_estimate {
            let (estimate, full) = oob_estimate(&tr, &forest_config)?;
            (Some(estimate), full)
        } else {
            (None, fit(&tr, &forest_config)?)
        };
        let train_time_s = fit_start.elapsed().as_secs_f64();

        let predict_start = Instant::now();
        let probabilities = model.predict_proba_dataset(&te)?;
        let test_time_s = predict_start.elapsed().as_secs_f64();

        let predictions: Vec<usize> = probabilities.iter().map(|row| argmax(row)).collect();
        let truth = te.labels()?;
        let n_classes = tr.class_labels.len();
        results.push(FoldResult {
            dataset: train.name.clone(),
            fold,
            classifier: config.classifier_name.clone(),
            accuracy: accuracy(&predictions, &truth)?,
            balanced_accuracy: balanced_accuracy(&predictions, &truth, n_classes)?,
            auroc: auroc(&probabilities, &truth, n_classes)?,
            f1: macro_f1(&predictions, &truth, n_classes)?,
            train_time_s,
            test_time_s,
            train_estimate,
        });
    }
    Ok(results)
}

/// Load both `.ts` files and evaluate every fold.
pub fn run_experiment(
    train_path: &Path,
    test_path: &Path,
    config: &ExperimentConfig,
) -> Result<Vec<FoldResult>, EvalError> {
    let train = parse_ts_file(train_path, false)?;
    let test = parse_ts_file(test_path, false)?;
    run_experiment_datasets(&train, &test, config)
}

/// Write fold results as CSV, rows normalised by (dataset, fold,
/// classifier). `train_estimate` is left empty when absent.
pub fn write_results_csv(results: &[FoldResult], path: &Path) -> std::io::Result<()> {
    use std::io::Write as _;
    let mut rows: Vec<&FoldResult> = results.iter().collect();
    rows.sort_by(|a, b| {
        (&a.dataset, a.fold, &a.classifier).cmp(&(&b.dataset, b.fold, &b.classifier))
    });
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    writeln!(
        out,
        "dataset,fold,classifier,accuracy,balanced_accuracy,auroc,f1,train_time_s,test_time_s,train_estimate"
    )?;
    for r in rows {
        let estimate = r
            .train_estimate
            .map(|e| format!("{e:.6}"))
            .unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{}",
            r.dataset,
            r.fold,
            r.classifier,
            r.accuracy,
            r.balanced_accuracy,
            r.auroc,
            r.f1,
            r.train_time_s,
            r.test_time_s,
            estimate
        )?;
    }
    out.flush()
}

/// Write the pairwise significance matrix as CSV.
pub fn write_pairwise_csv(comparisons: &[PairwiseComparison], path: &Path) -> std::io::Result<()> {
    use std::io::Write as _;
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    writeln!(out, "classifier_a,classifier_b,p_value,holm_significant")?;
    for c in comparisons {
        writeln!(
            out,
            "{},{},{:.6},{}",
            c.classifier_a, c.classifier_b, c.p_value, c.holm_significant
        )?;
    }
    out.flush()
}
