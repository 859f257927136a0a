//! `cif`: train, apply and evaluate Canonical Interval Forest classifiers
//! on `.ts` time series datasets.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use cif_core::eval::{
    accuracy, pairwise_wilcoxon, run_experiment, write_pairwise_csv, write_results_csv,
    ExperimentConfig, FoldResult,
};
use cif_core::features::FeatureId;
use cif_core::forest::{fit, CIFConfig, CIFModel, Mode};
use cif_core::interpret::{temporal_importance, top_features};
use cif_core::tsdata::parse_ts_file;

#[derive(Parser)]
#[command(
    name = "cif",
    version,
    about = "Canonical Interval Forest time series classifier"
)]
struct Cli {
    /// Worker threads (0 = one per core). Results are identical for any
    /// count; this only changes wall-clock time.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Train a forest on a .ts dataset and write the model as JSON.
    Train {
        /// Training data in .ts format.
        #[arg(long)]
        data: PathBuf,
        /// Output path for the model file.
        #[arg(long)]
        out: PathBuf,
        /// Number of trees (ignored by cif-fast, which builds 250).
        #[arg(long, default_value_t = 500)]
        trees: usize,
        /// Attributes subsampled per tree (cif modes only).
        #[arg(long, default_value_t = 8)]
        atts: usize,
        /// Feature pool and sizing preset.
        #[arg(long, default_value = "cif", value_parser = Mode::from_str)]
        mode: Mode,
        /// Stop adding trees once this much wall-clock time has elapsed.
        #[arg(long)]
        contract_minutes: Option<f64>,
        /// Bootstrap the training data per tree.
        #[arg(long)]
        bagging: bool,
        /// Master random seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Right-pad unequal-length series with zeros instead of failing.
        #[arg(long)]
        pad_zeros: bool,
        /// Give every tree all 25 features (no attribute subsampling);
        /// recommended before `tic`.
        #[arg(long)]
        no_subsample: bool,
    },
    /// Predict labels and class probabilities for a .ts dataset.
    Predict {
        /// Trained model file.
        #[arg(long)]
        model: PathBuf,
        /// Data to classify, in .ts format.
        #[arg(long)]
        data: PathBuf,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Run seeded stratified resample experiments and write fold metrics.
    Evaluate {
        /// Training split in .ts format.
        #[arg(long)]
        train: PathBuf,
        /// Test split in .ts format.
        #[arg(long)]
        test: PathBuf,
        /// Resamples per dataset; fold 0 is always the provided split.
        #[arg(long, default_value_t = 30)]
        folds: u64,
        /// Output CSV path for per-fold results.
        #[arg(long)]
        out: PathBuf,
        /// Comma-separated classifiers to run (cif, cif-fast, tsf, hybrid).
        #[arg(long, default_value = "cif", value_delimiter = ',')]
        classifiers: Vec<String>,
        /// Also write a pairwise Wilcoxon/Holm comparison CSV (needs at
        /// least two classifiers and five folds).
        #[arg(long)]
        pairwise_out: Option<PathBuf>,
        /// Number of trees per forest (ignored by cif-fast).
        #[arg(long, default_value_t = 500)]
        trees: usize,
        /// Master random seed; fold i trains with seed + i.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Fill the train_estimate column with out-of-bag accuracy.
        #[arg(long)]
        train_estimate: bool,
    },
    /// Export temporal importance curves from a trained model.
    Tic {
        /// Trained model file.
        #[arg(long)]
        model: PathBuf,
        /// Output CSV path for the curves.
        #[arg(long, alias = "tic-out")]
        out: PathBuf,
        /// Print the v features with the highest curve peaks.
        #[arg(long, default_value_t = 3)]
        top: usize,
    },
    /// List the 25 candidate features by index.
    Features,
}

fn main() -> std::process::ExitCode {
    // Die quietly when the consumer of our stdout goes away (e.g. `| head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return std::process::ExitCode::FAILURE;
        }
    }
    match run(cli.command) {
        Ok(()) => std::process::ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Train {
            data,
            out,
            trees,
            atts,
            mode,
            contract_minutes,
            bagging,
            seed,
            pad_zeros,
            no_subsample,
        } => {
            let dataset = parse_ts_file(&data, pad_zeros)
                .with_context(|| format!("loading {}", data.display()))?;
            let config = CIFConfig {
                num_trees: trees,
                atts_per_tree: if no_subsample { 25 } else { atts },
                mode,
                contract_minutes,
                bagging,
                seed,
                ..CIFConfig::default()
            };
            let model = fit(&dataset, &config)?;
            model.save(&out)?;
            println!(
                "trained {} trees on {} instances ({} dims, length {}): {}",
                model.trees.len(),
                dataset.n_instances(),
                model.dims,
                model.series_len,
                out.display()
            );
            Ok(())
        }
        Command::Predict { model, data, out } => {
            let model = CIFModel::load(&model)?;
            let dataset = parse_ts_file(&data, false)
                .with_context(|| format!("loading {}", data.display()))?;
            let probabilities = model.predict_proba_dataset(&dataset)?;
            write_predictions_csv(&model, &probabilities, &out)?;
            println!(
                "{} predictions written to {}",
                probabilities.len(),
                out.display()
            );
            if dataset.instances.iter().all(|i| i.label.is_some()) && !dataset.instances.is_empty()
            {
                let truth: Vec<usize> =
                    dataset.instances.iter().map(|i| i.label.unwrap()).collect();
                let predictions: Vec<usize> = probabilities.iter().map(|row| argmax(row)).collect();
                println!("accuracy {:.6}", accuracy(&predictions, &truth)?);
            }
            Ok(())
        }
        Command::Evaluate {
            train,
            test,
            folds,
            out,
            classifiers,
            pairwise_out,
            trees,
            seed,
            train_estimate,
        } => {
            if pairwise_out.is_some() && classifiers.len() < 2 {
                bail!("--pairwise-out needs at least two classifiers");
            }
            let mut results: Vec<FoldResult> = Vec::new();
            for name in &classifiers {
                let mode = Mode::from_str(name).map_err(anyhow::Error::msg)?;
                let config = ExperimentConfig {
                    classifier: CIFConfig {
                        num_trees: trees,
                        mode,
                        seed,
                        ..CIFConfig::default()
                    },
                    classifier_name: name.clone(),
                    folds,
                    train_estimate,
                };
                let fold_results = run_experiment(&train, &test, &config)?;
                let mean = fold_results.iter().map(|r| r.accuracy).sum::<f64>()
                    / fold_results.len() as f64;
                println!("{name}: mean accuracy {mean:.6} over {folds} folds");
                results.extend(fold_results);
            }
            write_results_csv(&results, &out)?;
            println!("results written to {}", out.display());
            if let Some(path) = pairwise_out {
                let scores: Vec<(String, Vec<f64>)> = classifiers
                    .iter()
                    .map(|name| {
                        let mut per_fold: Vec<&FoldResult> =
                            results.iter().filter(|r| &r.classifier == name).collect();
                        per_fold.sort_by_key(|r| r.fold);
                        (name.clone(), per_fold.iter().map(|r| r.accuracy).collect())
                    })
                    .collect();
                let comparisons = pairwise_wilcoxon(&scores, 0.05)?;
                write_pairwise_csv(&comparisons, &path)?;
                println!("pairwise comparisons written to {}", path.display());
            }
            Ok(())
        }
        Command::Tic { model, out, top } => {
            let model = CIFModel::load(&model)?;
            let curves = temporal_importance(&model);
            curves.write_csv(&out)?;
            println!(
                "curves for {} dimension(s) x 25 features written to {}",
                model.dims,
                out.display()
            );
            for (rank, feature) in top_features(&curves, top).iter().enumerate() {
                println!("top {}: {}", rank + 1, feature.name());
            }
            Ok(())
        }
        Command::Features => {
            for id in FeatureId::all() {
                println!("{} {}", id.index(), id.name());
            }
            Ok(())
        }
    }
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

fn write_predictions_csv(model: &CIFModel, probabilities: &[Vec<f64>], path: &Path) -> Result<()> {
    use std::io::Write as _;
    let mut out = std::io::BufWriter::new(
        std::fs::File::create(path).with_context(|| format!("creating {}", path.display()))?,
    );
    write!(out, "index,predicted_label")?;
    for c in 0..model.class_labels.len() {
        write!(out, ",p(class_{c})")?;
    }
    writeln!(out)?;
    for (i, row) in probabilities.iter().enumerate() {
        write!(out, "{},{}", i, model.class_labels[argmax(row)])?;
        for p in row {
            write!(out, ",{p}")?;
        }
        writeln!(out)?;
    }
    out.flush()?;
    Ok(())
}
