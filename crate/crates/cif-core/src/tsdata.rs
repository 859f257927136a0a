//! Labelled (possibly multivariate) time series, `.ts` archive file parsing
//! and writing, z-normalisation, and stratified resampling.

use std::fmt::Write as _;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Errors raised while loading or manipulating datasets.
#[derive(Debug, Error)]
pub enum DataError {
    #[error("io error reading {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error at {path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },
    #[error("{0}")]
    Invalid(String),
}

/// One instance: `d` dimensions of `m` observations plus an optional label
/// (an index into the owning dataset's `class_labels`).
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeriesInstance {
    pub values: Vec<Vec<f64>>,
    pub label: Option<usize>,
}

impl TimeSeriesInstance {
    /// Number of dimensions.
    pub fn dims(&self) -> usize {
        self.values.len()
    }

    /// Series length (all dimensions share it).
    pub fn len(&self) -> usize {
        self.values.first().map_or(0, Vec::len)
    }

    /// True when the instance holds no observations.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A named collection of equal-shape instances with an ordered label set.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeriesDataset {
    pub name: String,
    pub instances: Vec<TimeSeriesInstance>,
    pub class_labels: Vec<String>,
}

impl TimeSeriesDataset {
    pub fn n_instances(&self) -> usize {
        self.instances.len()
    }

    pub fn dims(&self) -> usize {
        self.instances.first().map_or(0, TimeSeriesInstance::dims)
    }

    pub fn series_len(&self) -> usize {
        self.instances.first().map_or(0, TimeSeriesInstance::len)
    }

    /// Labels of all instances; errors if any instance is unlabelled.
    pub fn labels(&self) -> Result<Vec<usize>, DataError> {
        self.instances
            .iter()
            .map(|inst| {
                inst.label
                    .ok_or_else(|| DataError::Invalid("instance without class label".into()))
            })
            .collect()
    }

    /// Count of instances per class, indexed by label.
    pub fn class_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.class_labels.len()];
        for inst in &self.instances {
            if let Some(l) = inst.label {
                counts[l] += 1;
            }
        }
        counts
    }
}

/// Controls [`stratified_resample`]; fold 0 reproduces the provided split.
#[derive(Debug, Clone, Copy)]
pub struct ResamplePlan {
    pub fold_index: u64,
}

/// Z-normalise with population standard deviation; a series with standard
/// deviation at or below 1e-8 becomes the all-zero vector.
pub fn znormalize(series: &[f64]) -> Vec<f64> {
    if series.is_empty() {
        return Vec::new();
    }
    let n = series.len() as f64;
    let mean = series.iter().sum::<f64>() / n;
    let var = series.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    let sd = var.sqrt();
    if sd <= 1e-8 {
        vec![0.0; series.len()]
    } else {
        series.iter().map(|v| (v - mean) / sd).collect()
    }
}

/// Parse a UCR/UEA `.ts` file. Dimensions are separated by `:`, values by
/// `,`, and the final `:`-field of each data line is the class token.
/// Unequal-length instances are rejected unless `pad_zeros` right-pads every
/// dimension with 0.0 to the longest observed length.
pub fn parse_ts_file(path: &Path, pad_zeros: bool) -> Result<TimeSeriesDataset, DataError> {
    let text = std::fs::read_to_string(path).map_err(|source| DataError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_ts_text(&text, &path.display().to_string(), pad_zeros)
}

fn parse_ts_text(text: &str, path: &str, pad_zeros: bool) -> Result<TimeSeriesDataset, DataError> {
    let err = |line: usize, msg: String| DataError::Parse {
        path: path.to_string(),
        line,
        msg,
    };

    let mut name = String::new();
    let mut class_labels: Option<Vec<String>> = None;
    let mut in_data = false;
    let mut instances = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !in_data {
            if let Some(rest) = line.strip_prefix('@') {
                let mut parts = rest.split_whitespace();
                let directive = parts.next().unwrap_or("").to_ascii_lowercase();
                match directive.as_str() {
                    "problemname" => {
                        name = parts.next().unwrap_or("").to_string();
                    }
                    "classlabel" => {
                        let flag = parts.next().unwrap_or("");
                        let labels: Vec<String> = parts.map(str::to_string).collect();
                        if flag != "true" {
                            return Err(err(
                                lineno,
                                "@classLabel false unsupported (labelled data required)".into(),
                            ));
                        }
                        if labels.is_empty() {
                            return Err(err(lineno, "@classLabel lists no labels".into()));
                        }
                        class_labels = Some(labels);
                    }
                    "data" => {
                        in_data = true;
                    }
                    // @univariate, @dimensions, @serieslength, @timestamps,
                    // @equallength, ... carry no information we need.
                    _ => {}
                }
                continue;
            }
            return Err(err(lineno, format!("unexpected line before @data: {line}")));
        }

        let labels = class_labels
            .as_ref()
            .ok_or_else(|| err(lineno, "@data before @classLabel".into()))?;
        let mut fields: Vec<&str> = line.split(':').collect();
        if fields.len() < 2 {
            return Err(err(lineno, "data line without class token".into()));
        }
        let class_token = fields.pop().unwrap().trim();
        let label = labels
            .iter()
            .position(|l| l == class_token)
            .ok_or_else(|| err(lineno, format!("unknown class token '{class_token}'")))?;

        let mut dims = Vec::with_capacity(fields.len());
        for field in fields {
            let mut vals = Vec::new();
            for tok in field.split(',') {
                let tok = tok.trim();
                if tok == "?" {
                    return Err(err(lineno, "missing values ('?') unsupported".into()));
                }
                let v: f64 = tok
                    .parse()
                    .map_err(|_| err(lineno, format!("non-numeric value '{tok}'")))?;
                if !v.is_finite() {
                    return Err(err(lineno, format!("non-finite value '{tok}'")));
                }
                vals.push(v);
            }
            dims.push(vals);
        }
        if dims.iter().any(|d| d.len() != dims[0].len()) {
            if pad_zeros {
                let max = dims.iter().map(Vec::len).max().unwrap();
                for d in &mut dims {
                    d.resize(max, 0.0);
                }
            } else {
                return Err(err(
                    lineno,
                    "ragged dimension lengths within an instance".into(),
                ));
            }
        }
        instances.push(TimeSeriesInstance {
            values: dims,
            label: Some(label),
        });
    }

    let class_labels =
        class_labels.ok_or_else(|| err(text.lines().count(), "no @classLabel header".into()))?;
    if instances.is_empty() {
        return Err(err(text.lines().count(), "no data lines".into()));
    }

    let d = instances[0].dims();
    let mut m = instances[0].len();
    let equal = instances.iter().all(|i| i.dims() == d && i.len() == m);
    if !equal {
        if !pad_zeros {
            return Err(DataError::Invalid(format!(
                "{path}: unequal series lengths (rerun with zero padding to accept)"
            )));
        }
        if instances.iter().any(|i| i.dims() != d) {
            return Err(DataError::Invalid(format!(
                "{path}: instances disagree on dimension count"
            )));
        }
        m = instances.iter().map(TimeSeriesInstance::len).max().unwrap();
        for inst in &mut instances {
            for dim in &mut inst.values {
                dim.resize(m, 0.0);
            }
        }
    }
    if m < 3 {
        return Err(DataError::Invalid(format!(
            "{path}: series length {m} < 3 (minimum interval length)"
        )));
    }

    Ok(TimeSeriesDataset {
        name,
        instances,
        class_labels,
    })
}

/// Serialise a dataset back to `.ts` text.
pub fn write_ts_file(dataset: &TimeSeriesDataset, path: &Path) -> Result<(), DataError> {
    let mut out = String::new();
    let _ = writeln!(out, "@problemName {}", dataset.name);
    let _ = writeln!(
        out,
        "@univariate {}",
        if dataset.dims() == 1 { "true" } else { "false" }
    );
    let _ = writeln!(out, "@classLabel true {}", dataset.class_labels.join(" "));
    out.push_str("@data\n");
    for inst in &dataset.instances {
        for dim in &inst.values {
            let vals: Vec<String> = dim.iter().map(|v| format!("{v:?}")).collect();
            out.push_str(&vals.join(","));
            out.push(':');
        }
        let label = inst.label.unwrap_or(0);
        out.push_str(&dataset.class_labels[label]);
        out.push('\n');
    }
    std::fs::write(path, out).map_err(|source| DataError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Redraw a train/test split from the pooled instances, preserving the
/// original per-class counts in each side exactly. Fold 0 returns the inputs
/// unchanged; fold `i > 0` shuffles with a ChaCha stream seeded by `i`.
pub fn stratified_resample(
    train: &TimeSeriesDataset,
    test: &TimeSeriesDataset,
    plan: ResamplePlan,
) -> Result<(TimeSeriesDataset, TimeSeriesDataset), DataError> {
    if train.class_labels != test.class_labels {
        return Err(DataError::Invalid(
            "train and test class labels differ".into(),
        ));
    }
    if plan.fold_index == 0 {
        return Ok((train.clone(), test.clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(plan.fold_index);
    let train_counts = train.class_counts();

    let mut new_train = Vec::with_capacity(train.n_instances());
    let mut new_test = Vec::with_capacity(test.n_instances());
    for (class, &keep_in_train) in train_counts.iter().enumerate() {
        let mut pool: Vec<&TimeSeriesInstance> = train
            .instances
            .iter()
            .chain(&test.instances)
            .filter(|i| i.label == Some(class))
            .collect();
        if pool.len() < keep_in_train {
            return Err(DataError::Invalid(format!(
                "class '{}' has fewer instances than the train split requires",
                train.class_labels[class]
            )));
        }
        pool.shuffle(&mut rng);
        for (i, inst) in pool.into_iter().enumerate() {
            if i < keep_in_train {
                new_train.push(inst.clone());
            } else {
                new_test.push(inst.clone());
            }
        }
    }
    Ok((
        TimeSeriesDataset {
            name: train.name.clone(),
            instances: new_train,
            class_labels: train.class_labels.clone(),
        },
        TimeSeriesDataset {
            name: test.name.clone(),
            instances: new_test,
            class_labels: test.class_labels.clone(),
        },
    ))
}
