//! The interval forest: interval sampling, per-tree attribute subsampling,
//! the information-gain time series tree, majority-vote prediction, bagging
//! with out-of-bag estimation, and time-contracted training.

use std::path::Path;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::features::{self, FeatureId};
use crate::tsdata::{DataError, TimeSeriesDataset, TimeSeriesInstance};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Errors raised while fitting, predicting, or (de)serialising models.
#[derive(Debug, Error)]
pub enum ForestError {
    #[error("dataset is empty")]
    EmptyDataset,
    #[error("series length {len} is too short: training needs at least 5 observations")]
    SeriesTooShort { len: usize },
    #[error("dataset instances disagree in shape; equal-length series are required")]
    RaggedDataset,
    #[error(
        "instance shape ({dims} dims x {len}) does not match the model \
         ({model_dims} dims x {model_len})"
    )]
    ShapeMismatch {
        dims: usize,
        len: usize,
        model_dims: usize,
        model_len: usize,
    },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Data(#[from] DataError),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path} is not a readable cif model of a supported version")]
    BadModelFile { path: String },
    #[error("model serialisation failed: {0}")]
    Json(#[from] serde_json::Error),
}

/// Ensemble flavour. `Cif` samples 8 of all 25 features per tree, `CifFast`
/// additionally shrinks the ensemble, `Tsf` restricts to the three summary
/// statistics, and `Hybrid` uses every catch22 feature with no subsampling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Cif,
    CifFast,
    Tsf,
    Hybrid,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Mode::Cif => "cif",
            Mode::CifFast => "cif-fast",
            Mode::Tsf => "tsf",
            Mode::Hybrid => "hybrid",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cif" => Ok(Mode::Cif),
            "cif-fast" => Ok(Mode::CifFast),
            "tsf" => Ok(Mode::Tsf),
            "hybrid" => Ok(Mode::Hybrid),
            other => Err(format!(
                "unknown mode {other:?}; expected cif, cif-fast, tsf, or hybrid"
            )),
        }
    }
}

/// Forest configuration. `intervals_per_tree = None` resolves to the
/// round(sqrt(d) * sqrt(m)) default at fit time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CIFConfig {
    pub num_trees: usize,
    pub intervals_per_tree: Option<usize>,
    pub atts_per_tree: usize,
    pub contract_minutes: Option<f64>,
    pub bagging: bool,
    pub seed: u64,
    pub mode: Mode,
    /// Restrict the samplable feature pool to the 22 catch22 features,
    /// excluding the three summary statistics.
    pub catch22_only: bool,
}

impl Default for CIFConfig {
    fn default() -> Self {
        CIFConfig {
            num_trees: 500,
            intervals_per_tree: None,
            atts_per_tree: 8,
            contract_minutes: None,
            bagging: false,
            seed: 0,
            mode: Mode::Cif,
            catch22_only: false,
        }
    }
}

impl CIFConfig {
    fn validate(&self) -> Result<(), ForestError> {
        if self.num_trees == 0 {
            return Err(ForestError::InvalidConfig("num_trees must be >= 1".into()));
        }
        if self.intervals_per_tree == Some(0) {
            return Err(ForestError::InvalidConfig(
                "intervals_per_tree must be >= 1".into(),
            ));
        }
        if self.atts_per_tree == 0 || self.atts_per_tree > features::FEATURE_COUNT {
            return Err(ForestError::InvalidConfig(format!(
                "atts_per_tree must be in 1..={}",
                features::FEATURE_COUNT
            )));
        }
        if let Some(c) = self.contract_minutes {
            if !c.is_finite() || c <= 0.0 {
                return Err(ForestError::InvalidConfig(
                    "contract_minutes must be positive and finite".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Default interval count: round(sqrt(d) * sqrt(m)), at least 1.
pub fn default_k(m: usize, d: usize) -> usize {
    let k = ((d as f64).sqrt() * (m as f64).sqrt()).round() as usize;
    k.max(1)
}

/// CIF-Fast interval count: round(sqrt(m)^0.85), at least 1.
pub fn cif_fast_k(m: usize) -> usize {
    let k = (m as f64).sqrt().powf(0.85).round() as usize;
    k.max(1)
}

/// A contiguous window on one dimension of a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub dimension: usize,
    pub start: usize,
    pub length: usize,
}

impl Interval {
    /// The window this interval selects from an instance.
    pub fn slice<'a>(&self, instance: &'a TimeSeriesInstance) -> &'a [f64] {
        &instance.values[self.dimension][self.start..self.start + self.length]
    }
}

/// A node of the time series tree: either a binary split on one attribute
/// column or a leaf holding the empirical class distribution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum TreeNode {
    Branch {
        attribute_index: usize,
        threshold: f64,
        /// Shannon information gain of this split, in bits.
        gain: f64,
        left: Box<TreeNode>,
        right: Box<TreeNode>,
    },
    Leaf {
        distribution: Vec<f64>,
    },
}

/// One fitted tree plus everything needed to decode its attribute columns:
/// column `c` evaluates feature `features[c % a]` on `intervals[c / a]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainedTree {
    pub root: TreeNode,
    pub intervals: Vec<Interval>,
    pub features: Vec<FeatureId>,
    pub bootstrap_indices: Option<Vec<usize>>,
    pub tree_seed: u64,
}

/// A fitted forest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CIFModel {
    pub config: CIFConfig,
    pub class_labels: Vec<String>,
    pub dims: usize,
    pub series_len: usize,
    pub trees: Vec<TrainedTree>,
}

fn splitmix64(mut z: u64) -> u64 {
    z ^= z >> 30;
    z = z.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z ^= z >> 27;
    z = z.wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^= z >> 31;
    z
}

/// Seed for tree `index`, mixed from the master seed so every tree draws an
/// independent stream regardless of build order or worker count.
pub fn tree_seed(master_seed: u64, index: usize) -> u64 {
    splitmix64(master_seed.wrapping_add((index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

/// Draw `k` intervals (uniform dimension, uniform start in [0, m-3], uniform
/// length in [3, m-start]) and `a` distinct features from `pool`. Requesting
/// at least the whole pool skips the draw and keeps the pool's own order.
fn sample_from_pool(
    m: usize,
    d: usize,
    k: usize,
    a: usize,
    pool: &[FeatureId],
    rng: &mut ChaCha8Rng,
) -> (Vec<Interval>, Vec<FeatureId>) {
    debug_assert!(m >= 5 && d >= 1 && k >= 1 && a >= 1);
    let intervals = (0..k)
        .map(|_| {
            let dimension = rng.gen_range(0..d);
            let start = rng.gen_range(0..=m - 3);
            let length = rng.gen_range(3..=m - start);
            Interval {
                dimension,
                start,
                length,
            }
        })
        .collect();
    let features = if a >= pool.len() {
        pool.to_vec()
    } else {
        let mut chosen: Vec<FeatureId> = rand::seq::index::sample(rng, pool.len(), a)
            .into_iter()
            .map(|i| pool[i])
            .collect();
        chosen.sort_by_key(|f| f.index());
        chosen
    };
    (intervals, features)
}

/// Draw `k` intervals and `a` distinct features from the full 25-feature
/// space for a series of `m` observations over `d` dimensions.
pub fn sample_intervals_and_features(
    m: usize,
    d: usize,
    k: usize,
    a: usize,
    rng: &mut ChaCha8Rng,
) -> (Vec<Interval>, Vec<FeatureId>) {
    let pool: Vec<FeatureId> = FeatureId::all().collect();
    sample_from_pool(m, d, k, a, &pool, rng)
}

/// Evaluate one instance's attribute row: `features` applied to each
/// interval in turn, giving `intervals.len() * features.len()` columns.
fn attribute_row(
    instance: &TimeSeriesInstance,
    intervals: &[Interval],
    feature_ids: &[FeatureId],
) -> Vec<f64> {
    let mut row = Vec::with_capacity(intervals.len() * feature_ids.len());
    for interval in intervals {
        row.extend(features::compute_features(
            feature_ids,
            interval.slice(instance),
        ));
    }
    row
}

fn entropy_bits(counts: &[usize], total: usize) -> f64 {
    if total == 0 {
        return 0.0;
    }
    let n = total as f64;
    counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / n;
            -p * p.log2()
        })
        .sum()
}

/// Winning split of one node: attribute column, threshold, information gain
/// in bits, and the margin (half the gap between the straddled values).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BestSplit {
    pub attribute: usize,
    pub threshold: f64,
    pub gain: f64,
    pub margin: f64,
}

/// Exhaustive scan over midpoints between consecutive distinct sorted values
/// of every attribute. Gain ties prefer the larger margin, then the lowest
/// attribute index and smallest threshold (the scan order, so first wins).
#[allow(clippy::needless_range_loop)]
pub fn find_best_split(
    rows: &[Vec<f64>],
    labels: &[usize],
    indices: &[usize],
    n_classes: usize,
) -> Option<BestSplit> {
    let n = indices.len();
    if n < 2 {
        return None;
    }
    let mut counts = vec![0usize; n_classes];
    for &i in indices {
        counts[labels[i]] += 1;
    }
    let parent = entropy_bits(&counts, n);
    let n_atts = rows[indices[0]].len();
    let mut best: Option<BestSplit> = None;
    let mut pairs: Vec<(f64, usize)> = Vec::with_capacity(n);
    let mut left = vec![0usize; n_classes];
    for att in 0..n_atts {
        pairs.clear();
        pairs.extend(indices.iter().map(|&i| (rows[i][att], labels[i])));
        pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite attributes"));
        left.iter_mut().for_each(|c| *c = 0);
        for i in 0..n - 1 {
            left[pairs[i].1] += 1;
            let (lo, hi) = (pairs[i].0, pairs[i + 1].0);
            if lo >= hi {
                continue;
            }
            let margin = (hi - lo) / 2.0;
            let threshold = lo + margin;
            if threshold >= hi {
                // Adjacent representable values: the midpoint cannot separate
                // them, so there is no usable threshold here.
                continue;
            }
            let n_left = i + 1;
            let n_right = n - n_left;
            let h_left = entropy_bits(&left, n_left);
            let right: Vec<usize> = counts.iter().zip(&left).map(|(&c, &l)| c - l).collect();
            let h_right = entropy_bits(&right, n_right);
            let gain = parent
                - (n_left as f64 / n as f64) * h_left
                - (n_right as f64 / n as f64) * h_right;
            if gain <= 0.0 {
                continue;
            }
            let improves = match &best {
                None => true,
                Some(b) => gain > b.gain || (gain == b.gain && margin > b.margin),
            };
            if improves {
                best = Some(BestSplit {
                    attribute: att,
                    threshold,
                    gain,
                    margin,
                });
            }
        }
    }
    best
}

fn leaf(counts: &[usize], total: usize) -> TreeNode {
    TreeNode::Leaf {
        distribution: counts.iter().map(|&c| c as f64 / total as f64).collect(),
    }
}

fn grow(rows: &[Vec<f64>], labels: &[usize], indices: &[usize], n_classes: usize) -> TreeNode {
    let mut counts = vec![0usize; n_classes];
    for &i in indices {
        counts[labels[i]] += 1;
    }
    if counts.iter().filter(|&&c| c > 0).count() <= 1 {
        return leaf(&counts, indices.len());
    }
    match find_best_split(rows, labels, indices, n_classes) {
        None => leaf(&counts, indices.len()),
        Some(split) => {
            let (left_idx, right_idx): (Vec<usize>, Vec<usize>) = indices
                .iter()
                .partition(|&&i| rows[i][split.attribute] <= split.threshold);
            debug_assert!(!left_idx.is_empty() && !right_idx.is_empty());
            TreeNode::Branch {
                attribute_index: split.attribute,
                threshold: split.threshold,
                gain: split.gain,
                left: Box::new(grow(rows, labels, &left_idx, n_classes)),
                right: Box::new(grow(rows, labels, &right_idx, n_classes)),
            }
        }
    }
}

/// Build one time series tree on a finite `n x atts` attribute matrix.
pub fn build_time_series_tree(rows: &[Vec<f64>], labels: &[usize], n_classes: usize) -> TreeNode {
    debug_assert!(!rows.is_empty() && rows.len() == labels.len());
    debug_assert!(rows.iter().all(|r| r.iter().all(|v| v.is_finite())));
    let indices: Vec<usize> = (0..rows.len()).collect();
    grow(rows, labels, &indices, n_classes)
}

/// Parameters shared by every tree of one fit.
struct ResolvedConfig {
    num_trees: usize,
    k: usize,
    a: usize,
    pool: Vec<FeatureId>,
    bagging: bool,
    seed: u64,
}

fn resolve(config: &CIFConfig, m: usize, d: usize) -> ResolvedConfig {
    let pool: Vec<FeatureId> = match config.mode {
        Mode::Tsf => FeatureId::tsf().to_vec(),
        Mode::Hybrid => FeatureId::catch22().collect(),
        Mode::Cif | Mode::CifFast => {
            if config.catch22_only {
                FeatureId::catch22().collect()
            } else {
                FeatureId::all().collect()
            }
        }
    };
    let a = match config.mode {
        Mode::Tsf => 3,
        Mode::Hybrid => features::CATCH22_COUNT,
        Mode::Cif | Mode::CifFast => config.atts_per_tree.min(pool.len()),
    };
    let (num_trees, k) = match config.mode {
        Mode::CifFast => (250, cif_fast_k(m)),
        _ => (
            config.num_trees,
            config.intervals_per_tree.unwrap_or_else(|| default_k(m, d)),
        ),
    };
    ResolvedConfig {
        num_trees,
        k,
        a,
        pool,
        bagging: config.bagging,
        seed: config.seed,
    }
}

fn build_one_tree(
    train: &TimeSeriesDataset,
    labels: &[usize],
    n_classes: usize,
    rc: &ResolvedConfig,
    index: usize,
) -> TrainedTree {
    let n = train.n_instances();
    let m = train.series_len();
    let d = train.dims();
    let seed = tree_seed(rc.seed, index);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bootstrap: Option<Vec<usize>> = rc
        .bagging
        .then(|| (0..n).map(|_| rng.gen_range(0..n)).collect());
    let (intervals, feature_ids) = sample_from_pool(m, d, rc.k, rc.a, &rc.pool, &mut rng);

    // Bootstrap samples repeat instances; evaluate each distinct row once.
    let mut row_cache: Vec<Option<Vec<f64>>> = vec![None; n];
    let mut row_of = |i: usize| -> Vec<f64> {
        row_cache[i]
            .get_or_insert_with(|| attribute_row(&train.instances[i], &intervals, &feature_ids))
            .clone()
    };
    let (rows, tree_labels): (Vec<Vec<f64>>, Vec<usize>) = match &bootstrap {
        Some(picks) => picks.iter().map(|&i| (row_of(i), labels[i])).unzip(),
        None => (0..n).map(|i| (row_of(i), labels[i])).unzip(),
    };
    let root = build_time_series_tree(&rows, &tree_labels, n_classes);
    TrainedTree {
        root,
        intervals,
        features: feature_ids,
        bootstrap_indices: bootstrap,
        tree_seed: seed,
    }
}

fn build_batch<F>(range: std::ops::Range<usize>, build: F) -> Vec<TrainedTree>
where
    F: Fn(usize) -> TrainedTree + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().map(build).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        range.map(build).collect()
    }
}

fn batch_size() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads().max(1)
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

fn validate_dataset(train: &TimeSeriesDataset) -> Result<Vec<usize>, ForestError> {
    if train.n_instances() == 0 {
        return Err(ForestError::EmptyDataset);
    }
    let d = train.dims();
    let m = train.series_len();
    if train
        .instances
        .iter()
        .any(|inst| inst.dims() != d || inst.values.iter().any(|v| v.len() != m))
    {
        return Err(ForestError::RaggedDataset);
    }
    if m < 5 {
        return Err(ForestError::SeriesTooShort { len: m });
    }
    let labels = train.labels()?;
    let n_classes = train.class_labels.len();
    if labels.iter().any(|&l| l >= n_classes) {
        return Err(ForestError::Data(DataError::Invalid(
            "instance label out of range of the dataset's class labels".into(),
        )));
    }
    Ok(labels)
}

/// Fit a forest. Trees are seeded independently from `config.seed`, so the
/// model is identical for any worker count. With a contract, the elapsed
/// time is checked after each completed batch (one tree per worker) and at
/// least one batch is always kept.
pub fn fit(train: &TimeSeriesDataset, config: &CIFConfig) -> Result<CIFModel, ForestError> {
    config.validate()?;
    let labels = validate_dataset(train)?;
    let n_classes = train.class_labels.len();
    let rc = resolve(config, train.series_len(), train.dims());
    let build = |i: usize| build_one_tree(train, &labels, n_classes, &rc, i);

    let trees = match config.contract_minutes {
        None => build_batch(0..rc.num_trees, build),
        Some(minutes) => {
            let deadline = Instant::now() + std::time::Duration::from_secs_f64(minutes * 60.0);
            let mut trees = Vec::with_capacity(rc.num_trees);
            while trees.len() < rc.num_trees {
                let next = (trees.len() + batch_size()).min(rc.num_trees);
                trees.extend(build_batch(trees.len()..next, build));
                if Instant::now() >= deadline {
                    break;
                }
            }
            trees
        }
    };

    Ok(CIFModel {
        config: config.clone(),
        class_labels: train.class_labels.clone(),
        dims: train.dims(),
        series_len: train.series_len(),
        trees,
    })
}

/// Index of the largest value, ties resolved to the lowest index.
fn argmax(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate().skip(1) {
        if v > values[best] {
            best = i;
        }
    }
    best
}

fn walk<'a>(mut node: &'a TreeNode, row: &[f64]) -> &'a [f64] {
    loop {
        match node {
            TreeNode::Leaf { distribution } => return distribution,
            TreeNode::Branch {
                attribute_index,
                threshold,
                left,
                right,
                ..
            } => {
                node = if row[*attribute_index] <= *threshold {
                    left
                } else {
                    right
                };
            }
        }
    }
}

impl CIFModel {
    fn check_shape(&self, instance: &TimeSeriesInstance) -> Result<(), ForestError> {
        if instance.dims() != self.dims || instance.len() != self.series_len {
            return Err(ForestError::ShapeMismatch {
                dims: instance.dims(),
                len: instance.len(),
                model_dims: self.dims,
                model_len: self.series_len,
            });
        }
        Ok(())
    }

    /// One tree's vote on an instance: the argmax of its leaf distribution.
    fn tree_vote(tree: &TrainedTree, instance: &TimeSeriesInstance) -> usize {
        let row = attribute_row(instance, &tree.intervals, &tree.features);
        argmax(walk(&tree.root, &row))
    }

    /// Majority-vote class probabilities: each tree votes its leaf argmax
    /// and the votes are divided by the tree count.
    pub fn predict_proba(&self, instance: &TimeSeriesInstance) -> Result<Vec<f64>, ForestError> {
        self.check_shape(instance)?;
        let mut votes = vec![0usize; self.class_labels.len()];
        for tree in &self.trees {
            votes[Self::tree_vote(tree, instance)] += 1;
        }
        let total = self.trees.len() as f64;
        Ok(votes.iter().map(|&v| v as f64 / total).collect())
    }

    /// Predicted class index: argmax of `predict_proba`, ties to the lowest.
    pub fn predict(&self, instance: &TimeSeriesInstance) -> Result<usize, ForestError> {
        Ok(argmax(&self.predict_proba(instance)?))
    }

    /// Probability vectors for a whole dataset, in instance order.
    pub fn predict_proba_dataset(
        &self,
        data: &TimeSeriesDataset,
    ) -> Result<Vec<Vec<f64>>, ForestError> {
        #[cfg(feature = "parallel")]
        {
            data.instances
                .par_iter()
                .map(|inst| self.predict_proba(inst))
                .collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            data.instances
                .iter()
                .map(|inst| self.predict_proba(inst))
                .collect()
        }
    }

    /// Save as a versioned JSON document.
    pub fn save(&self, path: &Path) -> Result<(), ForestError> {
        let file = ModelFile {
            format: MODEL_FORMAT.to_string(),
            version: MODEL_VERSION,
            model: self.clone(),
        };
        let io_err = |source| ForestError::Io {
            path: path.display().to_string(),
            source,
        };
        let out = std::fs::File::create(path).map_err(io_err)?;
        let mut writer = std::io::BufWriter::new(out);
        serde_json::to_writer(&mut writer, &file)?;
        use std::io::Write as _;
        writer.flush().map_err(io_err)?;
        Ok(())
    }

    /// Load a model saved by [`CIFModel::save`].
    pub fn load(path: &Path) -> Result<CIFModel, ForestError> {
        let text = std::fs::read_to_string(path).map_err(|source| ForestError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let file: ModelFile =
            serde_json::from_str(&text).map_err(|_| ForestError::BadModelFile {
                path: path.display().to_string(),
            })?;
        if file.format != MODEL_FORMAT || file.version != MODEL_VERSION {
            return Err(ForestError::BadModelFile {
                path: path.display().to_string(),
            });
        }
        Ok(file.model)
    }
}

const MODEL_FORMAT: &str = "cif-model";
const MODEL_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct ModelFile {
    format: String,
    version: u32,
    #[serde(flatten)]
    model: CIFModel,
}

/// Out-of-bag accuracy from a bagged forest, paired with a separately built
/// full-data model on the same master seed. Each training case is scored by
/// majority vote of the trees whose bootstrap excluded it; cases present in
/// every bootstrap are left out of the denominator.
pub fn oob_estimate(
    train: &TimeSeriesDataset,
    config: &CIFConfig,
) -> Result<(f64, CIFModel), ForestError> {
    let labels = validate_dataset(train)?;
    let n = train.n_instances();
    if n < 2 {
        return Err(ForestError::InvalidConfig(
            "out-of-bag estimation needs at least 2 instances".into(),
        ));
    }
    let mut bagged_config = config.clone();
    bagged_config.bagging = true;
    let bagged = fit(train, &bagged_config)?;

    let n_classes = train.class_labels.len();
    let vote_one_tree = |tree: &TrainedTree| -> Vec<(usize, usize)> {
        let picks = tree
            .bootstrap_indices
            .as_ref()
            .expect("bagged forest records bootstraps");
        let mut in_bag = vec![false; n];
        for &i in picks {
            in_bag[i] = true;
        }
        (0..n)
            .filter(|&i| !in_bag[i])
            .map(|i| (i, CIFModel::tree_vote(tree, &train.instances[i])))
            .collect()
    };
    #[cfg(feature = "parallel")]
    let tree_votes: Vec<Vec<(usize, usize)>> = bagged.trees.par_iter().map(vote_one_tree).collect();
    #[cfg(not(feature = "parallel"))]
    let tree_votes: Vec<Vec<(usize, usize)>> = bagged.trees.iter().map(vote_one_tree).collect();

    let mut votes = vec![vec![0usize; n_classes]; n];
    for per_tree in &tree_votes {
        for &(case, class) in per_tree {
            votes[case][class] += 1;
        }
    }
    let mut counted = 0usize;
    let mut correct = 0usize;
    for (case, case_votes) in votes.iter().enumerate() {
        if case_votes.iter().all(|&v| v == 0) {
            continue;
        }
        counted += 1;
        let mut best = 0;
        for (c, &v) in case_votes.iter().enumerate().skip(1) {
            if v > case_votes[best] {
                best = c;
            }
        }
        if best == labels[case] {
            correct += 1;
        }
    }
    let estimate = if counted == 0 {
        0.0
    } else {
        correct as f64 / counted as f64
    };

    let mut full_config = config.clone();
    full_config.bagging = false;
    let full_model = fit(train, &full_config)?;
    Ok((estimate, full_model))
}
