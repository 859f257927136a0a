//! Temporal importance curves: per-feature, per-time-point accumulation of
//! split information gain across the forest.

use std::io::Write;
use std::path::Path;

use crate::features::{FeatureId, FEATURE_COUNT};
use crate::forest::{CIFModel, TreeNode};

/// Accumulated split gain, indexed `[dimension][feature][time]`. The mean
/// curve averages every (dimension, feature) curve at each time point.
#[derive(Debug, Clone, PartialEq)]
pub struct TemporalImportanceCurves {
    pub curves: Vec<Vec<Vec<f64>>>,
    pub mean_curve: Vec<f64>,
    pub feature_names: Vec<&'static str>,
    pub dims: usize,
    pub series_len: usize,
}

impl TemporalImportanceCurves {
    /// Total accumulated gain mass, which equals the sum over internal
    /// nodes of gain times interval length.
    pub fn mass(&self) -> f64 {
        self.curves
            .iter()
            .flat_map(|per_dim| per_dim.iter())
            .map(|curve| curve.iter().sum::<f64>())
            .sum()
    }

    /// Gain mass attributed to one dimension's intervals.
    pub fn dimension_mass(&self, dimension: usize) -> f64 {
        self.curves[dimension]
            .iter()
            .map(|curve| curve.iter().sum::<f64>())
            .sum()
    }

    /// Write the curves as CSV: a `feature,0,1,...,m-1` header, one
    /// `dim{d}:{name}` row per (dimension, feature), and a final `mean` row.
    pub fn write_csv(&self, path: &Path) -> std::io::Result<()> {
        let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
        write!(out, "feature")?;
        for t in 0..self.series_len {
            write!(out, ",{t}")?;
        }
        writeln!(out)?;
        for (dim, per_dim) in self.curves.iter().enumerate() {
            for (f, curve) in per_dim.iter().enumerate() {
                write!(out, "dim{dim}:{}", self.feature_names[f])?;
                for v in curve {
                    write!(out, ",{v}")?;
                }
                writeln!(out)?;
            }
        }
        write!(out, "mean")?;
        for v in &self.mean_curve {
            write!(out, ",{v}")?;
        }
        writeln!(out)?;
        out.flush()
    }
}

/// Walk every internal node of every tree, decode its attribute column to
/// an (interval, feature) pair, and add the node's gain to that feature's
/// curve at every time point the interval covers.
pub fn temporal_importance(model: &CIFModel) -> TemporalImportanceCurves {
    let m = model.series_len;
    let d = model.dims;
    let mut curves = vec![vec![vec![0.0; m]; FEATURE_COUNT]; d];
    for tree in &model.trees {
        let atts = tree.features.len();
        let mut stack = vec![&tree.root];
        while let Some(node) = stack.pop() {
            if let TreeNode::Branch {
                attribute_index,
                gain,
                left,
                right,
                ..
            } = node
            {
                let interval = &tree.intervals[attribute_index / atts];
                let feature = tree.features[attribute_index % atts];
                let curve = &mut curves[interval.dimension][feature.index()];
                for value in &mut curve[interval.start..interval.start + interval.length] {
                    *value += gain;
                }
                stack.push(left);
                stack.push(right);
            }
        }
    }
    let rows = (d * FEATURE_COUNT) as f64;
    let mean_curve = (0..m)
        .map(|t| {
            curves
                .iter()
                .flat_map(|per_dim| per_dim.iter())
                .map(|curve| curve[t])
                .sum::<f64>()
                / rows
        })
        .collect();
    TemporalImportanceCurves {
        curves,
        mean_curve,
        feature_names: FeatureId::all().map(FeatureId::name).collect(),
        dims: d,
        series_len: m,
    }
}

/// The `v` features with the largest max-over-time (and over dimensions)
/// curve value, descending; ties fall to the lower feature id, and `v` is
/// clamped to the feature count.
pub fn top_features(curves: &TemporalImportanceCurves, v: usize) -> Vec<FeatureId> {
    let peak = |f: usize| -> f64 {
        curves
            .curves
            .iter()
            .flat_map(|per_dim| per_dim[f].iter())
            .fold(0.0_f64, |acc, &x| acc.max(x))
    };
    let mut order: Vec<usize> = (0..FEATURE_COUNT).collect();
    order.sort_by(|&a, &b| peak(b).partial_cmp(&peak(a)).unwrap().then(a.cmp(&b)));
    order
        .into_iter()
        .take(v.min(FEATURE_COUNT))
        .map(|i| FeatureId::new(i).unwrap())
        .collect()
}
