//! Canonical Interval Forest (CIF): an interval-based random forest for
//! (possibly multivariate) time series classification.
//!
//! Each tree samples `k` random intervals and `a` of 25 candidate features
//! (the 22 canonical catch22 characteristics plus mean, standard deviation
//! and slope), extracts an `n x (a*k)` attribute matrix, and grows an
//! information-gain tree on it. The crate also provides out-of-bag accuracy
//! estimation, time-contracted training, temporal importance curves, and a
//! small evaluation harness (stratified resamples, metrics, Wilcoxon
//! signed-rank tests with Holm correction).

pub mod eval;
pub mod features;
pub mod forest;
pub mod interpret;
pub mod synth;
pub mod tsdata;
