//! Synthetic dataset generators for tests, benchmarks, and bundled example
//! data. Every generator is deterministic in its seed, balances the two
//! classes by alternating labels, and marks class signal in a way a single
//! honest baseline can also detect.

use std::ops::Range;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::tsdata::{TimeSeriesDataset, TimeSeriesInstance};

fn dataset(name: &str, instances: Vec<TimeSeriesInstance>) -> TimeSeriesDataset {
    TimeSeriesDataset {
        name: name.to_string(),
        instances,
        class_labels: vec!["0".to_string(), "1".to_string()],
    }
}

fn noise(rng: &mut ChaCha8Rng, m: usize) -> Vec<f64> {
    (0..m).map(|_| StandardNormal.sample(rng)).collect()
}

/// Gaussian noise over `d` dimensions; class 1 additionally shifts the mean
/// of `window` on the last dimension by `delta`. With a comfortable `delta`
/// the window mean separates the classes perfectly, and all other
/// dimensions and time points are uninformative.
pub fn planted_interval_mean(
    n: usize,
    m: usize,
    d: usize,
    window: Range<usize>,
    delta: f64,
    seed: u64,
) -> TimeSeriesDataset {
    assert!(d >= 1 && window.start < window.end && window.end <= m);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let instances = (0..n)
        .map(|i| {
            let label = i % 2;
            let mut values: Vec<Vec<f64>> = (0..d).map(|_| noise(&mut rng, m)).collect();
            if label == 1 {
                for t in window.clone() {
                    values[d - 1][t] += delta;
                }
            }
            TimeSeriesInstance {
                values,
                label: Some(label),
            }
        })
        .collect();
    dataset("planted-interval", instances)
}

/// Class 0 is white noise; class 1 is a stationary AR(1) process with
/// coefficient `phi` and matched marginal variance, so the classes differ
/// in autocorrelation but not in mean or variance.
pub fn white_noise_vs_ar1(n: usize, m: usize, phi: f64, seed: u64) -> TimeSeriesDataset {
    assert!(phi.abs() < 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let innovation_sd = (1.0 - phi * phi).sqrt();
    let instances = (0..n)
        .map(|i| {
            let label = i % 2;
            let series = if label == 0 {
                noise(&mut rng, m)
            } else {
                let mut x = Vec::with_capacity(m);
                let mut prev: f64 = StandardNormal.sample(&mut rng);
                x.push(prev);
                for _ in 1..m {
                    let e: f64 = StandardNormal.sample(&mut rng);
                    prev = phi * prev + innovation_sd * e;
                    x.push(prev);
                }
                x
            };
            TimeSeriesInstance {
                values: vec![series],
                label: Some(label),
            }
        })
        .collect();
    dataset("noise-vs-ar1", instances)
}

/// Random-phase sinusoids whose period depends on the class, plus Gaussian
/// noise of standard deviation `noise_sd`.
pub fn sine_wavelength_pair(
    n: usize,
    m: usize,
    period0: f64,
    period1: f64,
    noise_sd: f64,
    seed: u64,
) -> TimeSeriesDataset {
    assert!(period0 > 0.0 && period1 > 0.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let instances = (0..n)
        .map(|i| {
            let label = i % 2;
            let period = if label == 0 { period0 } else { period1 };
            let phase = rng.gen_range(0.0..std::f64::consts::TAU);
            let series = (0..m)
                .map(|t| {
                    let e: f64 = StandardNormal.sample(&mut rng);
                    (std::f64::consts::TAU * t as f64 / period + phase).sin() + noise_sd * e
                })
                .collect();
            TimeSeriesInstance {
                values: vec![series],
                label: Some(label),
            }
        })
        .collect();
    dataset("sine-wavelength", instances)
}

/// Class 0 is standard Gaussian noise; class 1 is Laplace noise scaled to
/// unit variance, so the classes differ only in tail weight.
pub fn gaussian_vs_laplace(n: usize, m: usize, seed: u64) -> TimeSeriesDataset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = 1.0 / 2.0_f64.sqrt();
    let instances = (0..n)
        .map(|i| {
            let label = i % 2;
            let series = if label == 0 {
                noise(&mut rng, m)
            } else {
                (0..m)
                    .map(|_| {
                        let u: f64 = rng.gen_range(-0.5..0.5);
                        -b * u.signum() * (1.0 - 2.0 * u.abs()).ln()
                    })
                    .collect()
            };
            TimeSeriesInstance {
                values: vec![series],
                label: Some(label),
            }
        })
        .collect();
    dataset("gauss-vs-laplace", instances)
}
