//! Ports of the 22 canonical time-series characteristics (catch22).
//!
//! Each kernel reproduces the reference C implementation's arithmetic,
//! including its edge-case conventions (sample standard deviation, linspace
//! by repeated addition, delimiter-based stretch lengths), so outputs agree
//! with the reference to floating-point noise. Degenerate inputs propagate
//! NaN exactly where the reference does; callers sanitise non-finite values.

// Index-based loops below mirror the reference line by line on purpose.
#![allow(clippy::needless_range_loop)]

use super::acf;

/// Shared per-window state so kernels that need the FFT autocorrelation
/// compute it once.
pub struct Ctx<'a> {
    y: &'a [f64],
    acf: Option<Vec<f64>>,
}

impl<'a> Ctx<'a> {
    pub fn new(y: &'a [f64]) -> Self {
        Ctx { y, acf: None }
    }

    fn acf(&mut self) -> &[f64] {
        if self.acf.is_none() {
            self.acf = Some(acf::autocorr(self.y));
        }
        self.acf.as_deref().unwrap()
    }

    fn first_zero_y(&mut self, maxtau: usize) -> usize {
        let a = self.acf();
        acf::first_zero(a, maxtau)
    }
}

// ---------------------------------------------------------------------------
// helpers
// ---------------------------------------------------------------------------

fn mean(a: &[f64]) -> f64 {
    a.iter().sum::<f64>() / a.len() as f64
}

/// Sample standard deviation (n-1 denominator), as used by the kernels.
fn stddev(a: &[f64]) -> f64 {
    let m = mean(a);
    let sd: f64 = a.iter().map(|&v| (v - m) * (v - m)).sum();
    (sd / (a.len() as f64 - 1.0)).sqrt()
}

fn cov(x: &[f64], y: &[f64]) -> f64 {
    let mx = mean(x);
    let my = mean(y);
    let c: f64 = x.iter().zip(y).map(|(&a, &b)| (a - mx) * (b - my)).sum();
    c / (x.len() as f64 - 1.0)
}

fn cov_mean(x: &[f64], y: &[f64]) -> f64 {
    let c: f64 = x.iter().zip(y).map(|(&a, &b)| a * b).sum();
    c / (x.len() as f64)
}

fn corr(x: &[f64], y: &[f64]) -> f64 {
    let mx = mean(x);
    let my = mean(y);
    let mut nom = 0.0;
    let mut dx = 0.0;
    let mut dy = 0.0;
    for (&a, &b) in x.iter().zip(y) {
        nom += (a - mx) * (b - my);
        dx += (a - mx) * (a - mx);
        dy += (b - my) * (b - my);
    }
    nom / (dx * dy).sqrt()
}

fn autocorr_lag(x: &[f64], lag: usize) -> f64 {
    corr(&x[..x.len() - lag], &x[lag..])
}

fn autocov_lag(x: &[f64], lag: usize) -> f64 {
    cov_mean(&x[..x.len() - lag], &x[lag..])
}

fn min_(a: &[f64]) -> f64 {
    a.iter()
        .skip(1)
        .fold(a[0], |m, &v| if v < m { v } else { m })
}

fn max_(a: &[f64]) -> f64 {
    a.iter()
        .skip(1)
        .fold(a[0], |m, &v| if v > m { v } else { m })
}

fn norm_eucl(a: &[f64]) -> f64 {
    a.iter().map(|&v| v * v).sum::<f64>().sqrt()
}

fn sorted(a: &[f64]) -> Vec<f64> {
    let mut b = a.to_vec();
    b.sort_unstable_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
    b
}

fn median(a: &[f64]) -> f64 {
    let b = sorted(a);
    let n = b.len();
    if n % 2 == 1 {
        b[n / 2]
    } else {
        (b[n / 2] + b[n / 2 - 1]) / 2.0
    }
}

/// Linearly spaced values by repeated addition, so the endpoint accumulates
/// rounding (e.g. the last of four points on [0, 1] is 0.9999999999999999).
fn linspace(start: f64, end: f64, n: usize) -> Vec<f64> {
    let step = (end - start) / (n as f64 - 1.0);
    let mut cur = start;
    (0..n)
        .map(|_| {
            let v = cur;
            cur += step;
            v
        })
        .collect()
}

fn quantile(y: &[f64], quant: f64) -> f64 {
    let tmp = sorted(y);
    let n = tmp.len();
    let q = 0.5 / n as f64;
    if quant < q {
        return tmp[0];
    }
    if quant > 1.0 - q {
        return tmp[n - 1];
    }
    let quant_idx = n as f64 * quant - 0.5;
    let l = quant_idx.floor() as usize;
    let r = quant_idx.ceil() as usize;
    if l == r {
        return tmp[l];
    }
    tmp[l] + (quant_idx - l as f64) * (tmp[r] - tmp[l]) / (r - l) as f64
}

fn f_entropy(a: &[f64]) -> f64 {
    -a.iter()
        .filter(|&&v| v > 0.0)
        .map(|&v| v * v.ln())
        .sum::<f64>()
}

fn linreg(x: &[f64], y: &[f64]) -> (f64, f64) {
    let n = x.len() as f64;
    let mut sumx = 0.0;
    let mut sumx2 = 0.0;
    let mut sumxy = 0.0;
    let mut sumy = 0.0;
    for (&a, &b) in x.iter().zip(y) {
        sumx += a;
        sumx2 += a * a;
        sumxy += a * b;
        sumy += b;
    }
    let denom = n * sumx2 - sumx * sumx;
    if denom == 0.0 {
        return (0.0, 0.0);
    }
    let m = (n * sumxy - sumx * sumy) / denom;
    let b = (sumy * sumx2 - sumx * sumxy) / denom;
    (m, b)
}

/// Fixed-width histogram; values clamp into the edge bins.
fn histcounts(y: &[f64], n_bins: usize) -> (Vec<i64>, Vec<f64>) {
    let min_val = min_(y);
    let max_val = max_(y);
    let bin_step = (max_val - min_val) / n_bins as f64;
    let mut counts = vec![0i64; n_bins];
    for &v in y {
        let mut idx = ((v - min_val) / bin_step) as isize;
        if idx < 0 {
            idx = 0;
        }
        if idx >= n_bins as isize {
            idx = n_bins as isize - 1;
        }
        counts[idx as usize] += 1;
    }
    let edges = (0..=n_bins)
        .map(|i| i as f64 * bin_step + min_val)
        .collect();
    (counts, edges)
}

fn num_bins_auto(y: &[f64]) -> usize {
    if stddev(y) < 0.001 {
        return 0;
    }
    let w = 3.5 * stddev(y) / (y.len() as f64).powf(1.0 / 3.0);
    ((max_(y) - min_(y)) / w).ceil() as usize
}

/// Index of the first edge strictly greater than the value; 0 if none.
fn histbin_assign(y: &[f64], edges: &[f64]) -> Vec<usize> {
    y.iter()
        .map(|&v| edges.iter().position(|&e| v < e).unwrap_or(0))
        .collect()
}

/// Count values at the first edge greater than or equal to them.
fn histcount_edges(y: &[f64], edges: &[f64]) -> Vec<i64> {
    let mut counts = vec![0i64; edges.len()];
    for &v in y {
        if let Some(j) = edges.iter().position(|&e| v <= e) {
            counts[j] += 1;
        }
    }
    counts
}

/// Quantile coarse-graining into labels 1..=3.
fn coarsegrain3(y: &[f64]) -> Vec<usize> {
    let ls = linspace(0.0, 1.0, 4);
    let mut th: Vec<f64> = ls.iter().map(|&q| quantile(y, q)).collect();
    th[0] -= 1.0;
    let mut labels = vec![0usize; y.len()];
    for i in 0..3 {
        for (j, &v) in y.iter().enumerate() {
            if v > th[i] && v <= th[i + 1] {
                labels[j] = i + 1;
            }
        }
    }
    labels
}

// ---------------------------------------------------------------------------
// kernels
// ---------------------------------------------------------------------------

fn histogram_mode(y: &[f64], n_bins: usize) -> f64 {
    let (counts, edges) = histcounts(y, n_bins);
    let mut max_count = 0.0f64;
    let mut num_maxs = 1usize;
    let mut out = 0.0f64;
    for i in 0..n_bins {
        let c = counts[i] as f64;
        if c > max_count {
            max_count = c;
            num_maxs = 1;
            out = (edges[i] + edges[i + 1]) * 0.5;
        } else if c == max_count {
            num_maxs += 1;
            out += (edges[i] + edges[i + 1]) * 0.5;
        }
    }
    out / num_maxs as f64
}

pub fn dn_histogram_mode_5(y: &[f64]) -> f64 {
    histogram_mode(y, 5)
}

pub fn dn_histogram_mode_10(y: &[f64]) -> f64 {
    histogram_mode(y, 10)
}

pub fn co_f1ecac(ctx: &mut Ctx) -> f64 {
    let size = ctx.y.len();
    let acf = ctx.acf();
    let thresh = 1.0 / std::f64::consts::E;
    for i in 0..size.saturating_sub(2) {
        if acf[i + 1] < thresh {
            let m = acf[i + 1] - acf[i];
            return i as f64 + (thresh - acf[i]) / m;
        }
    }
    size as f64
}

pub fn co_first_min_ac(ctx: &mut Ctx) -> f64 {
    let size = ctx.y.len();
    let acf = ctx.acf();
    for i in 1..size.saturating_sub(1) {
        if acf[i] < acf[i - 1] && acf[i] < acf[i + 1] {
            return i as f64;
        }
    }
    size as f64
}

pub fn co_trev_1_num(y: &[f64]) -> f64 {
    let diffs: Vec<f64> = y.windows(2).map(|w| (w[1] - w[0]).powi(3)).collect();
    mean(&diffs)
}

pub fn co_histogram_ami_even_2_5(y: &[f64]) -> f64 {
    let size = y.len();
    let tau = 2usize;
    if size <= tau {
        return f64::NAN;
    }
    let y1 = &y[..size - tau];
    let y2 = &y[tau..];
    let max_value = max_(y);
    let min_value = min_(y);
    let bin_step = (max_value - min_value + 0.2) / 5.0;
    let edges: Vec<f64> = (0..6)
        .map(|i| min_value + bin_step * i as f64 - 0.1)
        .collect();
    let bins1 = histbin_assign(y1, &edges);
    let bins2 = histbin_assign(y2, &edges);
    let bins12: Vec<f64> = bins1
        .iter()
        .zip(&bins2)
        .map(|(&b1, &b2)| (b1 as f64 - 1.0) * 6.0 + b2 as f64)
        .collect();
    let edges12: Vec<f64> = (0..36).map(|i| (i + 1) as f64).collect();
    let joint = histcount_edges(&bins12, &edges12);
    // transpose into 5x5, dropping the overflow row/column
    let mut pij = [[0.0f64; 5]; 5];
    let mut sum_bins = 0i64;
    for i in 0..5 {
        for j in 0..5 {
            pij[j][i] = joint[i * 6 + j] as f64;
            sum_bins += joint[i * 6 + j];
        }
    }
    for row in pij.iter_mut() {
        for v in row.iter_mut() {
            *v /= sum_bins as f64;
        }
    }
    let mut pi = [0.0f64; 5];
    let mut pj = [0.0f64; 5];
    for i in 0..5 {
        for j in 0..5 {
            pi[i] += pij[i][j];
            pj[j] += pij[i][j];
        }
    }
    let mut ami = 0.0;
    for i in 0..5 {
        for j in 0..5 {
            if pij[i][j] > 0.0 {
                ami += pij[i][j] * (pij[i][j] / (pj[j] * pi[i])).ln();
            }
        }
    }
    ami
}

pub fn co_embed2_dist_tau_d_expfit_meandiff(ctx: &mut Ctx) -> f64 {
    let y = ctx.y;
    let size = y.len();
    let mut tau = ctx.first_zero_y(size);
    if tau as f64 > size as f64 / 10.0 {
        tau = (size as f64 / 10.0).floor() as usize;
    }
    if size < tau + 2 {
        return f64::NAN;
    }
    let n_d = size - tau - 1;
    let d: Vec<f64> = (0..n_d)
        .map(|i| {
            let a = y[i + 1] - y[i];
            let b = y[i + tau] - y[i + tau + 1];
            (a * a + b * b).sqrt()
        })
        .collect();
    let l = mean(&d);
    let n_bins = num_bins_auto(&d);
    if n_bins == 0 {
        return 0.0;
    }
    let (counts, edges) = histcounts(&d, n_bins);
    let mut diffs = Vec::with_capacity(n_bins);
    for i in 0..n_bins {
        let norm = counts[i] as f64 / n_d as f64;
        let mut expf = (-(edges[i] + edges[i + 1]) * 0.5 / l).exp() / l;
        if expf < 0.0 {
            expf = 0.0;
        }
        diffs.push((norm - expf).abs());
    }
    mean(&diffs)
}

pub fn in_auto_mutual_info_stats_40_gaussian_fmmi(y: &[f64]) -> f64 {
    let size = y.len();
    let mut tau = 40usize;
    let half = (size as f64 / 2.0).ceil() as usize;
    if tau > half {
        tau = half;
    }
    let ami: Vec<f64> = (0..tau)
        .map(|i| {
            let ac = autocorr_lag(y, i + 1);
            -0.5 * (1.0 - ac * ac).ln()
        })
        .collect();
    for i in 1..tau.saturating_sub(1) {
        if ami[i] < ami[i - 1] && ami[i] < ami[i + 1] {
            return i as f64;
        }
    }
    tau as f64
}

pub fn md_hrv_classic_pnn40(y: &[f64]) -> f64 {
    let count = y
        .windows(2)
        .filter(|w| (w[1] - w[0]).abs() * 1000.0 > 40.0)
        .count();
    count as f64 / (y.len() as f64 - 1.0)
}

/// Longest run length measured as the distance between delimiter positions,
/// scanning the binarised series with its last element excluded.
fn longstretch(y_bin: &[usize], delimiter: usize) -> f64 {
    let n_bin = y_bin.len();
    let mut max_stretch = 0isize;
    let mut last = 0isize;
    for (i, &b) in y_bin.iter().enumerate() {
        if b == delimiter || i == n_bin - 1 {
            let stretch = i as isize - last;
            if stretch > max_stretch {
                max_stretch = stretch;
            }
            last = i as isize;
        }
    }
    max_stretch as f64
}

pub fn sb_binary_stats_mean_longstretch1(y: &[f64]) -> f64 {
    let m = mean(y);
    let y_bin: Vec<usize> = y[..y.len() - 1]
        .iter()
        .map(|&v| if v - m <= 0.0 { 0 } else { 1 })
        .collect();
    longstretch(&y_bin, 0)
}

pub fn sb_binary_stats_diff_longstretch0(y: &[f64]) -> f64 {
    let y_bin: Vec<usize> = y
        .windows(2)
        .map(|w| if w[1] - w[0] < 0.0 { 0 } else { 1 })
        .collect();
    longstretch(&y_bin, 1)
}

pub fn sb_motif_three_quantile_hh(y: &[f64]) -> f64 {
    let size = y.len();
    let yt = coarsegrain3(y);
    let mut hh = 0.0;
    for i in 0..3 {
        let mut r1: Vec<usize> = (0..size).filter(|&j| yt[j] == i + 1).collect();
        if r1.last() == Some(&(size - 1)) {
            r1.pop();
        }
        let mut out_row = [0.0f64; 3];
        for (j, out) in out_row.iter_mut().enumerate() {
            let count = r1.iter().filter(|&&k| yt[k + 1] == j + 1).count();
            *out = count as f64 / (size as f64 - 1.0);
        }
        hh += f_entropy(&out_row);
    }
    hh
}

pub fn sb_transition_matrix_3ac_sumdiagcov(ctx: &mut Ctx) -> f64 {
    let y = ctx.y;
    let size = y.len();
    if y.iter().all(|&v| v == y[0]) {
        return f64::NAN;
    }
    let tau = ctx.first_zero_y(size);
    let n_down = (size - 1) / tau + 1;
    let y_down: Vec<f64> = (0..n_down).map(|i| y[i * tau]).collect();
    let y_cg = coarsegrain3(&y_down);
    let mut t = [[0.0f64; 3]; 3];
    for j in 0..n_down - 1 {
        t[y_cg[j] - 1][y_cg[j + 1] - 1] += 1.0;
    }
    for row in t.iter_mut() {
        for v in row.iter_mut() {
            *v /= n_down as f64 - 1.0;
        }
    }
    let mut sum_diag = 0.0;
    for i in 0..3 {
        let col = [t[0][i], t[1][i], t[2][i]];
        sum_diag += cov(&col, &col);
    }
    sum_diag
}

pub fn dn_outlier_include_np_001_mdrmd(y: &[f64], sign: f64) -> f64 {
    let size = y.len();
    let inc = 0.01;
    if y.iter().all(|&v| v == y[0]) {
        return 0.0;
    }
    let y_work: Vec<f64> = y.iter().map(|&v| sign * v).collect();
    let tot = y_work.iter().filter(|&&v| v >= 0.0).count();
    let max_val = max_(&y_work);
    if max_val < inc {
        return 0.0;
    }
    let n_thresh = (max_val / inc + 1.0) as usize;
    let mut ms_dti1 = Vec::with_capacity(n_thresh);
    let mut ms_dti3 = Vec::with_capacity(n_thresh);
    let mut ms_dti4 = Vec::with_capacity(n_thresh);
    for j in 0..n_thresh {
        let r: Vec<f64> = (0..size)
            .filter(|&i| y_work[i] >= j as f64 * inc)
            .map(|i| (i + 1) as f64)
            .collect();
        let dt_exc: Vec<f64> = r.windows(2).map(|w| w[1] - w[0]).collect();
        ms_dti1.push(mean(&dt_exc));
        ms_dti3.push((r.len() as f64 - 1.0) * 100.0 / tot as f64);
        ms_dti4.push(median(&r) / (size as f64 / 2.0) - 1.0);
    }
    let mut mj = 0usize;
    let mut fbi = n_thresh - 1;
    for i in 0..n_thresh {
        if ms_dti3[i] > 2.0 {
            mj = i;
        }
        if ms_dti1[n_thresh - 1 - i].is_nan() {
            fbi = n_thresh - 1 - i;
        }
    }
    let trim_limit = mj.min(fbi);
    median(&ms_dti4[..=trim_limit])
}

pub fn fc_local_simple_mean1_tauresrat(ctx: &mut Ctx) -> f64 {
    let y = ctx.y;
    let res: Vec<f64> = y.windows(2).map(|w| w[1] - w[0]).collect();
    let res_acf = acf::autocorr(&res);
    let res_fz = acf::first_zero(&res_acf, res.len());
    let y_fz = ctx.first_zero_y(y.len());
    res_fz as f64 / y_fz as f64
}

pub fn fc_local_simple_mean3_stderr(y: &[f64]) -> f64 {
    let size = y.len();
    if size < 4 {
        return f64::NAN;
    }
    let res: Vec<f64> = (0..size - 3)
        .map(|i| y[i + 3] - mean(&y[i..i + 3]))
        .collect();
    stddev(&res)
}

pub fn sp_summaries_welch_rect(y: &[f64], centroid: bool) -> f64 {
    use super::acf::Cplx;
    let size = y.len();
    if size < 2 {
        return f64::NAN;
    }
    let n_fft = size.next_power_of_two();
    let m = mean(y);
    // single rectangular window over the whole series
    let kmu = {
        let n = (size as f64).sqrt();
        n * n
    };
    let mut buf: Vec<Cplx> = y
        .iter()
        .map(|&v| Cplx::new(v - m, 0.0))
        .chain(std::iter::repeat(Cplx::new(0.0, 0.0)))
        .take(n_fft)
        .collect();
    acf::fft_in_place(&mut buf);
    let n_out = n_fft / 2 + 1;
    let mut pxx = Vec::with_capacity(n_out);
    for (i, v) in buf.iter().take(n_out).enumerate() {
        let mut p = v.abs().powi(2) / kmu;
        if i > 0 && i < n_out - 1 {
            p *= 2.0;
        }
        pxx.push(p);
    }
    // Truncated on purpose; see features::acf::PI_REF.
    #[allow(clippy::approx_constant)]
    const PI_REF: f64 = 3.14159265359;
    let w: Vec<f64> = (0..n_out)
        .map(|i| 2.0 * PI_REF * (i as f64 / n_fft as f64))
        .collect();
    let sw: Vec<f64> = pxx.iter().map(|&p| p / (2.0 * PI_REF)).collect();
    if sw.iter().any(|v| v.is_infinite()) {
        return 0.0;
    }
    let dw = w[1] - w[0];
    let mut cs = Vec::with_capacity(n_out);
    let mut acc = 0.0;
    for &v in &sw {
        acc += v;
        cs.push(acc);
    }
    if centroid {
        let thresh = cs[n_out - 1] * 0.5;
        for i in 0..n_out {
            if cs[i] > thresh {
                return w[i];
            }
        }
        0.0
    } else {
        sw[..n_out / 5].iter().sum::<f64>() * dw
    }
}

pub fn sc_fluct_anal_2_50_1_logi_prop_r1(y: &[f64], lag: usize, dfa: bool) -> f64 {
    let size = y.len();
    let lin_low = 5.0f64.ln();
    let lin_high = ((size / 2) as f64).ln();
    let n_tau_steps = 50usize;
    let tau_step = (lin_high - lin_low) / (n_tau_steps as f64 - 1.0);
    let mut tau: Vec<i64> = (0..n_tau_steps)
        .map(|i| (lin_low + i as f64 * tau_step).exp().round() as i64)
        .collect();
    tau.dedup();
    let n_tau = tau.len();
    if n_tau < 12 {
        return 0.0;
    }
    let size_cs = size / lag;
    let mut y_cs = Vec::with_capacity(size_cs);
    y_cs.push(y[0]);
    for i in 0..size_cs - 1 {
        y_cs.push(y_cs[i] + y[(i + 1) * lag]);
    }
    let x_reg: Vec<f64> = (1..=tau[n_tau - 1] as usize).map(|v| v as f64).collect();
    let mut f = Vec::with_capacity(n_tau);
    for &t in &tau {
        let t = t as usize;
        let n_buffer = size_cs / t;
        let mut fi = 0.0;
        for j in 0..n_buffer {
            let seg = &y_cs[j * t..(j + 1) * t];
            let (m, b) = linreg(&x_reg[..t], seg);
            let buffer: Vec<f64> = (0..t).map(|k| seg[k] - (m * (k + 1) as f64 + b)).collect();
            if dfa {
                fi += buffer.iter().map(|&v| v * v).sum::<f64>();
            } else {
                fi += (max_(&buffer) - min_(&buffer)).powi(2);
            }
        }
        if dfa {
            f.push((fi / (n_buffer * t) as f64).sqrt());
        } else {
            f.push((fi / n_buffer as f64).sqrt());
        }
    }
    let logtt: Vec<f64> = tau.iter().map(|&t| (t as f64).ln()).collect();
    let logff: Vec<f64> = f.iter().map(|&v| v.ln()).collect();
    let ntt = n_tau;
    let min_points = 6usize;
    let n_sserr = ntt - 2 * min_points + 1;
    let mut sserr = Vec::with_capacity(n_sserr);
    for i in min_points..ntt - min_points + 1 {
        let (m1, b1) = linreg(&logtt[..i], &logff[..i]);
        let (m2, b2) = linreg(&logtt[i - 1..], &logff[i - 1..]);
        let buf1: Vec<f64> = (0..i).map(|j| logtt[j] * m1 + b1 - logff[j]).collect();
        let buf2: Vec<f64> = (i - 1..ntt)
            .map(|j| logtt[j] * m2 + b2 - logff[j])
            .collect();
        sserr.push(norm_eucl(&buf1) + norm_eucl(&buf2));
    }
    let minimum = min_(&sserr);
    let mut first_min_ind = 0.0;
    for (i, &v) in sserr.iter().enumerate() {
        if v == minimum {
            first_min_ind = (i + min_points - 1) as f64;
            break;
        }
    }
    (first_min_ind + 1.0) / ntt as f64
}

pub fn sc_fluct_anal_rsrangefit(y: &[f64]) -> f64 {
    sc_fluct_anal_2_50_1_logi_prop_r1(y, 1, false)
}

pub fn sc_fluct_anal_dfa(y: &[f64]) -> f64 {
    sc_fluct_anal_2_50_1_logi_prop_r1(y, 2, true)
}

pub fn pd_periodicity_wang_th0_01(y: &[f64]) -> f64 {
    let size = y.len();
    if size < 4 {
        return 0.0;
    }
    let y_spline = splinefit(y);
    let y_sub: Vec<f64> = y.iter().zip(&y_spline).map(|(&a, &b)| a - b).collect();
    let acmax = (size as f64 / 3.0).ceil() as usize;
    let acf: Vec<f64> = (1..=acmax).map(|t| autocov_lag(&y_sub, t)).collect();
    let mut troughs = Vec::new();
    let mut peaks = Vec::new();
    for i in 1..acmax.saturating_sub(1) {
        let slope_in = acf[i] - acf[i - 1];
        let slope_out = acf[i + 1] - acf[i];
        if slope_in < 0.0 && slope_out > 0.0 {
            troughs.push(i);
        } else if slope_in > 0.0 && slope_out < 0.0 {
            peaks.push(i);
        }
    }
    for &i_peak in &peaks {
        let the_peak = acf[i_peak];
        let n_before = troughs.iter().take_while(|&&t| t < i_peak).count();
        if n_before == 0 {
            continue;
        }
        let the_trough = acf[troughs[n_before - 1]];
        if the_peak - the_trough < 0.01 {
            continue;
        }
        if the_peak < 0.0 {
            continue;
        }
        return i_peak as f64;
    }
    0.0
}

/// Cubic spline fit with a single interior knot at floor(n/2)-1, solved by
/// unpivoted normal equations exactly as the reference does.
fn splinefit(y: &[f64]) -> Vec<f64> {
    const DEG: usize = 3;
    const N_SPLINE: usize = 4;
    const PIECES_EXT: usize = 8;
    let size = y.len();
    let breaks: [i64; 3] = [0, (size as f64 / 2.0).floor() as i64 - 1, size as i64 - 1];

    let h0 = [breaks[1] - breaks[0], breaks[2] - breaks[1]];
    let h_copy = [h0[0], h0[1], h0[0], h0[1]];
    let hl = [h_copy[DEG], h_copy[DEG - 1], h_copy[DEG - 2]];
    let mut hl_cs = [0i64; DEG];
    hl_cs[0] = hl[0];
    for i in 1..DEG {
        hl_cs[i] = hl_cs[i - 1] + hl[i];
    }
    let hr = [h_copy[0], h_copy[1], h_copy[2]];
    let mut hr_cs = [0i64; DEG];
    hr_cs[0] = hr[0];
    for i in 1..DEG {
        hr_cs[i] = hr_cs[i - 1] + hr[i];
    }
    let mut breaks_ext = [0i64; 3 * DEG];
    for i in 0..DEG {
        breaks_ext[i] = breaks[0] - hl_cs[DEG - 1 - i];
        breaks_ext[i + 3] = breaks[i];
        breaks_ext[i + 6] = breaks[2] + hr_cs[i];
    }
    let mut h_ext = [0i64; 3 * DEG - 1];
    for i in 0..3 * DEG - 1 {
        h_ext[i] = breaks_ext[i + 1] - breaks_ext[i];
    }

    let n_rows = N_SPLINE * PIECES_EXT;
    let mut coefs = vec![[0.0f64; N_SPLINE]; n_rows];
    for i in (0..n_rows).step_by(N_SPLINE) {
        coefs[i][0] = 1.0;
    }
    let h: Vec<f64> = (0..n_rows)
        .map(|i| h_ext[(i % N_SPLINE + i / N_SPLINE).min(PIECES_EXT - 1)] as f64)
        .collect();

    let mut q = [[0.0f64; PIECES_EXT]; N_SPLINE];
    for k in 1..N_SPLINE {
        for j in 0..k {
            for (l, row) in coefs.iter_mut().enumerate() {
                row[j] *= h[l] / (k - j) as f64;
            }
        }
        for (l, row) in coefs.iter().enumerate() {
            q[l % N_SPLINE][l / N_SPLINE] = row.iter().sum();
        }
        for l in 0..PIECES_EXT {
            for m in 1..N_SPLINE {
                q[m][l] += q[m - 1][l];
            }
        }
        for (l, row) in coefs.iter_mut().enumerate() {
            row[k] = if l % N_SPLINE == 0 {
                0.0
            } else {
                q[l % N_SPLINE - 1][l / N_SPLINE]
            };
        }
        for (l, row) in coefs.iter_mut().enumerate() {
            let fmax = q[N_SPLINE - 1][l / N_SPLINE];
            for v in row.iter_mut().take(k + 1) {
                *v /= fmax;
            }
        }
        for i in 0..n_rows - DEG {
            for j in 0..k + 1 {
                let ahead = coefs[DEG + i][j];
                coefs[i][j] -= ahead;
            }
        }
        for i in (0..n_rows).step_by(N_SPLINE) {
            coefs[i][k] = 0.0;
        }
    }
    let mut scale = vec![1.0f64; n_rows];
    for k in 0..N_SPLINE - 1 {
        for i in 0..n_rows {
            scale[i] /= h[i];
        }
        for i in 0..n_rows {
            coefs[i][(N_SPLINE - 1) - (k + 1)] *= scale[i];
        }
    }

    // gather the two active pieces: rows 4,7,10,13 and 8,11,14,17 (1-based)
    let jj = [[4usize, 8], [7, 11], [10, 14], [13, 17]];
    let mut coefs_out = [[0.0f64; N_SPLINE]; N_SPLINE * 2];
    for (i, row) in coefs_out.iter_mut().enumerate() {
        *row = coefs[jj[i % N_SPLINE][i / N_SPLINE] - 1];
    }

    // evaluate the B-spline basis at every sample position
    let mut xs_b = vec![0i64; size * N_SPLINE];
    let mut index_b = vec![0usize; size * N_SPLINE];
    let mut break_ind = 1usize;
    for i in 0..size {
        if i as i64 >= breaks[break_ind] && break_ind < 2 {
            break_ind += 1;
        }
        for j in 0..N_SPLINE {
            xs_b[i * N_SPLINE + j] = i as i64 - breaks[break_ind - 1];
            index_b[i * N_SPLINE + j] = j + (break_ind - 1) * N_SPLINE;
        }
    }
    let mut v_b: Vec<f64> = index_b.iter().map(|&ib| coefs_out[ib][0]).collect();
    for i in 1..N_SPLINE {
        for j in 0..size * N_SPLINE {
            v_b[j] = v_b[j] * xs_b[j] as f64 + coefs_out[index_b[j]][i];
        }
    }

    let n_cols = N_SPLINE + 1;
    let mut a = vec![0.0f64; size * n_cols];
    let mut break_ind = 0usize;
    for i in 0..N_SPLINE * size {
        if i / N_SPLINE >= breaks[1] as usize {
            break_ind = 1;
        }
        a[(i % N_SPLINE) + break_ind + (i / N_SPLINE) * n_cols] = v_b[i];
    }
    let x = lsq_solve(&a, y, n_cols);

    // combine basis weights into per-piece polynomial coefficients
    let mut c = [[0.0f64; N_SPLINE * 2]; N_SPLINE + 1];
    for i in 0..N_SPLINE * N_SPLINE * 2 {
        let c_row = i % N_SPLINE + (i / N_SPLINE) % 2;
        let c_col = i / N_SPLINE;
        c[c_row][c_col] = coefs_out[i % (N_SPLINE * 2)][i / (N_SPLINE * 2)];
    }
    let mut coefs_spline = [[0.0f64; N_SPLINE]; 2];
    for j in 0..N_SPLINE * 2 {
        for i in 0..N_SPLINE + 1 {
            coefs_spline[j % 2][j / 2] += c[i][j] * x[i];
        }
    }

    let mut y_out = vec![0.0f64; size];
    for (i, v) in y_out.iter_mut().enumerate() {
        let sh = usize::from(i as i64 >= breaks[1]);
        *v = coefs_spline[sh][0];
    }
    for i in 1..N_SPLINE {
        for (j, v) in y_out.iter_mut().enumerate() {
            let sh = usize::from(j as i64 >= breaks[1]);
            *v = *v * (j as i64 - breaks[1] * sh as i64) as f64 + coefs_spline[sh][i];
        }
    }
    y_out
}

/// Solve the normal equations A'Ax = A'b by Gaussian elimination without
/// pivoting, matching the reference solver.
fn lsq_solve(a: &[f64], b: &[f64], n_cols: usize) -> Vec<f64> {
    let n_rows = b.len();
    let mut ata = vec![0.0f64; n_cols * n_cols];
    for i in 0..n_cols {
        for j in 0..n_cols {
            let mut s = 0.0;
            for k in 0..n_rows {
                s += a[k * n_cols + i] * a[k * n_cols + j];
            }
            ata[i * n_cols + j] = s;
        }
    }
    let mut atb = vec![0.0f64; n_cols];
    for (i, v) in atb.iter_mut().enumerate() {
        *v = (0..n_rows).map(|k| a[k * n_cols + i] * b[k]).sum();
    }
    for i in 0..n_cols {
        for j in i + 1..n_cols {
            let factor = ata[j * n_cols + i] / ata[i * n_cols + i];
            atb[j] -= factor * atb[i];
            for k in i..n_cols {
                ata[j * n_cols + k] -= factor * ata[i * n_cols + k];
            }
        }
    }
    let mut x = vec![0.0f64; n_cols];
    for i in (0..n_cols).rev() {
        let mut acc = atb[i];
        for j in i + 1..n_cols {
            acc -= x[j] * ata[i * n_cols + j];
        }
        x[i] = acc / ata[i * n_cols + i];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn longstretch_counts_delimiter_distance() {
        // [0,10,10,10,0,10]: the run of three positives spans indices 1..=3
        // but the reference measures delimiter distance, giving 4.
        let y = [0.0, 10.0, 10.0, 10.0, 0.0, 10.0];
        assert_eq!(sb_binary_stats_mean_longstretch1(&y), 4.0);
    }

    #[test]
    fn quantile_matches_interpolation() {
        let y = [3.0, 1.0, 2.0, 4.0];
        // quant 1/3: idx = 4/3 - 0.5 = 0.8333.. -> between 1.0 and 2.0
        let v = quantile(&y, 1.0 / 3.0);
        assert!((v - 1.8333333333333333).abs() < 1e-12);
        assert_eq!(quantile(&y, 0.0), 1.0);
        assert_eq!(quantile(&y, 1.0), 4.0);
    }

    #[test]
    fn coarsegrain_assigns_three_groups() {
        let y = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0];
        let labels = coarsegrain3(&y);
        assert_eq!(labels, vec![1, 1, 2, 2, 3, 3]);
    }

    #[test]
    fn histogram_mode_ties_average_bin_centres() {
        // two values in separate bins of a 5-bin histogram over [0, 1]
        let y = [0.0, 1.0];
        // counts [1,0,0,0,1]: bin 0 leads, bins 1-3 tie at zero then bin 4 ties at 1
        let v = dn_histogram_mode_5(&y);
        assert!((v - (0.1 + 0.9) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn trev_handles_short_series() {
        let y = [1.0, 2.0];
        assert!((co_trev_1_num(&y) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pnn40_strictly_greater() {
        // |diff|*1000 == 40 exactly must not count
        let y = [0.0, 0.04, 0.04, 0.1];
        assert!((md_hrv_classic_pnn40(&y) - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn outlier_include_constant_is_zero() {
        let y = [2.5; 30];
        assert_eq!(dn_outlier_include_np_001_mdrmd(&y, 1.0), 0.0);
        assert_eq!(dn_outlier_include_np_001_mdrmd(&y, -1.0), 0.0);
    }

    #[test]
    fn fluct_anal_short_series_is_zero() {
        let y: Vec<f64> = (0..20).map(|i| (i as f64).sin()).collect();
        assert_eq!(sc_fluct_anal_rsrangefit(&y), 0.0);
        assert_eq!(sc_fluct_anal_dfa(&y), 0.0);
    }

    #[test]
    fn splinefit_recovers_smooth_trend() {
        // a cubic-ish smooth trend should be fit closely in the interior
        let y: Vec<f64> = (0..40)
            .map(|i| {
                let t = i as f64 / 39.0;
                3.0 * t * t - 2.0 * t
            })
            .collect();
        let fit = splinefit(&y);
        for (a, b) in y.iter().zip(&fit) {
            assert!((a - b).abs() < 0.05, "{a} vs {b}");
        }
    }
}
