//! The 25-feature space: 22 canonical time-series characteristics (catch22)
//! plus the three interval summaries mean, stdev and slope.

mod acf;
mod catch22;

use serde::{Deserialize, Serialize};

use crate::tsdata::znormalize;

/// Size of the full feature space.
pub const FEATURE_COUNT: usize = 25;
/// Number of canonical characteristics (ids 0..22).
pub const CATCH22_COUNT: usize = 22;

const NAMES: [&str; FEATURE_COUNT] = [
    "DN_HistogramMode_5",
    "DN_HistogramMode_10",
    "CO_f1ecac",
    "CO_FirstMin_ac",
    "CO_HistogramAMI_even_2_5",
    "CO_trev_1_num",
    "MD_hrv_classic_pnn40",
    "SB_BinaryStats_mean_longstretch1",
    "SB_TransitionMatrix_3ac_sumdiagcov",
    "PD_PeriodicityWang_th0_01",
    "CO_Embed2_Dist_tau_d_expfit_meandiff",
    "IN_AutoMutualInfoStats_40_gaussian_fmmi",
    "FC_LocalSimple_mean1_tauresrat",
    "DN_OutlierInclude_p_001_mdrmd",
    "DN_OutlierInclude_n_001_mdrmd",
    "SP_Summaries_welch_rect_area_5_1",
    "SB_BinaryStats_diff_longstretch0",
    "SB_MotifThree_quantile_hh",
    "SC_FluctAnal_2_rsrangefit_50_1_logi_prop_r1",
    "SC_FluctAnal_2_dfa_50_1_2_logi_prop_r1",
    "SP_Summaries_welch_rect_centroid",
    "FC_LocalSimple_mean3_stderr",
    "mean",
    "stdev",
    "slope",
];

/// Identifier in the 25-feature space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FeatureId(u8);

impl FeatureId {
    pub const MEAN: FeatureId = FeatureId(22);
    pub const STDEV: FeatureId = FeatureId(23);
    pub const SLOPE: FeatureId = FeatureId(24);

    pub fn new(index: usize) -> Option<FeatureId> {
        (index < FEATURE_COUNT).then_some(FeatureId(index as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn name(self) -> &'static str {
        NAMES[self.index()]
    }

    pub fn from_name(name: &str) -> Option<FeatureId> {
        NAMES
            .iter()
            .position(|&n| n == name)
            .map(|i| FeatureId(i as u8))
    }

    /// All 25 feature ids in index order.
    pub fn all() -> impl Iterator<Item = FeatureId> {
        (0..FEATURE_COUNT as u8).map(FeatureId)
    }

    /// The 22 canonical characteristics.
    pub fn catch22() -> impl Iterator<Item = FeatureId> {
        (0..CATCH22_COUNT as u8).map(FeatureId)
    }

    /// The three interval summaries used by TSF.
    pub fn tsf() -> [FeatureId; 3] {
        [Self::MEAN, Self::STDEV, Self::SLOPE]
    }

    /// The two outlier-inclusion features consume a z-normalised window.
    pub fn requires_normalised_input(self) -> bool {
        matches!(self.0, 13 | 14)
    }
}

/// Arithmetic mean of the window.
pub fn mean(window: &[f64]) -> f64 {
    window.iter().sum::<f64>() / window.len() as f64
}

/// Population standard deviation (divide by the window length).
pub fn stdev(window: &[f64]) -> f64 {
    let m = mean(window);
    (window.iter().map(|&v| (v - m) * (v - m)).sum::<f64>() / window.len() as f64).sqrt()
}

/// Least-squares slope of the values against time indices 0..len-1.
pub fn slope(window: &[f64]) -> f64 {
    let n = window.len() as f64;
    let t_mean = (n - 1.0) / 2.0;
    let y_mean = mean(window);
    let mut num = 0.0;
    let mut den = 0.0;
    for (t, &v) in window.iter().enumerate() {
        let dt = t as f64 - t_mean;
        num += dt * (v - y_mean);
        den += dt * dt;
    }
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

fn dispatch(id: FeatureId, y: &[f64], ctx: &mut catch22::Ctx) -> f64 {
    match id.index() {
        0 => catch22::dn_histogram_mode_5(y),
        1 => catch22::dn_histogram_mode_10(y),
        2 => catch22::co_f1ecac(ctx),
        3 => catch22::co_first_min_ac(ctx),
        4 => catch22::co_histogram_ami_even_2_5(y),
        5 => catch22::co_trev_1_num(y),
        6 => catch22::md_hrv_classic_pnn40(y),
        7 => catch22::sb_binary_stats_mean_longstretch1(y),
        8 => catch22::sb_transition_matrix_3ac_sumdiagcov(ctx),
        9 => catch22::pd_periodicity_wang_th0_01(y),
        10 => catch22::co_embed2_dist_tau_d_expfit_meandiff(ctx),
        11 => catch22::in_auto_mutual_info_stats_40_gaussian_fmmi(y),
        12 => catch22::fc_local_simple_mean1_tauresrat(ctx),
        13 => catch22::dn_outlier_include_np_001_mdrmd(y, 1.0),
        14 => catch22::dn_outlier_include_np_001_mdrmd(y, -1.0),
        15 => catch22::sp_summaries_welch_rect(y, false),
        16 => catch22::sb_binary_stats_diff_longstretch0(y),
        17 => catch22::sb_motif_three_quantile_hh(y),
        18 => catch22::sc_fluct_anal_rsrangefit(y),
        19 => catch22::sc_fluct_anal_dfa(y),
        20 => catch22::sp_summaries_welch_rect(y, true),
        21 => catch22::fc_local_simple_mean3_stderr(y),
        22 => mean(y),
        23 => stdev(y),
        24 => slope(y),
        _ => unreachable!(),
    }
}

/// Raw kernel output on the window as given: no normalisation, no
/// sanitisation. Degenerate windows may yield non-finite values.
pub fn compute_raw(id: FeatureId, window: &[f64]) -> f64 {
    let mut ctx = catch22::Ctx::new(window);
    dispatch(id, window, &mut ctx)
}

/// Feature value as consumed by the classifier: the two outlier-inclusion
/// features see a z-normalised copy of the window, everything else the raw
/// window; non-finite results map to 0.0.
pub fn compute_feature(id: FeatureId, window: &[f64]) -> f64 {
    let v = if id.requires_normalised_input() {
        compute_raw(id, &znormalize(window))
    } else {
        compute_raw(id, window)
    };
    if v.is_finite() {
        v
    } else {
        0.0
    }
}

/// Batch of [`compute_feature`] values sharing one autocorrelation and one
/// normalised copy of the window across all requested features.
pub fn compute_features(ids: &[FeatureId], window: &[f64]) -> Vec<f64> {
    let mut ctx = catch22::Ctx::new(window);
    let mut znormed: Option<Vec<f64>> = None;
    ids.iter()
        .map(|&id| {
            let v = if id.requires_normalised_input() {
                let z = znormed.get_or_insert_with(|| znormalize(window));
                compute_raw(id, z)
            } else {
                dispatch(id, window, &mut ctx)
            };
            if v.is_finite() {
                v
            } else {
                0.0
            }
        })
        .collect()
}
