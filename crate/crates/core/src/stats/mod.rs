//! Statistical primitives: Wasserstein-1 distance, Mann-Whitney U, t-tests,
//! OLS with classical inference, a two-proportion z-test, and smoothing-factor
//! estimation for the forecasting study.
//!
//! Everything here is pure and reentrant. p-values below [`P_FLOOR`] are
//! clamped to avoid underflow in reports.

pub mod alpha;
pub mod ols;
pub mod proportion;
pub mod rank;
pub mod special;
pub mod ttest;
pub mod wasserstein;

pub use alpha::{estimate_alpha, AlphaEstimate, AlphaMode, SubjectSeries};
pub use ols::{ols, OlsFit};
pub use proportion::two_proportion_test;
pub use rank::{mann_whitney_one_sided, MwAlternative};
pub use ttest::{t_test_one_sample, t_test_two_sample, TailSide, VarianceRule};
pub use wasserstein::wasserstein_1d;

/// Lower clamp for reported p-values.
pub const P_FLOOR: f64 = 1e-300;

/// Direction of a one-sided alternative relative to the first sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Alternative {
    Greater,
    Less,
    TwoSided,
}

/// Outcome of a hypothesis test.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct TestResult {
    pub statistic: f64,
    pub p_value: f64,
    /// Sign of the estimated effect: +1, -1, or 0.
    pub direction: i8,
    pub n1: usize,
    pub n2: usize,
    pub method: String,
    /// Set when the inputs admit no informative test (e.g. zero variance).
    pub degenerate: bool,
}

impl TestResult {
    pub(crate) fn clamp_p(mut self) -> Self {
        if self.p_value.is_finite() {
            self.p_value = self.p_value.clamp(P_FLOOR, 1.0);
        }
        self
    }
}

pub(crate) fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Sample variance with the n-1 denominator.
pub fn sample_variance(xs: &[f64]) -> f64 {
    let m = mean(xs);
    xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (xs.len() as f64 - 1.0)
}

pub(crate) fn sign_of(x: f64) -> i8 {
    if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    }
}
