//! One- and two-sample t-tests (Welch by default, pooled behind a flag).

use super::special::{t_cdf, t_sf};
use super::{mean, sample_variance, sign_of, Alternative, TestResult};
use crate::error::{Error, Result};

/// Tail of the t statistic the alternative puts mass on.
pub type TailSide = Alternative;

/// Variance treatment for the two-sample test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VarianceRule {
    /// Welch-Satterthwaite degrees of freedom, no pooling.
    #[default]
    Welch,
    /// Classical pooled variance, df = n1 + n2 - 2.
    Pooled,
}

fn p_from_t(t: f64, df: f64, side: TailSide) -> f64 {
    match side {
        Alternative::Greater => t_sf(t, df),
        Alternative::Less => t_cdf(t, df),
        Alternative::TwoSided => 2.0 * t_sf(t.abs(), df),
    }
}

/// One-sample t-test of H0: mean(xs) = mu0.
///
/// Zero-variance input is flagged degenerate and reported with p = 1.
pub fn t_test_one_sample(xs: &[f64], mu0: f64, side: TailSide) -> Result<TestResult> {
    if xs.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "one-sample t needs n >= 2, got {}",
            xs.len()
        )));
    }
    let n = xs.len() as f64;
    let m = mean(xs);
    let var = sample_variance(xs);
    let direction = sign_of(m - mu0);
    if var <= 0.0 {
        return Ok(TestResult {
            statistic: f64::NAN,
            p_value: 1.0,
            direction,
            n1: xs.len(),
            n2: 0,
            method: "t one-sample (degenerate: zero variance)".into(),
            degenerate: true,
        });
    }
    let t = (m - mu0) / (var / n).sqrt();
    Ok(TestResult {
        statistic: t,
        p_value: p_from_t(t, n - 1.0, side),
        direction,
        n1: xs.len(),
        n2: 0,
        method: "t one-sample".into(),
        degenerate: false,
    }
    .clamp_p())
}

/// Two-sample t-test of H0: mean(xs) = mean(ys).
pub fn t_test_two_sample(
    xs: &[f64],
    ys: &[f64],
    side: TailSide,
    rule: VarianceRule,
) -> Result<TestResult> {
    if xs.len() < 2 || ys.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "two-sample t needs n >= 2 per sample, got {} and {}",
            xs.len(),
            ys.len()
        )));
    }
    let (n1, n2) = (xs.len() as f64, ys.len() as f64);
    let (m1, m2) = (mean(xs), mean(ys));
    let (v1, v2) = (sample_variance(xs), sample_variance(ys));
    let direction = sign_of(m1 - m2);
    let (se2, df) = match rule {
        VarianceRule::Welch => {
            let a = v1 / n1;
            let b = v2 / n2;
            let se2 = a + b;
            let df = se2 * se2 / (a * a / (n1 - 1.0) + b * b / (n2 - 1.0));
            (se2, df)
        }
        VarianceRule::Pooled => {
            let sp2 = ((n1 - 1.0) * v1 + (n2 - 1.0) * v2) / (n1 + n2 - 2.0);
            (sp2 * (1.0 / n1 + 1.0 / n2), n1 + n2 - 2.0)
        }
    };
    if se2 <= 0.0 || !df.is_finite() {
        return Ok(TestResult {
            statistic: f64::NAN,
            p_value: 1.0,
            direction,
            n1: xs.len(),
            n2: ys.len(),
            method: "t two-sample (degenerate: zero variance)".into(),
            degenerate: true,
        });
    }
    let t = (m1 - m2) / se2.sqrt();
    Ok(TestResult {
        statistic: t,
        p_value: p_from_t(t, df, side),
        direction,
        n1: xs.len(),
        n2: ys.len(),
        method: match rule {
            VarianceRule::Welch => "t two-sample (Welch)".into(),
            VarianceRule::Pooled => "t two-sample (pooled)".into(),
        },
        degenerate: false,
    }
    .clamp_p())
}
