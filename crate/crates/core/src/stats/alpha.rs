//! Smoothing-factor estimation for the forecasting study.
//!
//! A subject revises forecasts F_t after seeing demand D_t; the revision
//! regressed on the forecast error E_t = D_t - F_t identifies the smoothing
//! factor. Simple mode is a per-subject no-intercept slope; behavioral mode
//! pools subjects per condition in a fixed-effects OLS with the error term
//! plus lagged demand/forecast changes and the initial forecast as controls.

use super::ols::ols;
use crate::error::{Error, Result};

/// Estimation mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaMode {
    /// Regress dF_{t+1} on E_t, no intercept; slope is alpha-hat.
    Simple,
    /// Pooled OLS of dF_{t+1} on [E_t, F_1, dD_t, dD_{t-1}, dF_t, dF_{t-1}, 1];
    /// the E_t coefficient is the condition-level alpha-hat.
    Behavioral,
}

/// One subject's aligned forecast/demand series: entry t holds the forecast
/// for period t and the demand realized in period t.
#[derive(Debug, Clone)]
pub struct SubjectSeries {
    pub subject: String,
    pub forecasts: Vec<f64>,
    pub demands: Vec<f64>,
}

/// Estimation output: per-subject simple slopes plus the condition-level
/// value (mean of slopes in simple mode, pooled E_t coefficient in
/// behavioral mode).
#[derive(Debug, Clone)]
pub struct AlphaEstimate {
    pub per_subject: Vec<(String, f64)>,
    pub condition_alpha: f64,
    pub mode_tag: &'static str,
}

/// Minimum usable triples per subject.
const MIN_TRIPLES: usize = 10;

fn simple_slope(forecasts: &[f64], demands: &[f64]) -> Option<f64> {
    let n = forecasts.len().min(demands.len());
    let mut num = 0.0;
    let mut den = 0.0;
    let mut used = 0;
    for t in 0..n.saturating_sub(1) {
        let e = demands[t] - forecasts[t];
        let df = forecasts[t + 1] - forecasts[t];
        if e.is_finite() && df.is_finite() {
            num += e * df;
            den += e * e;
            used += 1;
        }
    }
    if used < MIN_TRIPLES {
        return None;
    }
    if den == 0.0 {
        // error always zero: revisions carry no error signal
        return Some(0.0);
    }
    Some(num / den)
}

/// Estimate the smoothing factor for one condition.
pub fn estimate_alpha(series: &[SubjectSeries], mode: AlphaMode) -> Result<AlphaEstimate> {
    let mut per_subject = Vec::new();
    for s in series {
        if let Some(a) = simple_slope(&s.forecasts, &s.demands) {
            per_subject.push((s.subject.clone(), a));
        }
    }
    if per_subject.is_empty() {
        return Err(Error::InsufficientData(
            "no subject has enough usable forecast triples".into(),
        ));
    }
    let condition_alpha = match mode {
        AlphaMode::Simple => {
            per_subject.iter().map(|(_, a)| a).sum::<f64>() / per_subject.len() as f64
        }
        AlphaMode::Behavioral => behavioral_coefficient(series)?,
    };
    Ok(AlphaEstimate {
        per_subject,
        condition_alpha,
        mode_tag: match mode {
            AlphaMode::Simple => "simple",
            AlphaMode::Behavioral => "behavioral-ols",
        },
    })
}

/// Pooled fixed-effects regression; returns the E_t coefficient.
fn behavioral_coefficient(series: &[SubjectSeries]) -> Result<f64> {
    let mut y = Vec::new();
    let mut design: Vec<Vec<f64>> = Vec::new();
    for s in series {
        let f = &s.forecasts;
        let d = &s.demands;
        let n = f.len().min(d.len());
        if n < MIN_TRIPLES + 2 {
            continue;
        }
        let f1 = f[0];
        // rows need dD_{t-1} and dF_{t-1}: start at t = 2
        for t in 2..n - 1 {
            let e_t = d[t] - f[t];
            y.push(f[t + 1] - f[t]);
            design.push(vec![
                e_t,
                f1,
                d[t] - d[t - 1],
                d[t - 1] - d[t - 2],
                f[t] - f[t - 1],
                f[t - 1] - f[t - 2],
                1.0,
            ]);
        }
    }
    if y.len() < 16 {
        return Err(Error::InsufficientData(format!(
            "behavioral regression has only {} usable rows",
            y.len()
        )));
    }
    let fit = ols(&y, &design)?;
    Ok(fit.coefficients[0])
}
