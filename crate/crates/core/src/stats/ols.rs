//! Ordinary least squares via Householder QR, with classical
//! (homoskedastic) standard errors and t-based inference.

use super::special::t_sf;
use super::P_FLOOR;
use crate::error::{Error, Result};

/// Fitted OLS model.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct OlsFit {
    pub coefficients: Vec<f64>,
    pub standard_errors: Vec<f64>,
    pub t_stats: Vec<f64>,
    /// Two-sided p-values with n - k degrees of freedom.
    pub p_values: Vec<f64>,
    pub r_squared: f64,
    pub df_resid: f64,
    pub n: usize,
}

/// Fit y = X b by least squares. `x` is row-major with one row per
/// observation; callers include the intercept column themselves.
///
/// Requires rows >= columns + 1 and a full-column-rank design; a rank
/// deficiency surfaces as [`Error::SingularDesign`].
pub fn ols(y: &[f64], x: &[Vec<f64>]) -> Result<OlsFit> {
    let n = y.len();
    if x.len() != n {
        return Err(Error::InvalidParameter(format!(
            "design has {} rows but y has {}",
            x.len(),
            n
        )));
    }
    if n == 0 {
        return Err(Error::EmptySample("y".into()));
    }
    let k = x[0].len();
    if k == 0 || x.iter().any(|row| row.len() != k) {
        return Err(Error::InvalidParameter("ragged or empty design".into()));
    }
    if n < k + 1 {
        return Err(Error::InsufficientData(format!(
            "need rows >= columns + 1, got {n} rows for {k} columns"
        )));
    }

    // Householder QR on a working copy [R | Q'y]
    let mut a: Vec<Vec<f64>> = x.to_vec();
    let mut qty = y.to_vec();
    let col_norm_max = (0..k)
        .map(|j| a.iter().map(|r| r[j] * r[j]).sum::<f64>().sqrt())
        .fold(0.0_f64, f64::max);
    for j in 0..k {
        let norm = (j..n).map(|i| a[i][j] * a[i][j]).sum::<f64>().sqrt();
        if norm <= col_norm_max * 1e-12 {
            return Err(Error::SingularDesign(format!(
                "column {j} is (numerically) linearly dependent"
            )));
        }
        let alpha = if a[j][j] >= 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = (j..n).map(|i| a[i][j]).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|t| t * t).sum();
        if vnorm2 > 0.0 {
            for col in j..k {
                let dot: f64 = (j..n).map(|i| v[i - j] * a[i][col]).sum();
                let f = 2.0 * dot / vnorm2;
                for i in j..n {
                    a[i][col] -= f * v[i - j];
                }
            }
            let dot: f64 = (j..n).map(|i| v[i - j] * qty[i]).sum();
            let f = 2.0 * dot / vnorm2;
            for i in j..n {
                qty[i] -= f * v[i - j];
            }
        }
        a[j][j] = alpha;
        for i in j + 1..n {
            a[i][j] = 0.0;
        }
    }
    for j in 0..k {
        if a[j][j].abs() <= col_norm_max * 1e-12 {
            return Err(Error::SingularDesign(format!(
                "zero pivot in column {j}"
            )));
        }
    }

    // back-substitution: R b = Q'y
    let mut beta = vec![0.0; k];
    for j in (0..k).rev() {
        let mut s = qty[j];
        for m in j + 1..k {
            s -= a[j][m] * beta[m];
        }
        beta[j] = s / a[j][j];
    }

    // residual sum of squares from the tail of Q'y
    let rss: f64 = (k..n).map(|i| qty[i] * qty[i]).sum();
    let df = (n - k) as f64;
    let s2 = if df > 0.0 { rss / df } else { f64::NAN };

    // (X'X)^-1 = R^-1 R^-T: solve R' W = I then R V = W, i.e. invert R
    let mut rinv = vec![vec![0.0; k]; k];
    for j in 0..k {
        rinv[j][j] = 1.0 / a[j][j];
        for i in (0..j).rev() {
            let mut s = 0.0;
            for m in i + 1..=j {
                s += a[i][m] * rinv[m][j];
            }
            rinv[i][j] = -s / a[i][i];
        }
    }
    let se: Vec<f64> = (0..k)
        .map(|i| {
            let xtx_inv_ii: f64 = (i..k).map(|m| rinv[i][m] * rinv[i][m]).sum();
            (s2 * xtx_inv_ii).sqrt()
        })
        .collect();

    let t_stats: Vec<f64> = beta
        .iter()
        .zip(&se)
        .map(|(b, s)| if *s > 0.0 { b / s } else { f64::NAN })
        .collect();
    let p_values: Vec<f64> = t_stats
        .iter()
        .map(|t| {
            if t.is_finite() {
                (2.0 * t_sf(t.abs(), df)).clamp(P_FLOOR, 1.0)
            } else {
                f64::NAN
            }
        })
        .collect();

    let ybar = y.iter().sum::<f64>() / n as f64;
    let tss: f64 = y.iter().map(|v| (v - ybar) * (v - ybar)).sum();
    let r_squared = if tss > 0.0 { 1.0 - rss / tss } else { 1.0 };

    Ok(OlsFit {
        coefficients: beta,
        standard_errors: se,
        t_stats,
        p_values,
        r_squared,
        df_resid: df,
        n,
    })
}
