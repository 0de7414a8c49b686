//! Pooled two-proportion z-test with continuity correction.

use super::special::{normal_cdf, normal_sf};
use super::{sign_of, Alternative, TestResult};
use crate::error::{Error, Result};

/// Test H0: p1 = p2 from counts (k1 of n1) vs (k2 of n2).
///
/// Uses the pooled standard error and a Yates-style continuity correction
/// shrinking the observed gap toward zero. Pooled rates of exactly 0 or 1
/// are degenerate (no information against H0).
pub fn two_proportion_test(
    k1: usize,
    n1: usize,
    k2: usize,
    n2: usize,
    alternative: Alternative,
) -> Result<TestResult> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::EmptySample("proportion sample".into()));
    }
    if k1 > n1 || k2 > n2 {
        return Err(Error::InvalidParameter(format!(
            "successes exceed trials: {k1}/{n1}, {k2}/{n2}"
        )));
    }
    let p1 = k1 as f64 / n1 as f64;
    let p2 = k2 as f64 / n2 as f64;
    let pooled = (k1 + k2) as f64 / (n1 + n2) as f64;
    let direction = sign_of(p1 - p2);
    let se = (pooled * (1.0 - pooled) * (1.0 / n1 as f64 + 1.0 / n2 as f64)).sqrt();
    if se == 0.0 {
        return Ok(TestResult {
            statistic: 0.0,
            p_value: 0.5,
            direction,
            n1,
            n2,
            method: "two-proportion z (degenerate: pooled rate 0 or 1)".into(),
            degenerate: true,
        });
    }
    let diff = p1 - p2;
    let cc = (0.5 * (1.0 / n1 as f64 + 1.0 / n2 as f64)).min(diff.abs());
    let z = (diff - diff.signum() * cc) / se;
    let p_value = match alternative {
        Alternative::Greater => normal_sf(z),
        Alternative::Less => normal_cdf(z),
        Alternative::TwoSided => 2.0 * normal_sf(z.abs()),
    };
    Ok(TestResult {
        statistic: z,
        p_value,
        direction,
        n1,
        n2,
        method: "two-proportion z (pooled, continuity corrected)".into(),
        degenerate: false,
    }
    .clamp_p())
}
