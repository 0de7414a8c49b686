//! One-dimensional Wasserstein-1 distance between empirical distributions.

use crate::error::{Error, Result};

/// W1 between the empirical distributions of `xs` and `ys`:
/// the integral of |F_x - F_y| over the real line.
///
/// For equal sample sizes this reduces to the mean absolute difference of the
/// sorted samples; the implementation below handles unequal sizes by walking
/// the merged support and accumulating CDF-gap areas.
pub fn wasserstein_1d(xs: &[f64], ys: &[f64]) -> Result<f64> {
    if xs.is_empty() {
        return Err(Error::EmptySample("xs".into()));
    }
    if ys.is_empty() {
        return Err(Error::EmptySample("ys".into()));
    }
    let mut sx = xs.to_vec();
    let mut sy = ys.to_vec();
    sx.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite values"));
    sy.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite values"));

    let nx = sx.len() as f64;
    let ny = sy.len() as f64;
    let (mut ix, mut iy) = (0usize, 0usize);
    let mut dist = 0.0;
    let mut prev = f64::NAN;
    while ix < sx.len() || iy < sy.len() {
        let next = match (sx.get(ix), sy.get(iy)) {
            (Some(&a), Some(&b)) => a.min(b),
            (Some(&a), None) => a,
            (None, Some(&b)) => b,
            (None, None) => unreachable!(),
        };
        if prev.is_finite() && next > prev {
            let fx = ix as f64 / nx;
            let fy = iy as f64 / ny;
            dist += (fx - fy).abs() * (next - prev);
        }
        while ix < sx.len() && sx[ix] <= next {
            ix += 1;
        }
        while iy < sy.len() && sy[iy] <= next {
            iy += 1;
        }
        prev = next;
    }
    Ok(dist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Sorted-matching oracle for equal sizes: mean |x_(i) - y_(i)|.
    fn sorted_matching(xs: &[f64], ys: &[f64]) -> f64 {
        let mut a = xs.to_vec();
        let mut b = ys.to_vec();
        a.sort_unstable_by(|u, v| u.partial_cmp(v).unwrap());
        b.sort_unstable_by(|u, v| u.partial_cmp(v).unwrap());
        a.iter()
            .zip(&b)
            .map(|(u, v)| (u - v).abs())
            .sum::<f64>()
            / a.len() as f64
    }

    /// Quantile-integral oracle for arbitrary sizes: integrate
    /// |Qx(u) - Qy(u)| du on a fine grid of the common refinement.
    fn quantile_integral(xs: &[f64], ys: &[f64]) -> f64 {
        let mut a = xs.to_vec();
        let mut b = ys.to_vec();
        a.sort_unstable_by(|u, v| u.partial_cmp(v).unwrap());
        b.sort_unstable_by(|u, v| u.partial_cmp(v).unwrap());
        let q = |s: &[f64], u: f64| -> f64 {
            let idx = (u * s.len() as f64).ceil() as usize;
            s[idx.clamp(1, s.len()) - 1]
        };
        let n = a.len() * b.len() * 2;
        (0..n)
            .map(|i| {
                let u = (i as f64 + 0.5) / n as f64;
                (q(&a, u) - q(&b, u)).abs()
            })
            .sum::<f64>()
            / n as f64
    }

    #[test]
    fn identical_samples_are_zero() {
        let xs = [3.0, 1.0, 2.0];
        assert_eq!(wasserstein_1d(&xs, &xs).unwrap(), 0.0);
    }

    #[test]
    fn point_masses() {
        assert_eq!(wasserstein_1d(&[0.0], &[5.0]).unwrap(), 5.0);
    }

    #[test]
    fn shifted_pair() {
        // {0,1} vs {1,2}: sorted matching gives (1+1)/2 = 1
        let w = wasserstein_1d(&[0.0, 1.0], &[1.0, 2.0]).unwrap();
        assert!((w - 1.0).abs() < 1e-12);
        assert!((w - sorted_matching(&[0.0, 1.0], &[1.0, 2.0])).abs() < 1e-12);
    }

    #[test]
    fn unequal_sizes_match_quantile_oracle() {
        let xs = [0.0, 0.0, 1.0, 4.0];
        let ys = [1.0, 2.0];
        let w = wasserstein_1d(&xs, &ys).unwrap();
        let oracle = quantile_integral(&xs, &ys);
        assert!((w - oracle).abs() < 1e-9, "{w} vs {oracle}");
    }

    #[test]
    fn empty_sample_errors() {
        assert!(wasserstein_1d(&[], &[1.0]).is_err());
        assert!(wasserstein_1d(&[1.0], &[]).is_err());
    }

    proptest! {
        #[test]
        fn equal_size_matches_sorted_matching(
            xs in proptest::collection::vec(-50.0..50.0f64, 1..40),
            ys in proptest::collection::vec(-50.0..50.0f64, 1..40),
        ) {
            prop_assume!(xs.len() == ys.len());
            let w = wasserstein_1d(&xs, &ys).unwrap();
            prop_assert!((w - sorted_matching(&xs, &ys)).abs() < 1e-9);
        }

        #[test]
        fn symmetric_nonnegative(
            xs in proptest::collection::vec(-50.0..50.0f64, 1..30),
            ys in proptest::collection::vec(-50.0..50.0f64, 1..30),
        ) {
            let w1 = wasserstein_1d(&xs, &ys).unwrap();
            let w2 = wasserstein_1d(&ys, &xs).unwrap();
            prop_assert!(w1 >= 0.0);
            prop_assert!((w1 - w2).abs() < 1e-12);
        }

        #[test]
        fn triangle_inequality(
            xs in proptest::collection::vec(-20.0..20.0f64, 1..20),
            ys in proptest::collection::vec(-20.0..20.0f64, 1..20),
            zs in proptest::collection::vec(-20.0..20.0f64, 1..20),
        ) {
            let xy = wasserstein_1d(&xs, &ys).unwrap();
            let yz = wasserstein_1d(&ys, &zs).unwrap();
            let xz = wasserstein_1d(&xs, &zs).unwrap();
            prop_assert!(xz <= xy + yz + 1e-9);
        }

        #[test]
        fn translation_properties(
            xs in proptest::collection::vec(-20.0..20.0f64, 1..20),
            ys in proptest::collection::vec(-20.0..20.0f64, 1..20),
            c in -30.0..30.0f64,
        ) {
            let base = wasserstein_1d(&xs, &ys).unwrap();
            let xs_c: Vec<f64> = xs.iter().map(|x| x + c).collect();
            let ys_c: Vec<f64> = ys.iter().map(|y| y + c).collect();
            // W(xs+c, ys+c) = W(xs, ys)
            prop_assert!((wasserstein_1d(&xs_c, &ys_c).unwrap() - base).abs() < 1e-9);
            // W(xs, xs+c) = |c|
            prop_assert!((wasserstein_1d(&xs, &xs_c).unwrap() - c.abs()).abs() < 1e-9);
        }
    }
}
