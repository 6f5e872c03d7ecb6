//! Decimation/superposition interrelation checks between the symmetry
//! classes: the largest eigenvalue of a beta = 4 (resp. beta = 2) ensemble
//! against the second largest of the decimated beta = 1 construction.

use super::batch::{count_exceed, sample_batch, sample_raw_top2};
use super::stats::{ks_threshold_two, ks_two_sample};
use super::tridiag::{EnsembleSpec, SamplerError};
use crate::painleve::Beta;

/// Result of one interrelation check.
#[derive(Debug, Clone)]
pub struct KsReport {
    pub ks: f64,
    pub threshold: f64,
    pub n_left: u64,
    pub n_right: u64,
}

impl KsReport {
    pub fn passed(&self) -> bool {
        self.ks < self.threshold
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecimationFamily {
    /// `SE_n = even(OOE_{2n+1})` (Gaussian).
    GseGoe,
    /// `LUE_{n,p} = even(LOE_{n,p} union LOE_{n+1,p+1})`.
    LueLoe,
}

/// Run the interrelation check at matched sample sizes. The raw
/// (unscaled) eigenvalue axes agree because the weight conventions
/// `gamma_1 = 1/2`, `gamma_2 = gamma_4 = 1` were chosen for exactly this.
pub fn decimation_check(
    family: DecimationFamily,
    n: u32,
    p: Option<u32>,
    n_samples: u64,
    seed: u64,
) -> Result<KsReport, SamplerError> {
    assert!(n <= 50, "decimation checks are desk-scale (n <= 50)");
    let (mut left, mut right) = match family {
        DecimationFamily::GseGoe => {
            // lambda_max of GSE_n vs second largest of GOE_{2n+1}.
            let gse = EnsembleSpec::gaussian(Beta::Four, n);
            let left: Vec<f64> = sample_raw_top2(gse, n_samples, seed)?
                .into_iter()
                .map(|(first, _)| first)
                .collect();
            let goe = EnsembleSpec::gaussian(Beta::One, 2 * n + 1);
            let right: Vec<f64> = sample_raw_top2(goe, n_samples, seed ^ 0x5EED_0001)?
                .into_iter()
                .map(|(_, second)| second)
                .collect();
            (left, right)
        }
        DecimationFamily::LueLoe => {
            let p = p.ok_or(SamplerError::MissingP)?;
            // lambda_max of LUE_{n,p} vs the second largest of the
            // superposition LOE_{n,p} union LOE_{n+1,p+1}.
            let lue = EnsembleSpec::laguerre(Beta::Two, n, p);
            let left: Vec<f64> = sample_raw_top2(lue, n_samples, seed)?
                .into_iter()
                .map(|(first, _)| first)
                .collect();
            let a = sample_raw_top2(
                EnsembleSpec::laguerre(Beta::One, n, p),
                n_samples,
                seed ^ 0x5EED_0002,
            )?;
            let b = sample_raw_top2(
                EnsembleSpec::laguerre(Beta::One, n + 1, p + 1),
                n_samples,
                seed ^ 0x5EED_0003,
            )?;
            // Second largest of the union from the top-2 of each part.
            let right: Vec<f64> = a
                .into_iter()
                .zip(b)
                .map(|((a1, a2), (b1, b2))| {
                    let mut top = [a1, a2, b1, b2];
                    top.sort_by(f64::total_cmp);
                    top[2]
                })
                .collect();
            (left, right)
        }
    };
    left.sort_by(f64::total_cmp);
    right.sort_by(f64::total_cmp);
    Ok(KsReport {
        ks: ks_two_sample(&left, &right),
        threshold: ks_threshold_two(left.len() as u64, right.len() as u64),
        n_left: left.len() as u64,
        n_right: right.len() as u64,
    })
}

/// Monte-Carlo estimate of `E_2(n; x)` from the product/superposition
/// identity using independent GOE_n and GOE_{n+1} exceedance counts:
/// `E_2(n;x) = (E_+(n) E_-(n+1) + E_+(n+1) E_-(n)) / 2`.
pub fn superposition_e2(
    n: u32,
    x_grid: &[f64],
    n_samples: u64,
    seed: u64,
) -> Result<Vec<f64>, SamplerError> {
    let low = count_exceed(EnsembleSpec::gaussian(Beta::One, n), x_grid, n_samples, seed)?;
    let high = count_exceed(
        EnsembleSpec::gaussian(Beta::One, n + 1),
        x_grid,
        n_samples,
        seed ^ 0x5EED_0004,
    )?;
    Ok((0..x_grid.len())
        .map(|j| 0.5 * (low.e_plus(j) * high.e_minus(j) + high.e_plus(j) * low.e_minus(j)))
        .collect())
}

/// KS check of one scaled batch against another with the same spec but a
/// swapped Wishart pair; structural because swapped pairs share the
/// tridiagonal model.
pub fn wishart_symmetry_check(
    n: u32,
    p: u32,
    n_samples: u64,
    seed: u64,
) -> Result<KsReport, SamplerError> {
    let a = sample_batch(EnsembleSpec::laguerre(Beta::Two, n, p), n_samples, seed)?;
    let b = sample_batch(EnsembleSpec::laguerre(Beta::Two, p, n), n_samples, seed)?;
    let mut left = a.values;
    let mut right = b.values;
    left.sort_by(f64::total_cmp);
    right.sort_by(f64::total_cmp);
    Ok(KsReport {
        ks: ks_two_sample(&left, &right),
        threshold: ks_threshold_two(n_samples, n_samples),
        n_left: n_samples,
        n_right: n_samples,
    })
}

/// Exceedance monotonicity report used by the invariants: checks that
/// `E_+(x)` is nondecreasing and `E_+ <= E_-` pointwise.
pub fn exceedance_monotonicity(
    spec: EnsembleSpec,
    x_grid: &[f64],
    n_samples: u64,
    seed: u64,
) -> Result<bool, SamplerError> {
    let counts = count_exceed(spec, x_grid, n_samples, seed)?;
    let mut prev = -1.0;
    for j in 0..x_grid.len() {
        let ep = counts.e_plus(j);
        if ep < prev || ep > counts.e_minus(j) + 1e-15 {
            return Ok(false);
        }
        prev = ep;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::{make_scaling, EnsembleKind};

    #[test]
    fn gse_goe_interrelation_small() {
        let report = decimation_check(DecimationFamily::GseGoe, 4, None, 40_000, 101).unwrap();
        assert!(report.passed(), "KS = {} vs {}", report.ks, report.threshold);
    }

    #[test]
    fn lue_loe_interrelation_small() {
        let report =
            decimation_check(DecimationFamily::LueLoe, 5, Some(8), 40_000, 103).unwrap();
        assert!(report.passed(), "KS = {} vs {}", report.ks, report.threshold);
    }

    #[test]
    fn lue_arm_against_fredholm_oracle() {
        // The beta = 2 arm of the interrelation check, cross-checked
        // directly against the Fredholm determinant CDF.
        use crate::fredholm::{det_finite, FiniteKernel};
        use crate::sampler::{ks_one_sample, ks_threshold_one, LinearInterp};
        let n_samples = 40_000u64;
        let mut arm: Vec<f64> = sample_raw_top2(
            EnsembleSpec::laguerre(Beta::Two, 5, 8),
            n_samples,
            103,
        )
        .unwrap()
        .into_iter()
        .map(|(first, _)| first)
        .collect();
        arm.sort_by(f64::total_cmp);
        let xs: Vec<f64> = (0..=300).map(|i| 0.1 + 0.12 * i as f64).collect();
        let ys: Vec<f64> = xs
            .iter()
            .map(|&x| det_finite(FiniteKernel::LaguerreNP(5, 8), x).unwrap().value)
            .collect();
        let cdf = LinearInterp::new(xs, ys);
        let ks = ks_one_sample(&arm, |x| cdf.eval(x));
        assert!(ks < ks_threshold_one(n_samples), "KS = {ks}");
    }

    #[test]
    fn wishart_symmetry_structural() {
        let report = wishart_symmetry_check(5, 9, 5_000, 7).unwrap();
        assert!(report.ks == 0.0, "swapped pairs share the model");
    }

    #[test]
    fn exceedance_monotone() {
        let scaling = make_scaling(EnsembleKind::Gaussian, Beta::One, 6.0, None).unwrap();
        let grid: Vec<f64> = (-8..=8).map(|i| scaling.to_unscaled(i as f64 / 2.0)).collect();
        let ok = exceedance_monotonicity(
            EnsembleSpec::gaussian(Beta::One, 6),
            &grid,
            20_000,
            11,
        )
        .unwrap();
        assert!(ok);
    }
}
