//! Histograms, empirical CDFs with confidence intervals, and
//! Kolmogorov–Smirnov distances.

use super::batch::SampleBatch;

/// z-quantile of the standard normal for two-sided 99% intervals.
pub const Z_99: f64 = 2.5758293035489004;

/// Kolmogorov distribution quantile matching a two-sided 3-sigma event:
/// `P(D > KS_3SIGMA / sqrt(N)) = 0.0027`.
pub const KS_3SIGMA: f64 = 1.817735;

/// Equal-width histogram with bin width `eta * h`. Draws outside the
/// binned range land in the under/overflow tallies, so the counts always
/// conserve the sample size exactly.
#[derive(Debug, Clone)]
pub struct Histogram {
    pub eta: f64,
    pub h: f64,
    /// `len = counts.len() + 1`, strictly increasing.
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
    pub underflow: u64,
    pub overflow: u64,
    pub n_samples: u64,
}

#[derive(Debug, thiserror::Error)]
pub enum StatsError {
    #[error("histogram needs at least 40 bins across the support, got {0}")]
    TooFewBins(usize),
    #[error("bin ratio eta must be positive")]
    BadEta,
}

/// Bin the batch into width `eta * h` bins covering `[lo, hi]`.
pub fn mc_histogram(
    batch: &SampleBatch,
    eta: f64,
    lo: f64,
    hi: f64,
) -> Result<Histogram, StatsError> {
    if eta <= 0.0 {
        return Err(StatsError::BadEta);
    }
    let h = batch.scaling.h;
    let width = eta * h;
    let bins = ((hi - lo) / width).ceil() as usize;
    if bins < 40 {
        return Err(StatsError::TooFewBins(bins));
    }
    let edges: Vec<f64> = (0..=bins).map(|i| lo + width * i as f64).collect();
    let mut counts = vec![0u64; bins];
    let mut underflow = 0u64;
    let mut overflow = 0u64;
    for &v in &batch.values {
        if v < lo {
            underflow += 1;
        } else if v >= lo + width * bins as f64 {
            overflow += 1;
        } else {
            let idx = ((v - lo) / width) as usize;
            counts[idx.min(bins - 1)] += 1;
        }
    }
    Ok(Histogram { eta, h, edges, counts, underflow, overflow, n_samples: batch.n_samples })
}

impl Histogram {
    pub fn mid(&self, i: usize) -> f64 {
        0.5 * (self.edges[i] + self.edges[i + 1])
    }

    /// Density estimate for bin `i`.
    pub fn density(&self, i: usize) -> f64 {
        let width = self.edges[i + 1] - self.edges[i];
        self.counts[i] as f64 / (self.n_samples as f64 * width)
    }

    /// 99% normal-approximation confidence interval for the density.
    pub fn density_ci(&self, i: usize) -> (f64, f64) {
        let width = self.edges[i + 1] - self.edges[i];
        let n = self.n_samples as f64;
        let p = self.counts[i] as f64 / n;
        let se = (p * (1.0 - p) / n).sqrt();
        ((p - Z_99 * se) / width, (p + Z_99 * se) / width)
    }

    /// Binned counts plus the under/overflow tallies; always equals the
    /// batch size.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum::<u64>() + self.underflow + self.overflow
    }

    /// CSV export: header `t_mid,count,density,ci_lo,ci_hi`, LF endings,
    /// 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t_mid,count,density,ci_lo,ci_hi\n");
        for i in 0..self.counts.len() {
            let (lo, hi) = self.density_ci(i);
            out.push_str(&format!(
                "{:.16e},{},{:.16e},{:.16e},{:.16e}\n",
                self.mid(i),
                self.counts[i],
                self.density(i),
                lo,
                hi
            ));
        }
        out
    }
}

/// Empirical CDF values with 99% pointwise binomial intervals.
pub fn empirical_cdf(sorted: &[f64], x_grid: &[f64]) -> Vec<(f64, f64, f64)> {
    let n = sorted.len() as f64;
    x_grid
        .iter()
        .map(|&x| {
            let k = sorted.partition_point(|&v| v <= x) as f64;
            let p = k / n;
            let se = (p * (1.0 - p) / n).sqrt();
            (p, (p - Z_99 * se).max(0.0), (p + Z_99 * se).min(1.0))
        })
        .collect()
}

/// One-sample KS distance against a reference CDF given as a closure.
pub fn ks_one_sample<F: Fn(f64) -> f64>(sorted: &[f64], cdf: F) -> f64 {
    let n = sorted.len() as f64;
    let mut worst = 0.0f64;
    for (i, &x) in sorted.iter().enumerate() {
        let f = cdf(x);
        let hi = (i as f64 + 1.0) / n - f;
        let lo = f - i as f64 / n;
        worst = worst.max(hi.abs()).max(lo.abs());
    }
    worst
}

/// Two-sample KS distance (ties advance both samples together).
pub fn ks_two_sample(a_sorted: &[f64], b_sorted: &[f64]) -> f64 {
    let (na, nb) = (a_sorted.len() as f64, b_sorted.len() as f64);
    let mut i = 0usize;
    let mut j = 0usize;
    let mut worst = 0.0f64;
    while i < a_sorted.len() && j < b_sorted.len() {
        if a_sorted[i] < b_sorted[j] {
            i += 1;
        } else if b_sorted[j] < a_sorted[i] {
            j += 1;
        } else {
            let v = a_sorted[i];
            while i < a_sorted.len() && a_sorted[i] == v {
                i += 1;
            }
            while j < b_sorted.len() && b_sorted[j] == v {
                j += 1;
            }
        }
        worst = worst.max((i as f64 / na - j as f64 / nb).abs());
    }
    worst
}

/// 3-sigma-equivalent KS threshold for a one-sample test of size `n`.
pub fn ks_threshold_one(n: u64) -> f64 {
    KS_3SIGMA / (n as f64).sqrt()
}

/// 3-sigma-equivalent KS threshold for a two-sample test.
pub fn ks_threshold_two(n1: u64, n2: u64) -> f64 {
    KS_3SIGMA * ((n1 + n2) as f64 / (n1 as f64 * n2 as f64)).sqrt()
}

/// Monotone piecewise-linear interpolant through `(x_i, y_i)`; clamps
/// outside the grid. Used to turn a reference-CDF table into a closure.
#[derive(Debug, Clone)]
pub struct LinearInterp {
    xs: Vec<f64>,
    ys: Vec<f64>,
}

impl LinearInterp {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Self {
        assert_eq!(xs.len(), ys.len());
        assert!(xs.windows(2).all(|w| w[1] > w[0]));
        LinearInterp { xs, ys }
    }

    pub fn eval(&self, x: f64) -> f64 {
        if x <= self.xs[0] {
            return self.ys[0];
        }
        if x >= *self.xs.last().unwrap() {
            return *self.ys.last().unwrap();
        }
        let i = self.xs.partition_point(|&v| v <= x) - 1;
        let t = (x - self.xs[i]) / (self.xs[i + 1] - self.xs[i]);
        self.ys[i] * (1.0 - t) + self.ys[i + 1] * t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::painleve::Beta;
    use crate::sampler::{sample_batch, EnsembleSpec};

    #[test]
    fn histogram_conserves_counts() {
        let spec = EnsembleSpec::gaussian(Beta::Two, 8);
        let batch = sample_batch(spec, 5000, 5).unwrap();
        let hist = mc_histogram(&batch, 2.0, -3.0, 2.0).unwrap();
        // Sum over bins plus under/overflow equals N even on a range that
        // misses part of the support.
        assert_eq!(hist.total(), 5000);
        assert!(hist.underflow > 0 || hist.overflow > 0);
        for w in hist.edges.windows(2) {
            assert!(w[1] > w[0]);
        }
        let csv = hist.to_csv();
        assert!(csv.starts_with("t_mid,count,density,ci_lo,ci_hi\n"));
        assert_eq!(csv.lines().count(), hist.counts.len() + 1);
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn ks_statistics_on_synthetic_data() {
        // Uniform[0,1] sample against its own CDF.
        let n = 4000;
        let sorted: Vec<f64> = (0..n).map(|i| (i as f64 + 0.5) / n as f64).collect();
        let ks = ks_one_sample(&sorted, |x| x.clamp(0.0, 1.0));
        assert!(ks < 0.001);
        // Identical two samples: distance 0.
        assert_eq!(ks_two_sample(&sorted, &sorted), 0.0);
        // Shifted sample: distance ~ shift.
        let shifted: Vec<f64> = sorted.iter().map(|v| v + 0.1).collect();
        let d = ks_two_sample(&sorted, &shifted);
        assert!((d - 0.1).abs() < 0.01, "{d}");
    }

    #[test]
    fn empirical_cdf_values_and_intervals() {
        let sorted: Vec<f64> = (0..1000).map(|i| i as f64 / 1000.0).collect();
        let out = empirical_cdf(&sorted, &[-0.5, 0.25, 0.5, 2.0]);
        assert_eq!(out[0].0, 0.0);
        assert!((out[1].0 - 0.251).abs() < 1e-12);
        assert!((out[2].0 - 0.501).abs() < 1e-12);
        assert_eq!(out[3].0, 1.0);
        for (p, lo, hi) in out {
            assert!(lo <= p && p <= hi);
            assert!((0.0..=1.0).contains(&lo) && (0.0..=1.0).contains(&hi));
        }
    }

    #[test]
    fn interpolation_clamps_and_matches_nodes() {
        let li = LinearInterp::new(vec![0.0, 1.0, 2.0], vec![0.0, 0.5, 1.0]);
        assert_eq!(li.eval(-1.0), 0.0);
        assert_eq!(li.eval(3.0), 1.0);
        assert!((li.eval(0.5) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn gue_n1_cdf_against_error_function_oracle() {
        // KS of the n = 1 unscaled eigenvalue against (1 + erf(x))/2,
        // below the 99% Kolmogorov quantile 1.63/sqrt(N) at N = 10^6.
        let n = 1_000_000u64;
        let spec = EnsembleSpec::gaussian(Beta::Two, 1);
        let batch = sample_batch(spec, n, 21).unwrap();
        let mut raw: Vec<f64> = batch
            .values
            .iter()
            .map(|&t| batch.scaling.to_unscaled(t))
            .collect();
        raw.sort_by(f64::total_cmp);
        // Quadrature-oracle erf tabulated once; linear interpolation on a
        // 0.002-step grid is accurate to ~1e-7, far below the threshold.
        let erf = |x: f64| {
            let v = crate::quad::integrate(|s| (-s * s).exp(), 0.0, x.abs(), 60)
                * 2.0
                / std::f64::consts::PI.sqrt();
            if x < 0.0 {
                -v
            } else {
                v
            }
        };
        let xs: Vec<f64> = (0..=6000).map(|i| -6.0 + 0.002 * i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| 0.5 * (1.0 + erf(x))).collect();
        let cdf = LinearInterp::new(xs, ys);
        let ks = ks_one_sample(&raw, |x| cdf.eval(x));
        assert!(ks < 1.63 / (n as f64).sqrt(), "KS = {ks}");
    }
}
