//! Named validation checks: every acceptance-grade consistency statement
//! of the library as a pass/fail record with a measured value and a pinned
//! tolerance. The `acceptance` integration suite asserts them one by one;
//! the CLI `validate` subcommand serializes them as JSON.

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::expansion::{
    eval_expansion, expansion_term, histogram_adjust, lambda_closed, make_scaling, pq_recursion,
    wave_expansion, EnsembleKind, PqCase, WaveCase,
};
use crate::fredholm::{
    closed_form_correction, det_airy, det_finite, finite_rank_correction, kernel_correction,
    CorrectionCoeffs, CorrectionEnsemble, FiniteKernel, ResolventTable,
};
use crate::painleve::{Beta, TracyWidom};
use crate::sampler::{
    decimation_check, ks_one_sample, mc_histogram, sample_batch, superposition_e2,
    DecimationFamily, EnsembleSpec, LinearInterp,
};

/// One validation record.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// The quantity the tolerance applies to (max error, ratio, ...).
    pub measured: f64,
    pub tolerance: f64,
    pub detail: String,
    pub runtime_ms: u128,
}

impl CheckResult {
    fn build(name: &str, measured: f64, tolerance: f64, detail: String) -> Self {
        CheckResult {
            name: name.into(),
            passed: measured <= tolerance,
            measured,
            tolerance,
            detail,
            runtime_ms: 0,
        }
    }

    fn boolean(name: &str, ok: bool, detail: String) -> Self {
        CheckResult {
            name: name.into(),
            passed: ok,
            measured: if ok { 0.0 } else { 1.0 },
            tolerance: 0.0,
            detail,
            runtime_ms: 0,
        }
    }
}

fn timed<F: FnOnce() -> CheckResult>(f: F) -> CheckResult {
    let start = std::time::Instant::now();
    let mut result = f();
    result.runtime_ms = start.elapsed().as_millis();
    result
}

/// Shared Tracy–Widom evaluator (the Hastings–McLeod build costs ~1 s).
pub fn tracy_widom() -> &'static TracyWidom {
    static TW: OnceLock<TracyWidom> = OnceLock::new();
    TW.get_or_init(|| TracyWidom::build().expect("Hastings-McLeod build"))
}

// ---------------------------------------------------------------------
// Criterion 1: dual-oracle Tracy-Widom.
// ---------------------------------------------------------------------

pub fn check_dual_oracle_f2() -> CheckResult {
    timed(|| {
        let tw = tracy_widom();
        let worst = (-6..=2)
            .into_par_iter()
            .map(|ti| {
                let t = ti as f64;
                let det = det_airy(t).expect("det_airy").value;
                let pain = tw.f2(t).expect("F_2");
                (det - pain).abs()
            })
            .reduce(|| 0.0, f64::max);
        CheckResult::build(
            "dual_oracle_f2",
            worst,
            1e-8,
            "max |det_airy(t) - F_2^{Painleve}(t)| over t = -6..2".into(),
        )
    })
}

// ---------------------------------------------------------------------
// Criterion 2: sharp numerical bounds for the GUE density corrections.
// ---------------------------------------------------------------------

/// Richardson central difference of `E_2(n; mu + sigma t)` in `t`.
fn det_finite_dt(kind: FiniteKernel, mu: f64, sigma: f64, t: f64) -> f64 {
    let delta = 5e-3;
    let e = |dt: f64| det_finite(kind, mu + sigma * (t + dt)).expect("det").value;
    (e(-2.0 * delta) - 8.0 * e(-delta) + 8.0 * e(delta) - e(2.0 * delta)) / (12.0 * delta)
}

pub fn check_bound_gue_density(with_correction: bool) -> CheckResult {
    timed(|| {
        let tw = tracy_widom();
        let mut worst_rel = 0.0f64;
        let mut detail = String::new();
        for n in [2u32, 5, 10, 40] {
            let scaling =
                make_scaling(EnsembleKind::Gaussian, Beta::Two, n as f64, None).unwrap();
            let bound = if with_correction {
                0.02 * (n as f64).powf(-4.0 / 3.0)
            } else {
                0.07 * (n as f64).powf(-2.0 / 3.0)
            };
            let worst = (0..=160)
                .into_par_iter()
                .map(|i| {
                    let t = -5.0 + 0.05 * i as f64;
                    let deriv =
                        det_finite_dt(FiniteKernel::HermiteN(n), scaling.mu, scaling.sigma, t);
                    let model = if with_correction {
                        eval_expansion(
                            EnsembleKind::Gaussian,
                            Beta::Two,
                            n as f64,
                            None,
                            1,
                            t,
                            true,
                            tw,
                        )
                        .unwrap()
                    } else {
                        tw.eval(Beta::Two, 1, t).unwrap()
                    };
                    (deriv - model).abs()
                })
                .reduce(|| 0.0, f64::max);
            detail.push_str(&format!("n={n}: {worst:.3e} vs {bound:.3e}; "));
            worst_rel = worst_rel.max(worst / bound);
        }
        let name = if with_correction {
            "bound_gue_density_corrected"
        } else {
            "bound_gue_density"
        };
        CheckResult::build(name, worst_rel, 1.0, detail)
    })
}

// ---------------------------------------------------------------------
// Criterion 3: expansion-order checks (the approximation panels).
// ---------------------------------------------------------------------

fn expansion_deviation(kind: EnsembleKind, n: u32, p: Option<u32>, j: usize) -> f64 {
    let tw = tracy_widom();
    let scaling = make_scaling(kind, Beta::Two, n as f64, p.map(f64::from)).unwrap();
    let kernel = match kind {
        EnsembleKind::Gaussian => FiniteKernel::HermiteN(n),
        EnsembleKind::Laguerre => FiniteKernel::LaguerreNP(n, p.unwrap()),
    };
    (0..=60)
        .into_par_iter()
        .map(|i| {
            let t = -4.0 + 0.1 * i as f64;
            let e2 = det_finite(kernel, scaling.to_unscaled(t)).expect("det").value;
            let partial =
                eval_expansion(kind, Beta::Two, n as f64, p.map(f64::from), j - 1, t, false, tw)
                    .unwrap();
            let term = expansion_term(Beta::Two, j, kind)
                .eval(tw, t, scaling.tau, false)
                .unwrap();
            ((e2 - partial) / scaling.h.powi(j as i32) - term).abs()
        })
        .reduce(|| 0.0, f64::max)
}

pub fn check_expansion_order(kind: EnsembleKind) -> CheckResult {
    timed(|| {
        let (n_small, n_large, p_small, p_large, name) = match kind {
            EnsembleKind::Gaussian => (10u32, 80u32, None, None, "expansion_order_gaussian"),
            EnsembleKind::Laguerre => {
                (10, 80, Some(40u32), Some(320u32), "expansion_order_laguerre")
            }
        };
        let h_small = make_scaling(kind, Beta::Two, n_small as f64, p_small.map(f64::from))
            .unwrap()
            .h;
        let h_large = make_scaling(kind, Beta::Two, n_large as f64, p_large.map(f64::from))
            .unwrap()
            .h;
        let predicted = h_large / h_small;
        let mut worst_ratio_rel = 0.0f64;
        let mut detail = String::new();
        for j in 1..=3usize {
            let dev_small = expansion_deviation(kind, n_small, p_small, j);
            let dev_large = expansion_deviation(kind, n_large, p_large, j);
            let ratio = dev_large / dev_small;
            detail.push_str(&format!(
                "j={j}: dev({n_small})={dev_small:.3e}, dev({n_large})={dev_large:.3e}, ratio={ratio:.4}; "
            ));
            worst_ratio_rel = worst_ratio_rel.max((ratio / predicted).max(predicted / ratio));
        }
        // Every deviation ratio must lie within a factor 2 of h_large/h_small.
        CheckResult::build(
            name,
            worst_ratio_rel,
            2.0,
            format!("predicted ratio {predicted:.4}; {detail}"),
        )
    })
}

// ---------------------------------------------------------------------
// Criterion 4: kernel expansion law.
// ---------------------------------------------------------------------

fn kernel_residual(kind: EnsembleKind, n: u32, p: Option<u32>, order: u8) -> f64 {
    let scaling = make_scaling(kind, Beta::Two, n as f64, p.map(f64::from)).unwrap();
    let (kernel, ens) = match kind {
        EnsembleKind::Gaussian => (FiniteKernel::HermiteN(n), CorrectionEnsemble::Gue),
        EnsembleKind::Laguerre => (
            FiniteKernel::LaguerreNP(n, p.unwrap()),
            CorrectionEnsemble::Lue { tau: scaling.tau },
        ),
    };
    let grid = [-2.0, -1.0, 0.0, 1.0, 2.0];
    let mut worst = 0.0f64;
    for &x in &grid {
        for &y in &grid {
            let scaled = scaling.sigma
                * kernel.eval_pair(scaling.to_unscaled(x), scaling.to_unscaled(y));
            let mut r = scaled - crate::fredholm::airy_kernel(x, y);
            for j in 1..=order {
                r -= scaling.h.powi(j as i32) * kernel_correction(ens, j, x, y).unwrap();
            }
            worst = worst.max(r.abs());
        }
    }
    worst
}

pub fn check_kernel_expansion(kind: EnsembleKind) -> CheckResult {
    timed(|| {
        let (pairs, name): ([(u32, Option<u32>); 2], &str) = match kind {
            EnsembleKind::Gaussian => ([(100, None), (400, None)], "kernel_expansion_gue"),
            EnsembleKind::Laguerre => (
                [(100, Some(400)), (400, Some(1600))],
                "kernel_expansion_lue",
            ),
        };
        let h_small = make_scaling(kind, Beta::Two, pairs[0].0 as f64, pairs[0].1.map(f64::from))
            .unwrap()
            .h;
        let h_large = make_scaling(kind, Beta::Two, pairs[1].0 as f64, pairs[1].1.map(f64::from))
            .unwrap()
            .h;
        let mut worst = 0.0f64;
        let mut detail = String::new();
        for order in [1u8, 2] {
            let r_small = kernel_residual(kind, pairs[0].0, pairs[0].1, order);
            let r_large = kernel_residual(kind, pairs[1].0, pairs[1].1, order);
            let measured = r_large / r_small;
            let predicted = (h_large / h_small).powi(order as i32 + 1);
            let rel = (measured / predicted).max(predicted / measured);
            detail.push_str(&format!(
                "order {order}: residuals {r_small:.3e} -> {r_large:.3e}, ratio {measured:.4} vs {predicted:.4}; "
            ));
            worst = worst.max(rel);
        }
        CheckResult::build(name, worst, 1.4, detail)
    })
}

// ---------------------------------------------------------------------
// Criterion 5: Part-II algebra, exact.
// ---------------------------------------------------------------------

pub fn check_m1_system() -> CheckResult {
    timed(|| {
        let ok = (|| -> Result<bool, String> {
            // Assembled 13x4 system must match the display entry by entry.
            let assembled =
                crate::algebra::assemble_system_symbolic().map_err(|e| e.to_string())?;
            let displayed = crate::algebra::displayed_system();
            for i in 0..13 {
                for j in 0..4 {
                    if assembled.matrix[i][j] != displayed.matrix[i][j] {
                        return Ok(false);
                    }
                }
                if assembled.rhs[i] != displayed.rhs[i] {
                    return Ok(false);
                }
            }
            // And the symbolic solution is (p11, p11, 2 p12, 2 p12).
            let sol = assembled.solve().map_err(|e| e.to_string())?;
            let p11 = crate::polyalg::RatPoly::var("p11");
            let p12 = crate::polyalg::RatPoly::var("p12").scale(&crate::polyalg::rat(2, 1));
            Ok(sol[0] == p11 && sol[1] == p11 && sol[2] == p12 && sol[3] == p12)
        })()
        .unwrap_or(false);
        CheckResult::boolean(
            "m1_system",
            ok,
            "13x4 monomial system matches the display and solves to (p11, 2 p12)".into(),
        )
    })
}

pub fn check_m23_transformations() -> CheckResult {
    timed(|| {
        let mut ok = true;
        let mut detail = String::new();
        for kind in [EnsembleKind::Gaussian, EnsembleKind::Laguerre] {
            for j in 1..=3usize {
                match crate::algebra::derive_beta14(j, kind) {
                    Ok(_) => {}
                    Err(e) => {
                        ok = false;
                        detail.push_str(&format!("{kind:?} j={j}: {e}; "));
                    }
                }
            }
        }
        if ok {
            detail = "derived E_{beta,j} match the hardcoded displays exactly, \
                      p_+ = p_-, tau = 0 reduction holds"
                .into();
        }
        CheckResult::boolean("m23_transformations", ok, detail)
    })
}

// ---------------------------------------------------------------------
// Criterion 6: Part-III recursions, exact.
// ---------------------------------------------------------------------

pub fn check_pq_recursions() -> CheckResult {
    timed(|| {
        let ok = (|| -> Option<bool> {
            let hermite = pq_recursion(PqCase::Hermite, 6).ok()?;
            let laguerre = pq_recursion(PqCase::LaguerreSymbolic, 6).ok()?;
            // Displays.
            let t = crate::polyalg::RatPoly::var("t");
            let p1 = t
                .scale(&crate::polyalg::rat(1, 4))
                .sub(&t.pow(3).scale(&crate::polyalg::rat(1, 24)));
            let p2 = t
                .pow(2)
                .scale(&crate::polyalg::rat(3, 16))
                .add(&crate::polyalg::RatPoly::from_rat(1, 8));
            let q1 = t
                .pow(2)
                .scale(&crate::polyalg::rat(-3, 8))
                .add(&crate::polyalg::RatPoly::from_rat(-1, 4));
            if hermite.entry(1).p != p1 || hermite.entry(2).p != p2 || hermite.entry(1).q != q1 {
                return Some(false);
            }
            // Laguerre P_2 = -t Q_1.
            if laguerre.entry(2).p != t.mul(&laguerre.entry(1).q).neg() {
                return Some(false);
            }
            // Leading coefficients of P_1, P_3, P_5 equal the closed lambdas.
            for k in 1..=3usize {
                if hermite.entry(2 * k - 1).lambda != lambda_closed(&PqCase::Hermite, k) {
                    return Some(false);
                }
                if laguerre.entry(2 * k - 1).lambda != lambda_closed(&PqCase::LaguerreSymbolic, k)
                {
                    return Some(false);
                }
            }
            // Zero residuals for k <= 6.
            for k in 1..=6usize {
                if !hermite.residual(k).is_zero() || !laguerre.residual(k).is_zero() {
                    return Some(false);
                }
            }
            Some(true)
        })()
        .unwrap_or(false);
        CheckResult::boolean(
            "pq_recursions",
            ok,
            "P/Q displays, closed lambdas and zero substitution residuals (k <= 6)".into(),
        )
    })
}

// ---------------------------------------------------------------------
// Criterion 7: wave-function expansion order.
// ---------------------------------------------------------------------

fn wave_deviation(case: WaveCase, n: u32, p: Option<u32>) -> f64 {
    let exp = wave_expansion(case, 3);
    (0..=100)
        .into_par_iter()
        .map(|i| {
            let s = -4.0 + 0.1 * i as f64;
            let lhs = exp.normalized_wave(n, p, s).expect("wave eval");
            let rhs = exp.eval(n as f64, p.map(f64::from), s);
            (lhs - rhs).abs() * s.exp()
        })
        .reduce(|| 0.0, f64::max)
}

pub fn check_wave_expansion_order(case: WaveCase) -> CheckResult {
    timed(|| {
        let (small, large, name): ((u32, Option<u32>), (u32, Option<u32>), &str) = match case {
            WaveCase::Hermite => ((100, None), (400, None), "wave_expansion_order_hermite"),
            WaveCase::Laguerre => (
                (100, Some(400)),
                (400, Some(1600)),
                "wave_expansion_order_laguerre",
            ),
        };
        let h_small =
            crate::expansion::wave_scaling(case, small.0 as f64, small.1.map(f64::from)).h;
        let h_large =
            crate::expansion::wave_scaling(case, large.0 as f64, large.1.map(f64::from)).h;
        let predicted = (h_large / h_small).powi(4);
        let dev_small = wave_deviation(case, small.0, small.1);
        let dev_large = wave_deviation(case, large.0, large.1);
        let measured = dev_large / dev_small;
        let rel = (measured / predicted).max(predicted / measured);
        CheckResult::build(
            name,
            rel,
            1.4,
            format!(
                "deviations {dev_small:.3e} -> {dev_large:.3e}, ratio {measured:.4e} vs predicted {predicted:.4e}"
            ),
        )
    })
}

// ---------------------------------------------------------------------
// Criterion 8: Monte-Carlo substitutes for the large-sample figures.
// ---------------------------------------------------------------------

/// Reference CDF closure for a finite-n unitary kernel on a scaled grid.
fn reference_cdf(kernel: FiniteKernel, mu: f64, sigma: f64) -> LinearInterp {
    let ts: Vec<f64> = (0..=420).map(|i| -6.0 + 0.025 * i as f64).collect();
    let ys: Vec<f64> = ts
        .par_iter()
        .map(|&t| det_finite(kernel, mu + sigma * t).expect("det").value)
        .collect();
    LinearInterp::new(ts, ys)
}

pub fn check_mc_calibration(n_samples: u64) -> CheckResult {
    timed(|| {
        let mut worst = 0.0f64;
        let mut detail = String::new();
        for n in [5u32, 10, 25] {
            let spec = EnsembleSpec::gaussian(Beta::Two, n);
            let batch = sample_batch(spec, n_samples, 2024 + n as u64).expect("batch");
            let scaling = batch.scaling;
            let cdf = reference_cdf(FiniteKernel::HermiteN(n), scaling.mu, scaling.sigma);
            let mut sorted = batch.values;
            sorted.sort_by(f64::total_cmp);
            let ks = ks_one_sample(&sorted, |t| cdf.eval(t));
            detail.push_str(&format!("n={n}: KS={ks:.2e}; "));
            worst = worst.max(ks);
        }
        CheckResult::build("mc_calibration_beta2", worst, 2e-3, detail)
    })
}

/// Quantile of the limit law `F_2` by bisection.
fn f2_quantile(p: f64) -> f64 {
    let tw = tracy_widom();
    let (mut lo, mut hi) = (-6.0f64, 4.0f64);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if tw.f2(mid).expect("F_2") < p {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// First-correction panel: per-bin `(hist - F')/h` against
/// `E_1' + h E~_2'` within 99% CIs on at least 95% of the central bins.
///
/// Central bins are those inside the central 90% of the limit-law mass
/// (the 5%..95% quantile window of `F_2`). The bin widths are chosen so
/// the per-bin Monte-Carlo noise dominates the next-order truncation
/// `h^2 E~_3'`: at `(n, p) = (10, 40)` the expansion parameter is large
/// enough that wide bins would resolve the truncation term itself.
pub fn check_mc_panel(kind: EnsembleKind, n_samples: u64) -> CheckResult {
    timed(|| {
        let tw = tracy_widom();
        let (spec, eta, name) = match kind {
            EnsembleKind::Gaussian => {
                (EnsembleSpec::gaussian(Beta::Two, 10), 4.0, "mc_panel_gue")
            }
            EnsembleKind::Laguerre => (
                EnsembleSpec::laguerre(Beta::Two, 10, 40),
                1.2,
                "mc_panel_lue",
            ),
        };
        let (q_lo, q_hi) = (f2_quantile(0.05), f2_quantile(0.95));
        let batch = sample_batch(spec, n_samples, 777).expect("batch");
        let h = batch.scaling.h;
        let tau = batch.scaling.tau;
        let hist = mc_histogram(&batch, eta, -5.0, 4.0).expect("histogram");
        let adjusted = histogram_adjust(kind, Beta::Two, eta);
        let mut central = 0usize;
        let mut hits = 0usize;
        for i in 0..hist.counts.len() {
            let t = hist.mid(i);
            if t < q_lo || t > q_hi {
                continue;
            }
            central += 1;
            let (lo, hi) = hist.density_ci(i);
            let model = tw.eval(Beta::Two, 1, t).unwrap()
                + h * adjusted.eval(1, tw, t, tau, true).unwrap()
                + h * h * adjusted.eval(2, tw, t, tau, true).unwrap();
            if model >= lo && model <= hi {
                hits += 1;
            }
        }
        let coverage = hits as f64 / central.max(1) as f64;
        CheckResult {
            name: name.into(),
            passed: coverage >= 0.95,
            measured: coverage,
            tolerance: 0.95,
            detail: format!(
                "{hits}/{central} central bins (t in [{q_lo:.2}, {q_hi:.2}]) inside 99% CIs, bin width {eta} h"
            ),
            runtime_ms: 0,
        }
    })
}

pub fn check_mc_decimation(n_samples: u64) -> CheckResult {
    timed(|| {
        let gse = decimation_check(DecimationFamily::GseGoe, 4, None, n_samples, 3001)
            .expect("GSE check");
        let lue = decimation_check(DecimationFamily::LueLoe, 5, Some(8), n_samples, 3003)
            .expect("LUE check");
        let measured = (gse.ks / gse.threshold).max(lue.ks / lue.threshold);
        CheckResult::build(
            "mc_decimation",
            measured,
            1.0,
            format!(
                "GSE_4 vs even(GOE_9): KS={:.2e} (thr {:.2e}); LUE(5,8) vs even(LOE union): KS={:.2e} (thr {:.2e})",
                gse.ks, gse.threshold, lue.ks, lue.threshold
            ),
        )
    })
}

pub fn check_mc_superposition(n_samples: u64) -> CheckResult {
    timed(|| {
        let n = 6u32;
        let scaling = make_scaling(EnsembleKind::Gaussian, Beta::Two, n as f64, None).unwrap();
        let ts = [-2.0f64, -1.0, 0.0, 1.0];
        let xs: Vec<f64> = ts.iter().map(|&t| scaling.to_unscaled(t)).collect();
        let est = superposition_e2(n, &xs, n_samples, 4242).expect("superposition");
        // Block standard errors from 100 sub-batches.
        let blocks = 100u64;
        let per = n_samples / blocks;
        let mut block_vals = vec![Vec::with_capacity(blocks as usize); xs.len()];
        for b in 0..blocks {
            let vals = superposition_e2(n, &xs, per, 42_420_000 + b).expect("block");
            for (j, v) in vals.into_iter().enumerate() {
                block_vals[j].push(v);
            }
        }
        let mut worst = 0.0f64;
        let mut detail = String::new();
        for (j, &t) in ts.iter().enumerate() {
            let det = det_finite(FiniteKernel::HermiteN(n), xs[j]).expect("det").value;
            let mean: f64 = block_vals[j].iter().sum::<f64>() / blocks as f64;
            let var: f64 = block_vals[j]
                .iter()
                .map(|v| (v - mean) * (v - mean))
                .sum::<f64>()
                / (blocks as f64 - 1.0);
            let se = (var / blocks as f64).sqrt();
            let dev = (est[j] - det).abs() / (3.0 * se.max(1e-12));
            detail.push_str(&format!("t={t}: |dev|/3SE={dev:.3}; "));
            worst = worst.max(dev);
        }
        CheckResult::build("mc_superposition_e2", worst, 1.0, detail)
    })
}

// ---------------------------------------------------------------------
// Criterion 9: Laguerre-to-Gaussian transition and Wishart symmetry.
// ---------------------------------------------------------------------

pub fn check_laguerre_to_gaussian() -> CheckResult {
    timed(|| {
        let n = 5u32;
        let gauss = make_scaling(EnsembleKind::Gaussian, Beta::Two, n as f64, None).unwrap();
        let sup_for = |p: u32| -> f64 {
            let lag = make_scaling(EnsembleKind::Laguerre, Beta::Two, n as f64, Some(p as f64))
                .unwrap();
            (0..=70)
                .into_par_iter()
                .map(|i| {
                    let t = -4.0 + 0.1 * i as f64;
                    let e_lag = det_finite(FiniteKernel::LaguerreNP(n, p), lag.to_unscaled(t))
                        .expect("lag det")
                        .value;
                    let e_gau = det_finite(FiniteKernel::HermiteN(n), gauss.to_unscaled(t))
                        .expect("gau det")
                        .value;
                    (e_lag - e_gau).abs()
                })
                .reduce(|| 0.0, f64::max)
        };
        let sups: Vec<f64> = [100u32, 1000, 10000].iter().map(|&p| sup_for(p)).collect();
        let decreasing = sups[0] > sups[1] && sups[1] > sups[2];
        CheckResult::boolean(
            "laguerre_to_gaussian",
            decreasing,
            format!(
                "sup distances along p = 100, 1000, 10000: {:.3e}, {:.3e}, {:.3e}",
                sups[0], sups[1], sups[2]
            ),
        )
    })
}

pub fn check_wishart_symmetry_det() -> CheckResult {
    timed(|| {
        let worst = [6.0f64, 12.0, 20.0]
            .into_par_iter()
            .map(|x| {
                let a = det_finite(FiniteKernel::LaguerreNP(3, 7), x).expect("det").value;
                let b = det_finite(FiniteKernel::LaguerreNP(7, 3), x).expect("det").value;
                (a - b).abs()
            })
            .reduce(|| 0.0, f64::max);
        CheckResult::build(
            "wishart_symmetry_det",
            worst,
            1e-10,
            "max |E_2(3,7;x) - E_2(7,3;x)| over x = 6, 12, 20".into(),
        )
    })
}

// ---------------------------------------------------------------------
// Criterion 10: Appendix-A consistency.
// ---------------------------------------------------------------------

pub fn check_appendix_a() -> CheckResult {
    timed(|| {
        let tw = tracy_widom();
        let coeff_sets: Vec<(String, CorrectionCoeffs)> = vec![
            ("gue".into(), CorrectionCoeffs::gue_tilde()),
            ("lue(0)".into(), CorrectionCoeffs::lue_tilde(0.0)),
            ("lue(1/2)".into(), CorrectionCoeffs::lue_tilde(0.5)),
            ("lue(1)".into(), CorrectionCoeffs::lue_tilde(1.0)),
        ];
        let mut worst = 0.0f64;
        let mut detail = String::new();
        for &t in &[-2.0f64, 0.0, 1.0] {
            let table = ResolventTable::build(t).expect("resolvent");
            // Remark: F_2'' = 2 F_2 u_{01}.
            let f2 = tw.f2(t).unwrap();
            let f2pp = tw.eval(Beta::Two, 2, t).unwrap();
            let remark = (f2pp - 2.0 * f2 * table.u(0, 1)).abs();
            worst = worst.max(remark);
            for (label, coeffs) in &coeff_sets {
                let numeric = finite_rank_correction(coeffs, &table);
                let closed = closed_form_correction(coeffs, t, tw);
                let d = (numeric.0 - closed.0)
                    .abs()
                    .max((numeric.1 - closed.1).abs())
                    .max((numeric.2 - closed.2).abs());
                if d > worst {
                    detail = format!("worst at t={t}, {label}");
                }
                worst = worst.max(d);
            }
        }
        CheckResult::build(
            "appendix_a_consistency",
            worst,
            1e-6,
            format!("max |d_j^numeric - d_j^closed| and the F_2''=2F_2u01 remark; {detail}"),
        )
    })
}

/// The single-coefficient example: `a01 = 3/10` alone gives
/// `F_2 d_1 = -(3/10) F_2''`.
pub fn check_single_coefficient_correction() -> CheckResult {
    timed(|| {
        let tw = tracy_widom();
        let t = -1.0;
        let table = ResolventTable::build(t).expect("resolvent");
        let coeffs = CorrectionCoeffs { a01: 0.3, ..CorrectionCoeffs::ZERO };
        let (d1, _, _) = finite_rank_correction(&coeffs, &table);
        let f2 = tw.f2(t).unwrap();
        let f2pp = tw.eval(Beta::Two, 2, t).unwrap();
        let measured = (f2 * d1 + 0.3 * f2pp).abs();
        CheckResult::build(
            "tilde_e21_single_term",
            measured,
            1e-6,
            "F_2 d_1 = -(3/10) F_2'' for the lone a01 coefficient".into(),
        )
    })
}

// ---------------------------------------------------------------------
// Orchestration.
// ---------------------------------------------------------------------

/// Monte-Carlo budget knobs (the acceptance suite uses the defaults).
#[derive(Debug, Clone, Copy)]
pub struct McBudget {
    pub calibration: u64,
    pub panel: u64,
    pub decimation: u64,
    pub superposition: u64,
}

impl Default for McBudget {
    fn default() -> Self {
        McBudget {
            calibration: 1_000_000,
            panel: 10_000_000,
            decimation: 100_000,
            superposition: 1_000_000,
        }
    }
}

type Job = (&'static str, Box<dyn FnOnce() -> CheckResult>);

/// Run every check (optionally filtered by substring).
pub fn run_all(filter: Option<&str>, budget: McBudget) -> Vec<CheckResult> {
    let jobs: Vec<Job> = vec![
        ("dual_oracle_f2", Box::new(check_dual_oracle_f2)),
        ("bound_gue_density", Box::new(|| check_bound_gue_density(false))),
        (
            "bound_gue_density_corrected",
            Box::new(|| check_bound_gue_density(true)),
        ),
        (
            "expansion_order_gaussian",
            Box::new(|| check_expansion_order(EnsembleKind::Gaussian)),
        ),
        (
            "expansion_order_laguerre",
            Box::new(|| check_expansion_order(EnsembleKind::Laguerre)),
        ),
        (
            "kernel_expansion_gue",
            Box::new(|| check_kernel_expansion(EnsembleKind::Gaussian)),
        ),
        (
            "kernel_expansion_lue",
            Box::new(|| check_kernel_expansion(EnsembleKind::Laguerre)),
        ),
        ("m1_system", Box::new(check_m1_system)),
        ("m23_transformations", Box::new(check_m23_transformations)),
        ("pq_recursions", Box::new(check_pq_recursions)),
        (
            "wave_expansion_order_hermite",
            Box::new(|| check_wave_expansion_order(WaveCase::Hermite)),
        ),
        (
            "wave_expansion_order_laguerre",
            Box::new(|| check_wave_expansion_order(WaveCase::Laguerre)),
        ),
        (
            "mc_calibration_beta2",
            Box::new(move || check_mc_calibration(budget.calibration)),
        ),
        (
            "mc_panel_gue",
            Box::new(move || check_mc_panel(EnsembleKind::Gaussian, budget.panel)),
        ),
        (
            "mc_panel_lue",
            Box::new(move || check_mc_panel(EnsembleKind::Laguerre, budget.panel)),
        ),
        (
            "mc_decimation",
            Box::new(move || check_mc_decimation(budget.decimation)),
        ),
        (
            "mc_superposition_e2",
            Box::new(move || check_mc_superposition(budget.superposition)),
        ),
        ("laguerre_to_gaussian", Box::new(check_laguerre_to_gaussian)),
        ("wishart_symmetry_det", Box::new(check_wishart_symmetry_det)),
        ("appendix_a_consistency", Box::new(check_appendix_a)),
        (
            "tilde_e21_single_term",
            Box::new(check_single_coefficient_correction),
        ),
    ];
    jobs.into_iter()
        .filter(|(name, _)| filter.map_or(true, |f| name.contains(f)))
        .map(|(_, job)| job())
        .collect()
}
