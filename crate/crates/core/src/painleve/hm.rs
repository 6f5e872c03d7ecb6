//! The Hastings–McLeod solution of Painlevé II, `q'' = t q + 2 q^3` with
//! `q(t) ~ Ai(t)` as `t -> +infinity` and `q(t) ~ sqrt(-t/2)` to the left.
//!
//! The solution is a separatrix, so plain marching explodes; we solve the
//! two-point boundary value problem by damped Newton on a global Chebyshev
//! collocation discretization, extending the left endpoint by continuation.
//! The converged solution is then re-represented as a piecewise Chebyshev
//! interpolant on moderate panels: differentiating the global
//! representation twice would amplify f64 roundoff past the 1e-8 residual
//! certificate, while panel-level differentiation keeps it near 1e-11.
//! Beyond the right matching point the solution is indistinguishable from
//! `Ai` at double precision (the defect is of order `Ai^3`), so evaluation
//! switches to the Airy function there.

use nalgebra::DVector;

use super::cheb;
use crate::quad::integrate;
use crate::special::airy;
use thiserror::Error;

/// Right matching point: `q(T_MATCH) = Ai(T_MATCH)` holds to ~1e-22.
const T_MATCH: f64 = 8.0;
/// Upper limit for the Airy tail integrals; the integrands are below
/// 1e-300 well before that.
const T_TAIL: f64 = 30.0;
/// Panel width and per-panel polynomial degree of the stored interpolant.
const PANEL_WIDTH: f64 = 2.5;
const PANEL_DEGREE: usize = 32;

#[derive(Debug, Error)]
pub enum PainleveError {
    #[error("domain must satisfy t_min <= -10 and t_max >= 8, got [{0}, {1}]")]
    BadDomain(f64, f64),
    #[error("Newton iteration for the Hastings-McLeod BVP did not converge (residual {0:.3e})")]
    NoConvergence(f64),
    #[error("argument {0} outside the tabulated domain [{1}, {2}]")]
    OutOfDomain(f64, f64, f64),
}

#[derive(Debug, Clone)]
struct Panel {
    a: f64,
    b: f64,
    coef_q: Vec<f64>,
    coef_qp: Vec<f64>,
    coef_qpp: Vec<f64>,
    anti_q: Vec<f64>,
    anti_q2: Vec<f64>,
    anti_xq2: Vec<f64>,
    /// Integrals over the full panel of q, q^2, x q^2.
    full_q: f64,
    full_q2: f64,
    full_xq2: f64,
    /// Integrals of q, q^2, x q^2 over everything to the right of `b`,
    /// tail included.
    suffix_q: f64,
    suffix_q2: f64,
    suffix_xq2: f64,
}

/// Tabulated Hastings–McLeod solution with piecewise-spectral
/// interpolation and precomputed tail integrals. Immutable after build.
#[derive(Debug, Clone)]
pub struct HMTable {
    t_min: f64,
    t_max: f64,
    panels: Vec<Panel>,
    /// Max |q'' - t q - 2 q^3| of the interpolant on a fine grid.
    pub accuracy: f64,
}

/// Solve the Hastings–McLeod BVP on `[t_min, T_MATCH]` and tabulate.
pub fn build_hm(t_min: f64, t_max: f64) -> Result<HMTable, PainleveError> {
    if !(t_min <= -10.0 && t_max >= T_MATCH) {
        return Err(PainleveError::BadDomain(t_min, t_max));
    }

    // Continuation in the left endpoint keeps Newton in its basin.
    let mut left = -4.0f64;
    let n = 220usize;
    let mut values: Vec<f64> = cheb::lobatto_points(n, left, T_MATCH)
        .iter()
        .map(|&t| initial_guess(t))
        .collect();
    loop {
        values = newton_solve(n, left, T_MATCH, values)?;
        if left <= t_min {
            break;
        }
        let new_left = (left - 4.0).max(t_min);
        // Reuse the converged solution as the guess on the wider interval.
        let coef = cheb::values_to_coeffs(&values);
        values = cheb::lobatto_points(n, new_left, T_MATCH)
            .iter()
            .map(|&t| {
                if t >= left {
                    cheb::clenshaw(&coef, left, T_MATCH, t)
                } else {
                    left_asymptote(t)
                }
            })
            .collect();
        left = new_left;
    }
    let global = cheb::values_to_coeffs(&values);
    let eval_global = |t: f64| cheb::clenshaw(&global, t_min, T_MATCH, t);

    // Re-represent on panels.
    let n_panels = ((T_MATCH - t_min) / PANEL_WIDTH).ceil() as usize;
    let width = (T_MATCH - t_min) / n_panels as f64;
    let mut panels = Vec::with_capacity(n_panels);
    for i in 0..n_panels {
        let a = t_min + i as f64 * width;
        let b = if i + 1 == n_panels { T_MATCH } else { a + width };
        let pts = cheb::lobatto_points(PANEL_DEGREE, a, b);
        let qv: Vec<f64> = pts.iter().map(|&t| eval_global(t)).collect();
        let q2: Vec<f64> = qv.iter().map(|&v| v * v).collect();
        let xq2: Vec<f64> = pts.iter().zip(&q2).map(|(&t, &v)| t * v).collect();
        let coef_q = cheb::values_to_coeffs(&qv);
        let coef_qp = cheb::deriv_coeffs(&coef_q, a, b);
        let coef_qpp = cheb::deriv_coeffs(&coef_qp, a, b);
        let anti_q = cheb::antideriv_coeffs(&coef_q, a, b);
        let anti_q2 = cheb::antideriv_coeffs(&cheb::values_to_coeffs(&q2), a, b);
        let anti_xq2 = cheb::antideriv_coeffs(&cheb::values_to_coeffs(&xq2), a, b);
        let full_q = cheb::clenshaw(&anti_q, a, b, b);
        let full_q2 = cheb::clenshaw(&anti_q2, a, b, b);
        let full_xq2 = cheb::clenshaw(&anti_xq2, a, b, b);
        panels.push(Panel {
            a,
            b,
            coef_q,
            coef_qp,
            coef_qpp,
            anti_q,
            anti_q2,
            anti_xq2,
            full_q,
            full_q2,
            full_xq2,
            suffix_q: 0.0,
            suffix_q2: 0.0,
            suffix_xq2: 0.0,
        });
    }

    let tail_q = integrate(|x| airy(x).0, T_MATCH, T_TAIL, 80);
    let tail_q2 = integrate(|x| airy(x).0.powi(2), T_MATCH, T_TAIL, 80);
    let tail_xq2 = integrate(|x| x * airy(x).0.powi(2), T_MATCH, T_TAIL, 80);
    let mut sq = tail_q;
    let mut sq2 = tail_q2;
    let mut sxq2 = tail_xq2;
    for panel in panels.iter_mut().rev() {
        panel.suffix_q = sq;
        panel.suffix_q2 = sq2;
        panel.suffix_xq2 = sxq2;
        sq += panel.full_q;
        sq2 += panel.full_q2;
        sxq2 += panel.full_xq2;
    }

    let mut table = HMTable { t_min, t_max, panels, accuracy: f64::NAN };
    table.accuracy = table.max_residual(1000);
    if table.accuracy > 1e-8 {
        return Err(PainleveError::NoConvergence(table.accuracy));
    }
    Ok(table)
}

/// `sqrt(-t/2) (1 + 1/(8 t^3) - 73/(128 t^6))`, the left asymptote.
fn left_asymptote(t: f64) -> f64 {
    let t3 = t * t * t;
    (-t / 2.0).sqrt() * (1.0 + 1.0 / (8.0 * t3) - 73.0 / (128.0 * t3 * t3))
}

fn initial_guess(t: f64) -> f64 {
    if t >= -1.0 {
        airy(t).0
    } else {
        left_asymptote(t)
    }
}

fn newton_solve(
    n: usize,
    a: f64,
    b: f64,
    mut q: Vec<f64>,
) -> Result<Vec<f64>, PainleveError> {
    let pts = cheb::lobatto_points(n, a, b);
    let d = cheb::diff_matrix(n, a, b);
    let d2 = &d * &d;
    let bc_right = airy(b).0;
    let bc_left = left_asymptote(a);

    let residual = |q: &[f64]| -> DVector<f64> {
        let qv = DVector::from_column_slice(q);
        let mut r = &d2 * &qv;
        for j in 0..=n {
            r[j] -= pts[j] * q[j] + 2.0 * q[j].powi(3);
        }
        r[0] = q[0] - bc_right;
        r[n] = q[n] - bc_left;
        r
    };

    let mut res = residual(&q);
    let mut rnorm = res.amax();
    let mut stalled = 0u32;
    for _ in 0..50 {
        // 1e-13 is below the roundoff floor of the spectral Jacobian at
        // this resolution; stalling slightly above it is accepted below.
        if rnorm < 1e-13 {
            return Ok(q);
        }
        let mut jac = d2.clone();
        for j in 0..=n {
            jac[(j, j)] -= pts[j] + 6.0 * q[j] * q[j];
        }
        for col in 0..=n {
            jac[(0, col)] = if col == 0 { 1.0 } else { 0.0 };
            jac[(n, col)] = if col == n { 1.0 } else { 0.0 };
        }
        let lu = jac.lu();
        let Some(step) = lu.solve(&(-&res)) else {
            return Err(PainleveError::NoConvergence(rnorm));
        };
        // Damped update: halve until the residual shrinks.
        let mut lambda = 1.0;
        loop {
            let trial: Vec<f64> = q
                .iter()
                .enumerate()
                .map(|(j, &v)| v + lambda * step[j])
                .collect();
            let tres = residual(&trial);
            let tnorm = tres.amax();
            if tnorm < rnorm || lambda < 1.0 / 1024.0 {
                stalled = if tnorm > 0.5 * rnorm { stalled + 1 } else { 0 };
                q = trial;
                res = tres;
                rnorm = tnorm;
                break;
            }
            lambda *= 0.5;
        }
        if stalled >= 3 {
            break;
        }
    }
    if rnorm < 1e-9 {
        Ok(q)
    } else {
        Err(PainleveError::NoConvergence(rnorm))
    }
}

impl HMTable {
    pub fn domain(&self) -> (f64, f64) {
        (self.t_min, self.t_max)
    }

    pub fn contains(&self, t: f64) -> bool {
        t >= self.t_min && t <= self.t_max
    }

    fn check(&self, t: f64) -> Result<(), PainleveError> {
        if self.contains(t) {
            Ok(())
        } else {
            Err(PainleveError::OutOfDomain(t, self.t_min, self.t_max))
        }
    }

    fn panel(&self, t: f64) -> &Panel {
        let idx = self
            .panels
            .partition_point(|p| p.b < t)
            .min(self.panels.len() - 1);
        &self.panels[idx]
    }

    /// `q(t)`.
    pub fn q(&self, t: f64) -> f64 {
        if t > T_MATCH {
            airy(t).0
        } else {
            let p = self.panel(t);
            cheb::clenshaw(&p.coef_q, p.a, p.b, t)
        }
    }

    /// `q'(t)`.
    pub fn qp(&self, t: f64) -> f64 {
        if t > T_MATCH {
            airy(t).1
        } else {
            let p = self.panel(t);
            cheb::clenshaw(&p.coef_qp, p.a, p.b, t)
        }
    }

    /// `q''(t)` from differentiating the interpolant twice (used by the
    /// residual certificate; evaluation elsewhere goes through the ODE).
    pub fn qpp_interpolant(&self, t: f64) -> f64 {
        if t > T_MATCH {
            t * airy(t).0
        } else {
            let p = self.panel(t);
            cheb::clenshaw(&p.coef_qpp, p.a, p.b, t)
        }
    }

    /// Max ODE residual of the interpolant on a uniform grid.
    pub fn max_residual(&self, samples: usize) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..=samples {
            let t = self.t_min + (T_MATCH - self.t_min) * i as f64 / samples as f64;
            let q = self.q(t);
            let r = (self.qpp_interpolant(t) - t * q - 2.0 * q * q * q).abs();
            worst = worst.max(r);
        }
        worst
    }

    /// `int_t^inf q(x) dx`.
    pub fn int_q(&self, t: f64) -> Result<f64, PainleveError> {
        self.check(t)?;
        if t > T_MATCH {
            return Ok(integrate(|x| airy(x).0, t, T_TAIL, 60));
        }
        let p = self.panel(t);
        let at = |x: f64| cheb::clenshaw(&p.anti_q, p.a, p.b, x);
        Ok(p.full_q - at(t) + p.suffix_q)
    }

    /// `int_t^inf (x - t) q(x)^2 dx`.
    pub fn int_xq2(&self, t: f64) -> Result<f64, PainleveError> {
        self.check(t)?;
        if t > T_MATCH {
            return Ok(integrate(|x| (x - t) * airy(x).0.powi(2), t, T_TAIL, 60));
        }
        let p = self.panel(t);
        let a2 = |x: f64| cheb::clenshaw(&p.anti_q2, p.a, p.b, x);
        let ax = |x: f64| cheb::clenshaw(&p.anti_xq2, p.a, p.b, x);
        let int_q2 = p.full_q2 - a2(t) + p.suffix_q2;
        let int_xq2 = p.full_xq2 - ax(t) + p.suffix_xq2;
        Ok(int_xq2 - t * int_q2)
    }
}
