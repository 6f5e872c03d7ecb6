//! Resolvent inner products `u_{jk}` of the Airy kernel and the
//! finite-rank determinant correction formulas built from them.

use nalgebra::{DMatrix, DVector};

use super::grid::{GridError, QuadGrid};
use super::kernels::{airy_deriv, airy_kernel};
use crate::painleve::{Beta, TracyWidom};

/// `u_{jk}(t) = <(I - K_Ai)^{-1} Ai^{(j)}, Ai^{(k)}>` on `L^2(t, inf)` for
/// `0 <= j, k <= 5`; symmetric by construction.
#[derive(Debug, Clone)]
pub struct ResolventTable {
    pub t: f64,
    u: [[f64; 6]; 6],
}

impl ResolventTable {
    pub fn u(&self, j: usize, k: usize) -> f64 {
        self.u[j][k]
    }

    /// Build at `t`, with the grid certified by doubling until every entry
    /// moves by less than 1e-9.
    pub fn build(t: f64) -> Result<ResolventTable, GridError> {
        assert!(t >= -15.0, "resolvent table needs t >= -15");
        let upper = if t < 11.0 { 12.0 } else { t + 1.0 };
        let mut m = if t < -8.0 { 128 } else { 64 };
        let mut prev = Self::on_grid(t, upper, m)?;
        while m <= 1024 {
            let next = Self::on_grid(t, upper, 2 * m)?;
            let diff = (0..6)
                .flat_map(|j| (0..6).map(move |k| (j, k)))
                .map(|(j, k)| (next.u[j][k] - prev.u[j][k]).abs())
                .fold(0.0f64, f64::max);
            if diff < 1e-9 {
                return Ok(next);
            }
            prev = next;
            m *= 2;
        }
        Err(GridError::NoConvergence { last_diff: prev.u[0][0], tol: 1e-9 })
    }

    fn on_grid(t: f64, upper: f64, m: usize) -> Result<ResolventTable, GridError> {
        let grid = QuadGrid::new(t, upper, m);
        let sw: Vec<f64> = grid.weights.iter().map(|w| w.sqrt()).collect();
        let mut a = DMatrix::<f64>::identity(m, m);
        for i in 0..m {
            for j in i..m {
                let v = sw[i] * sw[j] * airy_kernel(grid.nodes[i], grid.nodes[j]);
                a[(i, j)] -= v;
                if i != j {
                    a[(j, i)] -= v;
                }
            }
        }
        let lu = a.lu();
        let mut z = Vec::with_capacity(6);
        let mut v = Vec::with_capacity(6);
        for j in 0..6 {
            let rhs = DVector::from_iterator(
                m,
                grid.nodes.iter().zip(&sw).map(|(&x, &s)| s * airy_deriv(j, x)),
            );
            let sol = lu.solve(&rhs).ok_or(GridError::Singular)?;
            z.push(sol);
            v.push(DVector::from_iterator(
                m,
                grid.nodes.iter().zip(&sw).map(|(&x, &s)| s * airy_deriv(j, x)),
            ));
        }
        let mut u = [[0.0; 6]; 6];
        for j in 0..6 {
            for k in 0..6 {
                u[j][k] = v[k].dot(&z[j]);
            }
        }
        // The solve is symmetric up to roundoff; make the symmetry exact.
        for j in 0..6 {
            for k in (j + 1)..6 {
                let s = 0.5 * (u[j][k] + u[k][j]);
                u[j][k] = s;
                u[k][j] = s;
            }
        }
        Ok(ResolventTable { t, u })
    }
}

/// Coefficient set of a finite-rank kernel triple `K_1, K_2, K_3` in the
/// `Ai^{(j)} (x) Ai^{(k)}(y)` basis (the tilde-kernels of the simplifying
/// transformation have exactly this shape).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrectionCoeffs {
    pub a00: f64,
    pub a01: f64,
    pub a02: f64,
    pub a03: f64,
    pub a05: f64,
    pub a11: f64,
    pub a12: f64,
    pub a14: f64,
    pub a23: f64,
}

impl CorrectionCoeffs {
    pub const ZERO: CorrectionCoeffs = CorrectionCoeffs {
        a00: 0.0,
        a01: 0.0,
        a02: 0.0,
        a03: 0.0,
        a05: 0.0,
        a11: 0.0,
        a12: 0.0,
        a14: 0.0,
        a23: 0.0,
    };

    /// The transformed GUE kernel coefficients.
    pub fn gue_tilde() -> Self {
        CorrectionCoeffs {
            a01: 3.0 / 10.0,
            a00: 117.0 / 175.0,
            a03: -81.0 / 280.0,
            a12: -159.0 / 1400.0,
            a02: -3713.0 / 2250.0,
            a05: 1171.0 / 3600.0,
            a11: -3743.0 / 7875.0,
            a14: 3359.0 / 42000.0,
            a23: 271.0 / 1800.0,
        }
    }

    /// The transformed LUE kernel coefficients at parameter `tau`.
    pub fn lue_tilde(tau: f64) -> Self {
        let t2 = tau * tau;
        let t3 = t2 * tau;
        CorrectionCoeffs {
            a01: -(tau - 3.0) / 10.0,
            a00: -3.0 * (4.0 * t2 + 26.0 * tau - 39.0) / 175.0,
            a03: (11.0 * t2 + 54.0 * tau - 81.0) / 280.0,
            a12: -(51.0 * t2 - 106.0 * tau + 159.0) / 1400.0,
            a02: (44.0 * t3 - 346.0 * t2 + 3713.0 * tau - 3713.0) / 2250.0,
            a05: -(13.0 * t3 - 77.0 * t2 + 1171.0 * tau - 1171.0) / 3600.0,
            a11: -(466.0 * t3 + 406.0 * t2 - 3743.0 * tau + 3743.0) / 7875.0,
            a14: (583.0 * t3 + 553.0 * t2 - 3359.0 * tau + 3359.0) / 42000.0,
            a23: -(13.0 * t3 - 77.0 * t2 + 271.0 * tau - 271.0) / 1800.0,
        }
    }
}

/// The three correction functionals `(d_1, d_2, d_3)` of the determinant
/// expansion, via the minor expansion over the resolvent table.
pub fn finite_rank_correction(c: &CorrectionCoeffs, table: &ResolventTable) -> (f64, f64, f64) {
    let u = |j: usize, k: usize| table.u(j, k);
    let d1 = -2.0 * c.a01 * u(0, 1);
    let minor_0011 = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    let d2 = -c.a00 * u(0, 0) - 2.0 * c.a03 * u(0, 3) - 2.0 * c.a12 * u(1, 2)
        - c.a01 * c.a01 * minor_0011;
    let minor_0013 = u(0, 0) * u(1, 3) - u(0, 3) * u(1, 0);
    let minor_1102 = u(1, 1) * u(0, 2) - u(1, 2) * u(0, 1);
    let d3 = -2.0 * c.a02 * u(0, 2)
        - 2.0 * c.a05 * u(0, 5)
        - c.a11 * u(1, 1)
        - 2.0 * c.a14 * u(1, 4)
        - 2.0 * c.a23 * u(2, 3)
        - 2.0 * c.a01 * c.a03 * minor_0013
        - 2.0 * c.a01 * c.a12 * minor_1102;
    (d1, d2, d3)
}

/// The same three functionals from the closed linear-in-`F_2^{(k)}` forms,
/// evaluated through the Painlevé representation.
pub fn closed_form_correction(
    c: &CorrectionCoeffs,
    t: f64,
    tw: &TracyWidom,
) -> (f64, f64, f64) {
    let f = |k: usize| tw.eval(Beta::Two, k, t).expect("F_2 derivative");
    let f2 = f(0);
    let d1 = -c.a01 * f(1 + 1) / f2;
    let d2 = (-(6.0 * c.a00 + 7.0 * c.a03 - 3.0 * c.a12 + c.a01 * c.a01) / 6.0 * f(1)
        - (2.0 * c.a03 - c.a01 * c.a01) / 3.0 * t * f(2)
        - (c.a03 + 3.0 * c.a12 + c.a01 * c.a01) / 12.0 * f(4))
        / f2;
    let d3 = (-(30.0 * c.a02 + 101.0 * c.a05 - 15.0 * c.a11 - 65.0 * c.a14 + 20.0 * c.a23
        + 9.0 * c.a01 * c.a03
        + 5.0 * c.a01 * c.a12)
        / 45.0
        * t
        * f(1)
        - (23.0 * c.a05 - 5.0 * c.a14 + 5.0 * c.a23
            - 18.0 * c.a01 * c.a03
            - 10.0 * c.a01 * c.a12)
            / 45.0
            * t
            * t
            * f(2)
        - (20.0 * c.a02
            + 59.0 * c.a05
            + 20.0 * c.a11
            + 55.0 * c.a14
            - 10.0 * c.a23
            - 9.0 * c.a01 * c.a03
            + 5.0 * c.a01 * c.a12)
            / 60.0
            * f(3)
        - (c.a05 + 2.0 * c.a14 + c.a23 + c.a01 * c.a12) / 9.0 * t * f(4)
        - (c.a05 + 5.0 * c.a14 + 10.0 * c.a23 + 9.0 * c.a01 * c.a03 - 5.0 * c.a01 * c.a12)
            / 360.0
            * f(6))
        / f2;
    (d1, d2, d3)
}
