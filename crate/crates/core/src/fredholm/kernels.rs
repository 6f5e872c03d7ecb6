//! Kernel evaluations: the Airy kernel, the finite-n Christoffel–Darboux
//! kernels of the Gaussian and Laguerre unitary ensembles, and the
//! displayed finite-rank correction kernels `K_1`, `K_2`.

use crate::polyalg::RatPoly;
use crate::special::{airy, wave_pair, ExtF64, WaveFunctionSpec};

use super::grid::GridError;

/// `Ai^{(j)}(s) = a_j(s) Ai(s) + b_j(s) Ai'(s)` by the replacement rule of
/// the Airy ODE, with the polynomials `a_j`, `b_j` generated symbolically.
pub fn airy_deriv_polys(j: usize) -> (RatPoly, RatPoly) {
    let mut a = RatPoly::one();
    let mut b = RatPoly::zero();
    let s = RatPoly::var("s");
    for _ in 0..j {
        let a_next = a.deriv("s").add(&s.mul(&b));
        let b_next = a.add(&b.deriv("s"));
        a = a_next;
        b = b_next;
    }
    (a, b)
}

/// `Ai^{(j)}(s)` for `j <= 5`.
pub fn airy_deriv(j: usize, s: f64) -> f64 {
    assert!(j <= 5, "Airy derivative order {j} not supported");
    let (ai, aip) = airy(s);
    let (a, b) = airy_deriv_cached(j);
    let av = a.eval_f64(&[("s", s)]).expect("poly eval");
    let bv = b.eval_f64(&[("s", s)]).expect("poly eval");
    av * ai + bv * aip
}

fn airy_deriv_cached(j: usize) -> &'static (RatPoly, RatPoly) {
    use std::sync::OnceLock;
    static CACHE: OnceLock<Vec<(RatPoly, RatPoly)>> = OnceLock::new();
    &CACHE.get_or_init(|| (0..=5).map(airy_deriv_polys).collect())[j]
}

/// The Airy kernel `(Ai(x) Ai'(y) - Ai'(x) Ai(y)) / (x - y)` with the
/// removable diagonal `Ai'(x)^2 - x Ai(x)^2`.
pub fn airy_kernel(x: f64, y: f64) -> f64 {
    let (ax, apx) = airy(x);
    let (ay, apy) = airy(y);
    if x == y {
        apx * apx - x * ax * ax
    } else {
        (ax * apy - apx * ay) / (x - y)
    }
}

/// Finite-n projection kernels addressed by ensemble.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiniteKernel {
    /// GUE of dimension n.
    HermiteN(u32),
    /// LUE with the symmetric integer pair (n, p).
    LaguerreNP(u32, u32),
}

impl FiniteKernel {
    pub fn validate(&self) -> Result<(), GridError> {
        match *self {
            FiniteKernel::HermiteN(n) if n >= 1 => Ok(()),
            FiniteKernel::LaguerreNP(n, p) if n >= 1 && p >= 1 => Ok(()),
            _ => Err(GridError::BadKernel("n >= 1 (and p >= 1)".into())),
        }
    }

    /// Wave-function data at a set of points, from which the kernel matrix
    /// is assembled in O(m^2).
    pub fn tabulate(&self, points: &[f64]) -> Result<CdTable, GridError> {
        self.validate()?;
        let (spec_n, spec_m, prefactor) = match *self {
            FiniteKernel::HermiteN(n) => (
                WaveFunctionSpec::hermite(n),
                WaveFunctionSpec::hermite(n - 1),
                (n as f64 / 2.0).sqrt(),
            ),
            FiniteKernel::LaguerreNP(n, p) => (
                // Normalized so both orderings of (n, p) produce the same
                // table: phi_{n,p} with n the smaller index.
                WaveFunctionSpec::laguerre_np(n.min(p), n.max(p)),
                WaveFunctionSpec::laguerre_np(n.min(p) - 1, n.max(p) - 1),
                ((n as f64) * (p as f64)).sqrt(),
            ),
        };
        let mut hi = Vec::with_capacity(points.len());
        let mut lo = Vec::with_capacity(points.len());
        let mut dhi = Vec::with_capacity(points.len());
        let mut dlo = Vec::with_capacity(points.len());
        for &x in points {
            let top = wave_pair(spec_n, x).map_err(|e| GridError::BadKernel(e.to_string()))?;
            let bot = wave_pair(spec_m, x).map_err(|e| GridError::BadKernel(e.to_string()))?;
            hi.push(top.phi_n);
            lo.push(bot.phi_n);
            dhi.push(top.dphi_n);
            dlo.push(bot.dphi_n);
        }
        Ok(CdTable { points: points.to_vec(), hi, lo, dhi, dlo, prefactor })
    }
}

/// Tabulated Christoffel–Darboux data: `phi_n`, `phi_{n-1}` and their
/// derivatives at the grid points.
pub struct CdTable {
    points: Vec<f64>,
    hi: Vec<ExtF64>,
    lo: Vec<ExtF64>,
    dhi: Vec<ExtF64>,
    dlo: Vec<ExtF64>,
    prefactor: f64,
}

impl CdTable {
    /// Kernel entry between grid indices, with the derivative form on the
    /// diagonal (removable singularity).
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        if i == j {
            let v = self.dhi[i]
                .mul(self.lo[i])
                .sub(self.dlo[i].mul(self.hi[i]));
            self.prefactor * v.to_f64()
        } else {
            let v = self.hi[i].mul(self.lo[j]).sub(self.lo[i].mul(self.hi[j]));
            self.prefactor * v.to_f64() / (self.points[i] - self.points[j])
        }
    }
}

/// Ensemble tag for the displayed correction kernels.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CorrectionEnsemble {
    Gue,
    Lue { tau: f64 },
}

/// The displayed finite-rank expansion kernels `K_j` (j = 1, 2) of the
/// transformed GUE/LUE kernels, evaluated pointwise.
pub fn kernel_correction(
    ensemble: CorrectionEnsemble,
    j: u8,
    x: f64,
    y: f64,
) -> Result<f64, GridError> {
    let (ax, bx) = airy(x);
    let (ay, by) = airy(y);
    let aa = ax * ay;
    let ab = ax * by;
    let ba = bx * ay;
    let bb = bx * by;
    match (ensemble, j) {
        (CorrectionEnsemble::Gue, 1) => Ok((-2.0 * (x * x + x * y + y * y) * aa
            + 3.0 * (ab + ba)
            + 2.0 * (x + y) * bb)
            / 10.0),
        (CorrectionEnsemble::Gue, 2) => {
            let t_aa = 6.0 * (20.0 * (x.powi(3) + y.powi(3)) + 6.0 * x * y * (x + y) + 21.0);
            let t_ab = 28.0
                * (x.powi(4) + x.powi(3) * y - x * x * y * y - x * y.powi(3) - y.powi(4))
                - 135.0 * x
                - 261.0 * y;
            let t_ba = -(28.0
                * (x.powi(4) + x.powi(3) * y + x * x * y * y - x * y.powi(3) - y.powi(4))
                + 261.0 * x
                + 135.0 * y);
            let t_bb = 4.0 * (5.0 * (x * x + y * y) - 16.0 * x * y);
            Ok((t_aa * aa + t_ab * ab + t_ba * ba + t_bb * bb) / 1400.0)
        }
        (CorrectionEnsemble::Lue { tau }, 1) => {
            let c1 = (2.0 * tau - 1.0) / 5.0;
            let c2 = (tau - 3.0) / 10.0;
            Ok(c1 * ((x * x + x * y + y * y) * aa - (x + y) * bb) - c2 * (ab + ba))
        }
        (CorrectionEnsemble::Lue { tau }, 2) => {
            let t2 = tau * tau;
            let c_aa_cube = (20.0 * t2 - 3.0 * tau - 6.0) / 70.0;
            let c_aa_mixed = (114.0 * t2 - 64.0 * tau - 9.0) / 350.0;
            let c_aa_const = (tau - 3.0) * (tau - 3.0) / 100.0;
            let t_aa = -(c_aa_cube * (x.powi(3) + y.powi(3))
                + c_aa_mixed * x * y * (x + y)
                - c_aa_const);
            let c_quart = (2.0 * tau - 1.0) * (2.0 * tau - 1.0) / 50.0;
            let c_x = (13.0 * t2 - 10.0 * tau - 27.0) / 280.0;
            let c_y = (51.0 * t2 + 34.0 * tau - 261.0) / 1400.0;
            let t_ab = c_quart
                * (x.powi(4) + x.powi(3) * y - x * x * y * y - x * y.powi(3) - y.powi(4))
                + c_x * x
                + c_y * y;
            let t_ba = -(c_quart
                * (x.powi(4) + x.powi(3) * y + x * x * y * y - x * y.powi(3) - y.powi(4))
                - c_y * x
                - c_x * y);
            let c_bb_sq = (20.0 * t2 - 17.0 * tau + 1.0) / 70.0;
            let c_bb_mixed = (43.0 * t2 - 18.0 * tau - 8.0) / 175.0;
            let t_bb = c_bb_sq * (x * x + y * y) + c_bb_mixed * x * y;
            Ok(t_aa * aa + t_ab * ab + t_ba * ba + t_bb * bb)
        }
        _ => Err(GridError::BadKernel(format!(
            "correction kernel K_{j} is not displayed; only j = 1, 2"
        ))),
    }
}
