//! Nyström-quadrature Fredholm determinants and resolvent machinery for
//! the Airy and finite-n projection kernels.

mod det;
mod grid;
mod kernels;
mod resolvent;

pub use det::{det_airy, det_finite};
pub use grid::{certified_det, CertifiedDet, GridError, QuadGrid};
pub use kernels::{
    airy_deriv, airy_deriv_polys, airy_kernel, kernel_correction, CdTable, CorrectionEnsemble,
    FiniteKernel,
};
pub use resolvent::{
    closed_form_correction, finite_rank_correction, CorrectionCoeffs, ResolventTable,
};
