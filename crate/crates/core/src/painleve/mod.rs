//! Hastings–McLeod solution of Painlevé II and the Tracy–Widom
//! distributions `F_1`, `F_2`, `F_4` (and the factor functions `F_pm`)
//! with derivatives up to order six.

mod cheb;
mod dist;
mod hm;
mod logderiv;

pub use cheb::{clenshaw, deriv_coeffs, diff_matrix, lobatto_points, values_to_coeffs};
pub use dist::{Beta, TracyWidom};
pub use hm::{build_hm, HMTable, PainleveError};
pub use logderiv::{logderiv_f2, logderiv_fpm, Branch, LogDerivTable, MAX_DERIV};
