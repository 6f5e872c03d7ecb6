//! Numerical and symbolic machinery for the finite-size corrections of the
//! largest-eigenvalue laws of Gaussian and Laguerre beta-ensembles at the
//! soft edge.
//!
//! The crate combines several layers that check each other:
//!
//! * [`polyalg`] — bit-exact rational polynomial algebra, truncated series
//!   and fraction-free linear solving;
//! * [`special`] — high-accuracy Airy functions, Hermite/Laguerre wave
//!   functions, Bernoulli values;
//! * [`painleve`] — the Hastings–McLeod solution of Painlevé II and all
//!   Tracy–Widom distributions with derivatives up to order six;
//! * [`fredholm`] — Nyström determinants for the Airy and finite-n kernels,
//!   resolvent inner products and finite-rank correction formulas;
//! * [`expansion`] — scaling parameters, the correction terms `E_{beta,j}`,
//!   the turning-point recurrences and wave-function expansions;
//! * [`algebra`] — the derivation engine that reproduces the
//!   orthogonal/symplectic coefficients from the unitary ones;
//! * [`sampler`] — seeded tridiagonal Monte-Carlo sampling with histogram
//!   and CDF statistics;
//! * [`checks`] — the named validation checks wired into the acceptance
//!   suite and the `validate` CLI subcommand.

pub mod algebra;
pub mod checks;
pub mod expansion;
pub mod fredholm;
pub mod painleve;
pub mod polyalg;
pub mod quad;
pub mod sampler;
pub mod special;

pub use polyalg::{ExactLinearSystem, RatPoly, TruncatedSeries};
