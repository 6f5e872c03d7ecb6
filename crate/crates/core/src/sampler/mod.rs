//! Seeded Monte-Carlo sampling of scaled largest eigenvalues via
//! tridiagonal/bidiagonal matrix models, with histogram/CDF statistics,
//! exceedance counts, interrelation checks and batch persistence.

mod batch;
mod decimation;
mod persist;
mod rng;
mod stats;
mod tridiag;

pub use batch::{count_exceed, sample_batch, sample_raw_top2, ExceedCounts, SampleBatch};
pub use decimation::{
    decimation_check, exceedance_monotonicity, superposition_e2, wishart_symmetry_check,
    DecimationFamily, KsReport,
};
pub use persist::{load_batch, save_batch, BatchSidecar, PersistError};
pub use rng::stream_rng;
pub use stats::{
    empirical_cdf, ks_one_sample, ks_threshold_one, ks_threshold_two, ks_two_sample,
    mc_histogram, Histogram, LinearInterp, StatsError, KS_3SIGMA, Z_99,
};
pub use tridiag::{EnsembleSpec, SamplerError, SymTridiag};
