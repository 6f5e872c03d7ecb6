//! Scaling parameters, the finite-size correction terms `E_{beta,j}`,
//! histogram-adjusted variants, the turning-point recurrences
//! (`P_k`, `Q_k`, `lambda`), and the wave-function expansions.

mod pq;
mod scaling;
mod terms;
mod wave_exp;

pub use pq::{lambda_closed, pq_recursion, PQTable, PqCase, PqEntry};
pub use scaling::{dim_shift, gamma_beta, make_scaling, EnsembleKind, ScalingError, ScalingParams};
pub use terms::{
    eval_expansion, expansion_term, histogram_adjust, ExpansionEvalError, ExpansionTerm,
    HistogramAdjusted,
};
pub use wave_exp::{wave_expansion, wave_scaling, WaveCase, WaveExpansion};
