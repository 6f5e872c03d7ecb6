//! Exact rational polynomial algebra.
//!
//! Everything in this module is bit-exact: coefficients are
//! arbitrary-precision rationals ([`BigRational`]) and no operation ever
//! rounds. The module provides sparse multivariate polynomials
//! ([`RatPoly`]), truncated formal power series ([`TruncatedSeries`],
//! including series in a formal square root `hh` with `hh^2 = h`), and
//! exact solving of overdetermined linear systems over polynomial rings
//! ([`ExactLinearSystem`]).

mod linsys;
mod poly;
mod series;

pub use linsys::ExactLinearSystem;
pub use poly::{painleve_diff, RatPoly};
pub use series::TruncatedSeries;

use num_rational::BigRational;
use thiserror::Error;

/// Maximum exponent a single variable may reach before an operation is
/// rejected. Catches runaway symbolic blowup early.
pub const DEGREE_CAP: u16 = 64;

/// Canonical variable ordering: the eight reserved names first, then any
/// ad-hoc symbol alphabetically.
const CANONICAL_VARS: [&str; 8] = ["t", "tau", "q", "qp", "a", "s", "h", "hh"];

/// Total order on variable names used for all term maps.
pub fn var_cmp(lhs: &str, rhs: &str) -> std::cmp::Ordering {
    let rank = |v: &str| CANONICAL_VARS.iter().position(|&c| c == v);
    match (rank(lhs), rank(rhs)) {
        (Some(a), Some(b)) => a.cmp(&b),
        (Some(_), None) => std::cmp::Ordering::Less,
        (None, Some(_)) => std::cmp::Ordering::Greater,
        (None, None) => lhs.cmp(rhs),
    }
}

/// Errors raised by exact polynomial algebra.
#[derive(Debug, Error)]
pub enum PolyError {
    #[error("exponent of `{var}` would exceed the degree cap {cap}")]
    DegreeCap { var: String, cap: u16 },
    #[error("unknown indeterminate `{0}` for this operation")]
    UnknownVariable(String),
    #[error("series coefficient must not contain the series variable `{0}`")]
    VarInCoefficient(String),
    #[error("series reversion requires zero constant term and unit linear coefficient")]
    NonInvertibleSeries,
    #[error("series orders do not match: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("linear system is inconsistent (nonzero residual in row {0})")]
    Inconsistent(usize),
    #[error("linear system is rank-deficient: no pivot for unknown `{0}`")]
    RankDeficient(String),
    #[error("solution component `{0}` is not polynomial")]
    NonPolynomialSolution(String),
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

/// Shorthand for an exact rational from an integer pair.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Exact value of the Bernoulli number `B_n` (convention `B_1 = -1/2`).
pub fn bernoulli_number(n: usize) -> BigRational {
    use num_traits::Zero;
    // B_m = -sum_{k<m} C(m+1, k) B_k / (m+1), by the defining recurrence.
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m == 0 {
            b.push(BigRational::from_integer(1.into()));
            continue;
        }
        let mut acc = BigRational::zero();
        let mut binom = BigRational::from_integer(1.into()); // C(m+1, 0)
        for (k, bk) in b.iter().enumerate() {
            acc += &binom * bk;
            // C(m+1, k+1) = C(m+1, k) * (m+1-k) / (k+1)
            binom = binom * rat((m + 1 - k) as i64, (k + 1) as i64);
        }
        b.push(-acc / BigRational::from_integer((m as i64 + 1).into()));
    }
    b.pop().expect("nonempty")
}
