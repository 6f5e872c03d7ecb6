//! High-accuracy real-argument special functions: the Airy function and
//! its derivative, orthonormal Hermite and Laguerre wave functions, and
//! exact Bernoulli polynomial values at 1/2.

mod airy;
mod dd;
mod extfloat;
pub mod gamma;
mod wave;

pub use airy::{airy, airy_ext, AIRY_MAX_ARG};
pub use extfloat::ExtF64;
pub use gamma::{gamma, ln_gamma};
pub use wave::{wave_eval, wave_pair, WaveFamily, WaveFunctionSpec, WavePair};

use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecialError {
    #[error("Laguerre wave functions need x > 0, got {0}")]
    DomainLaguerre(f64),
    #[error("Laguerre parameter alpha = {0} invalid for n = {1}")]
    BadLaguerreParameter(f64, u32),
    #[error("wave-function order {0} beyond the supported range")]
    OrderTooLarge(u32),
    #[error("Bernoulli index must be even, positive and <= 40, got {0}")]
    BadBernoulliIndex(u32),
}

/// Exact `B_{2k}(1/2)` for even positive index `two_k <= 40`, via
/// `B_n(1/2) = (2^{1-n} - 1) B_n`.
pub fn bernoulli_half(two_k: u32) -> Result<BigRational, SpecialError> {
    if two_k == 0 || two_k % 2 != 0 || two_k > 40 {
        return Err(SpecialError::BadBernoulliIndex(two_k));
    }
    let b = crate::polyalg::bernoulli_number(two_k as usize);
    let pow = BigRational::new(1.into(), num_bigint::BigInt::from(2).pow(two_k - 1));
    Ok((pow - BigRational::from_integer(1.into())) * b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rat;

    #[test]
    fn bernoulli_half_values() {
        // B_2(x) = x^2 - x + 1/6 at 1/2 and B_4(x) = x^4 - 2x^3 + x^2 - 1/30
        // at 1/2, evaluated by hand.
        assert_eq!(bernoulli_half(2).unwrap(), rat(-1, 12));
        assert_eq!(bernoulli_half(4).unwrap(), rat(7, 240));
        assert_eq!(bernoulli_half(6).unwrap(), rat(-31, 1344));
    }

    #[test]
    fn bernoulli_half_domain() {
        assert!(bernoulli_half(0).is_err());
        assert!(bernoulli_half(3).is_err());
        assert!(bernoulli_half(42).is_err());
    }
}
