//! Series parameters of the half-step recentering expansions: the leading
//! coefficients of the local power series for `t_nu`, `h_nu` and `tau_nu`
//! in powers of `h^{3/2}`.

use crate::expansion::EnsembleKind;
use crate::polyalg::{rat, RatPoly};

/// `alpha_1, alpha_2, beta_1, gamma_1` (and `delta_1` in the Laguerre
/// case) as exact polynomials in `tau`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesParams {
    pub kind: EnsembleKind,
    pub alpha1: RatPoly,
    pub alpha2: RatPoly,
    pub beta1: RatPoly,
    pub gamma1: RatPoly,
    pub delta1: Option<RatPoly>,
}

pub fn series_params(kind: EnsembleKind) -> SeriesParams {
    let tau = RatPoly::var("tau");
    match kind {
        EnsembleKind::Gaussian => SeriesParams {
            kind,
            alpha1: RatPoly::from_rat(-2, 3),
            alpha2: RatPoly::from_rat(-10, 9),
            beta1: RatPoly::from_rat(1, 3),
            gamma1: RatPoly::from_rat(8, 3),
            delta1: None,
        },
        EnsembleKind::Laguerre => SeriesParams {
            kind,
            alpha1: tau.sub(&RatPoly::from_rat(2, 3)),
            alpha2: tau.scale(&rat(4, 3)).sub(&RatPoly::from_rat(10, 9)),
            beta1: RatPoly::from_rat(1, 3),
            gamma1: tau.scale(&rat(-2, 1)).add(&RatPoly::from_rat(8, 3)),
            delta1: Some(tau.sub(&RatPoly::one()).scale(&rat(2, 1))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn displayed_values() {
        let g = series_params(EnsembleKind::Gaussian);
        assert_eq!(g.beta1, RatPoly::from_rat(1, 3));
        assert_eq!(g.gamma1, RatPoly::from_rat(8, 3));
        let l = series_params(EnsembleKind::Laguerre);
        let tau = RatPoly::var("tau");
        assert_eq!(
            l.delta1.as_ref().unwrap(),
            &tau.scale(&rat(2, 1)).sub(&RatPoly::from_rat(2, 1))
        );
    }

    #[test]
    fn laguerre_reduces_to_gaussian_at_tau_zero() {
        let g = series_params(EnsembleKind::Gaussian);
        let l = series_params(EnsembleKind::Laguerre);
        let zero = BigRational::from_integer(0.into());
        assert_eq!(l.alpha1.subst_rat("tau", &zero), g.alpha1);
        assert_eq!(l.alpha2.subst_rat("tau", &zero), g.alpha2);
        assert_eq!(l.beta1.subst_rat("tau", &zero), g.beta1);
        assert_eq!(l.gamma1.subst_rat("tau", &zero), g.gamma1);
    }
}
