//! Truncated formal power series with exact polynomial coefficients.

use num_rational::BigRational;

use super::{PolyError, RatPoly};

/// A power series in a single base variable, truncated at a fixed order.
///
/// `coeffs[k]` is the coefficient of `var^k`; all coefficients are exact
/// polynomials that must not themselves contain the base variable. Series
/// in the formal square root `hh` (with `hh^2 = h`) are represented the
/// same way, with the parity of the index carrying the half-integer
/// bookkeeping.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    var: String,
    coeffs: Vec<RatPoly>,
}

impl TruncatedSeries {
    /// The zero series of the given truncation order.
    pub fn zero(var: &str, order: usize) -> Self {
        TruncatedSeries { var: var.to_string(), coeffs: vec![RatPoly::zero(); order + 1] }
    }

    /// Build from coefficients (index = exponent of the base variable).
    pub fn new(var: &str, coeffs: Vec<RatPoly>) -> Result<Self, PolyError> {
        for c in &coeffs {
            if c.vars().iter().any(|v| v == var) {
                return Err(PolyError::VarInCoefficient(var.to_string()));
            }
        }
        Ok(TruncatedSeries { var: var.to_string(), coeffs })
    }

    /// The identity series `var`, truncated at `order`.
    pub fn identity(var: &str, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        if order >= 1 {
            s.coeffs[1] = RatPoly::one();
        }
        s
    }

    pub fn constant(var: &str, c: RatPoly, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = c;
        s
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &RatPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[RatPoly] {
        &self.coeffs
    }

    fn check(&self, other: &Self) -> Result<(), PolyError> {
        if self.order() != other.order() {
            return Err(PolyError::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(TruncatedSeries { var: self.var.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(TruncatedSeries { var: self.var.clone(), coeffs })
    }

    pub fn scale_poly(&self, c: &RatPoly) -> Self {
        TruncatedSeries {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let n = self.order();
        let mut coeffs = vec![RatPoly::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > n {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Ok(TruncatedSeries { var: self.var.clone(), coeffs })
    }

    pub fn pow(&self, k: u32) -> Result<Self, PolyError> {
        let mut acc = Self::constant(&self.var, RatPoly::one(), self.order());
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Substitute `inner` (a series with zero constant term) for the base
    /// variable of `self`.
    pub fn compose(&self, inner: &Self) -> Result<Self, PolyError> {
        self.check(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(PolyError::NonInvertibleSeries);
        }
        // Horner evaluation in the truncated ring.
        let n = self.order();
        let mut acc = Self::zero(&self.var, n);
        for k in (0..=n).rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] = acc.coeffs[0].add(&self.coeffs[k]);
        }
        Ok(acc)
    }

    /// Compositional inverse of a series with zero constant term and unit
    /// linear coefficient; `self.compose(reverse)` is the identity modulo
    /// the truncation order.
    pub fn reverse(&self) -> Result<Self, PolyError> {
        let n = self.order();
        if n < 1 || !self.coeffs[0].is_zero() || self.coeffs[1] != RatPoly::one() {
            return Err(PolyError::NonInvertibleSeries);
        }
        let mut inv = Self::identity(&self.var, n);
        for k in 2..=n {
            // With d_k still zero, the k-th coefficient of self(inv) is the
            // defect; the linear term of self feeds d_k through unchanged.
            let defect = self.compose(&inv)?.coeffs[k].clone();
            inv.coeffs[k] = defect.neg();
        }
        Ok(inv)
    }

    /// Derivative with respect to the base variable (order drops by one).
    pub fn deriv(&self) -> Self {
        let n = self.order();
        let mut coeffs = Vec::with_capacity(n.max(1));
        for k in 1..=n {
            coeffs.push(
                self.coeffs[k].scale(&BigRational::from_integer((k as i64).into())),
            );
        }
        if coeffs.is_empty() {
            coeffs.push(RatPoly::zero());
        }
        TruncatedSeries { var: self.var.clone(), coeffs }
    }

    /// True when every nonzero coefficient sits at an index with the given
    /// parity (`0` even, `1` odd). Used for the "odd powers of `hh`
    /// cancel" assertions.
    pub fn has_parity(&self, parity: usize) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| c.is_zero() || k % 2 == parity)
    }

    /// Reinterpret an even series in `hh` as a series in `h = hh^2`.
    pub fn even_to_h(&self) -> Result<Self, PolyError> {
        if !self.has_parity(0) {
            return Err(PolyError::NonInvertibleSeries);
        }
        let coeffs: Vec<RatPoly> = self.coeffs.iter().step_by(2).cloned().collect();
        Ok(TruncatedSeries { var: "h".to_string(), coeffs })
    }

    /// Collapse the series to a plain polynomial in its base variable.
    pub fn to_poly(&self) -> RatPoly {
        let v = RatPoly::var(&self.var);
        let mut acc = RatPoly::zero();
        for k in (0..=self.order()).rev() {
            acc = acc.mul(&v).add(&self.coeffs[k]);
        }
        acc
    }

    /// Series with rational coefficients from integer pairs, for tests and
    /// hardcoded expansions.
    pub fn from_rats(var: &str, pairs: &[(i64, i64)]) -> Self {
        let coeffs = pairs
            .iter()
            .map(|&(n, d)| {
                if d == 1 && n == 0 {
                    RatPoly::zero()
                } else {
                    RatPoly::constant(BigRational::new(n.into(), d.into()))
                }
            })
            .collect();
        TruncatedSeries { var: var.to_string(), coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rat;

    fn hpow(k: u16) -> RatPoly {
        RatPoly::var("h").pow(k as u32)
    }

    /// The psi_h series: s(t) = t + (t^2/5) h - (8 t^3/175) h^2, as a
    /// series in t with coefficients in Q[h].
    fn psi_gue() -> TruncatedSeries {
        TruncatedSeries::new(
            "t",
            vec![
                RatPoly::zero(),
                RatPoly::one(),
                hpow(1).scale(&rat(1, 5)),
                hpow(2).scale(&rat(-8, 175)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn reverse_matches_hand_reversion() {
        // Reversing s = t + (t^2/5) h - (8 t^3/175) h^2 gives
        // t = s - (s^2/5) h + (22 s^3/175) h^2.
        let rev = psi_gue().reverse().unwrap();
        assert_eq!(rev.coeff(0), &RatPoly::zero());
        assert_eq!(rev.coeff(1), &RatPoly::one());
        assert_eq!(rev.coeff(2), &hpow(1).scale(&rat(-1, 5)));
        assert_eq!(rev.coeff(3), &hpow(2).scale(&rat(22, 175)));
    }

    #[test]
    fn reverse_of_identity() {
        let id = TruncatedSeries::identity("t", 5);
        assert_eq!(id.reverse().unwrap(), id);
    }

    #[test]
    fn reverse_composes_to_identity_for_laguerre_series() {
        // The Laguerre scaling series with its tau-dependent coefficients,
        // truncated at h^3 (t-order 4).
        let tau = RatPoly::var("tau");
        let c2 = tau
            .scale(&rat(-2, 5))
            .add(&RatPoly::from_rat(1, 5))
            .mul(&hpow(1));
        let c3 = tau
            .pow(2)
            .scale(&rat(43, 175))
            .add(&tau.scale(&rat(-18, 175)))
            .add(&RatPoly::from_rat(-8, 175))
            .mul(&hpow(2));
        let c4 = tau
            .pow(3)
            .scale(&rat(-1384, 7875))
            .add(&tau.pow(2).scale(&rat(551, 7875)))
            .add(&tau.scale(&rat(212, 7875)))
            .add(&RatPoly::from_rat(148, 7875))
            .mul(&hpow(3));
        let s = TruncatedSeries::new(
            "t",
            vec![RatPoly::zero(), RatPoly::one(), c2, c3, c4],
        )
        .unwrap();
        let round = s.compose(&s.reverse().unwrap()).unwrap();
        assert_eq!(round, TruncatedSeries::identity("t", 4));
        // And the reversed coefficients match the displayed inverse series.
        let rev = s.reverse().unwrap();
        let expect2 = tau
            .scale(&rat(2, 5))
            .add(&RatPoly::from_rat(-1, 5))
            .mul(&hpow(1));
        let expect3 = tau
            .pow(2)
            .scale(&rat(13, 175))
            .add(&tau.scale(&rat(-38, 175)))
            .add(&RatPoly::from_rat(22, 175))
            .mul(&hpow(2));
        let expect4 = tau
            .pow(3)
            .scale(&rat(34, 7875))
            .add(&tau.pow(2).scale(&rat(-776, 7875)))
            .add(&tau.scale(&rat(1588, 7875)))
            .add(&RatPoly::from_rat(-823, 7875))
            .mul(&hpow(3));
        assert_eq!(rev.coeff(2), &expect2);
        assert_eq!(rev.coeff(3), &expect3);
        assert_eq!(rev.coeff(4), &expect4);
    }

    #[test]
    fn rejects_bad_leading_coefficients() {
        let s = TruncatedSeries::new(
            "t",
            vec![RatPoly::one(), RatPoly::one(), RatPoly::zero()],
        )
        .unwrap();
        assert!(s.reverse().is_err());
        let s2 = TruncatedSeries::new(
            "t",
            vec![RatPoly::zero(), RatPoly::from_rat(2, 1), RatPoly::zero()],
        )
        .unwrap();
        assert!(s2.reverse().is_err());
    }

    #[test]
    fn parity_bookkeeping() {
        let even = TruncatedSeries::from_rats("hh", &[(1, 1), (0, 1), (3, 7), (0, 1), (2, 9)]);
        assert!(even.has_parity(0));
        let h_series = even.even_to_h().unwrap();
        assert_eq!(h_series.order(), 2);
        assert_eq!(h_series.coeff(1), &RatPoly::from_rat(3, 7));
        let odd = TruncatedSeries::from_rats("hh", &[(0, 1), (1, 2), (0, 1), (5, 3)]);
        assert!(odd.has_parity(1));
        // Parity is preserved under multiplication: even * odd = odd.
        let prod = even
            .clone()
            .mul(&TruncatedSeries::from_rats(
                "hh",
                &[(0, 1), (1, 2), (0, 1), (5, 3), (0, 1)],
            ))
            .unwrap();
        assert!(prod.has_parity(1));
    }
}

