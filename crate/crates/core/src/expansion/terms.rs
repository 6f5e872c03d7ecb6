//! The finite-size correction terms `E_{beta,j}` as exact linear forms
//! `sum_k p_{beta,jk}(t, tau) F_beta^{(k)}(t)`, hardcoded from the closed
//! displays for `beta = 1, 2, 4` and `j <= 3`, Gaussian and Laguerre.
//! The Laguerre polynomials reduce to the Gaussian ones at `tau = 0`, and
//! the `beta = 1, 4` families are independently re-derived by the algebra
//! module; both facts are asserted in tests.

use num_rational::BigRational;

use crate::painleve::{Beta, TracyWidom};
use crate::polyalg::{rat, RatPoly};

use super::scaling::{make_scaling, EnsembleKind, ScalingError};

/// One correction term `E_{beta,j}`: the coefficient polynomial of
/// `F^{(k)}` sits at index `k - 1`; there are exactly `2j` slots.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionTerm {
    pub beta: Beta,
    pub j: usize,
    pub kind: EnsembleKind,
    pub coeffs: Vec<RatPoly>,
}

fn t() -> RatPoly {
    RatPoly::var("t")
}

/// `(c_deg tau^deg + ... + c_0) / den` from highest degree downward.
fn tau_poly(cs: &[i64], den: i64) -> RatPoly {
    let tau = RatPoly::var("tau");
    let mut acc = RatPoly::zero();
    for &c in cs {
        acc = acc.mul(&tau).add(&RatPoly::from_int(c));
    }
    acc.scale(&rat(1, den))
}

fn tmon(k: u16, num: i64, den: i64) -> RatPoly {
    RatPoly::monomial("t", k, rat(num, den))
}

fn gaussian_beta2(j: usize) -> Vec<RatPoly> {
    match j {
        1 => vec![
            // (t^2/5) F' - (3/10) F''
            tmon(2, 1, 5),
            RatPoly::from_rat(-3, 10),
        ],
        2 => vec![
            tmon(0, -141, 350).add(&tmon(3, -8, 175)),
            tmon(1, 39, 175).add(&tmon(4, 1, 50)),
            tmon(2, -3, 50),
            RatPoly::from_rat(9, 200),
        ],
        3 => vec![
            tmon(1, 2216, 7875).add(&tmon(4, 148, 7875)),
            tmon(2, -53, 210).add(&tmon(5, -8, 875)),
            tmon(0, 10403, 31500)
                .add(&tmon(3, 51, 875))
                .add(&tmon(6, 1, 750)),
            tmon(1, -117, 1750).add(&tmon(4, -3, 500)),
            tmon(2, 9, 1000),
            RatPoly::from_rat(-9, 2000),
        ],
        _ => unreachable!(),
    }
}

fn laguerre_beta2(j: usize) -> Vec<RatPoly> {
    match j {
        1 => vec![
            // -((2 tau - 1)/5) t^2 F' + ((tau - 3)/10) F''
            tau_poly(&[2, -1], 5).neg().mul(&t().pow(2)),
            tau_poly(&[1, -3], 10),
        ],
        2 => vec![
            tau_poly(&[1, 94, -141], 350)
                .add(&tau_poly(&[43, -18, -8], 175).mul(&t().pow(3))),
            tau_poly(&[4, 26, -39], 175)
                .neg()
                .mul(&t())
                .add(&tau_poly(&[2, -1], 1).pow(2).scale(&rat(1, 50)).mul(&t().pow(4))),
            tau_poly(&[1, -3], 1)
                .mul(&tau_poly(&[2, -1], 1))
                .scale(&rat(-1, 50))
                .mul(&t().pow(2)),
            tau_poly(&[1, -3], 1).pow(2).scale(&rat(1, 200)),
        ],
        3 => vec![
            tau_poly(&[4, -161, 1108, -1108], 7875)
                .scale(&rat(-2, 1))
                .mul(&t())
                .add(
                    &tau_poly(&[1384, -551, -212, -148], 7875)
                        .neg()
                        .mul(&t().pow(4)),
                ),
            tau_poly(&[12, -77, 328, -265], 1050)
                .mul(&t().pow(2))
                .add(
                    &tau_poly(&[2, -1], 1)
                        .mul(&tau_poly(&[43, -18, -8], 875))
                        .neg()
                        .mul(&t().pow(5)),
                ),
            tau_poly(&[61, 1351, -10403, 10403], 31500)
                .add(&tau_poly(&[59, -51, -162, 102], 1750).mul(&t().pow(3)))
                .add(
                    &tau_poly(&[2, -1], 1)
                        .pow(3)
                        .scale(&rat(-1, 750))
                        .mul(&t().pow(6)),
                ),
            tau_poly(&[1, -3], 1)
                .mul(&tau_poly(&[4, 26, -39], 1750))
                .neg()
                .mul(&t())
                .add(
                    &tau_poly(&[1, -3], 1)
                        .mul(&tau_poly(&[2, -1], 1).pow(2))
                        .scale(&rat(1, 500))
                        .mul(&t().pow(4)),
                ),
            tau_poly(&[1, -3], 1)
                .pow(2)
                .mul(&tau_poly(&[2, -1], 1))
                .scale(&rat(-1, 1000))
                .mul(&t().pow(2)),
            tau_poly(&[1, -3], 1).pow(3).scale(&rat(1, 6000)),
        ],
        _ => unreachable!(),
    }
}

fn gaussian_beta14(j: usize) -> Vec<RatPoly> {
    match j {
        1 => vec![tmon(2, 1, 5), RatPoly::from_rat(-3, 5)],
        2 => vec![
            tmon(0, -186, 175).add(&tmon(3, -8, 175)),
            tmon(1, 78, 175).add(&tmon(4, 1, 50)),
            tmon(2, -3, 25),
            RatPoly::from_rat(9, 50),
        ],
        3 => vec![
            tmon(1, 6392, 7875).add(&tmon(4, 148, 7875)),
            tmon(2, -292, 525).add(&tmon(5, -8, 875)),
            tmon(0, 11618, 7875)
                .add(&tmon(3, 102, 875))
                .add(&tmon(6, 1, 750)),
            tmon(1, -234, 875).add(&tmon(4, -3, 250)),
            tmon(2, 9, 250),
            RatPoly::from_rat(-9, 250),
        ],
        _ => unreachable!(),
    }
}

fn laguerre_beta14(j: usize) -> Vec<RatPoly> {
    match j {
        1 => vec![
            tau_poly(&[2, -1], 5).neg().mul(&t().pow(2)),
            tau_poly(&[1, -3], 5),
        ],
        2 => vec![
            tau_poly(&[9, 496, -744], 700)
                .add(&tau_poly(&[43, -18, -8], 175).mul(&t().pow(3))),
            tau_poly(&[4, 26, -39], 175)
                .scale(&rat(-2, 1))
                .mul(&t())
                .add(&tau_poly(&[2, -1], 1).pow(2).scale(&rat(1, 50)).mul(&t().pow(4))),
            tau_poly(&[1, -3], 1)
                .mul(&tau_poly(&[2, -1], 1))
                .scale(&rat(-1, 25))
                .mul(&t().pow(2)),
            tau_poly(&[1, -3], 1).pow(2).scale(&rat(1, 50)),
        ],
        3 => vec![
            tau_poly(&[67, -1778, 12784, -12784], 15750)
                .neg()
                .mul(&t())
                .add(
                    &tau_poly(&[1384, -551, -212, -148], 7875)
                        .neg()
                        .mul(&t().pow(4)),
                ),
            tau_poly(&[42, -449, 1600, -1168], 2100)
                .mul(&t().pow(2))
                .add(
                    &tau_poly(&[2, -1], 1)
                        .mul(&tau_poly(&[43, -18, -8], 875))
                        .neg()
                        .mul(&t().pow(5)),
                ),
            tau_poly(&[289, 6349, -46472, 46472], 31500)
                .add(&tau_poly(&[59, -51, -162, 102], 875).mul(&t().pow(3)))
                .add(
                    &tau_poly(&[2, -1], 1)
                        .pow(3)
                        .scale(&rat(-1, 750))
                        .mul(&t().pow(6)),
                ),
            tau_poly(&[1, -3], 1)
                .mul(&tau_poly(&[4, 26, -39], 875))
                .scale(&rat(-2, 1))
                .mul(&t())
                .add(
                    &tau_poly(&[1, -3], 1)
                        .mul(&tau_poly(&[2, -1], 1).pow(2))
                        .scale(&rat(1, 250))
                        .mul(&t().pow(4)),
                ),
            tau_poly(&[1, -3], 1)
                .pow(2)
                .mul(&tau_poly(&[2, -1], 1))
                .scale(&rat(-1, 250))
                .mul(&t().pow(2)),
            tau_poly(&[1, -3], 1).pow(3).scale(&rat(1, 750)),
        ],
        _ => unreachable!(),
    }
}

/// The exact displayed coefficient polynomials of `E_{beta,j}`.
///
/// # Panics
/// Panics for `j` outside `1..=3` or `beta` outside `{1, 2, 4}`.
pub fn expansion_term(beta: Beta, j: usize, kind: EnsembleKind) -> ExpansionTerm {
    assert!((1..=3).contains(&j), "only j = 1..3 are displayed");
    let coeffs = match (beta, kind) {
        (Beta::Two, EnsembleKind::Gaussian) => gaussian_beta2(j),
        (Beta::Two, EnsembleKind::Laguerre) => laguerre_beta2(j),
        (Beta::One | Beta::Four, EnsembleKind::Gaussian) => gaussian_beta14(j),
        (Beta::One | Beta::Four, EnsembleKind::Laguerre) => laguerre_beta14(j),
        _ => panic!("expansion terms exist for beta = 1, 2, 4 only"),
    };
    debug_assert_eq!(coeffs.len(), 2 * j);
    ExpansionTerm { beta, j, kind, coeffs }
}

impl ExpansionTerm {
    /// Evaluate `E_{beta,j}(t)` (or its t-derivative) at `tau`, consuming
    /// `F_beta^{(k)}` values from the Tracy–Widom evaluator.
    pub fn eval(
        &self,
        tw: &TracyWidom,
        t_val: f64,
        tau: f64,
        deriv: bool,
    ) -> Result<f64, crate::painleve::PainleveError> {
        let mut acc = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let k = i + 1;
            let f_k = tw.eval(self.beta, k, t_val)?;
            if deriv {
                let dc = c.deriv("t");
                let f_k1 = tw.eval(self.beta, k + 1, t_val)?;
                acc += poly_at(&dc, t_val, tau) * f_k + poly_at(c, t_val, tau) * f_k1;
            } else {
                acc += poly_at(c, t_val, tau) * f_k;
            }
        }
        Ok(acc)
    }

    /// Substitute `tau = 0` exactly.
    pub fn at_tau_zero(&self) -> ExpansionTerm {
        ExpansionTerm {
            beta: self.beta,
            j: self.j,
            kind: EnsembleKind::Gaussian,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.subst_rat("tau", &BigRational::from_integer(0.into())))
                .collect(),
        }
    }
}

fn poly_at(p: &RatPoly, t_val: f64, tau: f64) -> f64 {
    p.eval_f64(&[("t", t_val), ("tau", tau)]).expect("coefficient eval")
}

/// `F_beta(t) + sum_{j<=m} E_{beta,j}(t) h^j` (or the t-derivative).
#[allow(clippy::too_many_arguments)]
pub fn eval_expansion(
    kind: EnsembleKind,
    beta: Beta,
    n: f64,
    p: Option<f64>,
    m: usize,
    t_val: f64,
    deriv: bool,
    tw: &TracyWidom,
) -> Result<f64, ExpansionEvalError> {
    assert!(m <= 3, "only m <= 3 correction terms are available");
    let scaling = make_scaling(kind, beta, n, p)?;
    let mut acc = tw.eval(beta, usize::from(deriv), t_val)?;
    let mut h_pow = 1.0;
    for j in 1..=m {
        h_pow *= scaling.h;
        let term = expansion_term(beta, j, kind);
        acc += term.eval(tw, t_val, scaling.tau, deriv)? * h_pow;
    }
    Ok(acc)
}

/// Composite error for expansion evaluation.
#[derive(Debug, thiserror::Error)]
pub enum ExpansionEvalError {
    #[error(transparent)]
    Scaling(#[from] ScalingError),
    #[error(transparent)]
    Painleve(#[from] crate::painleve::PainleveError),
}

/// Histogram-adjusted variants: reading a histogram of bin width
/// `H = eta h` as a pointwise density shifts the second and third
/// corrections by the central-difference defect.
#[derive(Clone, Debug)]
pub struct HistogramAdjusted {
    pub eta: f64,
    pub base: [ExpansionTerm; 3],
    /// Adjustment to `E_2`: the single term `(eta^2/24) F''`.
    pub delta2: Vec<(usize, RatPoly)>,
    /// Adjustment to `E_3`: `(eta^2/24) E_1''`, expanded exactly.
    pub delta3: Vec<(usize, RatPoly)>,
}

/// Build the adjusted terms for one ensemble family.
pub fn histogram_adjust(kind: EnsembleKind, beta: Beta, eta: f64) -> HistogramAdjusted {
    assert!(eta > 0.0, "bin ratio eta must be positive");
    let e1 = expansion_term(beta, 1, kind);
    // E_1'' expanded term-wise: (p F^{(k)})'' = p'' F^{(k)} + 2 p' F^{(k+1)}
    // + p F^{(k+2)}; exact in Q[t,tau].
    let mut delta3: Vec<(usize, RatPoly)> = Vec::new();
    let mut add = |k: usize, p: RatPoly| {
        if p.is_zero() {
            return;
        }
        if let Some(slot) = delta3.iter_mut().find(|(kk, _)| *kk == k) {
            slot.1 = slot.1.add(&p);
        } else {
            delta3.push((k, p));
        }
    };
    for (i, c) in e1.coeffs.iter().enumerate() {
        let k = i + 1;
        add(k, c.deriv("t").deriv("t"));
        add(k + 1, c.deriv("t").scale(&rat(2, 1)));
        add(k + 2, c.clone());
    }
    delta3.sort_by_key(|(k, _)| *k);
    HistogramAdjusted {
        eta,
        base: [
            e1,
            expansion_term(beta, 2, kind),
            expansion_term(beta, 3, kind),
        ],
        delta2: vec![(2, RatPoly::one())],
        delta3,
    }
}

impl HistogramAdjusted {
    /// Adjusted `E_j` (or its derivative), `j = 1..3`.
    pub fn eval(
        &self,
        j: usize,
        tw: &TracyWidom,
        t_val: f64,
        tau: f64,
        deriv: bool,
    ) -> Result<f64, crate::painleve::PainleveError> {
        let base = self.base[j - 1].eval(tw, t_val, tau, deriv)?;
        let delta = match j {
            1 => return Ok(base),
            2 => &self.delta2,
            3 => &self.delta3,
            _ => panic!("adjusted terms exist for j = 1..3"),
        };
        let beta = self.base[0].beta;
        let mut acc = 0.0;
        for (k, p) in delta {
            let f_k = tw.eval(beta, *k, t_val)?;
            if deriv {
                let f_k1 = tw.eval(beta, *k + 1, t_val)?;
                acc += poly_at(&p.deriv("t"), t_val, tau) * f_k + poly_at(p, t_val, tau) * f_k1;
            } else {
                acc += poly_at(p, t_val, tau) * f_k;
            }
        }
        Ok(base + self.eta * self.eta / 24.0 * acc)
    }
}
