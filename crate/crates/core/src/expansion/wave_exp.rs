//! Wave-function expansions in the transition region: the hardcoded
//! rational polynomials `p_k`, `q_k` (`k <= 3`) multiplying `Ai` and `Ai'`
//! in the scaled Hermite and Laguerre expansions, plus their numerical
//! evaluation with the half-shifted scaling parameters.

use crate::polyalg::{rat, RatPoly};
use crate::special::airy;

use super::scaling::ScalingParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WaveCase {
    Hermite,
    Laguerre,
}

/// The truncated expansion: `p_k`, `q_k` for `k = 0..=m` (`m <= 3`).
#[derive(Clone, Debug)]
pub struct WaveExpansion {
    pub case: WaveCase,
    pub order: usize,
    pub p: Vec<RatPoly>,
    pub q: Vec<RatPoly>,
}

fn s() -> RatPoly {
    RatPoly::var("s")
}

fn smon(k: u16, num: i64, den: i64) -> RatPoly {
    RatPoly::monomial("s", k, rat(num, den))
}

/// `(c_deg tau^deg + ... + c_0)/den`, highest degree first.
fn tau_poly(cs: &[i64], den: i64) -> RatPoly {
    let tau = RatPoly::var("tau");
    let mut acc = RatPoly::zero();
    for &c in cs {
        acc = acc.mul(&tau).add(&RatPoly::from_int(c));
    }
    acc.scale(&rat(1, den))
}

fn hermite_pq(k: usize) -> (RatPoly, RatPoly) {
    match k {
        0 => (RatPoly::one(), RatPoly::zero()),
        1 => (smon(1, -1, 5), smon(2, 1, 5)),
        2 => (
            smon(2, 9, 70).add(&smon(5, 1, 50)),
            smon(0, -9, 35).add(&smon(3, -3, 35)),
        ),
        3 => (
            smon(0, -28, 225)
                .add(&smon(3, -473, 3150))
                .add(&smon(6, -31, 2625)),
            smon(1, 473, 1575)
                .add(&smon(4, 169, 3150))
                .add(&smon(7, 1, 750)),
        ),
        _ => unreachable!(),
    }
}

fn laguerre_pq(k: usize) -> (RatPoly, RatPoly) {
    match k {
        0 => (RatPoly::one(), RatPoly::zero()),
        1 => (
            tau_poly(&[1, 2], 10).neg().mul(&s()),
            tau_poly(&[2, -1], 5).neg().mul(&s().pow(2)),
        ),
        2 => (
            tau_poly(&[13, 4, 36], 280)
                .mul(&s().pow(2))
                .add(&tau_poly(&[2, -1], 1).pow(2).scale(&rat(1, 50)).mul(&s().pow(5))),
            tau_poly(&[1, 24, -36], 140)
                .add(&tau_poly(&[20, -3, -6], 70).mul(&s().pow(3))),
        ),
        3 => (
            tau_poly(&[1, -14, 112, -112], 900)
                .add(&tau_poly(&[803, 1838, -3244, 3784], 25200).neg().mul(&s().pow(3)))
                .add(
                    &tau_poly(&[2, -1], 1)
                        .mul(&tau_poly(&[614, -209, -124], 10500))
                        .neg()
                        .mul(&s().pow(6)),
                ),
            tau_poly(&[37, -158, 3244, -3784], 12600)
                .neg()
                .mul(&s())
                .add(&tau_poly(&[2758, -437, -44, -676], 12600).neg().mul(&s().pow(4)))
                .add(&tau_poly(&[2, -1], 1).pow(3).scale(&rat(-1, 750)).mul(&s().pow(7))),
        ),
        _ => unreachable!(),
    }
}

/// Hardcoded expansion polynomials up to order `m <= 3`.
pub fn wave_expansion(case: WaveCase, m: usize) -> WaveExpansion {
    assert!(m <= 3, "expansion terms are displayed for m <= 3 only");
    let pq = |k: usize| match case {
        WaveCase::Hermite => hermite_pq(k),
        WaveCase::Laguerre => laguerre_pq(k),
    };
    let mut p = Vec::with_capacity(m + 1);
    let mut q = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let (pk, qk) = pq(k);
        p.push(pk);
        q.push(qk);
    }
    WaveExpansion { case, order: m, p, q }
}

/// Half-shifted scaling parameters used by the wave expansions: `n_+` and,
/// for Laguerre, `p_+` both shifted by `+1/2`.
pub fn wave_scaling(case: WaveCase, n: f64, p: Option<f64>) -> ScalingParams {
    match case {
        WaveCase::Hermite => {
            let n_plus = n + 0.5;
            ScalingParams {
                kind: super::scaling::EnsembleKind::Gaussian,
                mu: (2.0 * n_plus).sqrt(),
                sigma: 2f64.powf(-0.5) * n_plus.powf(-1.0 / 6.0),
                h: 0.25 * n_plus.powf(-2.0 / 3.0),
                tau: 0.0,
                n_eff: n_plus,
                p_eff: None,
                gamma: 1.0,
            }
        }
        WaveCase::Laguerre => {
            let p = p.expect("Laguerre wave scaling needs p");
            ScalingParams::laguerre_symmetric(n + 0.5, p + 0.5, 1.0)
        }
    }
}

impl WaveExpansion {
    /// `Ai(s) sum p_k h^k + Ai'(s) sum q_k h^k` at the case-appropriate
    /// `(h, tau)` for the given `(n, p)`.
    pub fn eval(&self, n: f64, p: Option<f64>, s_val: f64) -> f64 {
        let scaling = wave_scaling(self.case, n, p);
        let (ai, aip) = airy(s_val);
        let mut acc = 0.0;
        let mut h_pow = 1.0;
        for k in 0..=self.order {
            let pk = self.p[k]
                .eval_f64(&[("s", s_val), ("tau", scaling.tau)])
                .expect("p_k eval");
            let qk = self.q[k]
                .eval_f64(&[("s", s_val), ("tau", scaling.tau)])
                .expect("q_k eval");
            acc += (ai * pk + aip * qk) * h_pow;
            h_pow *= scaling.h;
        }
        acc
    }

    /// The wave-function side of the comparison: `phi_n(mu + sigma s)`
    /// normalized by the case prefactor (`2^{1/2} h^{1/8}` for Hermite,
    /// `tau^{1/2} h^{1/2}` for Laguerre).
    pub fn normalized_wave(
        &self,
        n: u32,
        p: Option<u32>,
        s_val: f64,
    ) -> Result<f64, crate::special::SpecialError> {
        use crate::special::{wave_eval, WaveFunctionSpec};
        let scaling = wave_scaling(self.case, n as f64, p.map(|v| v as f64));
        let x = scaling.to_unscaled(s_val);
        match self.case {
            WaveCase::Hermite => {
                let v = wave_eval(WaveFunctionSpec::hermite(n), x)?;
                Ok(v / (2f64.sqrt() * scaling.h.powf(0.125)))
            }
            WaveCase::Laguerre => {
                let p = p.expect("Laguerre comparison needs p");
                let v = wave_eval(WaveFunctionSpec::laguerre_np(n, p), x)?;
                Ok(v / (scaling.tau.sqrt() * scaling.h.sqrt()))
            }
        }
    }
}
