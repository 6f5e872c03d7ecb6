//! Symbolic log-derivative tables: `F_beta^{(k)} / F_beta` as exact
//! elements of `Q[t][q, qp]`, generated by the differentiation closure of
//! Painlevé II from the first log-derivatives of the Tracy–Widom theory.

use crate::polyalg::{painleve_diff, rat, PolyError, RatPoly};

/// Which distribution a table row belongs to. `F_1 = F_plus`; `F_4` is the
/// arithmetic mean of `F_plus` and `F_minus` and is evaluated from the
/// pair, not from a log-derivative of its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    F2,
    FPlus,
    FMinus,
}

pub const MAX_DERIV: usize = 8;

/// Ratios `F^{(k)}/F` for `k = 0..=8` of one branch (order 8 covers
/// term-wise derivatives of the j = 3 expansion terms).
#[derive(Clone, Debug)]
pub struct LogDerivTable {
    pub branch: Branch,
    ratios: Vec<RatPoly>,
}

/// `F_2'/F_2 = qp^2 - t q^2 - q^4`.
pub fn logderiv_f2() -> RatPoly {
    let q = RatPoly::var("q");
    let qp = RatPoly::var("qp");
    let t = RatPoly::var("t");
    qp.pow(2).sub(&t.mul(&q.pow(2))).sub(&q.pow(4))
}

/// `F_pm'/F_pm = (qp^2 - q^4 - t q^2 +/- q) / 2`.
pub fn logderiv_fpm(plus: bool) -> RatPoly {
    let q = RatPoly::var("q");
    let half = rat(if plus { 1 } else { -1 }, 2);
    logderiv_f2().scale(&rat(1, 2)).add(&q.scale(&half))
}

impl LogDerivTable {
    /// Build the table by the recursion
    /// `(F^{(k+1)}/F) = d/dt (F^{(k)}/F) + (F'/F) (F^{(k)}/F)`.
    pub fn build(branch: Branch) -> Result<Self, PolyError> {
        let first = match branch {
            Branch::F2 => logderiv_f2(),
            Branch::FPlus => logderiv_fpm(true),
            Branch::FMinus => logderiv_fpm(false),
        };
        let mut ratios = vec![RatPoly::one()];
        for k in 0..MAX_DERIV {
            let next = painleve_diff(&ratios[k])?.add(&first.mul(&ratios[k]));
            ratios.push(next);
        }
        Ok(LogDerivTable { branch, ratios })
    }

    pub fn ratio(&self, k: usize) -> &RatPoly {
        &self.ratios[k]
    }

    /// Evaluate `F^{(k)}/F` at `(t, q, qp)`.
    pub fn eval(&self, k: usize, t: f64, q: f64, qp: f64) -> f64 {
        self.ratios[k]
            .eval_f64(&[("t", t), ("q", q), ("qp", qp)])
            .expect("ratio evaluation")
    }
}
