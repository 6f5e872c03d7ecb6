//! Turning-point polynomial recurrences: the pairs `(P_k, Q_k)` of the
//! exponential-form Airy expansions for Hermite and Laguerre weights, and
//! the closed-form limits `lambda_{2k-1}`.
//!
//! `Q_k` follows a displayed differential recurrence; `P_k` is the unique
//! polynomial solution of the first-order linear ODE
//! `S^2 P_k' - 3k S S' P_k = Q_k` subject to a degree bound, found by
//! exact linear algebra on its coefficients. For odd index the Laguerre
//! `P_k` carries negative powers of the squared parameter `w = a^2`; we
//! store `P_k * w^k` (`w_shift = k`), which is a plain element of
//! `Q[w][t]`.

use num_rational::BigRational;

use crate::polyalg::{rat, ExactLinearSystem, PolyError, RatPoly};
use crate::special::bernoulli_half;

/// Which weight family the recursion runs for. The Laguerre squared
/// parameter `a^2` may be a symbolic indeterminate `w` or an exact
/// rational.
#[derive(Clone, Debug, PartialEq)]
pub enum PqCase {
    Hermite,
    LaguerreSymbolic,
    LaguerreRational(BigRational),
}

/// One row of the table: `p * w^{-w_shift}` is the actual `P_k`.
#[derive(Clone, Debug)]
pub struct PqEntry {
    pub k: usize,
    pub q: RatPoly,
    pub p: RatPoly,
    pub w_shift: u32,
    /// `lambda_k = E_k(infinity)`, scaled by `w^{w_shift}` in the symbolic
    /// Laguerre case; zero for even `k`.
    pub lambda: RatPoly,
}

#[derive(Clone, Debug)]
pub struct PQTable {
    pub case: PqCase,
    pub entries: Vec<PqEntry>,
}

fn t() -> RatPoly {
    RatPoly::var("t")
}

impl PqCase {
    /// `S(t)^2` as a polynomial (Hermite: `t^2 - 1`).
    fn s_squared(&self) -> RatPoly {
        match self {
            PqCase::Hermite => t().pow(2).sub(&RatPoly::one()),
            _ => {
                let w = self.w_poly();
                // t^2 - 2 (w + 1) t + (w - 1)^2
                let lin = w.add(&RatPoly::one()).scale(&rat(-2, 1)).mul(&t());
                t().pow(2)
                    .add(&lin)
                    .add(&w.sub(&RatPoly::one()).pow(2))
            }
        }
    }

    /// `S S' ` (Hermite: `t`; Laguerre: `t - (w + 1)`).
    fn ssp(&self) -> RatPoly {
        match self {
            PqCase::Hermite => t(),
            _ => t().sub(&self.w_poly().add(&RatPoly::one())),
        }
    }

    fn w_poly(&self) -> RatPoly {
        match self {
            PqCase::Hermite => panic!("no Laguerre parameter in the Hermite case"),
            PqCase::LaguerreSymbolic => RatPoly::var("w"),
            PqCase::LaguerreRational(r) => RatPoly::constant(r.clone()),
        }
    }

    fn q1(&self) -> RatPoly {
        match self {
            // -(3 t^2 + 2)/8
            PqCase::Hermite => t()
                .pow(2)
                .scale(&rat(-3, 8))
                .sub(&RatPoly::from_rat(2, 8)),
            // -(t^3 - (3w - 1)(w - 3) t + 2 (w + 1)(w - 1)^2)/4
            _ => {
                let w = self.w_poly();
                let f1 = w
                    .scale(&rat(3, 1))
                    .sub(&RatPoly::one())
                    .mul(&w.sub(&RatPoly::from_int(3)));
                let f2 = w
                    .add(&RatPoly::one())
                    .mul(&w.sub(&RatPoly::one()).pow(2))
                    .scale(&rat(2, 1));
                t().pow(3)
                    .sub(&f1.mul(&t()))
                    .add(&f2)
                    .scale(&rat(-1, 4))
            }
        }
    }

    fn next_q(&self, k: usize, qs: &[RatPoly]) -> RatPoly {
        let qk = &qs[k - 1];
        let conv = (1..k)
            .map(|j| qs[j - 1].mul(&qs[k - j - 1]))
            .fold(RatPoly::zero(), |acc, p| acc.add(&p));
        match self {
            // Q_{k+1} = (3/2)(k+1) t Q_k - (1/2)(t^2-1) Q_k' - (1/2) sum Q_j Q_{k-j}
            PqCase::Hermite => t()
                .mul(qk)
                .scale(&rat(3 * (k as i64 + 1), 2))
                .sub(&self.s_squared().mul(&qk.deriv("t")).scale(&rat(1, 2)))
                .sub(&conv.scale(&rat(1, 2))),
            // Q_{k+1} = (3(k+1) t SS' - S^2) Q_k - t S^2 Q_k' - t sum Q_j Q_{k-j}
            _ => {
                let lead = self
                    .ssp()
                    .mul(&t())
                    .scale(&rat(3 * (k as i64 + 1), 1))
                    .sub(&self.s_squared());
                lead.mul(qk)
                    .sub(&t().mul(&self.s_squared()).mul(&qk.deriv("t")))
                    .sub(&t().mul(&conv))
            }
        }
    }

    /// Degree bound for `P_k` in `t`.
    fn p_degree(&self, k: usize) -> u16 {
        let k = k as u16;
        if k % 2 == 1 {
            3 * k
        } else {
            match self {
                PqCase::Hermite => k,
                _ => 2 * k,
            }
        }
    }

    fn w_shift(&self, k: usize) -> u32 {
        match self {
            PqCase::LaguerreSymbolic if k % 2 == 1 => k as u32,
            _ => 0,
        }
    }
}

/// Closed-form `lambda_{2k-1}` (`kappa = k` here, so the odd index is
/// `2k - 1`), scaled by `w^{2k-1}` in the symbolic Laguerre case:
/// Hermite `2^{2k-1} B_{2k}(1/2) / (4k(2k-1))`, Laguerre
/// `B_{2k}(1/2)(1 + w^{-(4k-2)/2}) / (4k(2k-1))`.
pub fn lambda_closed(case: &PqCase, k: usize) -> RatPoly {
    assert!((1..=3).contains(&k), "closed lambdas for k = 1..3");
    let b = bernoulli_half(2 * k as u32).expect("Bernoulli value");
    let denom = rat(4 * k as i64 * (2 * k as i64 - 1), 1);
    match case {
        PqCase::Hermite => {
            let two_pow = BigRational::from_integer(num_bigint::BigInt::from(2).pow(2 * k as u32 - 1));
            RatPoly::constant(two_pow * b / denom)
        }
        PqCase::LaguerreSymbolic => {
            // (w^{2k-1} + 1) B_{2k}(1/2) / (4k(2k-1))
            RatPoly::var("w")
                .pow(2 * k as u32 - 1)
                .add(&RatPoly::one())
                .scale(&(b / denom))
        }
        PqCase::LaguerreRational(w) => {
            let mut pw = BigRational::from_integer(1.into());
            for _ in 0..(2 * k - 1) {
                pw *= w;
            }
            RatPoly::constant(b * (BigRational::from_integer(1.into()) + pw.recip()) / denom)
        }
    }
}

/// Run the recurrences up to index `k_max <= 6`.
pub fn pq_recursion(case: PqCase, k_max: usize) -> Result<PQTable, PolyError> {
    assert!((1..=6).contains(&k_max), "supported range is k = 1..6");
    let mut qs: Vec<RatPoly> = vec![case.q1()];
    for k in 1..k_max {
        let next = case.next_q(k, &qs);
        qs.push(next);
    }
    let mut entries = Vec::with_capacity(k_max);
    for (idx, q) in qs.iter().enumerate() {
        let k = idx + 1;
        let shift = case.w_shift(k);
        let rhs_q = if shift > 0 {
            q.mul(&RatPoly::var("w").pow(shift))
        } else {
            q.clone()
        };
        let p = solve_p(&case, k, &rhs_q)?;
        let lambda = if k % 2 == 1 {
            // Leading t-coefficient of (the shifted) P_k.
            p.coeff_of("t", case.p_degree(k))
        } else {
            RatPoly::zero()
        };
        entries.push(PqEntry { k, q: q.clone(), p, w_shift: shift, lambda });
    }
    Ok(PQTable { case, entries })
}

/// Solve `S^2 P' - 3k SS' P = Q` for a polynomial `P` of the admissible
/// degree by exact linear algebra on the `t`-coefficients.
fn solve_p(case: &PqCase, k: usize, q: &RatPoly) -> Result<RatPoly, PolyError> {
    let d = case.p_degree(k) as usize;
    let s2 = case.s_squared();
    let ssp = case.ssp();
    // Build the action column by column: column j holds the coefficients
    // of S^2 (t^j)' - 3k SS' t^j.
    let columns: Vec<RatPoly> = (0..=d)
        .map(|j| {
            let tj = t().pow(j as u32);
            s2.mul(&tj.deriv("t"))
                .sub(&ssp.mul(&tj).scale(&rat(3 * k as i64, 1)))
        })
        .collect();
    let row_max = columns
        .iter()
        .map(|c| c.degree("t"))
        .chain(std::iter::once(q.degree("t")))
        .max()
        .unwrap() as usize;
    let mut matrix = Vec::with_capacity(row_max + 1);
    let mut rhs = Vec::with_capacity(row_max + 1);
    for m in 0..=row_max {
        matrix.push(
            columns
                .iter()
                .map(|c| c.coeff_of("t", m as u16))
                .collect::<Vec<_>>(),
        );
        rhs.push(q.coeff_of("t", m as u16));
    }
    let unknowns: Vec<String> = (0..=d).map(|j| format!("p{j}")).collect();
    let sys = ExactLinearSystem::new(matrix, rhs, unknowns);
    let coeffs = sys.solve()?;
    let mut p = RatPoly::zero();
    for (j, c) in coeffs.iter().enumerate() {
        p = p.add(&c.mul(&t().pow(j as u32)));
    }
    Ok(p)
}

impl PQTable {
    pub fn entry(&self, k: usize) -> &PqEntry {
        &self.entries[k - 1]
    }

    /// Residual `S^2 P' - 3k SS' P - w^shift Q`, which must vanish exactly.
    pub fn residual(&self, k: usize) -> RatPoly {
        let e = self.entry(k);
        let s2 = self.case.s_squared();
        let ssp = self.case.ssp();
        let rhs = if e.w_shift > 0 {
            e.q.mul(&RatPoly::var("w").pow(e.w_shift))
        } else {
            e.q.clone()
        };
        s2.mul(&e.p.deriv("t"))
            .sub(&ssp.mul(&e.p).scale(&rat(3 * k as i64, 1)))
            .sub(&rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_first_instances() {
        let table = pq_recursion(PqCase::Hermite, 2).unwrap();
        // Q_1 = -(3t^2 + 2)/8
        let q1 = t().pow(2).scale(&rat(-3, 8)).add(&RatPoly::from_rat(-1, 4));
        assert_eq!(table.entry(1).q, q1);
        // P_1 = t (6 - t^2)/24, P_2 = (3 t^2 + 2)/16
        let p1 = t().scale(&rat(1, 4)).sub(&t().pow(3).scale(&rat(1, 24)));
        assert_eq!(table.entry(1).p, p1);
        let p2 = t().pow(2).scale(&rat(3, 16)).add(&RatPoly::from_rat(1, 8));
        assert_eq!(table.entry(2).p, p2);
        // P_2 = -Q_1/2
        assert_eq!(table.entry(2).p, table.entry(1).q.scale(&rat(-1, 2)));
    }

    #[test]
    fn laguerre_first_instances_symbolic() {
        let table = pq_recursion(PqCase::LaguerreSymbolic, 2).unwrap();
        let w = RatPoly::var("w");
        // P_2 = -t Q_1 = t (t^3 - t(3w-1)(w-3) + 2(w+1)(w-1)^2)/4
        let expect_p2 = t().mul(&table.entry(1).q).neg();
        assert_eq!(table.entry(2).p, expect_p2);
        // w-shifted P_1 matches the display
        // w P_1 = [(w-1)^2((w-1)^2 - 4w) - 3(w+1)^3 t + 3(w^2+6w+1)t^2 - (w+1)t^3]/48
        let wm1 = w.sub(&RatPoly::one());
        let wp1 = w.add(&RatPoly::one());
        let c0 = wm1.pow(2).mul(&wm1.pow(2).sub(&w.scale(&rat(4, 1))));
        let c1 = wp1.pow(3).scale(&rat(-3, 1));
        let c2 = w
            .pow(2)
            .add(&w.scale(&rat(6, 1)))
            .add(&RatPoly::one())
            .scale(&rat(3, 1));
        let c3 = wp1.neg();
        let expect_wp1 = c0
            .add(&c1.mul(&t()))
            .add(&c2.mul(&t().pow(2)))
            .add(&c3.mul(&t().pow(3)))
            .scale(&rat(1, 48));
        assert_eq!(table.entry(1).p, expect_wp1);
        assert_eq!(table.entry(1).w_shift, 1);
    }

    #[test]
    fn lambda_values() {
        // Hermite lambda_1 = -1/24 (from B_2(1/2) = -1/12).
        assert_eq!(
            lambda_closed(&PqCase::Hermite, 1),
            RatPoly::from_rat(-1, 24)
        );
        // Laguerre lambda_1 = -(1 + 1/w)/48, i.e. w lambda_1 = -(w + 1)/48.
        let expect = RatPoly::var("w")
            .add(&RatPoly::one())
            .scale(&rat(-1, 48));
        assert_eq!(lambda_closed(&PqCase::LaguerreSymbolic, 1), expect);
    }

    #[test]
    fn leading_coefficients_equal_closed_lambdas() {
        let hermite = pq_recursion(PqCase::Hermite, 6).unwrap();
        for k in 1..=3usize {
            let lead = &hermite.entry(2 * k - 1).lambda;
            assert_eq!(lead, &lambda_closed(&PqCase::Hermite, k), "Hermite k = {k}");
        }
        let laguerre = pq_recursion(PqCase::LaguerreSymbolic, 6).unwrap();
        for k in 1..=3usize {
            let lead = &laguerre.entry(2 * k - 1).lambda;
            assert_eq!(
                lead,
                &lambda_closed(&PqCase::LaguerreSymbolic, k),
                "Laguerre k = {k}"
            );
        }
    }

    #[test]
    fn residuals_vanish_exactly() {
        for case in [PqCase::Hermite, PqCase::LaguerreSymbolic] {
            let table = pq_recursion(case.clone(), 6).unwrap();
            for k in 1..=6 {
                assert!(table.residual(k).is_zero(), "{case:?} k = {k}");
            }
        }
        // Rational parameter path: a^2 = 4.
        let table = pq_recursion(PqCase::LaguerreRational(rat(4, 1)), 6).unwrap();
        for k in 1..=6 {
            assert!(table.residual(k).is_zero(), "rational k = {k}");
        }
    }

    #[test]
    fn rational_case_matches_symbolic_substitution() {
        let w_val = rat(9, 4);
        let sym = pq_recursion(PqCase::LaguerreSymbolic, 4).unwrap();
        let num = pq_recursion(PqCase::LaguerreRational(w_val.clone()), 4).unwrap();
        for k in 1..=4usize {
            let subst = sym.entry(k).p.subst_rat("w", &w_val);
            // Undo the w-shift of the symbolic entry.
            let mut shifted = num.entry(k).p.clone();
            for _ in 0..sym.entry(k).w_shift {
                shifted = shifted.scale(&w_val);
            }
            assert_eq!(subst, shifted, "k = {k}");
        }
    }
}
