//! Exact solving of (overdetermined) linear systems over polynomial rings.

use super::{PolyError, RatPoly};

/// A linear system `A x = b` with entries in a rational polynomial ring.
/// More rows than unknowns are allowed; solving either returns the unique
/// exact polynomial solution satisfying every row, or reports why none
/// exists.
#[derive(Clone, Debug)]
pub struct ExactLinearSystem {
    pub matrix: Vec<Vec<RatPoly>>,
    pub rhs: Vec<RatPoly>,
    pub unknowns: Vec<String>,
}

impl ExactLinearSystem {
    pub fn new(
        matrix: Vec<Vec<RatPoly>>,
        rhs: Vec<RatPoly>,
        unknowns: Vec<String>,
    ) -> Self {
        assert_eq!(matrix.len(), rhs.len(), "row count mismatch");
        for row in &matrix {
            assert_eq!(row.len(), unknowns.len(), "column count mismatch");
        }
        ExactLinearSystem { matrix, rhs, unknowns }
    }

    pub fn rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn cols(&self) -> usize {
        self.unknowns.len()
    }

    /// Row-normalized copy: every row divided by its signed content (the
    /// common rational-times-monomial factor of its coefficients), so the
    /// system is comparable entry-by-entry with a hand-normalized display.
    /// The RHS is divided by the same factor when that stays exact.
    pub fn normalized(&self) -> Self {
        let mut matrix = Vec::with_capacity(self.rows());
        let mut rhs = Vec::with_capacity(self.rows());
        for (row, b) in self.matrix.iter().zip(&self.rhs) {
            match row_factor(row) {
                None => {
                    matrix.push(row.clone());
                    rhs.push(b.clone());
                }
                Some(f) => {
                    matrix.push(row.iter().map(|p| p.div_exact(&f).unwrap()).collect());
                    rhs.push(b.div_exact(&f).unwrap_or_else(|| b.clone()));
                }
            }
        }
        ExactLinearSystem { matrix, rhs, unknowns: self.unknowns.clone() }
    }

    /// Fraction-free (Bareiss) elimination with a final polynomiality check
    /// and full residual verification against every original row.
    pub fn solve(&self) -> Result<Vec<RatPoly>, PolyError> {
        let m = self.rows();
        let n = self.cols();
        // Augmented working copy.
        let mut a: Vec<Vec<RatPoly>> = self
            .matrix
            .iter()
            .zip(&self.rhs)
            .map(|(row, b)| {
                let mut r = row.clone();
                r.push(b.clone());
                r
            })
            .collect();

        let mut prev = RatPoly::one();
        for k in 0..n {
            // Pivot: smallest (total degree, term count) nonzero entry in
            // column k keeps intermediate growth down.
            let pivot_row = (k..m)
                .filter(|&r| !a[r][k].is_zero())
                .min_by_key(|&r| (a[r][k].total_degree(), a[r][k].num_terms()));
            let Some(pr) = pivot_row else {
                return Err(PolyError::RankDeficient(self.unknowns[k].clone()));
            };
            a.swap(k, pr);
            for i in (k + 1)..m {
                for j in (k + 1)..=n {
                    let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = num
                        .div_exact(&prev)
                        .ok_or(PolyError::InexactDivision)?;
                }
                a[i][k] = RatPoly::zero();
            }
            prev = a[k][k].clone();
        }

        // Rows below the pivot block must be identically zero (their RHS
        // included) for the overdetermined system to be consistent.
        for i in n..m {
            if !a[i][n].is_zero() {
                return Err(PolyError::Inconsistent(i));
            }
        }

        // Back substitution with exact divisions.
        let mut x = vec![RatPoly::zero(); n];
        for i in (0..n).rev() {
            let mut acc = a[i][n].clone();
            for j in (i + 1)..n {
                acc = acc.sub(&a[i][j].mul(&x[j]));
            }
            x[i] = acc
                .div_exact(&a[i][i])
                .ok_or_else(|| PolyError::NonPolynomialSolution(self.unknowns[i].clone()))?;
        }

        // Verify every original row exactly.
        for (i, (row, b)) in self.matrix.iter().zip(&self.rhs).enumerate() {
            let mut acc = RatPoly::zero();
            for (aij, xj) in row.iter().zip(&x) {
                acc = acc.add(&aij.mul(xj));
            }
            if acc.sub(b).is_zero() {
                continue;
            }
            return Err(PolyError::Inconsistent(i));
        }
        Ok(x)
    }
}

/// Common factor of a whole row: monomial gcd times signed rational content.
fn row_factor(row: &[RatPoly]) -> Option<RatPoly> {
    use num_traits::Signed;
    let nz: Vec<&RatPoly> = row.iter().filter(|p| !p.is_zero()).collect();
    let first = nz.first()?;
    // Rational content across the row, signed by the first nonzero entry.
    let mut content = first.content().abs();
    for p in nz.iter().skip(1) {
        content = rational_gcd(&content, &p.content());
    }
    if first.content().is_negative() {
        content = -content;
    }
    // Common monomial across the row, variable by variable.
    let mut factor = RatPoly::constant(content);
    let vars: Vec<String> = nz
        .iter()
        .flat_map(|p| p.vars().iter().cloned())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    for v in vars {
        let k = nz.iter().map(|p| min_exponent(p, &v)).min().unwrap_or(0);
        if k > 0 {
            factor = factor.mul(&RatPoly::var(&v).pow(k as u32));
        }
    }
    Some(factor)
}

fn min_exponent(p: &RatPoly, v: &str) -> u16 {
    let Some(i) = p.vars().iter().position(|w| w == v) else {
        return 0;
    };
    p.terms().map(|(e, _)| e[i]).min().unwrap_or(0)
}

fn rational_gcd(
    a: &num_rational::BigRational,
    b: &num_rational::BigRational,
) -> num_rational::BigRational {
    use num_integer::Integer;
    num_rational::BigRational::new(
        a.numer().gcd(b.numer()),
        a.denom().lcm(b.denom()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rat;

    fn t() -> RatPoly {
        RatPoly::var("t")
    }

    #[test]
    fn identity_system_returns_rhs() {
        let rhs = vec![t().pow(3), RatPoly::from_rat(-7, 3), t().mul(&RatPoly::var("tau"))];
        let matrix = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| if i == j { RatPoly::one() } else { RatPoly::zero() })
                    .collect()
            })
            .collect();
        let sys = ExactLinearSystem::new(
            matrix,
            rhs.clone(),
            vec!["x".into(), "y".into(), "z".into()],
        );
        assert_eq!(sys.solve().unwrap(), rhs);
    }

    #[test]
    fn overdetermined_consistent_system_recovers_solution() {
        // RHS constructed as A*x for a known polynomial x; the 6x3 system
        // must recover it exactly.
        let tau = RatPoly::var("tau");
        let x = vec![
            t().pow(2).scale(&rat(1, 5)),
            t().mul(&tau).sub(&RatPoly::from_rat(3, 10)),
            tau.pow(2).add(&t()),
        ];
        let entries: Vec<Vec<RatPoly>> = vec![
            vec![t(), RatPoly::one(), RatPoly::zero()],
            vec![RatPoly::one(), t(), tau.clone()],
            vec![RatPoly::zero(), tau.clone(), t().add(&RatPoly::one())],
            vec![t().pow(2), tau.pow(2), RatPoly::one()],
            vec![RatPoly::one(), RatPoly::one(), RatPoly::one()],
            vec![t().sub(&tau), RatPoly::zero(), t()],
        ];
        let rhs: Vec<RatPoly> = entries
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&x)
                    .fold(RatPoly::zero(), |acc, (a, xi)| acc.add(&a.mul(xi)))
            })
            .collect();
        let sys = ExactLinearSystem::new(
            entries,
            rhs,
            vec!["x0".into(), "x1".into(), "x2".into()],
        );
        assert_eq!(sys.solve().unwrap(), x);
    }

    #[test]
    fn inconsistent_system_is_rejected() {
        let matrix = vec![
            vec![RatPoly::one()],
            vec![RatPoly::one()],
        ];
        let rhs = vec![t(), t().add(&RatPoly::one())];
        let sys = ExactLinearSystem::new(matrix, rhs, vec!["x".into()]);
        assert!(matches!(sys.solve(), Err(PolyError::Inconsistent(_))));
    }

    #[test]
    fn rank_deficient_system_is_rejected() {
        let matrix = vec![
            vec![t(), t()],
            vec![t().pow(2), t().pow(2)],
        ];
        let rhs = vec![t().pow(2).scale(&rat(2, 1)), t().pow(3).scale(&rat(2, 1))];
        let sys = ExactLinearSystem::new(matrix, rhs, vec!["x".into(), "y".into()]);
        assert!(matches!(sys.solve(), Err(PolyError::RankDeficient(_))));
    }

    #[test]
    fn non_polynomial_solution_is_rejected() {
        // t * x = 1 has only the rational-function solution 1/t.
        let sys = ExactLinearSystem::new(
            vec![vec![t()]],
            vec![RatPoly::one()],
            vec!["x".into()],
        );
        assert!(matches!(sys.solve(), Err(PolyError::NonPolynomialSolution(_))));
    }

    #[test]
    fn row_normalization_cancels_common_factors() {
        // (-t/2) x + (t/2) y = 0 normalizes to x - y = 0.
        let sys = ExactLinearSystem::new(
            vec![vec![t().scale(&rat(-1, 2)), t().scale(&rat(1, 2))]],
            vec![RatPoly::zero()],
            vec!["x".into(), "y".into()],
        );
        let norm = sys.normalized();
        assert_eq!(norm.matrix[0][0], RatPoly::one());
        assert_eq!(norm.matrix[0][1], RatPoly::one().neg());
    }
}

