//! Chebyshev collocation utilities on an interval `[a, b]`:
//! Chebyshev–Lobatto points, spectral differentiation matrices, value →
//! coefficient transforms, Clenshaw evaluation, and coefficient-level
//! differentiation / antidifferentiation.

/// Chebyshev–Lobatto points mapped to `[a, b]`, in decreasing order
/// (index 0 is `b`, index `n` is `a`), matching the standard
/// differentiation-matrix convention.
pub fn lobatto_points(n: usize, a: f64, b: f64) -> Vec<f64> {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    (0..=n)
        .map(|j| mid + half * (std::f64::consts::PI * j as f64 / n as f64).cos())
        .collect()
}

/// First-order spectral differentiation matrix on the Lobatto grid of
/// `[a, b]` (Trefethen's formula, scaled by the interval map).
pub fn diff_matrix(n: usize, a: f64, b: f64) -> nalgebra::DMatrix<f64> {
    let x: Vec<f64> = (0..=n)
        .map(|j| (std::f64::consts::PI * j as f64 / n as f64).cos())
        .collect();
    let c = |i: usize| -> f64 {
        let edge = if i == 0 || i == n { 2.0 } else { 1.0 };
        edge * if i % 2 == 0 { 1.0 } else { -1.0 }
    };
    let mut d = nalgebra::DMatrix::zeros(n + 1, n + 1);
    for i in 0..=n {
        let mut row_sum = 0.0;
        for j in 0..=n {
            if i != j {
                let v = c(i) / c(j) / (x[i] - x[j]);
                d[(i, j)] = v;
                row_sum += v;
            }
        }
        // Negative sum trick for the diagonal.
        d[(i, i)] = -row_sum;
    }
    let scale = 2.0 / (b - a);
    d * scale
}

/// Chebyshev coefficients of the interpolant through values at the
/// Lobatto points (index 0 at `x = 1`). Direct cosine transform, O(n^2).
pub fn values_to_coeffs(values: &[f64]) -> Vec<f64> {
    let n = values.len() - 1;
    let mut coeffs = vec![0.0; n + 1];
    for (k, ck) in coeffs.iter_mut().enumerate() {
        let mut acc = 0.0;
        for (j, vj) in values.iter().enumerate() {
            let w = if j == 0 || j == n { 0.5 } else { 1.0 };
            acc += w * vj * (std::f64::consts::PI * (j * k) as f64 / n as f64).cos();
        }
        let w = if k == 0 || k == n { 1.0 } else { 2.0 };
        *ck = w * acc / n as f64;
    }
    coeffs
}

/// Clenshaw evaluation of a Chebyshev series at `t` in `[a, b]`.
pub fn clenshaw(coeffs: &[f64], a: f64, b: f64, t: f64) -> f64 {
    let x = (2.0 * t - (a + b)) / (b - a);
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    for &c in coeffs.iter().skip(1).rev() {
        let tmp = 2.0 * x * b1 - b2 + c;
        b2 = b1;
        b1 = tmp;
    }
    x * b1 - b2 + coeffs[0]
}

/// Coefficients of the derivative of a Chebyshev series on `[a, b]`.
pub fn deriv_coeffs(coeffs: &[f64], a: f64, b: f64) -> Vec<f64> {
    let n = coeffs.len() - 1;
    let mut d = vec![0.0; n.max(1)];
    if n == 0 {
        return d;
    }
    // Backward recurrence d_{k-1} = d_{k+1} + 2k c_k.
    let mut next = 0.0; // d_{k+1}
    let mut cur = 0.0; // d_k
    for k in (1..=n).rev() {
        let val = next + 2.0 * k as f64 * coeffs[k];
        next = cur;
        cur = val;
        d[k - 1] = val;
    }
    d[0] *= 0.5;
    let scale = 2.0 / (b - a);
    d.iter_mut().for_each(|v| *v *= scale);
    d
}

/// Coefficients of the antiderivative vanishing at `x = -1` (i.e. at `a`).
pub fn antideriv_coeffs(coeffs: &[f64], a: f64, b: f64) -> Vec<f64> {
    let n = coeffs.len() - 1;
    let half = 0.5 * (b - a);
    let mut out = vec![0.0; n + 2];
    for k in 1..=(n + 1) {
        let prev = coeffs[k - 1];
        let next = if k + 1 <= n { coeffs[k + 1] } else { 0.0 };
        let c_prev = if k == 1 { 2.0 * prev } else { prev };
        out[k] = half * (c_prev - next) / (2.0 * k as f64);
    }
    // Fix the constant so the antiderivative vanishes at x = -1.
    let at_minus1: f64 = out
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| if k % 2 == 0 { c } else { -c })
        .sum();
    out[0] = -at_minus1;
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn differentiates_smooth_functions_spectrally() {
        let n = 40;
        let (a, b) = (-2.0, 1.5);
        let pts = lobatto_points(n, a, b);
        let d = diff_matrix(n, a, b);
        let v = nalgebra::DVector::from_iterator(n + 1, pts.iter().map(|&t| (2.0 * t).sin()));
        let dv = &d * &v;
        for (j, &t) in pts.iter().enumerate() {
            assert!((dv[j] - 2.0 * (2.0 * t).cos()).abs() < 1e-10, "at {t}");
        }
    }

    #[test]
    fn coeff_round_trip_and_eval() {
        let n = 32;
        let (a, b) = (0.0, 3.0);
        let pts = lobatto_points(n, a, b);
        let f = |t: f64| (-t).exp() * (3.0 * t).cos();
        let vals: Vec<f64> = pts.iter().map(|&t| f(t)).collect();
        let coeffs = values_to_coeffs(&vals);
        for t in [0.0, 0.37, 1.9, 3.0] {
            assert!((clenshaw(&coeffs, a, b, t) - f(t)).abs() < 1e-11);
        }
    }

    #[test]
    fn coefficient_calculus() {
        let n = 30;
        let (a, b) = (-1.0, 2.0);
        let pts = lobatto_points(n, a, b);
        let vals: Vec<f64> = pts.iter().map(|&t| (3.0 * t).sin() * (-0.5 * t).exp()).collect();
        let coeffs = values_to_coeffs(&vals);
        let dc = deriv_coeffs(&coeffs, a, b);
        let h = 1e-5;
        let mid = 0.7;
        let fd = (clenshaw(&coeffs, a, b, mid + h) - clenshaw(&coeffs, a, b, mid - h)) / (2.0 * h);
        assert!((clenshaw(&dc, a, b, mid) - fd).abs() < 1e-8);

        let anti = antideriv_coeffs(&coeffs, a, b);
        assert!(clenshaw(&anti, a, b, a).abs() < 1e-12);
        let int_num = crate::quad::integrate(|t| clenshaw(&coeffs, a, b, t), a, mid, 60);
        assert!((clenshaw(&anti, a, b, mid) - int_num).abs() < 1e-10);
    }
}
