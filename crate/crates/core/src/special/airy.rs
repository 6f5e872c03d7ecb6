//! The Airy function Ai and its derivative on the real line.
//!
//! Three regimes, each with certifiable accuracy and generous overlap:
//! Maclaurin series in double-double arithmetic for `|s| <= 9` (the
//! compensated summation absorbs the cancellation of terms as large as
//! `exp(2|s|^{3/2}/3)`), the exponential asymptotic series for `s > 9`,
//! and the oscillatory asymptotic series with phase functions for
//! `s < -9`. Results carry a separate binary exponent so the decaying
//! tail keeps full relative accuracy far past f64 underflow.

use super::dd::Dd;
use super::extfloat::ExtF64;

/// Branch switch point. Both neighbouring branches deliver ~1e-15 here;
/// the dd-Maclaurin error grows with `exp(2|s|^{3/2}/3) * 1e-32` and the
/// asymptotic truncation error shrinks like `exp(-4|s|^{3/2}/3)`.
const SERIES_LIMIT: f64 = 9.0;

/// Largest argument accepted (tail values near `s = 200` have binary
/// exponents around -2700, far below f64 but exact in [`ExtF64`]).
pub const AIRY_MAX_ARG: f64 = 200.0;

/// `(Ai(s), Ai'(s))` as plain f64. Underflows to subnormal/zero in the far
/// tail; use [`airy_ext`] when the scale matters.
pub fn airy(s: f64) -> (f64, f64) {
    let (ai, aip) = airy_ext(s);
    (ai.to_f64(), aip.to_f64())
}

/// `(Ai(s), Ai'(s))` in extended-exponent form.
///
/// # Panics
/// Panics for non-finite arguments or `|s| > 200`.
pub fn airy_ext(s: f64) -> (ExtF64, ExtF64) {
    assert!(s.is_finite(), "airy: argument must be finite");
    assert!(s.abs() <= AIRY_MAX_ARG, "airy: |s| <= {AIRY_MAX_ARG} required");
    if s.abs() <= SERIES_LIMIT {
        let (ai, aip) = maclaurin(s);
        (ExtF64::new(ai), ExtF64::new(aip))
    } else if s > 0.0 {
        decaying(s)
    } else {
        let (ai, aip) = oscillatory(-s);
        (ExtF64::new(ai), ExtF64::new(aip))
    }
}

/// Ai(0) = 3^{-2/3}/Gamma(2/3) in double-double precision.
const AI0: Dd = Dd { hi: 0.3550280538878172, lo: 2.05233632436212e-17 };
/// Ai'(0) = -3^{-1/3}/Gamma(1/3) in double-double precision.
const AIP0: Dd = Dd { hi: -0.2588194037928068, lo: 2.522243111610832e-17 };

/// Maclaurin series: Ai = Ai(0) f(s) + Ai'(0) g(s) with f'' = s f. All four
/// sums (f, f', g, g') are accumulated in double-double.
fn maclaurin(s: f64) -> (f64, f64) {
    let x3 = Dd::from(s).mul(Dd::from(s)).mul_f64(s);
    // f = sum c_k s^{3k},         c_0 = 1,  ratio 1/((3k)(3k-1))
    // f' = sum u_k s^{3k-1},      u_1 = s^2/2, ratio 1/((3k-1)(3k-3))
    // g = sum d_k s^{3k+1},       d_0 = s,  ratio 1/((3k+1)(3k))
    // g' = sum v_k s^{3k},        v_0 = 1,  ratio 1/((3k)(3k-2))
    let mut f = Dd::ONE;
    let mut fp = Dd::ZERO;
    let mut g = Dd::from(s);
    let mut gp = Dd::ONE;

    let mut tf = Dd::ONE;
    let mut tfp = Dd::from(s).mul(Dd::from(s)).div_f64(2.0);
    fp = fp.add(tfp);
    let mut tg = Dd::from(s);
    let mut tgp = Dd::ONE;

    for k in 1..400usize {
        let k3 = 3.0 * k as f64;
        tf = tf.mul(x3).div_f64(k3 * (k3 - 1.0));
        f = f.add(tf);
        if k >= 2 {
            tfp = tfp.mul(x3).div_f64((k3 - 1.0) * (k3 - 3.0));
            fp = fp.add(tfp);
        }
        tg = tg.mul(x3).div_f64((k3 + 1.0) * k3);
        g = g.add(tg);
        tgp = tgp.mul(x3).div_f64(k3 * (k3 - 2.0));
        gp = gp.add(tgp);

        let scale = f.abs().max(g.abs()).max(1.0);
        if tf.abs() < 1e-38 * scale && tg.abs() < 1e-38 * scale {
            break;
        }
    }
    let ai = AI0.mul(f).add(AIP0.mul(g));
    let aip = AI0.mul(fp).add(AIP0.mul(gp));
    (ai.to_f64(), aip.to_f64())
}

/// Coefficients u_k, v_k of the Poincare asymptotic series,
/// u_k = (6k-5)(6k-3)(6k-1)/(216 k (2k-1)) u_{k-1}, v_k = (6k+1)/(1-6k) u_k.
fn uv(k: usize, u_prev: f64) -> (f64, f64) {
    let kf = k as f64;
    let u = u_prev * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
        / (216.0 * kf * (2.0 * kf - 1.0));
    let v = u * (6.0 * kf + 1.0) / (1.0 - 6.0 * kf);
    (u, v)
}

/// Exponentially decaying branch, `s > SERIES_LIMIT`.
fn decaying(s: f64) -> (ExtF64, ExtF64) {
    let xi = 2.0 / 3.0 * s.powf(1.5);
    let mut sum_u = 1.0f64;
    let mut sum_v = 1.0f64;
    let mut u = 1.0f64;
    let mut term_prev = 1.0f64;
    let mut sign = -1.0f64;
    let mut xik = 1.0f64;
    for k in 1..200usize {
        let (uk, vk) = uv(k, u);
        u = uk;
        xik *= xi;
        let t = uk / xik;
        if !t.is_finite() || t.abs() > term_prev {
            break; // past the optimal truncation point
        }
        term_prev = t.abs();
        sum_u += sign * t;
        sum_v += sign * vk / xik;
        sign = -sign;
        if t.abs() < 1e-18 {
            break;
        }
    }
    let sqrt_pi = std::f64::consts::PI.sqrt();
    let scale = ExtF64::from_ln(-xi);
    let ai = scale.mul_f64(sum_u / (2.0 * sqrt_pi * s.powf(0.25)));
    let aip = scale.mul_f64(-s.powf(0.25) * sum_v / (2.0 * sqrt_pi));
    (ai, aip)
}

/// Oscillatory branch for negative arguments, `z = -s > SERIES_LIMIT`.
fn oscillatory(z: f64) -> (f64, f64) {
    let xi = 2.0 / 3.0 * z.powf(1.5);
    // Split the series into even (cos) and odd (sin) parts.
    let mut p = 1.0f64; // sum (-1)^k u_{2k} xi^{-2k}
    let mut q = 0.0f64; // sum (-1)^k u_{2k+1} xi^{-2k-1}
    let mut r = 1.0f64; // sum (-1)^k v_{2k} xi^{-2k}
    let mut w = 0.0f64; // sum (-1)^k v_{2k+1} xi^{-2k-1}
    let mut u = 1.0f64;
    let mut term_prev = f64::INFINITY;
    let mut xik = 1.0f64;
    for k in 1..200usize {
        let (uk, vk) = uv(k, u);
        u = uk;
        xik *= xi;
        let t = uk / xik;
        if !t.is_finite() || t.abs() > term_prev {
            break;
        }
        term_prev = t.abs();
        // Regrouping the alternating series by parity of k gives the
        // sign pattern (-1)^{floor(k/2)} on both sub-series.
        let phase = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += phase * t;
            r += phase * vk / xik;
        } else {
            q += phase * t;
            w += phase * vk / xik;
        }
        if t.abs() < 1e-18 {
            break;
        }
    }
    let chi = xi - std::f64::consts::FRAC_PI_4;
    let (sin, cos) = chi.sin_cos();
    let sqrt_pi = std::f64::consts::PI.sqrt();
    let ai = (cos * p + sin * q) / (sqrt_pi * z.powf(0.25));
    let aip = (sin * r - cos * w) * z.powf(0.25) / sqrt_pi;
    (ai, aip)
}
