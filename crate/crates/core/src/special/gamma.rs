//! Log-gamma by the Stirling series with upward recursion, accurate to a
//! few ulps for real positive arguments.

/// `ln Gamma(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma requires a positive argument");
    // Shift into the asymptotic regime, then apply Stirling.
    let mut shift = 0.0f64;
    let mut z = x;
    while z < 12.0 {
        shift += z.ln();
        z += 1.0;
    }
    stirling(z) - shift
}

fn stirling(z: f64) -> f64 {
    // B_{2k}/(2k(2k-1)) for k = 1..8
    const C: [f64; 8] = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360360.0,
        1.0 / 156.0,
        -3617.0 / 122400.0,
    ];
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut p = inv;
    for c in C {
        series += c * p;
        p *= inv2;
    }
    const HALF_LN_2PI: f64 = 0.918938533204672741780329736406;
    (z - 0.5) * z.ln() - z + HALF_LN_2PI + series
}

/// `Gamma(x)` for moderate positive `x` (used for normalization constants).
pub fn gamma(x: f64) -> f64 {
    ln_gamma(x).exp()
}
