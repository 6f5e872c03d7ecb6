//! Orthonormal Hermite and Laguerre wave functions by forward three-term
//! recurrence, carried in extended-exponent arithmetic so the start values
//! `exp(-x^2/2)` resp. `x^{alpha/2} e^{-x/2}` never underflow.

use super::extfloat::ExtF64;
use super::gamma::ln_gamma;
use super::SpecialError;

/// Which orthonormal family a wave function belongs to.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum WaveFamily {
    Hermite,
    /// Laguerre with parameter `alpha`; requires `n + alpha + 1 > 0`.
    Laguerre { alpha: f64 },
}

/// A single wave function `phi_n` (Hermite) or `phi_n^{(alpha)}` (Laguerre).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WaveFunctionSpec {
    pub family: WaveFamily,
    pub n: u32,
}

impl WaveFunctionSpec {
    pub fn hermite(n: u32) -> Self {
        WaveFunctionSpec { family: WaveFamily::Hermite, n }
    }

    pub fn laguerre(n: u32, alpha: f64) -> Self {
        WaveFunctionSpec { family: WaveFamily::Laguerre { alpha }, n }
    }

    /// Laguerre wave function addressed by the symmetric pair `(n, p)`,
    /// i.e. `phi_{n,p} = phi_n^{(p-n)}`.
    pub fn laguerre_np(n: u32, p: u32) -> Self {
        WaveFunctionSpec::laguerre(n, p as f64 - n as f64)
    }

    fn validate(&self, x: f64) -> Result<(), SpecialError> {
        if self.n > 20_000 {
            return Err(SpecialError::OrderTooLarge(self.n));
        }
        if let WaveFamily::Laguerre { alpha } = self.family {
            if x <= 0.0 {
                return Err(SpecialError::DomainLaguerre(x));
            }
            if self.n as f64 + alpha + 1.0 <= 0.0 {
                return Err(SpecialError::BadLaguerreParameter(alpha, self.n));
            }
            let frac = alpha.fract();
            if alpha <= -1.0 && frac != 0.0 {
                return Err(SpecialError::BadLaguerreParameter(alpha, self.n));
            }
        }
        Ok(())
    }
}

/// Wave function values `(phi_n(x), phi_{n-1}(x))` in extended form,
/// together with the derivative of `phi_n`. For `n = 0` the second entry
/// is zero.
#[derive(Clone, Copy, Debug)]
pub struct WavePair {
    pub phi_n: ExtF64,
    pub phi_nm1: ExtF64,
    pub dphi_n: ExtF64,
}

/// `phi_n(x)` as plain f64.
pub fn wave_eval(spec: WaveFunctionSpec, x: f64) -> Result<f64, SpecialError> {
    Ok(wave_pair(spec, x)?.phi_n.to_f64())
}

/// Full recurrence evaluation, returning `phi_n`, `phi_{n-1}` and
/// `phi_n'` — exactly what the Christoffel–Darboux kernels consume.
pub fn wave_pair(spec: WaveFunctionSpec, x: f64) -> Result<WavePair, SpecialError> {
    spec.validate(x)?;
    match spec.family {
        WaveFamily::Hermite => Ok(hermite_pair(spec.n, x)),
        WaveFamily::Laguerre { alpha } => Ok(laguerre_pair(spec.n, alpha, x)),
    }
}

fn hermite_pair(n: u32, x: f64) -> WavePair {
    // phi_0 = pi^{-1/4} exp(-x^2/2)
    let ln_phi0 = -0.25 * std::f64::consts::PI.ln() - 0.5 * x * x;
    let mut prev = ExtF64::ZERO; // phi_{-1}
    let mut cur = ExtF64::from_ln(ln_phi0);
    for k in 0..n {
        // x phi_k = sqrt((k+1)/2) phi_{k+1} + sqrt(k/2) phi_{k-1}
        let kf = k as f64;
        let next = cur
            .mul_f64(x)
            .sub(prev.mul_f64((kf / 2.0).sqrt()))
            .mul_f64(1.0 / ((kf + 1.0) / 2.0).sqrt());
        prev = cur;
        cur = next;
    }
    // phi_n' = sqrt(2n) phi_{n-1} - x phi_n
    let dphi = prev
        .mul_f64((2.0 * n as f64).sqrt())
        .sub(cur.mul_f64(x));
    WavePair { phi_n: cur, phi_nm1: prev, dphi_n: dphi }
}

fn laguerre_pair(n: u32, alpha: f64, x: f64) -> WavePair {
    // For integer alpha = -m <= -1 the first m wave functions vanish
    // identically (1/Gamma at a pole); the recurrence starts at k = m with
    // phi_m^{(-m)} = x^{m/2} e^{-x/2} / sqrt(m!).
    let (k0, ln_start) = if alpha > -1.0 {
        (0u32, 0.5 * alpha * x.ln() - 0.5 * x - 0.5 * ln_gamma(alpha + 1.0))
    } else {
        let m = (-alpha) as u32;
        (
            m,
            0.5 * m as f64 * x.ln() - 0.5 * x - 0.5 * ln_gamma(m as f64 + 1.0),
        )
    };
    let mut prev = ExtF64::ZERO;
    let mut cur = ExtF64::from_ln(ln_start);
    for k in k0..n {
        // (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}, orthonormalized.
        let kf = k as f64;
        let next = cur
            .mul_f64(x - 2.0 * kf - 1.0 - alpha)
            .sub(prev.mul_f64((kf * (kf + alpha)).sqrt()))
            .mul_f64(1.0 / ((kf + 1.0) * (kf + 1.0 + alpha)).sqrt());
        prev = cur;
        cur = next;
    }
    let nf = n as f64;
    // phi_n' = ((2n+alpha)/(2x) - 1/2) phi_n + (sqrt(n(n+alpha))/x) phi_{n-1},
    // from x L_n' = n L_n - (n+alpha) L_{n-1} and c_n/c_{n-1} = sqrt(n/(n+alpha)).
    let dphi = if n == 0 {
        cur.mul_f64(0.5 * alpha / x - 0.5)
    } else {
        cur.mul_f64((2.0 * nf + alpha) / (2.0 * x) - 0.5)
            .add(prev.mul_f64((nf * (nf + alpha)).sqrt() / x))
    };
    WavePair { phi_n: cur, phi_nm1: prev, dphi_n: dphi }
}
