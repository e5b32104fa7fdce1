//! Random-walk step generators: heavy-tailed Lévy flights via Mantegna's
//! method and the Brownian (Gaussian) alternative.

use crate::error::{Error, Result};
use crate::rng::RngStream;

/// Lévy flight parameters: stability exponent and the scale applied when the
/// walk is folded into a position update.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevyParams {
    /// Stability exponent, in `(1, 2]`.
    pub beta: f64,
    /// Multiplier applied at the point of use; keeps raw draws heavy-tailed
    /// while bounding how far a single walk can carry an agent.
    pub scale: f64,
}

impl Default for LevyParams {
    fn default() -> Self {
        Self {
            beta: 1.5,
            scale: 0.01,
        }
    }
}

impl LevyParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.beta > 1.0 && self.beta <= 2.0) {
            return Err(Error::InvalidConfig(format!(
                "levy exponent must be in (1, 2], got {}",
                self.beta
            )));
        }
        if !(self.scale > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "levy scale must be positive, got {}",
                self.scale
            )));
        }
        Ok(())
    }
}

/// Lanczos approximation of `ln Γ(x)` for positive arguments.
fn ln_gamma(x: f64) -> f64 {
    const G: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_571_6e-6,
        1.505_632_735_149_311_6e-7,
    ];
    debug_assert!(x > 0.0);
    let x = x - 1.0;
    let mut a = G[0];
    let t = x + 7.5;
    for (i, g) in G.iter().enumerate().skip(1) {
        a += g / (x + i as f64);
    }
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
}

/// Mantegna's numerator deviation for exponent `beta`:
/// `sigma_u = [Γ(1+β)·sin(πβ/2) / (Γ((1+β)/2)·β·2^((β−1)/2))]^(1/β)`.
pub(crate) fn mantegna_sigma(beta: f64) -> f64 {
    let num = (ln_gamma(1.0 + beta)).exp() * (std::f64::consts::PI * beta / 2.0).sin();
    let den = (ln_gamma((1.0 + beta) / 2.0)).exp() * beta * 2f64.powf((beta - 1.0) / 2.0);
    (num / den).powf(1.0 / beta)
}

/// Heavy-tailed random step of length `dim` via Mantegna's method:
/// per-dimension `u / |v|^(1/β)` with `u ~ N(0, σ_u²)`, `v ~ N(0, 1)`.
/// Draws are raw (unscaled); every component is finite.
pub fn levy_step(dim: usize, params: &LevyParams, rng: &mut RngStream) -> Vec<f64> {
    debug_assert!(dim >= 1);
    let sigma = mantegna_sigma(params.beta);
    (0..dim)
        .map(|_| {
            let u = rng.normal(0.0, sigma);
            let mut v = rng.normal(0.0, 1.0);
            while v == 0.0 {
                v = rng.normal(0.0, 1.0);
            }
            u / v.abs().powf(1.0 / params.beta)
        })
        .collect()
}

/// I.i.d. `N(0, sigma²)` step of length `dim`.
pub fn brownian_step(dim: usize, sigma: f64, rng: &mut RngStream) -> Result<Vec<f64>> {
    if !(sigma > 0.0) {
        return Err(Error::InvalidConfig(format!(
            "brownian sigma must be positive, got {sigma}"
        )));
    }
    debug_assert!(dim >= 1);
    Ok((0..dim).map(|_| rng.normal(0.0, sigma)).collect())
}
