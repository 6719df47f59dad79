//! Reduced 1D quantum oscillator on the half-line `u >= 0`.

use std::f64::consts::{PI, SQRT_2};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{PhysicalParams, QuantumState};
use crate::specfun::{hermite, ln_gamma_pos};

/// `E = hbar omega (N + 1/2)`.
pub fn osc_energy(level: u32, p: &PhysicalParams) -> Result<f64> {
    p.validate()?;
    Ok(p.hbar * p.omega()? * (f64::from(level) + 0.5))
}

/// Normalized eigenfunction on the half-line:
///
/// `sqrt(2) (mu omega / pi hbar)^{1/4} (2^N N!)^{-1/2} exp(-xi^2/2) H_N(xi)`
/// with `xi = u sqrt(mu omega / hbar)`, so that `∫_0^∞ |Ψ_N|^2 du = 1`.
pub fn osc_wavefunction(level: u32, p: &PhysicalParams, u: f64) -> Result<f64> {
    p.validate()?;
    if !(u >= 0.0) || !u.is_finite() {
        return Err(Error::Domain {
            arg: "u",
            value: u,
            reason: "reduced oscillator lives on u >= 0",
        });
    }
    let scale = p.mass * p.omega()? / p.hbar;
    let xi = u * scale.sqrt();
    let nf = f64::from(level);
    let log_norm = 0.25 * (scale / PI).ln() - 0.5 * (nf * std::f64::consts::LN_2 + ln_gamma_pos(nf + 1.0));
    Ok(SQRT_2 * (log_norm - 0.5 * xi * xi).exp() * hermite(level, xi))
}

/// `<u^2> = (N + 1/2) hbar / (mu omega)`.
pub fn mean_square_displacement(level: u32, p: &PhysicalParams) -> Result<f64> {
    p.validate()?;
    Ok((f64::from(level) + 0.5) * p.hbar / (p.mass * p.omega()?))
}

/// One oscillator level bundled with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OscillatorState {
    pub params: PhysicalParams,
    pub state: QuantumState,
    pub energy: f64,
}

impl OscillatorState {
    pub fn new(state: QuantumState, params: PhysicalParams) -> Result<Self> {
        let energy = osc_energy(state.level(), &params)?;
        Ok(Self { params, state, energy })
    }

    pub fn level(&self) -> u32 {
        self.state.level()
    }

    pub fn wavefunction(&self, u: f64) -> Result<f64> {
        osc_wavefunction(self.level(), &self.params, u)
    }

    /// Harmonic potential `mu omega^2 u^2 / 2`.
    pub fn potential(&self, u: f64) -> f64 {
        let w = self.params.omega().unwrap_or(f64::NAN);
        0.5 * self.params.mass * w * w * u * u
    }
}
