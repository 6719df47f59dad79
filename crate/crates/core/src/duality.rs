//! The oscillator / Coulomb-anyon dictionary.
//!
//! On the oscillator side the frequency is fixed and the energy `E` is
//! quantized. Read backwards, the same equation (in `x = u^2`) is a Coulomb
//! problem with coupling `alpha = E/4` and energy `eps = -mu omega^2 / 8`,
//! where now `alpha` is fixed and `omega` is quantized.

use std::f64::consts::{LN_2, PI};

use serde::Serialize;

use crate::anyon::{normalization_constant, potential, AnyonState};
use crate::error::{invalid, Error, Result};
use crate::model::{Grid, Nu, PhysicalParams, QuantumState, Spin, WaveSample};
use crate::oracle::ode_residual;
use crate::oscillator::{mean_square_displacement, osc_energy, osc_wavefunction};
use crate::specfun::ln_gamma_pos;

/// Relative tolerance used when checking that a frequency is the dual one.
const FREQUENCY_MATCH: f64 = 1e-12;

/// `(alpha, eps) = (E/4, -mu omega^2/8)`.
pub fn to_anyon_params(energy: f64, omega: f64, p: &PhysicalParams) -> Result<(f64, f64)> {
    if !(energy > 0.0) {
        return Err(invalid("energy", format!("must be positive, got {energy}")));
    }
    if !(omega > 0.0) {
        return Err(invalid("frequency", format!("must be positive, got {omega}")));
    }
    Ok((energy / 4.0, -p.mass * omega * omega / 8.0))
}

/// Inverse of [`to_anyon_params`]: `(E, omega) = (4 alpha, sqrt(-8 eps/mu))`.
pub fn to_oscillator_params(alpha: f64, epsilon: f64, p: &PhysicalParams) -> Result<(f64, f64)> {
    if !(alpha > 0.0) {
        return Err(invalid("coupling", format!("must be positive, got {alpha}")));
    }
    if !(epsilon < 0.0) {
        return Err(invalid(
            "epsilon",
            format!("bound-state energy must be negative, got {epsilon}"),
        ));
    }
    Ok((4.0 * alpha, (-8.0 * epsilon / p.mass).sqrt()))
}

/// Frequency quantized by the anyon level: `omega_n = 2 alpha / (hbar (n + nu))`.
pub fn dual_frequency(n: u32, nu: Nu, p: &PhysicalParams) -> Result<f64> {
    p.validate()?;
    Ok(2.0 * p.alpha()? / (p.hbar * (f64::from(n) + nu.value())))
}

/// Matching oscillator and anyon descriptions of one level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DualityPair {
    pub state: QuantumState,
    /// Oscillator side: frequency as the coupling.
    pub oscillator: PhysicalParams,
    /// Anyon side: Coulomb coupling.
    pub anyon: PhysicalParams,
    pub energy: f64,
    pub epsilon: f64,
}

impl DualityPair {
    /// Fix `alpha`, quantize `omega`.
    pub fn from_anyon(state: QuantumState, anyon: PhysicalParams) -> Result<Self> {
        let omega = dual_frequency(state.n, state.nu(), &anyon)?;
        let oscillator = anyon.with_omega(omega)?;
        Self::assemble(state, oscillator, anyon)
    }

    /// Fix `omega`, quantize `E`; the coupling follows as `E/4`.
    pub fn from_oscillator(state: QuantumState, oscillator: PhysicalParams) -> Result<Self> {
        let energy = osc_energy(state.level(), &oscillator)?;
        let anyon = oscillator.with_alpha(energy / 4.0)?;
        Self::assemble(state, oscillator, anyon)
    }

    fn assemble(state: QuantumState, oscillator: PhysicalParams, anyon: PhysicalParams) -> Result<Self> {
        let energy = osc_energy(state.level(), &oscillator)?;
        let (_, epsilon) = to_anyon_params(energy, oscillator.omega()?, &oscillator)?;
        Ok(Self {
            state,
            oscillator,
            anyon,
            energy,
            epsilon,
        })
    }

    pub fn omega(&self) -> f64 {
        self.oscillator.omega().expect("oscillator side carries omega")
    }

    pub fn alpha(&self) -> f64 {
        self.anyon.alpha().expect("anyon side carries alpha")
    }

    pub fn map(&self, x: f64) -> Result<f64> {
        map_oscillator_to_anyon(self.state, &self.oscillator, &self.anyon, x)
    }
}

fn check_dual(state: QuantumState, osc: &PhysicalParams, anyon: &PhysicalParams) -> Result<f64> {
    osc.validate()?;
    anyon.validate()?;
    if osc.mass != anyon.mass || osc.hbar != anyon.hbar {
        return Err(invalid("mass", "oscillator and anyon sides must share mass and hbar"));
    }
    let omega = osc.omega()?;
    let expected = dual_frequency(state.n, state.nu(), anyon)?;
    if ((omega - expected) / expected).abs() > FREQUENCY_MATCH {
        return Err(Error::FrequencyMismatch {
            given: omega,
            expected,
            n: state.n,
        });
    }
    Ok(omega)
}

/// Anyon eigenfunction rebuilt from the oscillator one:
///
/// `Φ(x) = ((-1)^n / 2) sqrt(mu omega / (hbar (n + nu))) x^{1/4} Ψ_{2n+2s}(sqrt x)`.
///
/// `osc` must carry the dual frequency of `anyon` for this level; a
/// mismatch is an error rather than being corrected.
pub fn map_oscillator_to_anyon(
    state: QuantumState,
    osc: &PhysicalParams,
    anyon: &PhysicalParams,
    x: f64,
) -> Result<f64> {
    let omega = check_dual(state, osc, anyon)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            arg: "x",
            value: x,
            reason: "must be positive",
        });
    }
    let sign = if state.n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let factor = 0.5 * sign * (osc.mass * omega / (osc.hbar * state.lambda())).sqrt();
    Ok(factor * x.powf(0.25) * osc_wavefunction(state.level(), osc, x.sqrt())?)
}

/// Normalization constant obtained through the oscillator route,
/// `sqrt(mu alpha)/hbar 2^{-(n - nu + 1/4)} sqrt(Γ(2n + 2nu + 1/2)) / (pi^{1/4} n! (n + nu))`.
pub fn dual_constant(n: u32, nu: Nu, p: &PhysicalParams) -> Result<f64> {
    p.validate()?;
    let alpha = p.alpha()?;
    let nf = f64::from(n);
    let v = nu.value();
    let ln_c = 0.5 * (p.mass * alpha).ln() - p.hbar.ln() - (nf - v + 0.25) * LN_2
        + 0.5 * ln_gamma_pos(2.0 * nf + 2.0 * v + 0.5)
        - 0.25 * PI.ln()
        - ln_gamma_pos(nf + 1.0)
        - (nf + v).ln();
    Ok(ln_c.exp())
}

/// `|C_dual - C| / C` for the two normalization constants.
pub fn constant_equality_residual(n: u32, nu: Nu) -> f64 {
    let p = PhysicalParams::anyon_units();
    let c = normalization_constant(n, nu, &p).expect("unit parameters are valid");
    let dual = dual_constant(n, nu, &p).expect("unit parameters are valid");
    ((dual - c) / c).abs()
}

/// Intermediate results of the reduction `Ψ -> Ψbar -> Φ`.
#[derive(Debug, Clone)]
pub struct ReductionChain {
    pub pair: DualityPair,
    /// Positive real constant with `|C|^2 = 2 <u^2>`.
    pub constant: f64,
    /// `Φ(x) = x^nu Ψ(sqrt x) / (C x^s)` on the grid.
    pub samples: Vec<WaveSample>,
}

impl ReductionChain {
    /// Finite-difference residual of the anyon equation for the chain's
    /// samples at energy `eps`.
    pub fn residual_at(&self, epsilon: f64) -> Result<f64> {
        let nu = self.pair.state.nu();
        let anyon = self.pair.anyon;
        ode_residual(
            &self.samples,
            |x| potential(x, nu, &anyon).unwrap_or(f64::NAN),
            epsilon,
            &anyon,
        )
    }

    pub fn residual(&self) -> Result<f64> {
        self.residual_at(self.pair.epsilon)
    }
}

/// Builds `Φ` from the oscillator eigenfunction by the chain
/// `Ψ -> Ψbar = Ψ / (C u^{2s}) -> Φ = x^nu Ψbar` with `u = sqrt x`.
/// `p` carries the oscillator frequency; `alpha` and `eps` follow from it.
pub fn reduction_chain(n: u32, spin: Spin, p: &PhysicalParams, grid: &Grid) -> Result<ReductionChain> {
    if grid.x_min <= 0.0 {
        return Err(Error::Grid(format!(
            "grid must stay off x = 0, got x_min = {}",
            grid.x_min
        )));
    }
    let state = QuantumState::new(n, spin);
    let pair = DualityPair::from_oscillator(state, *p)?;
    let constant = (2.0 * mean_square_displacement(state.level(), p)?).sqrt();
    let s2 = f64::from(spin.twice());
    let nu = state.nu().value();
    let samples = grid
        .points()
        .map(|x| {
            let u = x.sqrt();
            let psi = osc_wavefunction(state.level(), p, u)?;
            let psi_bar = psi / (constant * u.powf(s2));
            Ok(WaveSample {
                x,
                value: x.powf(nu) * psi_bar,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ReductionChain {
        pair,
        constant,
        samples,
    })
}

/// Relative residual of the anyon equation for the function produced by
/// [`reduction_chain`].
pub fn reduction_chain_residual(n: u32, spin: Spin, p: &PhysicalParams, grid: &Grid) -> Result<f64> {
    reduction_chain(n, spin, p, grid)?.residual()
}

/// Convenience: the analytic anyon state matching a duality pair.
pub fn anyon_state(pair: &DualityPair) -> Result<AnyonState> {
    AnyonState::new(pair.state.n, pair.state.nu(), pair.anyon)
}
