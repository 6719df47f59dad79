//! The 1D Coulomb anyon: a particle on `x > 0` in
//! `V(x) = -alpha/x - hbar^2 nu(1-nu) / (2 mu x^2)` whose wavefunction
//! behaves like `x^nu` at the origin.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{Nu, PhysicalParams, QuantumState};
use crate::specfun::{kummer, ln_gamma_pos};

/// Above this `y` the factor `y^nu e^{-y/2}` is assembled in log space.
const LOG_SPACE_Y: f64 = 700.0;

fn positive_x(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            arg: "x",
            value: x,
            reason: "must be positive",
        })
    }
}

/// Coulomb plus inverse-square potential. `nu(1 - nu) = 3/16` for both
/// allowed `nu`, so the two anyon types share one potential.
pub fn potential(x: f64, nu: Nu, p: &PhysicalParams) -> Result<f64> {
    p.validate()?;
    positive_x(x)?;
    let alpha = p.alpha()?;
    let nu = nu.value();
    Ok(-alpha / x - p.hbar * p.hbar * nu * (1.0 - nu) / (2.0 * p.mass * x * x))
}

/// `epsilon_n = -mu alpha^2 / (2 hbar^2 (n + nu)^2)`.
pub fn anyon_energy(n: u32, nu: Nu, p: &PhysicalParams) -> Result<f64> {
    p.validate()?;
    let alpha = p.alpha()?;
    let lambda = f64::from(n) + nu.value();
    Ok(-p.mass * alpha * alpha / (2.0 * p.hbar * p.hbar * lambda * lambda))
}

/// `C_n = sqrt(mu alpha)/hbar / (n + nu) / Γ(2 nu) * sqrt(Γ(n + 2 nu) / n!)`,
/// which normalizes the eigenfunction in `x`.
pub fn normalization_constant(n: u32, nu: Nu, p: &PhysicalParams) -> Result<f64> {
    p.validate()?;
    let alpha = p.alpha()?;
    let nf = f64::from(n);
    let two_nu = 2.0 * nu.value();
    let ln_c = 0.5 * (p.mass * alpha).ln() - p.hbar.ln() - (nf + nu.value()).ln() - ln_gamma_pos(two_nu)
        + 0.5 * (ln_gamma_pos(nf + two_nu) - ln_gamma_pos(nf + 1.0));
    Ok(ln_c.exp())
}

/// Eigenfunction value with a flag raised when the result underflowed to 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WaveValue {
    pub value: f64,
    pub underflow: bool,
}

/// A bound level of the anyon together with its derived scales.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AnyonState {
    pub params: PhysicalParams,
    pub state: QuantumState,
    /// Energy, always negative.
    pub epsilon: f64,
    /// `lambda = n + nu`.
    pub lambda: f64,
    /// Inverse length mapping `x` to `y = beta x`.
    pub beta: f64,
    /// Normalization constant in `x`.
    pub norm: f64,
}

impl AnyonState {
    pub fn new(n: u32, nu: Nu, params: PhysicalParams) -> Result<Self> {
        let epsilon = anyon_energy(n, nu, &params)?;
        let alpha = params.alpha()?;
        let lambda = f64::from(n) + nu.value();
        let beta = 2.0 * params.mass * alpha / (params.hbar * params.hbar * lambda);
        let norm = normalization_constant(n, nu, &params)?;
        Ok(Self {
            params,
            state: QuantumState::from_nu(n, nu),
            epsilon,
            lambda,
            beta,
            norm,
        })
    }

    pub fn n(&self) -> u32 {
        self.state.n
    }

    pub fn nu(&self) -> Nu {
        self.state.nu()
    }

    /// `y^nu e^{-y/2} F(-n, 2 nu, y)` without the constant.
    fn shape(&self, y: f64) -> Result<WaveValue> {
        let nu = self.nu().value();
        let f = kummer(-f64::from(self.n()), 2.0 * nu, y)?;
        if y <= LOG_SPACE_Y {
            return Ok(WaveValue {
                value: y.powf(nu) * (-0.5 * y).exp() * f,
                underflow: false,
            });
        }
        if f == 0.0 {
            return Ok(WaveValue {
                value: 0.0,
                underflow: false,
            });
        }
        let log_mag = nu * y.ln() - 0.5 * y + f.abs().ln() + self.norm.ln();
        let mag = log_mag.exp();
        Ok(WaveValue {
            value: f.signum() * mag / self.norm,
            underflow: mag == 0.0,
        })
    }

    /// Normalized eigenfunction `Φ(x) = C y^nu e^{-y/2} F(-n, 2nu, y)`,
    /// positive as `x -> 0+`, with the underflow flag.
    pub fn wavefunction_flagged(&self, x: f64) -> Result<WaveValue> {
        positive_x(x)?;
        let s = self.shape(self.beta * x)?;
        Ok(WaveValue {
            value: self.norm * s.value,
            underflow: s.underflow,
        })
    }

    pub fn wavefunction(&self, x: f64) -> Result<f64> {
        self.wavefunction_flagged(x).map(|w| w.value)
    }

    /// Constant normalizing the eigenfunction in `y` rather than `x`.
    pub fn norm_y(&self) -> f64 {
        self.norm / self.beta.sqrt()
    }

    /// The eigenfunction as a function of `y`, unit-normalized on `y > 0`.
    pub fn wavefunction_y(&self, y: f64) -> Result<f64> {
        if !(y > 0.0) || !y.is_finite() {
            return Err(Error::Domain {
                arg: "y",
                value: y,
                reason: "must be positive",
            });
        }
        Ok(self.norm_y() * self.shape(y)?.value)
    }

    /// Continuation to the whole `y` axis: `|y|` replaces `y` in the
    /// exponential and in F, `y^nu` is kept on the principal branch
    /// (`|y|^nu e^{i pi nu}` for `y < 0`), and the result is scaled by
    /// `1/sqrt 2` so that the full-line norm in `y` is one.
    pub fn extended_wavefunction(&self, y: f64) -> Result<Complex64> {
        if y == 0.0 || !y.is_finite() {
            return Err(Error::Domain {
                arg: "y",
                value: y,
                reason: "extension is defined for y != 0",
            });
        }
        let half = FRAC_1_SQRT_2 * self.wavefunction_y(y.abs())?;
        if y > 0.0 {
            Ok(Complex64::new(half, 0.0))
        } else {
            Ok(Complex64::from_polar(half, PI * self.nu().value()))
        }
    }

    pub fn potential(&self, x: f64) -> Result<f64> {
        potential(x, self.nu(), &self.params)
    }
}

/// Free-function form of [`AnyonState::wavefunction`].
pub fn anyon_wavefunction(n: u32, nu: Nu, p: &PhysicalParams, x: f64) -> Result<f64> {
    AnyonState::new(n, nu, *p)?.wavefunction(x)
}

/// Free-function form of [`AnyonState::extended_wavefunction`].
pub fn extended_wavefunction(n: u32, nu: Nu, p: &PhysicalParams, y: f64) -> Result<Complex64> {
    AnyonState::new(n, nu, *p)?.extended_wavefunction(y)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RejectionReason {
    /// The second solution `y^{1-2nu} F(...)` blows up at the origin.
    SingularSecondSolution,
    /// Both solutions are regular, but both cannot be quantized at once
    /// (it would need `n - m = 1/2`), and dropping the first forces `Q(0) = 0`.
    IncompatibleDoubleQuantization,
}

impl RejectionReason {
    pub fn describe(self) -> &'static str {
        match self {
            RejectionReason::SingularSecondSolution => "singular second solution",
            RejectionReason::IncompatibleDoubleQuantization => "incompatible double quantization",
        }
    }
}

/// Which of the two Kummer solutions survives, and the resulting
/// quantization condition.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BranchSelection {
    pub nu: f64,
    /// Exponent of `y` at the origin in the retained solution.
    pub retained_exponent: f64,
    /// Exponent of `y` at the origin in the rejected solution (`1 - nu`).
    pub rejected_exponent: f64,
    pub reason: RejectionReason,
    /// Shift in `lambda = n + shift`.
    pub lambda_shift: f64,
    pub quantization: String,
}

impl BranchSelection {
    pub fn text(&self) -> String {
        format!(
            "nu = {}: keep y^{} F(nu - lambda, 2nu, y); reject y^{} branch ({}); condition {}",
            self.nu,
            self.retained_exponent,
            self.rejected_exponent,
            self.reason.describe(),
            self.quantization
        )
    }
}

pub fn boundary_selection_report(nu: Nu) -> BranchSelection {
    let reason = match nu {
        Nu::ThreeQuarters => RejectionReason::SingularSecondSolution,
        Nu::Quarter => RejectionReason::IncompatibleDoubleQuantization,
    };
    BranchSelection {
        nu: nu.value(),
        retained_exponent: nu.value(),
        rejected_exponent: 1.0 - nu.value(),
        reason,
        lambda_shift: nu.value(),
        quantization: format!("nu - lambda = -n, i.e. lambda = n + {nu}"),
    }
}
