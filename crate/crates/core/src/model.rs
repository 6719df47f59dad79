//! Physical parameters, quantum numbers, grids, and report records shared by
//! every other module.
//!
//! Units are kept symbolic: every formula carries the mass, the reduced
//! Planck constant and either the coupling (anyon side) or the frequency
//! (oscillator side). The CLI falls back to all-ones when flags are absent.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Which of the two coupling parameters is the independent input.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coupling {
    /// Coulomb coupling `alpha` (energy times length).
    Alpha(f64),
    /// Oscillator frequency `omega` (inverse time).
    Omega(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalParams {
    pub mass: f64,
    pub hbar: f64,
    pub coupling: Coupling,
}

impl PhysicalParams {
    pub fn anyon(mass: f64, hbar: f64, alpha: f64) -> Result<Self> {
        let p = Self {
            mass,
            hbar,
            coupling: Coupling::Alpha(alpha),
        };
        p.validate()?;
        Ok(p)
    }

    pub fn oscillator(mass: f64, hbar: f64, omega: f64) -> Result<Self> {
        let p = Self {
            mass,
            hbar,
            coupling: Coupling::Omega(omega),
        };
        p.validate()?;
        Ok(p)
    }

    /// `mass = hbar = alpha = 1`.
    pub fn anyon_units() -> Self {
        Self {
            mass: 1.0,
            hbar: 1.0,
            coupling: Coupling::Alpha(1.0),
        }
    }

    /// `mass = hbar = omega = 1`.
    pub fn oscillator_units() -> Self {
        Self {
            mass: 1.0,
            hbar: 1.0,
            coupling: Coupling::Omega(1.0),
        }
    }

    /// Checks positivity of every set field, naming the first violation.
    pub fn validate(&self) -> Result<()> {
        positive("mass", self.mass)?;
        positive("hbar", self.hbar)?;
        match self.coupling {
            Coupling::Alpha(a) => positive("coupling", a),
            Coupling::Omega(w) => positive("frequency", w),
        }
    }

    pub fn alpha(&self) -> Result<f64> {
        match self.coupling {
            Coupling::Alpha(a) => Ok(a),
            Coupling::Omega(_) => Err(invalid("coupling", "anyon side requires alpha, got omega")),
        }
    }

    pub fn omega(&self) -> Result<f64> {
        match self.coupling {
            Coupling::Omega(w) => Ok(w),
            Coupling::Alpha(_) => Err(invalid("frequency", "oscillator side requires omega, got alpha")),
        }
    }

    /// Same mass and hbar, coupling replaced by `omega`.
    pub fn with_omega(&self, omega: f64) -> Result<Self> {
        Self::oscillator(self.mass, self.hbar, omega)
    }

    /// Same mass and hbar, coupling replaced by `alpha`.
    pub fn with_alpha(&self, alpha: f64) -> Result<Self> {
        Self::anyon(self.mass, self.hbar, alpha)
    }
}

fn positive(field: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(invalid(field, format!("must be a positive finite number, got {v}")))
    }
}

/// Free-function form of [`PhysicalParams::validate`].
pub fn validate_params(p: &PhysicalParams) -> Result<()> {
    p.validate()
}

/// Spin label of the reduced oscillator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Spin {
    /// s = 0, even oscillator levels.
    Zero,
    /// s = 1/2, odd oscillator levels.
    Half,
}

impl Spin {
    pub fn from_f64(s: f64) -> Result<Self> {
        if s == 0.0 {
            Ok(Spin::Zero)
        } else if s == 0.5 {
            Ok(Spin::Half)
        } else {
            Err(Error::InvalidSpin(s))
        }
    }

    pub fn value(self) -> f64 {
        match self {
            Spin::Zero => 0.0,
            Spin::Half => 0.5,
        }
    }

    /// `2s` as an integer.
    pub fn twice(self) -> u32 {
        match self {
            Spin::Zero => 0,
            Spin::Half => 1,
        }
    }

    pub fn nu(self) -> Nu {
        match self {
            Spin::Zero => Nu::Quarter,
            Spin::Half => Nu::ThreeQuarters,
        }
    }

    pub fn all() -> [Spin; 2] {
        [Spin::Zero, Spin::Half]
    }
}

/// Statistical parameter: the exponent of the anyon wavefunction at the
/// origin. Stored as an exact quarter-integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Nu {
    Quarter,
    ThreeQuarters,
}

impl Nu {
    pub fn value(self) -> f64 {
        match self {
            Nu::Quarter => 0.25,
            Nu::ThreeQuarters => 0.75,
        }
    }

    pub fn spin(self) -> Spin {
        match self {
            Nu::Quarter => Spin::Zero,
            Nu::ThreeQuarters => Spin::Half,
        }
    }

    /// Accepts only the exact binary fractions 0.25 and 0.75.
    pub fn from_f64(v: f64) -> Result<Self> {
        if v == 0.25 {
            Ok(Nu::Quarter)
        } else if v == 0.75 {
            Ok(Nu::ThreeQuarters)
        } else {
            Err(Error::InvalidNu(v.to_string()))
        }
    }

    pub fn all() -> [Nu; 2] {
        [Nu::Quarter, Nu::ThreeQuarters]
    }
}

impl fmt::Display for Nu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nu::Quarter => f.write_str("1/4"),
            Nu::ThreeQuarters => f.write_str("3/4"),
        }
    }
}

impl std::str::FromStr for Nu {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1/4" | "0.25" | ".25" => Ok(Nu::Quarter),
            "3/4" | "0.75" | ".75" => Ok(Nu::ThreeQuarters),
            other => Err(Error::InvalidNu(other.to_string())),
        }
    }
}

/// Quantum numbers shared by a reduced-oscillator level and its dual anyon
/// level: `N = 2n + 2s`, `nu = s + 1/4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuantumState {
    pub n: u32,
    pub spin: Spin,
}

impl QuantumState {
    pub fn new(n: u32, spin: Spin) -> Self {
        Self { n, spin }
    }

    pub fn from_nu(n: u32, nu: Nu) -> Self {
        Self { n, spin: nu.spin() }
    }

    /// Inverse of `level`: splits an oscillator level into `(n, s)`.
    pub fn from_level(level: u32) -> Self {
        let spin = if level.is_multiple_of(2) {
            Spin::Zero
        } else {
            Spin::Half
        };
        Self { n: level / 2, spin }
    }

    pub fn s(&self) -> f64 {
        self.spin.value()
    }

    pub fn nu(&self) -> Nu {
        self.spin.nu()
    }

    /// Oscillator level `N = 2n + 2s`.
    pub fn level(&self) -> u32 {
        2 * self.n + self.spin.twice()
    }

    /// `lambda = n + nu`.
    pub fn lambda(&self) -> f64 {
        f64::from(self.n) + self.nu().value()
    }
}

/// Builds a [`QuantumState`] from a signed radial index and a real spin.
pub fn make_state(n: i64, s: f64) -> Result<QuantumState> {
    if n < 0 {
        return Err(invalid("n", format!("radial index must be nonnegative, got {n}")));
    }
    let n = u32::try_from(n).map_err(|_| invalid("n", "radial index too large"))?;
    Ok(QuantumState::new(n, Spin::from_f64(s)?))
}

/// Uniform grid on `[x_min, x_max]` with `count` points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub x_min: f64,
    pub x_max: f64,
    pub count: usize,
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, count: usize) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite()) {
            return Err(Error::Grid("bounds must be finite".into()));
        }
        if x_min >= x_max {
            return Err(Error::Grid(format!("x_min {x_min} must be below x_max {x_max}")));
        }
        if count < 3 {
            return Err(Error::Grid(format!("need at least 3 points, got {count}")));
        }
        Ok(Self { x_min, x_max, count })
    }

    /// Same as [`Grid::new`] but also rejects grids touching the origin.
    pub fn positive(x_min: f64, x_max: f64, count: usize) -> Result<Self> {
        let g = Self::new(x_min, x_max, count)?;
        if x_min <= 0.0 {
            return Err(Error::Grid(format!("x_min must be positive, got {x_min}")));
        }
        Ok(g)
    }

    pub fn step(&self) -> f64 {
        (self.x_max - self.x_min) / (self.count - 1) as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        if i + 1 == self.count {
            self.x_max
        } else {
            self.x_min + i as f64 * self.step()
        }
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(move |i| self.point(i))
    }

    pub fn sample<F: FnMut(f64) -> f64>(&self, mut f: F) -> Vec<WaveSample> {
        self.points().map(|x| WaveSample { x, value: f(x) }).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WaveSample {
    pub x: f64,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Analytic,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub index: u32,
    pub energy: f64,
    pub source: Source,
    pub residual: f64,
}

/// Which side of the tolerance a residual must land on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bound {
    /// `residual <= tolerance`.
    Upper,
    /// `residual > tolerance`: sensitivity probes that must notice a defect.
    Lower,
}

/// Outcome of one named numerical check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub bound: Bound,
    pub passed: bool,
}

impl VerificationReport {
    pub fn new(check_name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        // NaN residuals fail.
        let passed = residual <= tolerance;
        Self {
            check_name: check_name.into(),
            residual,
            tolerance,
            bound: Bound::Upper,
            passed,
        }
    }

    /// A check whose residual must exceed `threshold`.
    pub fn exceeds(check_name: impl Into<String>, residual: f64, threshold: f64) -> Self {
        Self {
            check_name: check_name.into(),
            residual,
            tolerance: threshold,
            bound: Bound::Lower,
            passed: residual > threshold,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:<52} residual {:>10.3e} {} {:>9.2e}",
            if self.passed { "PASS" } else { "FAIL" },
            self.check_name,
            self.residual,
            match self.bound {
                Bound::Upper => "<=",
                Bound::Lower => "> ",
            },
            self.tolerance
        )
    }
}
