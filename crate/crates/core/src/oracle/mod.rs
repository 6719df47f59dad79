//! Numerical machinery that knows nothing about the closed-form solutions:
//! a finite-difference oscillator eigensolver, a shooting eigensolver for
//! the anyon, adaptive quadrature, and finite-difference ODE residuals.

mod quadrature;
mod residual;
mod shooting;
mod tridiag;

pub use quadrature::{integrate_finite, quadrature, quadrature_scaled, QuadResult, MAX_INTERVALS};
pub use residual::{ode_residual, MIN_SAMPLES};
pub use shooting::{isolate_level, shoot_anyon_energy, solve_level, ShootingConfig, ShootingResult};
pub use tridiag::{fd_oscillator_spectrum, SymTridiagonal, FD_MAX_LEVELS, FD_MIN_POINTS};
