//! The 1D quantum oscillator and the 1D Coulomb anyon, the duality that
//! maps one onto the other, and numerical oracles that check the closed
//! forms independently.
//!
//! * [`oscillator`], [`anyon`]: closed-form spectra and eigenfunctions.
//! * [`duality`]: parameter dictionary, wavefunction map, constant identity.
//! * [`specfun`]: log-gamma, Kummer function, Laguerre and Hermite.
//! * [`oracle`]: eigensolvers, quadrature and ODE residuals that never call
//!   into the closed forms.
//! * [`verify`]: the named check suites behind `anyon verify`.

// tables carry published digits; `!(x > 0.0)` is the NaN-rejecting form
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod anyon;
pub mod duality;
pub mod error;
pub mod model;
pub mod oracle;
pub mod oscillator;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use model::{
    make_state, validate_params, Bound, Coupling, Grid, Nu, PhysicalParams, QuantumState, Source, SpectrumEntry, Spin,
    VerificationReport, WaveSample,
};
