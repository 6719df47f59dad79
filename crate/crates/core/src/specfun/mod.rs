//! Special-function kernels: log-gamma, the confluent hypergeometric
//! function, and the classical orthogonal polynomials the two systems use.

mod dd;
mod gamma;
mod kummer;
mod poly;

pub use gamma::{duplication_residual, log_gamma, recip_gamma};
pub use kummer::{
    kummer, kummer_asymptotic, kummer_series, kummer_series_sum, AsymptoticValue, KummerParams, KummerSum,
    ASYMPTOTIC_THRESHOLD, MAX_SERIES_TERMS,
};
pub use poly::{hermite, hermite_abs_sum, hermite_kummer_residual, hermite_kummer_sides, laguerre};

pub(crate) use gamma::ln_gamma_pos;
