//! Named verification suites. Every check reduces to a nonnegative residual
//! compared against a tolerance; the CLI prints and serializes the list.

use std::f64::consts::PI;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::anyon::{anyon_energy, AnyonState};
use crate::duality::{constant_equality_residual, dual_frequency, reduction_chain, DualityPair};
use crate::error::{Error, Result};
use crate::model::{Grid, Nu, PhysicalParams, QuantumState, Spin, VerificationReport};
use crate::oracle::{
    fd_oscillator_spectrum, ode_residual, quadrature_scaled, shoot_anyon_energy, solve_level, ShootingConfig,
};
use crate::oscillator::{osc_energy, osc_wavefunction, OscillatorState};
use crate::specfun::{duplication_residual, hermite_kummer_residual, kummer, laguerre, ln_gamma_pos, log_gamma};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Identities,
    Normalization,
    Duality,
    Oracle,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Normalization => "normalization",
            Suite::Duality => "duality",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "identities" => Ok(Suite::Identities),
            "normalization" => Ok(Suite::Normalization),
            "duality" => Ok(Suite::Duality),
            "oracle" => Ok(Suite::Oracle),
            "all" => Ok(Suite::All),
            other => Err(Error::Solver(format!("unknown suite `{other}`"))),
        }
    }
}

/// A 1% eigenvalue shift must push the ODE residual above this. Not
/// affected by the tolerance override.
pub const SENSITIVITY_THRESHOLD: f64 = 1e-3;

/// Options shared by all suites.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct VerifyOptions {
    /// Replaces every upper-bound tolerance when set.
    pub tolerance_override: Option<f64>,
}

impl VerifyOptions {
    fn tol(&self, default: f64) -> f64 {
        self.tolerance_override.unwrap_or(default)
    }

    fn check(&self, name: &str, residual: Result<f64>, default_tol: f64) -> VerificationReport {
        // an error is reported as an infinite residual
        VerificationReport::new(name, residual.unwrap_or(f64::INFINITY), self.tol(default_tol))
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Vec<VerificationReport> {
    match suite {
        Suite::Identities => identities(opts),
        Suite::Normalization => normalization(opts),
        Suite::Duality => duality(opts),
        Suite::Oracle => oracle(opts),
        Suite::All => [Suite::Identities, Suite::Normalization, Suite::Duality, Suite::Oracle]
            .into_iter()
            .flat_map(|s| run_suite(s, opts))
            .collect(),
    }
}

/// Deterministic equidistributed points in `(0, 1)`.
fn weyl(count: usize) -> impl Iterator<Item = f64> {
    const GOLDEN: f64 = 0.618_033_988_749_894_8;
    (1..=count).map(|i| (i as f64 * GOLDEN).fract())
}

fn max_of(values: impl IntoIterator<Item = Result<f64>>) -> Result<f64> {
    values.into_iter().try_fold(0.0f64, |m, v| Ok(m.max(v?)))
}

pub fn identities(opts: &VerifyOptions) -> Vec<VerificationReport> {
    let mut out = Vec::new();

    let special = log_gamma(0.5)
        .map(|v| (v - 0.5 * PI.ln()).abs())
        .and_then(|a| log_gamma(1.5).map(|v| a.max((v - (0.5 * PI.ln() - std::f64::consts::LN_2)).abs())));
    out.push(opts.check("log_gamma at 1/2 and 3/2", special, 1e-14));

    let dup = max_of(weyl(10_000).map(|t| duplication_residual(50.0 * (1.0 - t))));
    out.push(opts.check("gamma duplication, 1e4 points in (0, 50]", dup, 1e-12));

    let transform = max_of(weyl(400).zip(weyl(800).skip(400)).enumerate().map(|(i, (s, t))| {
        let a = -6.0 + 12.0 * s;
        let b = 0.2 + 6.0 * t;
        let y = -30.0 + 60.0 * ((i as f64 + 0.5) / 400.0);
        let lhs = kummer(a, b, y)?;
        let rhs = y.exp() * kummer(b - a, b, -y)?;
        Ok((lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(f64::MIN_POSITIVE))
    }));
    out.push(opts.check("Kummer transformation, |y| <= 30", transform, 1e-10));

    let derivative = max_of(
        [(0.3, 0.8, 2.0), (-2.5, 1.5, 4.0), (1.7, 2.25, -3.0), (-4.0, 0.75, 1.1)].map(|(a, b, y): (f64, f64, f64)| {
            let h = 1e-4;
            let fd = (kummer(a, b, y + h)? - kummer(a, b, y - h)?) / (2.0 * h);
            let exact = a / b * kummer(a + 1.0, b + 1.0, y)?;
            Ok((fd - exact).abs() / exact.abs().max(1.0))
        }),
    );
    out.push(opts.check("Kummer derivative relation", derivative, 1e-6));

    let hk = max_of((0..=10u32).flat_map(|n| {
        Spin::all().into_iter().flat_map(move |spin| {
            (1..=100).map(move |j| {
                let y = 0.25 * f64::from(j);
                hermite_kummer_residual(n, spin, y)
            })
        })
    }));
    out.push(opts.check("Hermite-Kummer identity, n <= 10, y in (0, 25]", hk, 1e-9));

    let lk = max_of(Nu::all().into_iter().flat_map(|nu| {
        (0..=10u32).flat_map(move |n| {
            (1..=40).map(move |j| {
                let y = 0.5 * f64::from(j);
                let nf = f64::from(n);
                let two_nu = 2.0 * nu.value();
                let factor = (ln_gamma_pos(nf + 1.0) + ln_gamma_pos(two_nu) - ln_gamma_pos(nf + two_nu)).exp();
                let f = kummer(-nf, two_nu, y)?;
                let l = laguerre(n, two_nu - 1.0, y)?;
                Ok((f - l * factor).abs() / f.abs().max(1.0))
            })
        })
    }));
    out.push(opts.check("Laguerre-Kummer identity, n <= 10", lk, 1e-12));
    out
}

const QUAD_TOL: f64 = 1e-13;

fn anyon_overlap(a: &AnyonState, b: &AnyonState) -> Result<f64> {
    let scale = 1.0 / a.beta.min(b.beta);
    quadrature_scaled(
        |x| a.wavefunction(x).unwrap_or(f64::NAN) * b.wavefunction(x).unwrap_or(f64::NAN),
        0.0,
        f64::INFINITY,
        QUAD_TOL,
        scale,
    )
}

fn oscillator_overlap(n: u32, m: u32, p: &PhysicalParams) -> Result<f64> {
    let scale = (p.hbar / (p.mass * p.omega()?)).sqrt();
    quadrature_scaled(
        |u| osc_wavefunction(n, p, u).unwrap_or(f64::NAN) * osc_wavefunction(m, p, u).unwrap_or(f64::NAN),
        0.0,
        f64::INFINITY,
        QUAD_TOL,
        scale,
    )
}

pub fn normalization(opts: &VerifyOptions) -> Vec<VerificationReport> {
    let anyon_p = PhysicalParams::anyon_units();
    let osc_p = PhysicalParams::oscillator_units();
    let mut out = Vec::new();

    let anyon_norm = max_of(Nu::all().into_iter().flat_map(|nu| {
        (0..=10).map(move |n| {
            let s = AnyonState::new(n, nu, anyon_p)?;
            Ok((anyon_overlap(&s, &s)? - 1.0).abs())
        })
    }));
    out.push(opts.check("anyon norm, n <= 10, both nu", anyon_norm, 1e-8));

    let osc_norm = max_of((0..=8).map(|n| Ok((oscillator_overlap(n, n, &osc_p)? - 1.0).abs())));
    out.push(opts.check("oscillator half-line norm, N <= 8", osc_norm, 1e-10));

    let anyon_orth = max_of(Nu::all().into_iter().flat_map(|nu| {
        (0..=6u32).flat_map(move |n| {
            (0..n).map(move |m| {
                let a = AnyonState::new(n, nu, anyon_p)?;
                let b = AnyonState::new(m, nu, anyon_p)?;
                Ok(anyon_overlap(&a, &b)?.abs())
            })
        })
    }));
    out.push(opts.check("anyon orthogonality, n, m <= 6", anyon_orth, 1e-7));

    let osc_orth = max_of((0..=8u32).flat_map(|n| {
        (0..n)
            .filter(move |m| (n - m) % 2 == 0)
            .map(move |m| Ok(oscillator_overlap(n, m, &osc_p)?.abs()))
    }));
    out.push(opts.check("oscillator orthogonality within parity, N <= 8", osc_orth, 1e-8));

    let laguerre_norm = max_of(Nu::all().into_iter().flat_map(|nu| {
        (0..=8u32).map(move |n| {
            let a = 2.0 * nu.value() - 1.0;
            let v = quadrature_scaled(
                |y| {
                    let l = laguerre(n, a, y).unwrap_or(f64::NAN);
                    (-y).exp() * y.powf(2.0 * nu.value()) * l * l
                },
                0.0,
                f64::INFINITY,
                1e-12,
                4.0,
            )?;
            let nf = f64::from(n);
            let want = 2.0 * (nf + nu.value()) * (ln_gamma_pos(nf + 2.0 * nu.value()) - ln_gamma_pos(nf + 1.0)).exp();
            Ok(((v - want) / want).abs())
        })
    }));
    out.push(opts.check("Laguerre norm integral, n <= 8", laguerre_norm, 1e-8));

    let extended = max_of(Nu::all().into_iter().flat_map(|nu| {
        (0..=4).map(move |n| {
            let s = AnyonState::new(n, nu, anyon_p)?;
            let v = quadrature_scaled(
                |y| s.extended_wavefunction(y).map(|c| c.norm_sqr()).unwrap_or(f64::NAN),
                f64::NEG_INFINITY,
                f64::INFINITY,
                QUAD_TOL,
                1.0,
            )?;
            Ok((v - 1.0).abs())
        })
    }));
    out.push(opts.check("parity-extended full-line norm", extended, 1e-8));

    let parity = max_of(Nu::all().into_iter().flat_map(|nu| {
        (0..=4).flat_map(move |n| {
            (1..=20).map(move |j| {
                let s = AnyonState::new(n, nu, anyon_p)?;
                let y = 0.37 * f64::from(j);
                let r = s.extended_wavefunction(-y)? / s.extended_wavefunction(y)?;
                Ok((r - Complex64::from_polar(1.0, PI * nu.value())).norm())
            })
        })
    }));
    out.push(opts.check("parity phase e^{i pi nu}", parity, 1e-12));
    out
}

/// Max pointwise difference between the mapped oscillator function and the
/// anyon eigenfunction, relative to the peak of the latter.
pub fn map_deviation(state: QuantumState, p: &PhysicalParams, grid: &Grid) -> Result<f64> {
    let pair = DualityPair::from_anyon(state, *p)?;
    let anyon = AnyonState::new(state.n, state.nu(), *p)?;
    let mut peak: f64 = 0.0;
    let mut worst: f64 = 0.0;
    for x in grid.points() {
        let a = anyon.wavefunction(x)?;
        let m = pair.map(x)?;
        peak = peak.max(a.abs());
        worst = worst.max((a - m).abs());
    }
    Ok(worst / peak)
}

pub fn duality(opts: &VerifyOptions) -> Vec<VerificationReport> {
    let p = PhysicalParams::anyon_units();
    let mut out = Vec::new();

    let spectral = max_of(Nu::all().into_iter().flat_map(|nu| {
        (0..=20).map(move |n| {
            let e = anyon_energy(n, nu, &p)?;
            let w = dual_frequency(n, nu, &p)?;
            Ok(((-p.mass * w * w / 8.0 - e) / e).abs())
        })
    }));
    out.push(opts.check("spectral dictionary eps = -mu omega^2/8, n <= 20", spectral, 1e-14));

    let swap = max_of((0..=20).flat_map(|n| {
        Spin::all().into_iter().map(move |spin| {
            let state = QuantumState::new(n, spin);
            let a = DualityPair::from_anyon(state, p)?;
            let b = DualityPair::from_oscillator(state, a.oscillator)?;
            Ok(((b.alpha() - a.alpha()) / a.alpha())
                .abs()
                .max(((b.epsilon - a.epsilon) / a.epsilon).abs()))
        })
    }));
    out.push(opts.check("quantization swap round trip, n <= 20", swap, 1e-14));

    let grid = Grid::positive(0.01, 15.0, 1500).expect("static grid");
    for spin in Spin::all() {
        let dev = max_of((0..=5).map(|n| map_deviation(QuantumState::new(n, spin), &p, &grid)));
        out.push(opts.check(&format!("wavefunction map, n <= 5, s = {}", spin.value()), dev, 1e-8));
    }

    let constants = max_of(
        Nu::all()
            .into_iter()
            .flat_map(|nu| (0..=20).map(move |n| Ok(constant_equality_residual(n, nu)))),
    );
    out.push(opts.check("normalization constants agree, n <= 20", constants, 1e-11));

    let chain_grid = Grid::positive(0.1, 10.0, 9901).expect("static grid");
    let chain = max_of(
        [(0, Spin::Zero), (1, Spin::Zero), (2, Spin::Half), (3, Spin::Half)].map(|(n, spin)| {
            let state = QuantumState::new(n, spin);
            let osc = DualityPair::from_anyon(state, p)?.oscillator;
            reduction_chain(n, spin, &osc, &chain_grid)?.residual()
        }),
    );
    out.push(opts.check("reduction chain satisfies anyon equation", chain, 1e-5));

    let probe = (|| {
        let osc = DualityPair::from_anyon(QuantumState::new(0, Spin::Zero), p)?.oscillator;
        let c = reduction_chain(0, Spin::Zero, &osc, &chain_grid)?;
        c.residual_at(1.01 * c.pair.epsilon)
    })();
    out.push(VerificationReport::exceeds(
        "reduction chain detects 1% energy shift",
        probe.unwrap_or(0.0),
        SENSITIVITY_THRESHOLD,
    ));
    out
}

pub fn oracle(opts: &VerifyOptions) -> Vec<VerificationReport> {
    let anyon_p = PhysicalParams::anyon_units();
    let osc_p = PhysicalParams::oscillator_units();
    let mut out = Vec::new();

    let levels: Vec<(Nu, u32)> = Nu::all()
        .into_iter()
        .flat_map(|nu| (0..=3).map(move |n| (nu, n)))
        .collect();
    let shots: Vec<Result<f64>> = levels
        .par_iter()
        .map(|&(nu, n)| {
            let e = solve_level(nu, n, &anyon_p)?.energy;
            let want = anyon_energy(n, nu, &anyon_p)?;
            Ok(((e - want) / want).abs())
        })
        .collect();
    out.push(opts.check("shooting vs analytic spectrum, n <= 3", max_of(shots), 1e-5));

    let control = (|| {
        let q = ShootingConfig::new(Nu::Quarter, &anyon_p)?.with_bracket(-20.0, -0.5);
        let t = ShootingConfig::new(Nu::ThreeQuarters, &anyon_p)?.with_bracket(-20.0, -0.5);
        let a = shoot_anyon_energy(&q, &anyon_p, 0)?.energy;
        let b = shoot_anyon_energy(&t, &anyon_p, 0)?.energy;
        Ok::<f64, Error>(((a - b) / a).abs())
    })();
    out.push(VerificationReport::exceeds(
        "boundary exponent alone changes the spectrum",
        control.unwrap_or(0.0),
        0.5,
    ));

    let fd = fd_oscillator_spectrum(&osc_p, 10.0, 2001, 5);
    out.push(opts.check(
        "finite-difference ground state",
        fd.as_ref().map(|ev| (ev[0] - 0.5).abs()).map_err(Clone::clone),
        1e-4,
    ));
    out.push(
        opts.check(
            "finite-difference level spacing, 5 levels",
            fd.as_ref()
                .map(|ev| ev.windows(2).map(|w| (w[1] - w[0] - 1.0).abs()).fold(0.0, f64::max))
                .map_err(Clone::clone),
            1e-3,
        ),
    );
    let order = (|| {
        let coarse = fd_oscillator_spectrum(&osc_p, 10.0, 1001, 1)?[0] - 0.5;
        let fine = fd_oscillator_spectrum(&osc_p, 10.0, 2001, 1)?[0] - 0.5;
        Ok::<f64, Error>(((coarse / fine).log2() - 2.0).abs())
    })();
    out.push(opts.check("finite-difference order-2 convergence", order, 0.05));

    let osc_grid = Grid::new(0.1, 6.0, 5901).expect("static grid");
    let osc_res = max_of((0..=8).map(|level| {
        let s = OscillatorState::new(QuantumState::from_level(level), osc_p)?;
        let samples = osc_grid.sample(|u| s.wavefunction(u).unwrap_or(f64::NAN));
        ode_residual(&samples, |u| s.potential(u), s.energy, &osc_p)
    }));
    out.push(opts.check("oscillator ODE residual, N <= 8", osc_res, 1e-6));

    let anyon_grid = Grid::positive(0.05, 20.0, 39_901).expect("static grid");
    let anyon_res = max_of(Nu::all().into_iter().flat_map(|nu| {
        (0..=5).map(move |n| {
            let s = AnyonState::new(n, nu, anyon_p)?;
            let samples = anyon_grid.sample(|x| s.wavefunction(x).unwrap_or(f64::NAN));
            ode_residual(&samples, |x| s.potential(x).unwrap_or(f64::NAN), s.epsilon, &anyon_p)
        })
    }));
    out.push(opts.check("anyon ODE residual, n <= 5", anyon_res, 1e-6));

    let sensitivity = (|| {
        let s = AnyonState::new(0, Nu::Quarter, anyon_p)?;
        let g = Grid::positive(0.1, 10.0, 9901)?;
        let samples = g.sample(|x| s.wavefunction(x).unwrap_or(f64::NAN));
        let a = ode_residual(
            &samples,
            |x| s.potential(x).unwrap_or(f64::NAN),
            1.01 * s.epsilon,
            &anyon_p,
        )?;
        let o = OscillatorState::new(QuantumState::from_level(0), osc_p)?;
        let samples = osc_grid.sample(|u| o.wavefunction(u).unwrap_or(f64::NAN));
        let b = ode_residual(&samples, |u| o.potential(u), 1.01 * osc_energy(0, &osc_p)?, &osc_p)?;
        Ok::<f64, Error>(a.min(b))
    })();
    out.push(VerificationReport::exceeds(
        "ODE residual detects 1% eigenvalue shift",
        sensitivity.unwrap_or(0.0),
        SENSITIVITY_THRESHOLD,
    ));
    out
}
