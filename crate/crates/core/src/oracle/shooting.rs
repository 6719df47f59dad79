//! Shooting eigensolver for the singular anyon problem
//! `Φ'' = (2mu/hbar^2)(V - eps) Φ`, `V = -alpha/x - hbar^2 nu(1-nu)/(2mu x^2)`.
//!
//! The outward solution starts on the `x^nu` branch (the only place the two
//! anyon types differ), the inward one on the decaying branch, and the
//! energy is bisected on their normalized Wronskian at the matching point.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::model::{Nu, PhysicalParams};

/// Ratio `h / x` used near the origin; the step grows geometrically with
/// `x` until it reaches the configured maximum.
const STEP_GROWTH: f64 = 0.01;

/// Renormalization threshold for the linear integrations.
const RESCALE_ABOVE: f64 = 1e150;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShootingConfig {
    pub nu: Nu,
    pub x_start: f64,
    pub x_match: f64,
    pub x_end: f64,
    /// Largest RK4 step.
    pub step: f64,
    /// `(lo, hi)` with `lo < hi < 0`.
    pub energy_bracket: (f64, f64),
    /// Relative width at which the energy bisection stops.
    pub tolerance: f64,
}

impl ShootingConfig {
    /// Defaults scaled by the Coulomb length `hbar^2/(mu alpha)` and energy
    /// `mu alpha^2/hbar^2`.
    pub fn new(nu: Nu, p: &PhysicalParams) -> Result<Self> {
        p.validate()?;
        let alpha = p.alpha()?;
        let length = p.hbar * p.hbar / (p.mass * alpha);
        let energy = p.mass * alpha * alpha / (p.hbar * p.hbar);
        Ok(Self {
            nu,
            x_start: 1e-4 * length,
            x_match: 2.0 * length,
            x_end: 400.0 * length,
            step: 5e-3 * length,
            energy_bracket: (-64.0 * energy, -1e-3 * energy),
            tolerance: 1e-12,
        })
    }

    pub fn with_bracket(mut self, lo: f64, hi: f64) -> Self {
        self.energy_bracket = (lo, hi);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.energy_bracket;
        if !(lo < hi && hi < 0.0) {
            return Err(invalid("energy_bracket", format!("need lo < hi < 0, got ({lo}, {hi})")));
        }
        if !(self.x_start > 0.0 && self.x_start < self.x_match && self.x_match < self.x_end && self.x_end.is_finite()) {
            return Err(invalid("x_start", "need 0 < x_start < x_match < x_end"));
        }
        if !(self.step > 0.0) {
            return Err(invalid("step", "must be positive"));
        }
        if !(self.tolerance > 0.0) {
            return Err(invalid("tolerance", "must be positive"));
        }
        Ok(())
    }
}

/// Converged eigenvalue with diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShootingResult {
    pub energy: f64,
    pub nodes: u32,
    /// Normalized Wronskian at the converged energy.
    pub mismatch: f64,
    pub iterations: u32,
}

struct Problem {
    nu: f64,
    /// `2 mu alpha / hbar^2`
    coulomb: f64,
    /// `nu (1 - nu)`
    centrifugal: f64,
    /// `2 mu / hbar^2`
    k: f64,
    grid: Vec<f64>,
    match_index: usize,
}

#[derive(Debug, Clone, Copy)]
struct Sweep {
    value: f64,
    slope: f64,
    nodes: u32,
}

impl Problem {
    fn new(cfg: &ShootingConfig, p: &PhysicalParams) -> Result<Self> {
        cfg.validate()?;
        p.validate()?;
        let alpha = p.alpha()?;
        let k = 2.0 * p.mass / (p.hbar * p.hbar);
        let nu = cfg.nu.value();

        let mut grid = vec![cfg.x_start];
        let mut x = cfg.x_start;
        let mut match_index = None;
        while x < cfg.x_end {
            let h = (STEP_GROWTH * x).min(cfg.step);
            x = (x + h).min(cfg.x_end);
            if match_index.is_none() && x >= cfg.x_match {
                // land exactly on the matching point
                x = cfg.x_match;
                match_index = Some(grid.len());
            }
            grid.push(x);
        }
        let match_index = match_index.ok_or_else(|| invalid("x_match", "not reached by the grid"))?;
        Ok(Self {
            nu,
            coulomb: k * alpha,
            centrifugal: nu * (1.0 - nu),
            k,
            grid,
            match_index,
        })
    }

    /// `Φ''/Φ` at `x` for energy `eps`.
    fn coefficient(&self, x: f64, eps: f64) -> f64 {
        -self.coulomb / x - self.centrifugal / (x * x) - self.k * eps
    }

    fn rk4(&self, x: f64, h: f64, eps: f64, (f, g): (f64, f64)) -> (f64, f64) {
        let c0 = self.coefficient(x, eps);
        let cm = self.coefficient(x + 0.5 * h, eps);
        let c1 = self.coefficient(x + h, eps);
        let (k1f, k1g) = (g, c0 * f);
        let (k2f, k2g) = (g + 0.5 * h * k1g, cm * (f + 0.5 * h * k1f));
        let (k3f, k3g) = (g + 0.5 * h * k2g, cm * (f + 0.5 * h * k2f));
        let (k4f, k4g) = (g + h * k3g, c1 * (f + h * k3f));
        (
            f + h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f),
            g + h / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g),
        )
    }

    /// Regular solution `x^nu (1 + c1 x + c2 x^2 + ...)` and its derivative,
    /// the Frobenius series about the origin.
    fn start_values(&self, x: f64, eps: f64) -> (f64, f64) {
        let e = self.k * eps;
        let (mut c_prev2, mut c_prev) = (0.0, 1.0);
        let mut value = 1.0;
        let mut slope = self.nu;
        let mut power = 1.0;
        for j in 1..60 {
            let jf = f64::from(j);
            let c = -(self.coulomb * c_prev + e * c_prev2) / (jf * (jf + 2.0 * self.nu - 1.0));
            power *= x;
            let term = c * power;
            value += term;
            slope += (self.nu + jf) * term;
            if term.abs() < 1e-18 * value.abs() && j > 2 {
                break;
            }
            c_prev2 = c_prev;
            c_prev = c;
        }
        let lead = x.powf(self.nu);
        (lead * value, lead * slope / x)
    }

    /// Integrates from the first grid point up to index `stop`.
    fn outward(&self, eps: f64, stop: usize) -> Sweep {
        let mut state = self.start_values(self.grid[0], eps);
        let mut nodes = 0;
        for i in 0..stop {
            let (x, h) = (self.grid[i], self.grid[i + 1] - self.grid[i]);
            let next = self.rk4(x, h, eps, state);
            if next.0 == 0.0 || next.0.signum() != state.0.signum() {
                nodes += 1;
            }
            state = rescale(next);
        }
        Sweep {
            value: state.0,
            slope: state.1,
            nodes,
        }
    }

    /// Integrates from the last grid point down to the matching index,
    /// starting on the decaying branch `x^{lambda} e^{-kappa x}`.
    fn inward(&self, eps: f64) -> Sweep {
        let kappa = (-self.k * eps).sqrt();
        let lambda = 0.5 * self.coulomb / kappa;
        let last = self.grid.len() - 1;
        let x_end = self.grid[last];
        let mut state = (1.0, lambda / x_end - kappa);
        let mut nodes = 0;
        for i in (self.match_index..last).rev() {
            let (x, h) = (self.grid[i + 1], self.grid[i] - self.grid[i + 1]);
            let next = self.rk4(x, h, eps, state);
            if next.0 == 0.0 || next.0.signum() != state.0.signum() {
                nodes += 1;
            }
            state = rescale(next);
        }
        Sweep {
            value: state.0,
            slope: state.1,
            nodes,
        }
    }

    /// Normalized Wronskian of the outward and inward solutions at the
    /// matching point, and the node count of the glued function.
    fn mismatch(&self, eps: f64) -> (f64, u32) {
        let out = self.outward(eps, self.match_index);
        let inn = self.inward(eps);
        let w = out.value * inn.slope - out.slope * inn.value;
        let norm = out.value.hypot(out.slope) * inn.value.hypot(inn.slope);
        (w / norm, out.nodes + inn.nodes)
    }

    /// Nodes of the outward solution on the whole grid: the number of
    /// Dirichlet eigenvalues below `eps`.
    fn count_below(&self, eps: f64) -> u32 {
        self.outward(eps, self.grid.len() - 1).nodes
    }
}

fn rescale((f, g): (f64, f64)) -> (f64, f64) {
    let m = f.abs().max(g.abs());
    if m > RESCALE_ABOVE {
        (f / m, g / m)
    } else {
        (f, g)
    }
}

/// Bisects the Wronskian mismatch inside `cfg.energy_bracket` and checks
/// that the converged eigenfunction has exactly `n` nodes.
pub fn shoot_anyon_energy(cfg: &ShootingConfig, p: &PhysicalParams, n: u32) -> Result<ShootingResult> {
    let prob = Problem::new(cfg, p)?;
    let (mut lo, mut hi) = cfg.energy_bracket;
    let (m_lo, _) = prob.mismatch(lo);
    let (m_hi, _) = prob.mismatch(hi);
    if m_lo == 0.0 || m_hi == 0.0 || m_lo.signum() == m_hi.signum() {
        return Err(Error::BracketNoSignChange { lo, hi });
    }
    let lo_sign = m_lo.signum();
    let mut iterations = 0;
    while hi - lo > cfg.tolerance * lo.abs().min(hi.abs()) && iterations < 200 {
        let mid = 0.5 * (lo + hi);
        let (m, _) = prob.mismatch(mid);
        if m.signum() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let energy = 0.5 * (lo + hi);
    let (mismatch, nodes) = prob.mismatch(energy);
    if nodes != n {
        return Err(Error::NodeCount {
            expected: n,
            found: nodes,
        });
    }
    Ok(ShootingResult {
        energy,
        nodes,
        mismatch,
        iterations,
    })
}

/// Narrows `cfg.energy_bracket` by node counting until it holds exactly
/// one eigenvalue, the `n`-th.
pub fn isolate_level(cfg: &ShootingConfig, p: &PhysicalParams, n: u32) -> Result<(f64, f64)> {
    let prob = Problem::new(cfg, p)?;
    let (mut lo, mut hi) = cfg.energy_bracket;
    let mut c_lo = prob.count_below(lo);
    let mut c_hi = prob.count_below(hi);
    if c_lo > n || c_hi <= n {
        return Err(Error::Solver(format!(
            "bracket ({lo}, {hi}) holds levels {c_lo}..{c_hi}, not level {n}"
        )));
    }
    for _ in 0..200 {
        if c_lo == n && c_hi == n + 1 {
            return Ok((lo, hi));
        }
        // energies span decades; bisect geometrically
        let mid = -(lo * hi).sqrt();
        let c = prob.count_below(mid);
        if c <= n {
            lo = mid;
            c_lo = c;
        } else {
            hi = mid;
            c_hi = c;
        }
    }
    Err(Error::Solver(format!("could not isolate level {n}")))
}

/// Default configuration, bracket isolation, then shooting.
pub fn solve_level(nu: Nu, n: u32, p: &PhysicalParams) -> Result<ShootingResult> {
    let cfg = ShootingConfig::new(nu, p)?;
    let (lo, hi) = isolate_level(&cfg, p, n)?;
    shoot_anyon_energy(&cfg.with_bracket(lo, hi), p, n)
}
