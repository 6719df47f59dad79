mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyon_duality::anyon::{anyon_energy, normalization_constant, AnyonState};
use anyon_duality::duality::{dual_constant, dual_frequency, DualityPair};
use anyon_duality::oscillator::{osc_energy, OscillatorState};
use anyon_duality::verify::{run_suite, Suite, VerifyOptions};
use anyon_duality::{Bound, Error, Grid, Nu, PhysicalParams, QuantumState, Spin};
use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{emit, render, Format, Meta, Table};

const TOL_ENV: &str = "ANYON_DEFAULT_TOL";

#[derive(Parser, Debug)]
#[command(
    name = "anyon",
    version,
    about = "Oscillator / Coulomb anyon duality: spectra, eigenfunctions, checks"
)]
struct Cli {
    #[command(flatten)]
    phys: Physical,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Tolerance applied to every check; overrides ANYON_DEFAULT_TOL.
    #[arg(long, global = true, value_parser = positive)]
    tol: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Physical {
    #[arg(long, global = true, default_value_t = 1.0, value_parser = positive)]
    mu: f64,
    #[arg(long, global = true, default_value_t = 1.0, value_parser = positive)]
    hbar: f64,
    /// Coulomb coupling (anyon side). Default 1.
    #[arg(long, global = true, value_parser = positive)]
    alpha: Option<f64>,
    /// Frequency (oscillator side). Default 1.
    #[arg(long, global = true, value_parser = positive)]
    omega: Option<f64>,
}

#[derive(Args, Debug, Clone, Copy)]
struct StateArgs {
    /// Anyon exponent: 1/4 or 3/4.
    #[arg(long, value_parser = parse_nu, conflicts_with = "s")]
    nu: Option<Nu>,
    /// Oscillator parity label: 0 or 1/2.
    #[arg(long, value_parser = parse_spin)]
    s: Option<Spin>,
}

impl StateArgs {
    fn spin(&self) -> Option<Spin> {
        self.nu.map(Nu::spin).or(self.s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum System {
    Anyon,
    Oscillator,
}

impl System {
    fn name(self) -> &'static str {
        match self {
            System::Anyon => "anyon",
            System::Oscillator => "oscillator",
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tabulate analytic energies with their dual parameters.
    Spectrum {
        #[arg(long, value_enum)]
        system: System,
        #[arg(long, default_value_t = 5)]
        n_max: u32,
        #[command(flatten)]
        state: StateArgs,
    },
    /// Sample one eigenfunction on a uniform grid.
    Wavefunction {
        #[arg(long, value_enum)]
        system: System,
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[command(flatten)]
        state: StateArgs,
        /// Oscillator level N = 2n + 2s, instead of --n/--s.
        #[arg(long, conflicts_with_all = ["n", "nu", "s"])]
        level: Option<u32>,
        #[arg(long, allow_negative_numbers = true)]
        x_min: Option<f64>,
        #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
        x_max: f64,
        #[arg(long, default_value_t = 1000)]
        points: usize,
        /// Parity-extended anyon eigenfunction on the whole y axis.
        #[arg(long)]
        extended: bool,
    },
    /// Dual parameters and normalization constants for a level.
    Dual {
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[command(flatten)]
        state: StateArgs,
        /// Tabulate n = 0..=n-max instead of a single level.
        #[arg(long)]
        n_max: Option<u32>,
    },
    /// Run a named check suite.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
    },
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(v) => Err(format!("must be positive and finite, got {v}")),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_nu(s: &str) -> Result<Nu, String> {
    s.parse::<Nu>().map_err(|e| e.to_string())
}

fn parse_spin(s: &str) -> Result<Spin, String> {
    match s.trim() {
        "0" | "0.0" => Ok(Spin::Zero),
        "1/2" | "0.5" | ".5" => Ok(Spin::Half),
        other => Err(format!("s must be 0 or 1/2, got {other}")),
    }
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>()
        .map_err(|_| format!("unknown suite `{s}`; expected identities, normalization, duality, oracle or all"))
}

/// Failure of a run, carrying its exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParam { .. }
            | Error::InvalidSpin(_)
            | Error::InvalidNu(_)
            | Error::Domain { .. }
            | Error::Grid(_)
            | Error::FrequencyMismatch { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn tolerance(flag: Option<f64>) -> Result<Option<f64>, Failure> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var(TOL_ENV) {
        Ok(v) => positive(&v).map(Some).map_err(|e| usage(format!("{TOL_ENV}: {e}"))),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(usage(format!("{TOL_ENV}: {e}"))),
    }
}

/// Provenance block shared by every command; unset flags are null.
fn base_meta(cli: &Cli, tol: Option<f64>) -> Meta {
    let mut m = Meta::default();
    m.push("tool", "anyon");
    m.push("version", env!("CARGO_PKG_VERSION"));
    let (command, system, n, state, n_max, level) = match &cli.command {
        Command::Spectrum { system, n_max, state } => {
            ("spectrum", Some(system.name()), None, Some(*state), Some(*n_max), None)
        }
        Command::Wavefunction {
            system,
            n,
            state,
            level,
            ..
        } => (
            "wavefunction",
            Some(system.name()),
            Some(*n),
            Some(*state),
            None,
            *level,
        ),
        Command::Dual { n, state, n_max } => ("dual", None, Some(*n), Some(*state), *n_max, None),
        Command::Verify { .. } => ("verify", None, None, None, None, None),
    };
    m.push("command", command);
    m.opt("system", system);
    m.push("mu", cli.phys.mu);
    m.push("hbar", cli.phys.hbar);
    m.opt("alpha", cli.phys.alpha);
    m.opt("omega", cli.phys.omega);
    m.opt("n", n);
    m.opt("level", level);
    let spin = state.and_then(|s| s.spin());
    m.opt("s", spin.map(Spin::value));
    m.opt("nu", spin.map(|s| s.nu().to_string()));
    m.opt("n_max", n_max);
    match &cli.command {
        Command::Wavefunction {
            x_min,
            x_max,
            points,
            extended,
            ..
        } => {
            m.opt("x_min", *x_min);
            m.push("x_max", *x_max);
            m.push("points", *points);
            m.push("extended", *extended);
        }
        _ => {
            m.opt::<f64>("x_min", None);
            m.opt::<f64>("x_max", None);
            m.opt::<u64>("points", None);
            m.opt::<bool>("extended", None);
        }
    }
    let suite = match &cli.command {
        Command::Verify { suite } => Some(suite.name()),
        _ => None,
    };
    m.opt("suite", suite);
    m.opt("tol", tol);
    m.push(
        "format",
        match cli.format {
            Format::Json => "json",
            Format::Csv => "csv",
        },
    );
    m
}

fn anyon_params(phys: &Physical) -> Result<PhysicalParams, Failure> {
    if phys.omega.is_some() {
        return Err(usage(
            "--omega belongs to the oscillator side; use --alpha for the anyon",
        ));
    }
    Ok(PhysicalParams::anyon(phys.mu, phys.hbar, phys.alpha.unwrap_or(1.0))?)
}

fn oscillator_params(phys: &Physical) -> Result<PhysicalParams, Failure> {
    if phys.alpha.is_some() {
        return Err(usage(
            "--alpha belongs to the anyon side; use --omega for the oscillator",
        ));
    }
    Ok(PhysicalParams::oscillator(
        phys.mu,
        phys.hbar,
        phys.omega.unwrap_or(1.0),
    )?)
}

fn spectrum(phys: &Physical, system: System, n_max: u32, state: StateArgs) -> Result<Table, Failure> {
    match system {
        System::Anyon => {
            let p = anyon_params(phys)?;
            let nu = state.spin().unwrap_or(Spin::Zero).nu();
            let mut t = Table::new(&["n", "nu", "epsilon", "dual_omega"]);
            for n in 0..=n_max {
                t.push(vec![
                    n.into(),
                    nu.to_string().into(),
                    anyon_energy(n, nu, &p)?.into(),
                    dual_frequency(n, nu, &p)?.into(),
                ]);
            }
            Ok(t)
        }
        System::Oscillator => {
            let p = oscillator_params(phys)?;
            let levels: Vec<QuantumState> = match state.spin() {
                Some(spin) => (0..=n_max).map(|n| QuantumState::new(n, spin)).collect(),
                None => (0..=n_max).map(QuantumState::from_level).collect(),
            };
            let omega = p.omega()?;
            let mut t = Table::new(&["level", "n", "s", "energy", "dual_alpha", "dual_epsilon"]);
            for q in levels {
                let e = osc_energy(q.level(), &p)?;
                t.push(vec![
                    q.level().into(),
                    q.n.into(),
                    q.s().into(),
                    e.into(),
                    (e / 4.0).into(),
                    (-p.mass * omega * omega / 8.0).into(),
                ]);
            }
            Ok(t)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn wavefunction(
    phys: &Physical,
    system: System,
    n: u32,
    state: StateArgs,
    level: Option<u32>,
    x_min: Option<f64>,
    x_max: f64,
    points: usize,
    extended: bool,
) -> Result<Table, Failure> {
    match system {
        System::Anyon => {
            if level.is_some() {
                return Err(usage(
                    "--level applies to the oscillator; use --n and --nu for the anyon",
                ));
            }
            let p = anyon_params(phys)?;
            let nu = state.spin().unwrap_or(Spin::Zero).nu();
            let s = AnyonState::new(n, nu, p)?;
            if extended {
                let grid = Grid::new(x_min.unwrap_or(-x_max), x_max, points)?;
                if grid.points().any(|y| y == 0.0) {
                    return Err(usage("extended grid contains y = 0"));
                }
                let mut t = Table::new(&["y", "re", "im"]);
                for y in grid.points() {
                    let v = s.extended_wavefunction(y)?;
                    t.push(vec![y.into(), v.re.into(), v.im.into()]);
                }
                return Ok(t);
            }
            let lo = x_min.unwrap_or(0.01);
            if lo <= 0.0 {
                return Err(usage(format!("anyon grid must stay in x > 0, got x-min = {lo}")));
            }
            let grid = Grid::positive(lo, x_max, points)?;
            let mut t = Table::new(&["x", "phi", "underflow"]);
            for x in grid.points() {
                let v = s.wavefunction_flagged(x)?;
                t.push(vec![x.into(), v.value.into(), v.underflow.into()]);
            }
            Ok(t)
        }
        System::Oscillator => {
            if extended {
                return Err(usage("--extended applies to the anyon only"));
            }
            let p = oscillator_params(phys)?;
            let q = match level {
                Some(l) => QuantumState::from_level(l),
                None => QuantumState::new(n, state.spin().unwrap_or(Spin::Zero)),
            };
            let lo = x_min.unwrap_or(0.0);
            if lo < 0.0 {
                return Err(usage(format!(
                    "oscillator grid is the half line u >= 0, got x-min = {lo}"
                )));
            }
            let grid = Grid::new(lo, x_max, points)?;
            let s = OscillatorState::new(q, p)?;
            let mut t = Table::new(&["u", "psi"]);
            for u in grid.points() {
                t.push(vec![u.into(), s.wavefunction(u)?.into()]);
            }
            Ok(t)
        }
    }
}

fn dual(phys: &Physical, n: u32, state: StateArgs, n_max: Option<u32>) -> Result<Table, Failure> {
    if phys.alpha.is_some() && phys.omega.is_some() {
        return Err(usage(
            "give either --alpha (fix the anyon) or --omega (fix the oscillator), not both",
        ));
    }
    let spin = state.spin().unwrap_or(Spin::Zero);
    let range = match n_max {
        Some(m) => 0..=m,
        None => n..=n,
    };
    let mut t = Table::new(&[
        "n",
        "s",
        "nu",
        "level",
        "alpha",
        "epsilon",
        "omega",
        "energy",
        "norm",
        "dual_norm",
        "norm_rel_diff",
    ]);
    for k in range {
        let q = QuantumState::new(k, spin);
        let pair = match phys.omega {
            Some(w) => DualityPair::from_oscillator(q, PhysicalParams::oscillator(phys.mu, phys.hbar, w)?)?,
            None => DualityPair::from_anyon(q, PhysicalParams::anyon(phys.mu, phys.hbar, phys.alpha.unwrap_or(1.0))?)?,
        };
        let c = normalization_constant(k, q.nu(), &pair.anyon)?;
        let c_dual = dual_constant(k, q.nu(), &pair.anyon)?;
        t.push(vec![
            k.into(),
            q.s().into(),
            q.nu().to_string().into(),
            q.level().into(),
            pair.alpha().into(),
            pair.epsilon.into(),
            pair.omega().into(),
            pair.energy.into(),
            c.into(),
            c_dual.into(),
            ((c_dual - c) / c).abs().into(),
        ]);
    }
    Ok(t)
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    let tol = tolerance(cli.tol)?;
    let meta = base_meta(cli, tol);
    let (table, passed) = match &cli.command {
        Command::Spectrum { system, n_max, state } => (spectrum(&cli.phys, *system, *n_max, *state)?, true),
        Command::Wavefunction {
            system,
            n,
            state,
            level,
            x_min,
            x_max,
            points,
            extended,
        } => (
            wavefunction(
                &cli.phys, *system, *n, *state, *level, *x_min, *x_max, *points, *extended,
            )?,
            true,
        ),
        Command::Dual { n, state, n_max } => (dual(&cli.phys, *n, *state, *n_max)?, true),
        Command::Verify { suite } => {
            let reports = run_suite(
                *suite,
                &VerifyOptions {
                    tolerance_override: tol,
                },
            );
            for r in &reports {
                println!("{r}");
            }
            let mut t = Table::new(&["check", "residual", "tolerance", "bound", "passed"]);
            for r in &reports {
                t.push(vec![
                    r.check_name.clone().into(),
                    r.residual.into(),
                    r.tolerance.into(),
                    match r.bound {
                        Bound::Upper => "upper",
                        Bound::Lower => "lower",
                    }
                    .into(),
                    r.passed.into(),
                ]);
            }
            let all = reports.iter().all(|r| r.passed);
            let path = cli.output.clone().unwrap_or_else(|| {
                let ext = match cli.format {
                    Format::Json => "json",
                    Format::Csv => "csv",
                };
                PathBuf::from(format!("anyon-verify-{}.{ext}", suite.name()))
            });
            let text = render(&meta, &t, cli.format);
            std::fs::write(&path, text).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?;
            let failed = reports.iter().filter(|r| !r.passed).count();
            println!(
                "{} checks, {failed} failed; report written to {}",
                reports.len(),
                path.display()
            );
            return Ok(all);
        }
    };
    let text = render(&meta, &table, cli.format);
    emit(&text, cli.output.as_deref()).map_err(|e| Failure::Runtime(e.to_string()))?;
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
