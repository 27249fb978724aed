//! Command-line front end: density tables, simulations, particle densities
//! and the verification suite.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use hpk::maass::{hp_charfn, HeatKernelDensity};
use hpk::particles::{particles_density_spectral, KmKernel, ParticleParams, ParticleState};
use hpk::quad::QuadConfig;
use hpk::spectral::SpectralScheme;
use hpk::stochastic::{simulate_particles_many, McConfig, SampleSet};
use hpk::verify::{run_suite, CriterionOutcome, Suite, VerificationReport};
use hpk::HpParams;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numeric(#[from] hpk::Error),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Parser)]
#[command(name = "hpk", version, about = "Transition densities of the hyperbolic Pearson diffusion")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Transition density u -> p_t(x0, u) on a grid
    Density(DensityArgs),
    /// Characteristic function lambda -> E[exp(i lambda U_t)]
    Charfn(CharfnArgs),
    /// Monte Carlo endpoints of the diffusion or of the particle system
    Simulate(SimulateArgs),
    /// Transition density of the non-colliding particle system
    ParticlesDensity(ParticlesDensityArgs),
    /// Run numbered verification checks
    Verify(VerifyArgs),
}

/// Diffusion parameters: one of (A, K), (alpha [, K]) or (mu, nu).
#[derive(Debug, Args, Clone, Default)]
struct Coords {
    #[arg(long = "A", allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long = "K", allow_hyphen_values = true)]
    k: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<f64>,
}

impl Coords {
    fn resolve(&self) -> CliResult<HpParams> {
        match (self.a, self.k, self.alpha, self.mu, self.nu) {
            (Some(a), k, None, None, None) => Ok(HpParams::from_ak(a, k.unwrap_or(0.0))),
            (None, k, Some(alpha), None, None) => Ok(HpParams::from_alpha(alpha, k.unwrap_or(0.0))),
            (None, None, None, mu, nu) if mu.is_some() || nu.is_some() => {
                Ok(HpParams::from_mu_nu(mu.unwrap_or(0.0), nu.unwrap_or(0.0)))
            }
            (None, Some(_), None, None, None) => Err(usage("--K needs --A or --alpha")),
            (None, None, None, None, None) => Err(usage("give one of --A/--K, --alpha [--K] or --mu/--nu")),
            _ => Err(usage("parameter coordinates may not be mixed")),
        }
    }
}

/// Inclusive grid `lo:hi:n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

impl Grid {
    pub fn points(&self) -> Vec<f64> {
        if self.n == 1 {
            return vec![self.lo];
        }
        let h = (self.hi - self.lo) / (self.n - 1) as f64;
        (0..self.n).map(|i| self.lo + h * i as f64).collect()
    }
}

impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, n] = parts[..] else {
            return Err(format!("grid '{s}' is not lo:hi:n"));
        };
        let lo: f64 = lo.parse().map_err(|e| format!("grid lower bound: {e}"))?;
        let hi: f64 = hi.parse().map_err(|e| format!("grid upper bound: {e}"))?;
        let n: usize = n.parse().map_err(|e| format!("grid size: {e}"))?;
        if n == 0 || !lo.is_finite() || !hi.is_finite() || hi < lo {
            return Err(format!("grid '{s}' is empty or unordered"));
        }
        Ok(Grid { lo, hi, n })
    }
}

/// Comma-separated list of positions.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatList(pub Vec<f64>);

impl FromStr for FloatList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',')
            .map(|v| v.trim().parse::<f64>().map_err(|e| format!("'{v}': {e}")))
            .collect::<Result<_, _>>()
            .map(FloatList)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DensityMethod {
    Spectral,
    Integral,
    IntegralAlt,
}

#[derive(Debug, Args)]
struct DensityArgs {
    #[arg(long, value_enum, default_value = "integral")]
    method: DensityMethod,
    #[command(flatten)]
    coords: Coords,
    #[arg(long, allow_hyphen_values = true)]
    t: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    x0: f64,
    #[arg(long, default_value = "-4:4:81", allow_hyphen_values = true)]
    grid: Grid,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CharfnArgs {
    #[command(flatten)]
    coords: Coords,
    #[arg(long, allow_hyphen_values = true)]
    t: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    x0: f64,
    #[arg(long = "lambda-grid", default_value = "0.5:2:4", allow_hyphen_values = true)]
    lambda_grid: Grid,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SimulateArgs {
    #[command(flatten)]
    coords: Coords,
    #[arg(long, allow_hyphen_values = true)]
    t: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    x0: f64,
    #[arg(long, default_value_t = 10_000)]
    paths: usize,
    #[arg(long, default_value_t = 2000)]
    steps: usize,
    #[arg(long, default_value_t = 20_240_601)]
    seed: u64,
    /// Simulate N particles instead of one diffusion
    #[arg(long)]
    particles: Option<usize>,
    #[arg(long = "s-re", default_value_t = 0.0, allow_hyphen_values = true)]
    s_re: f64,
    #[arg(long = "s-im", default_value_t = 0.0, allow_hyphen_values = true)]
    s_im: f64,
    /// Ordered starting positions of the particles
    #[arg(long, allow_hyphen_values = true)]
    x: Option<FloatList>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParticleMethod {
    Km,
    Spectral,
}

#[derive(Debug, Args)]
struct ParticlesDensityArgs {
    #[arg(long = "N")]
    n: usize,
    #[arg(long = "s-re", default_value_t = 0.0, allow_hyphen_values = true)]
    s_re: f64,
    #[arg(long = "s-im", default_value_t = 0.0, allow_hyphen_values = true)]
    s_im: f64,
    #[arg(long, allow_hyphen_values = true)]
    t: f64,
    #[arg(long, allow_hyphen_values = true)]
    x: FloatList,
    #[arg(long, allow_hyphen_values = true)]
    y: FloatList,
    #[arg(long, value_enum, default_value = "km")]
    method: ParticleMethod,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: Suite,
    #[arg(long)]
    json: bool,
}

/// Parses `argv` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    configure_threads();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("hpk: {e}");
            exit_code(&e)
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("HPK_THREADS").ok().and_then(|s| s.parse::<usize>().ok()).filter(|&n| n > 0) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn dispatch(cmd: Command) -> CliResult<i32> {
    let done = |r: CliResult<()>| r.map(|()| EXIT_OK);
    match cmd {
        Command::Density(a) => done(density(a)),
        Command::Charfn(a) => done(charfn(a)),
        Command::Simulate(a) => done(simulate(a)),
        Command::ParticlesDensity(a) => done(particles_density(a)),
        Command::Verify(a) => verify(a),
    }
}

fn exit_code(e: &CliError) -> i32 {
    match e {
        CliError::Usage(_) | CliError::Numeric(hpk::Error::Domain(_)) => EXIT_USAGE,
        _ => EXIT_FAILED,
    }
}

fn check_time(t: f64) -> CliResult<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(usage("--t must be positive"))
    }
}

fn sink(out: &Option<PathBuf>) -> CliResult<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Scientific notation with 17 significant digits, enough to round-trip.
pub fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

fn write_rows(out: &Option<PathBuf>, header: &str, rows: &[Vec<f64>]) -> CliResult<()> {
    let mut w = sink(out)?;
    writeln!(w, "{header}")?;
    for row in rows {
        let line: Vec<String> = row.iter().map(|&v| fmt17(v)).collect();
        writeln!(w, "{}", line.join(","))?;
    }
    w.flush()?;
    Ok(())
}

fn density(a: DensityArgs) -> CliResult<()> {
    check_time(a.t)?;
    let params = a.coords.resolve()?;
    let cfg = QuadConfig::default();
    let grid = a.grid.points();
    let values: Vec<f64> = match a.method {
        DensityMethod::Spectral => {
            if params.k() != 0.0 {
                return Err(usage("the spectral method needs K = 0"));
            }
            let scheme = SpectralScheme::build(params.alpha(), a.t, &cfg)?;
            let row = scheme.row(a.x0)?;
            grid.par_iter().map(|&u| row.density(u)).collect::<hpk::Result<_>>()?
        }
        DensityMethod::Integral | DensityMethod::IntegralAlt => {
            let alt = a.method == DensityMethod::IntegralAlt;
            let d = HeatKernelDensity::new(params, 2.0 * a.t, &cfg)?;
            grid.par_iter()
                .map(|&u| if alt { d.density_alt(a.x0, u) } else { d.density(a.x0, u) })
                .collect::<hpk::Result<_>>()?
        }
    };
    let rows: Vec<Vec<f64>> = grid.iter().zip(&values).map(|(&u, &p)| vec![u, p]).collect();
    write_rows(&a.out, "u,density", &rows)
}

fn charfn(a: CharfnArgs) -> CliResult<()> {
    check_time(a.t)?;
    let params = a.coords.resolve()?;
    let cfg = QuadConfig::default();
    let lambdas = a.lambda_grid.points();
    let values: Vec<_> = lambdas
        .par_iter()
        .map(|&l| hp_charfn(params, 2.0 * a.t, a.x0, l, &cfg))
        .collect::<hpk::Result<_>>()?;
    let rows: Vec<Vec<f64>> = lambdas.iter().zip(&values).map(|(&l, c)| vec![l, c.re, c.im]).collect();
    write_rows(&a.out, "lambda,re,im", &rows)
}

fn simulate(a: SimulateArgs) -> CliResult<()> {
    check_time(a.t)?;
    if a.paths == 0 || a.steps == 0 {
        return Err(usage("--paths and --steps must be positive"));
    }
    let mc = McConfig::new(a.paths, a.steps, a.seed);
    match a.particles {
        None => {
            let params = a.coords.resolve()?;
            let set = SampleSet::hp_endpoints(params, a.x0.asinh(), 2.0 * a.t, mc);
            let rows: Vec<Vec<f64>> = set.values.iter().map(|&u| vec![u]).collect();
            write_rows(&a.out, "u", &rows)
        }
        Some(n) => {
            let pp = ParticleParams::new(a.s_re, a.s_im, n)?;
            let x = match a.x {
                Some(FloatList(x)) if x.len() == n => x,
                Some(_) => return Err(usage("--x must list one start per particle")),
                None => (0..n).map(|j| (n - 1) as f64 / 2.0 - j as f64).collect(),
            };
            let x = ParticleState::new(x)?;
            let ends = simulate_particles_many(&pp, &x, a.t, &mc)?;
            let rows: Vec<Vec<f64>> = ends.into_iter().map(ParticleState::into_vec).collect();
            let header: Vec<String> = (1..=n).map(|j| format!("y{j}")).collect();
            write_rows(&a.out, &header.join(","), &rows)
        }
    }
}

fn particles_density(a: ParticlesDensityArgs) -> CliResult<()> {
    check_time(a.t)?;
    if a.x.0.len() != a.n || a.y.0.len() != a.n {
        return Err(usage("--x and --y must each list N positions"));
    }
    let pp = ParticleParams::new(a.s_re, a.s_im, a.n)?;
    let x = ParticleState::new(a.x.0)?;
    let y = ParticleState::new(a.y.0)?;
    let cfg = QuadConfig::default();
    let p = match a.method {
        ParticleMethod::Km => KmKernel::new(pp, a.t, &cfg)?.density(&x, &y)?,
        ParticleMethod::Spectral => particles_density_spectral(pp, a.t, &x, &y, &cfg)?.det_form,
    };
    let header: Vec<String> = (1..=a.n).map(|j| format!("y{j}")).chain(["density".into()]).collect();
    let mut row = y.into_vec();
    row.push(p);
    write_rows(&a.out, &header.join(","), &[row])
}

#[derive(Debug, Serialize)]
struct JsonRecord<'a> {
    name: &'a str,
    anchor: &'a str,
    residual: f64,
    tol: f64,
    pass: bool,
    runtime_ms: f64,
}

#[derive(Debug, Serialize)]
struct JsonCriterion<'a> {
    id: u8,
    title: &'a str,
    pass: bool,
    notes: &'a [String],
}

#[derive(Debug, Serialize)]
struct JsonReport<'a> {
    suite: String,
    pass: bool,
    records: Vec<JsonRecord<'a>>,
    criteria: Vec<JsonCriterion<'a>>,
}

fn verify(a: VerifyArgs) -> CliResult<i32> {
    let outcomes: Vec<CriterionOutcome> = run_suite(a.suite);
    let report = VerificationReport::from_outcomes(&outcomes);
    let mut out = io::stdout().lock();
    if a.json {
        let json = JsonReport {
            suite: a.suite.to_string(),
            pass: report.pass,
            records: report
                .records
                .iter()
                .map(|r| JsonRecord {
                    name: &r.name,
                    anchor: r.anchor,
                    residual: r.residual,
                    tol: r.tol,
                    pass: r.pass,
                    runtime_ms: r.runtime_ms,
                })
                .collect(),
            criteria: outcomes
                .iter()
                .map(|o| JsonCriterion { id: o.id, title: o.title, pass: o.pass(), notes: &o.notes })
                .collect(),
        };
        serde_json::to_writer_pretty(&mut out, &json).map_err(io::Error::from)?;
        writeln!(out)?;
    } else {
        for o in &outcomes {
            writeln!(out, "{}", o.summary_line())?;
        }
        writeln!(out, "overall: {}", if report.pass { "PASS" } else { "FAIL" })?;
    }
    Ok(if report.pass { EXIT_OK } else { EXIT_FAILED })
}
