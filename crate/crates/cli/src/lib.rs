//! Command-line front end of `susy-fisheye`.
//!
//! [`Cli`] is the clap definition; [`run`] executes one command and returns the
//! rendered artifact together with the verification outcome, so the binary
//! only has to write it out and pick the exit code.

mod svg;
mod table;

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use susy_fisheye::fisheye::{self, figure_table, find_inflection, index_iso, index_maxwell, relative_ratio, IndexMode};
use susy_fisheye::fullline::{rescale_radius, rm_family_argmin, rm_family_shift, RmProblem, Variant};
use susy_fisheye::model::{potential_v, radial_wavefunction, superpotential_w, u_minus, u_plus};
use susy_fisheye::profile::linspace;
use susy_fisheye::verify::{self, Suite};
use susy_fisheye::{DoParams, IsoFamily};

pub use table::Table;

/// Exit status for a failed verification.
pub const EXIT_VERIFY_FAILED: i32 = 1;
/// Exit status for invalid arguments or parameters outside a model's domain.
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "susy-fisheye",
    version,
    about = "Supersymmetric isospectral families of the Demkov-Ostrovsky zero-energy problem"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate V, U-, U+, the particular superpotential W and the radial function u.
    Potential(PotentialArgs),
    /// Maxwell and deformed fish-eye refractive indices (kappa = 1).
    Index(IndexArgs),
    /// The strictly isospectral family: I0, general V and W, U_bos and f_bos.
    Family(FamilyArgs),
    /// Rosen-Morse spectra and family scans on the full line after x = ln(rho).
    Langer(LangerArgs),
    /// The four figure curves n_M, n_iso, ratio - 1 and f_bos^2 as CSV, JSON or a 2x2 SVG panel.
    Figure(FigureArgs),
    /// Run the invariant suites; exits 1 if any check fails.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    /// Shape exponent kappa of the focusing potential (1 = fish-eye, 0.5 = aufbau).
    #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
    pub kappa: f64,
    /// Orbital quantum number l.
    #[arg(long, default_value_t = 1)]
    pub l: u32,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    /// Smallest rho = r/R on the sampling grid.
    #[arg(long, allow_negative_numbers = true, default_value_t = fisheye::FIGURE_RHO_MIN)]
    pub rho_min: f64,
    /// Largest rho on the sampling grid.
    #[arg(long, allow_negative_numbers = true, default_value_t = fisheye::FIGURE_RHO_MAX)]
    pub rho_max: f64,
    /// Number of equally spaced samples (at least 2).
    #[arg(long, default_value_t = fisheye::FIGURE_SAMPLES)]
    pub samples: usize,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct PotentialArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Total quantum number N of the quantized coupling; defaults to the nodeless value 1 + l/kappa.
    #[arg(long, allow_negative_numbers = true)]
    pub n: Option<f64>,
    /// Lens radius R; adds a column r = R rho.
    #[arg(long, allow_negative_numbers = true)]
    pub radius: Option<f64>,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct IndexArgs {
    /// Orbital quantum number l.
    #[arg(long, default_value_t = 1)]
    pub l: u32,
    /// Family parameter lambda (> 0); large values recover the Maxwell lens.
    #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
    pub lambda: f64,
    /// Use the exact index sqrt(-V) instead of the first-order ratio form.
    #[arg(long)]
    pub exact_index: bool,
    /// Lens radius R; adds a column r = R rho.
    #[arg(long, allow_negative_numbers = true)]
    pub radius: Option<f64>,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Family parameter lambda (> 0).
    #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
    pub lambda: f64,
    /// Lens radius R; adds a column r = R rho.
    #[arg(long, allow_negative_numbers = true)]
    pub radius: Option<f64>,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WellVariant {
    /// -m(m+1) sech^2(x), m = [n_b].
    Fisheye,
    /// -N(N+1) / (4 cosh^2(x/2)), N = 2l + 1.
    Aufbau,
}

#[derive(Debug, Clone, Args)]
pub struct LangerArgs {
    /// Which full-line well to solve.
    #[arg(long, value_enum, default_value_t = WellVariant::Fisheye)]
    pub variant: WellVariant,
    /// Integer part [n_b] of the fish-eye well depth; defaults to l + 1.
    #[arg(long)]
    pub nb: Option<u32>,
    /// Orbital quantum number l (sets the aufbau N = 2l + 1, and n_b when --nb is absent).
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    /// Parameter of the translated one-state family (> 0, or < -1 as a limit study).
    #[arg(long, allow_negative_numbers = true)]
    pub lambda0: Option<f64>,
    /// Half-line radius R to rescale with lambda0.
    #[arg(long, allow_negative_numbers = true)]
    pub radius: Option<f64>,
    /// Samples of the potential scan on x in [-12, 12] (CSV output).
    #[arg(long, default_value_t = 241)]
    pub samples: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct FigureArgs {
    /// Orbital quantum number l.
    #[arg(long, default_value_t = 1)]
    pub l: u32,
    /// Family parameter lambda (> 0).
    #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
    pub lambda: f64,
    /// Use the exact index sqrt(-V) instead of the first-order ratio form.
    #[arg(long)]
    pub exact_index: bool,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Suite to run: specfun, do-core, isospectral, fisheye, fullline, numerics or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Multiplier applied to every residual tolerance.
    #[arg(long, allow_negative_numbers = true, env = "SUSY_FISHEYE_TOL", default_value_t = 1.0)]
    pub tol_scale: f64,
    /// Output format: plain lines by default, or json.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Why a command did not produce its artifact.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Config(String),
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Runtime(_) => EXIT_VERIFY_FAILED,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) | CliError::Runtime(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<susy_fisheye::Error> for CliError {
    fn from(e: susy_fisheye::Error) -> Self {
        use susy_fisheye::Error::*;
        match e {
            Domain(_) | InvalidGrid(_) | GridTooCoarse { .. } => CliError::Config(e.to_string()),
            _ => CliError::Runtime(e.to_string()),
        }
    }
}

fn config<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Config(msg.into()))
}

/// The rendered artifact of one command.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub output: Option<PathBuf>,
    /// False when a verification check failed.
    pub passed: bool,
}

impl Outcome {
    fn ok(text: String, output: Option<PathBuf>) -> Self {
        Self {
            text,
            output,
            passed: true,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            EXIT_VERIFY_FAILED
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Potential(a) => potential(a),
        Command::Index(a) => index(a),
        Command::Family(a) => family(a),
        Command::Langer(a) => langer(a),
        Command::Figure(a) => figure(a),
        Command::Verify(a) => run_verify(a),
    }
}

fn tabular_format(out: &OutputArgs, command: &str) -> Result<Format, CliError> {
    match out.format.unwrap_or(Format::Csv) {
        Format::Svg => config(format!("svg output is only available for figure, not {command}")),
        f => Ok(f),
    }
}

fn grid(g: &GridArgs) -> Result<Vec<f64>, CliError> {
    if g.samples < 2 {
        return config(format!("--samples must be at least 2, got {}", g.samples));
    }
    if !(g.rho_min.is_finite() && g.rho_max.is_finite() && g.rho_min < g.rho_max) {
        return config(format!("--rho-min must be below --rho-max, got [{}, {}]", g.rho_min, g.rho_max));
    }
    if g.rho_min <= 0.0 {
        return config(format!("--rho-min must be positive, got {}", g.rho_min));
    }
    Ok(linspace(g.rho_min, g.rho_max, g.samples))
}

fn check_radius(radius: Option<f64>) -> Result<(), CliError> {
    match radius {
        Some(r) if !(r > 0.0 && r.is_finite()) => config(format!("--radius must be positive and finite, got {r}")),
        _ => Ok(()),
    }
}

fn with_radius(mut table: Table, radius: Option<f64>) -> Table {
    if let Some(r) = radius {
        let scaled: Vec<f64> = table.column(0).iter().map(|rho| r * rho).collect();
        table.insert_column(1, "r", scaled);
    }
    table
}

fn emit(table: Table, params: Value, format: Format, output: Option<PathBuf>) -> Outcome {
    let text = match format {
        Format::Json => table.to_json(params),
        _ => table.to_csv(),
    };
    Outcome::ok(text, output)
}

fn potential(a: &PotentialArgs) -> Result<Outcome, CliError> {
    let format = tabular_format(&a.out, "potential")?;
    check_radius(a.radius)?;
    let (kappa, l) = (a.model.kappa, a.model.l);
    let params = match a.n {
        Some(n) => DoParams::new(kappa, l, n, 1.0)?,
        None => DoParams::nodeless(kappa, l, 1.0)?,
    };
    let w = params.coupling();
    let rho = grid(&a.grid)?;
    let mut table = Table::new(&["rho", "v", "u_minus", "u_plus", "w", "u"]);
    for &r in &rho {
        table.push(vec![
            r,
            potential_v(r, kappa, w)?,
            u_minus(r, l, kappa)?,
            u_plus(r, l, kappa)?,
            superpotential_w(r, l, kappa)?,
            radial_wavefunction(r, &params)?,
        ])?;
    }
    let meta = json!({
        "command": "potential",
        "kappa": kappa,
        "l": l,
        "n": params.total_n(),
        "coupling": w,
        "nodeless": params.is_nodeless(),
    });
    Ok(emit(with_radius(table, a.radius), meta, format, a.out.output.clone()))
}

fn index_mode(exact: bool) -> IndexMode {
    if exact {
        IndexMode::Exact
    } else {
        IndexMode::FirstOrder
    }
}

fn index(a: &IndexArgs) -> Result<Outcome, CliError> {
    let format = tabular_format(&a.out, "index")?;
    check_radius(a.radius)?;
    let mode = index_mode(a.exact_index);
    let rho = grid(&a.grid)?;
    let mut table = Table::new(&["rho", "n_maxwell", "n_iso", "ratio_minus_1"]);
    for &r in &rho {
        table.push(vec![
            r,
            index_maxwell(r, a.l)?,
            index_iso(r, a.l, a.lambda, mode)?,
            relative_ratio(r, a.l, a.lambda)?,
        ])?;
    }
    let inflection = find_inflection(a.l, a.lambda, &fisheye::inflection_grid())?;
    let meta = json!({
        "command": "index",
        "l": a.l,
        "lambda": a.lambda,
        "mode": mode,
        "inflection": inflection,
    });
    Ok(emit(with_radius(table, a.radius), meta, format, a.out.output.clone()))
}

fn family(a: &FamilyArgs) -> Result<Outcome, CliError> {
    let format = tabular_format(&a.out, "family")?;
    check_radius(a.radius)?;
    let (kappa, l) = (a.model.kappa, a.model.l);
    let fam = IsoFamily::nodeless(kappa, l, a.lambda)?;
    let rho = grid(&a.grid)?;
    let mut table = Table::new(&["rho", "i0", "v_general", "w_general", "u_bosonic", "f_bosonic"]);
    for &r in &rho {
        table.push(vec![
            r,
            fam.i0(r)?,
            fam.v_general(r)?,
            fam.superpotential_general(r)?,
            fam.u_bosonic(r)?,
            fam.radial_factor_bosonic(r)?,
        ])?;
    }
    let meta = json!({
        "command": "family",
        "kappa": kappa,
        "l": l,
        "lambda": a.lambda,
        "method": fam.method(),
    });
    Ok(emit(with_radius(table, a.radius), meta, format, a.out.output.clone()))
}

/// Integral levels as JSON integers, everything else as floats.
fn level_value(e: f64) -> Value {
    if e.fract() == 0.0 && e.abs() < 9.0e15 {
        json!(e as i64)
    } else {
        json!(e)
    }
}

fn langer(a: &LangerArgs) -> Result<Outcome, CliError> {
    let format = match a.out.format.unwrap_or(Format::Json) {
        Format::Svg => return config("svg output is only available for figure, not langer"),
        f => f,
    };
    check_radius(a.radius)?;
    let problem = match a.variant {
        WellVariant::Fisheye => RmProblem::fisheye(a.nb.unwrap_or(a.l + 1), a.lambda0)?,
        WellVariant::Aufbau => {
            if a.nb.is_some() || a.lambda0.is_some() {
                return config("--nb and --lambda0 apply to the fish-eye variant only");
            }
            RmProblem::aufbau(a.l)
        }
    };
    if format == Format::Csv {
        if a.samples < 2 {
            return config(format!("--samples must be at least 2, got {}", a.samples));
        }
        let mut table = Table::new(&["x", "potential", "partner_potential"]);
        for x in linspace(-12.0, 12.0, a.samples) {
            table.push(vec![x, problem.potential(x), problem.partner_potential(x)])?;
        }
        return Ok(Outcome::ok(table.to_csv(), a.out.output.clone()));
    }
    let shooting = problem.solve()?;
    let mut obj = serde_json::Map::new();
    obj.insert(
        "eigenvalues".into(),
        Value::Array(problem.spectrum().into_iter().map(level_value).collect()),
    );
    obj.insert("shooting".into(), json!(shooting));
    obj.insert(
        "variant".into(),
        json!(match problem.variant() {
            Variant::Fisheye => "fisheye",
            Variant::Aufbau => "aufbau",
        }),
    );
    obj.insert("n_b".into(), json!(problem.n_b()));
    obj.insert("depth".into(), json!(problem.n_b_int()));
    obj.insert("partner_states".into(), json!(problem.partner_state_count()?));
    if let Some(l0) = a.lambda0 {
        obj.insert("lambda0".into(), json!(l0));
        obj.insert("shift".into(), json!(rm_family_shift(l0)?));
        obj.insert("argmin".into(), json!(rm_family_argmin(l0)?));
        if let Some(r) = a.radius {
            obj.insert("rescaled_radius".into(), json!(rescale_radius(r, l0)?));
        }
    }
    Ok(Outcome::ok(format!("{}\n", Value::Object(obj)), a.out.output.clone()))
}

fn figure(a: &FigureArgs) -> Result<Outcome, CliError> {
    let mode = index_mode(a.exact_index);
    let table = figure_table(a.l, a.lambda, &grid(&a.grid)?, mode)?;
    let text = match a.out.format.unwrap_or(Format::Csv) {
        Format::Csv => table.to_csv(),
        Format::Json => {
            let mut s = serde_json::to_string(&table).map_err(|e| CliError::Runtime(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Svg => svg::figure_panel(&table),
    };
    Ok(Outcome::ok(text, a.out.output.clone()))
}

fn run_verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let suite: Suite = a.suite.parse()?;
    let report = verify::run(suite, a.tol_scale)?;
    let text = match a.format {
        None => {
            let mut s: String = report.checks.iter().map(|c| format!("{c}\n")).collect();
            let failed = report.failures().count();
            s.push_str(&format!("{} checks, {} failed\n", report.checks.len(), failed));
            s
        }
        Some(Format::Json) => {
            let mut s = serde_json::to_string(&json!({
                "suite": suite,
                "tol_scale": a.tol_scale,
                "passed": report.passed(),
                "checks": report.checks,
            }))
            .map_err(|e| CliError::Runtime(e.to_string()))?;
            s.push('\n');
            s
        }
        Some(_) => return config("verify prints plain lines or, with --format json, one JSON object"),
    };
    Ok(Outcome {
        text,
        output: a.output.clone(),
        passed: report.passed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("susy-fisheye").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn integral_levels_print_as_integers() {
        assert_eq!(level_value(-9.0).to_string(), "-9");
        assert_eq!(level_value(-2.25).to_string(), "-2.25");
    }

    #[test]
    fn svg_is_figure_only() {
        let err = run(&parse(&["potential", "--format", "svg"])).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_CONFIG);
        assert!(run(&parse(&["figure", "--format", "svg", "--samples", "20"])).is_ok());
    }

    #[test]
    fn grid_validation() {
        for args in [
            &["figure", "--samples", "1"][..],
            &["figure", "--rho-min", "2", "--rho-max", "1"],
            &["index", "--rho-min", "0"],
        ] {
            assert_eq!(run(&parse(args)).unwrap_err().exit_code(), EXIT_CONFIG, "{args:?}");
        }
    }

    #[test]
    fn domain_errors_are_config_errors() {
        assert_eq!(run(&parse(&["family", "--lambda", "-0.5"])).unwrap_err().exit_code(), EXIT_CONFIG);
        assert_eq!(run(&parse(&["potential", "--n", "2.5"])).unwrap_err().exit_code(), EXIT_CONFIG);
        assert_eq!(run(&parse(&["langer", "--lambda0", "-0.5"])).unwrap_err().exit_code(), EXIT_CONFIG);
    }

    #[test]
    fn radius_adds_a_column() {
        let out = run(&parse(&["family", "--radius", "2", "--samples", "3"])).unwrap();
        let mut lines = out.text.lines();
        assert_eq!(lines.next(), Some("rho,r,i0,v_general,w_general,u_bosonic,f_bosonic"));
        let row: Vec<f64> = lines.next().unwrap().split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(row[1], 2.0 * row[0]);
    }
}
