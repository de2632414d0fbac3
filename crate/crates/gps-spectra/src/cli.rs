//! Command-line front end: argument parsing, command execution, benchmark
//! validation, and CSV/JSON emission.
//!
//! Subcommands: solve, sweep, critical, validate, classify. Exit codes:
//! 0 success (and all validation cases passing), 1 validation failures,
//! 2 configuration errors, 3 output I/O errors.

use crate::analysis::{
    critical_screening, parameter_sweep, solve_spectrum, spectroscopic_label, CriticalScreeningResult,
    ExistenceTest, ScreenedFamily, SpectrumRequest, SpectrumResult, SweepRequest, SweepResult,
};
use crate::discretization::Convention;
use crate::mapping::GridSpec;
use crate::potentials::{PotentialSpec, SingularityClass};
use crate::registry::{self, Tolerance, ValidationCase};
use crate::{GpsError, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Radial bound-state solver for central potentials on a mapped spectral grid.
#[derive(Debug, Parser)]
#[command(name = "gps-spectra", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: RunCommand,
}

#[derive(Debug, Subcommand)]
pub enum RunCommand {
    /// Solve for the lowest states of one potential and channel.
    Solve(SolveArgs),
    /// Sweep one potential parameter, tracking states by node count.
    Sweep(SweepArgs),
    /// Locate a critical screening constant by bisection.
    Critical(CriticalArgs),
    /// Run the built-in benchmark suite.
    Validate(ValidateArgs),
    /// Classify the small-r behavior of a potential.
    Classify(ClassifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ConventionName {
    /// H = -(1/2) d^2/dr^2 + v.
    Half,
    /// H = -d^2/dr^2 + v.
    Full,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Box radius r_max in a.u. (default 200).
    #[arg(long)]
    pub rmax: Option<f64>,
    /// Mapping parameter alpha (default 25).
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Collocation order N (default 300).
    #[arg(long = "N")]
    pub order: Option<usize>,
}

impl GridArgs {
    fn build(&self) -> Result<GridSpec> {
        let base = GridSpec::default();
        GridSpec::new(
            self.order.unwrap_or(base.n),
            self.rmax.unwrap_or(base.r_max),
            self.alpha.unwrap_or(base.alpha),
        )
    }
}

#[derive(Debug, Args)]
pub struct ConventionArgs {
    /// Kinetic prefactor convention (default half).
    #[arg(long, value_enum)]
    pub convention: Option<ConventionName>,
    /// Multiplier applied to reported energies (default 1).
    #[arg(long)]
    pub report_scale: Option<f64>,
}

impl ConventionArgs {
    fn build(&self) -> Result<Convention> {
        let base = match self.convention.unwrap_or(ConventionName::Half) {
            ConventionName::Half => Convention::half(),
            ConventionName::Full => Convention::full(),
        };
        let conv = base.scaled(self.report_scale.unwrap_or(1.0));
        conv.validate()?;
        Ok(conv)
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format (default csv).
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
    /// Output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Potential as inline JSON {"family":...,"params":{...}} or @file.
    #[arg(long)]
    pub potential: Option<String>,
    /// Full request as a JSON file (alternative to the flags).
    #[arg(long, conflicts_with = "potential")]
    pub config: Option<PathBuf>,
    /// Angular momentum l (default 0).
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    /// Number of states to report (default 5).
    #[arg(long = "n-states", default_value_t = 5)]
    pub n_states: usize,
    /// Emit the radial density of this state (by index) instead of the
    /// spectrum table.
    #[arg(long)]
    pub density_state: Option<usize>,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub convention: ConventionArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Potential as inline JSON or @file.
    #[arg(long)]
    pub potential: Option<String>,
    /// Full sweep request as a JSON file (alternative to the flags).
    #[arg(long, conflicts_with = "potential")]
    pub config: Option<PathBuf>,
    /// Parameter name to vary (JSON key, e.g. lambda, delta, g, A).
    #[arg(long)]
    pub param: Option<String>,
    /// Comma-separated parameter values.
    #[arg(long, conflicts_with = "range")]
    pub values: Option<String>,
    /// Inclusive linear range lo:hi:count.
    #[arg(long)]
    pub range: Option<String>,
    /// Angular momentum l (default 0).
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    /// Comma-separated node counts to track (default "0").
    #[arg(long, default_value = "0")]
    pub track: String,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub convention: ConventionArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CriticalArgs {
    /// Screened family: hulthen or yukawa.
    #[arg(long)]
    pub family: String,
    /// Radial node count of the target state (default 0).
    #[arg(long = "n-r", default_value_t = 0)]
    pub n_r: usize,
    /// Angular momentum l (default 0).
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    /// Lower bracket edge (state bound here).
    #[arg(long)]
    pub lo: f64,
    /// Upper bracket edge (state unbound here).
    #[arg(long)]
    pub hi: f64,
    /// Bisection width target (default 1e-6).
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// "all" or a comma-separated subset of suites (e.g. table5,table7).
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Potential as inline JSON or @file.
    #[arg(long)]
    pub potential: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Parse a potential given inline or as @path.
pub fn parse_potential(text: &str) -> Result<PotentialSpec> {
    let body = if let Some(path) = text.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| GpsError::Io {
            path: path.to_string(),
            source: e,
        })?
    } else {
        text.to_string()
    };
    serde_json::from_str(&body)
        .map_err(|e| GpsError::InvalidConfig(format!("potential JSON: {e}")))
}

fn parse_f64_list(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<f64>()
                .map_err(|_| GpsError::InvalidConfig(format!("bad number \"{tok}\"")))
        })
        .collect()
}

fn parse_usize_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| GpsError::InvalidConfig(format!("bad index \"{tok}\"")))
        })
        .collect()
}

fn parse_range(text: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(GpsError::InvalidConfig(format!(
            "range must be lo:hi:count, got \"{text}\""
        )));
    }
    let lo: f64 = parts[0]
        .parse()
        .map_err(|_| GpsError::InvalidConfig(format!("bad range lo \"{}\"", parts[0])))?;
    let hi: f64 = parts[1]
        .parse()
        .map_err(|_| GpsError::InvalidConfig(format!("bad range hi \"{}\"", parts[1])))?;
    let count: usize = parts[2]
        .parse()
        .map_err(|_| GpsError::InvalidConfig(format!("bad range count \"{}\"", parts[2])))?;
    if count < 2 || !(hi > lo) {
        return Err(GpsError::InvalidConfig(
            "range needs hi > lo and count >= 2".into(),
        ));
    }
    Ok((0..count)
        .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
        .collect())
}

fn read_json_file<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let body = std::fs::read_to_string(path).map_err(|e| GpsError::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    serde_json::from_str(&body)
        .map_err(|e| GpsError::InvalidConfig(format!("{}: {e}", path.display())))
}

impl SolveArgs {
    pub fn request(&self) -> Result<SpectrumRequest> {
        if let Some(path) = &self.config {
            return read_json_file(path);
        }
        let potential = self
            .potential
            .as_deref()
            .ok_or_else(|| GpsError::InvalidConfig("missing --potential (or --config)".into()))?;
        Ok(SpectrumRequest {
            potential: parse_potential(potential)?,
            l: self.l,
            n_states: self.n_states,
            grid: self.grid.build()?,
            convention: self.convention.build()?,
        })
    }
}

impl SweepArgs {
    pub fn request(&self) -> Result<SweepRequest> {
        if let Some(path) = &self.config {
            return read_json_file(path);
        }
        let potential = self
            .potential
            .as_deref()
            .ok_or_else(|| GpsError::InvalidConfig("missing --potential (or --config)".into()))?;
        let values = match (&self.values, &self.range) {
            (Some(v), None) => parse_f64_list(v)?,
            (None, Some(r)) => parse_range(r)?,
            _ => {
                return Err(GpsError::InvalidConfig(
                    "sweep needs exactly one of --values or --range".into(),
                ))
            }
        };
        let track = parse_usize_list(&self.track)?;
        let base = SpectrumRequest {
            potential: parse_potential(potential)?,
            l: self.l,
            n_states: track.iter().max().copied().unwrap_or(0) + 1,
            grid: self.grid.build()?,
            convention: self.convention.build()?,
        };
        Ok(SweepRequest {
            base,
            param: self
                .param
                .clone()
                .ok_or_else(|| GpsError::InvalidConfig("missing --param".into()))?,
            values,
            track,
        })
    }
}

impl CriticalArgs {
    pub fn family(&self) -> Result<ScreenedFamily> {
        match self.family.as_str() {
            "hulthen" => Ok(ScreenedFamily::Hulthen),
            "yukawa" => Ok(ScreenedFamily::Yukawa),
            other => Err(GpsError::InvalidConfig(format!(
                "family must be hulthen or yukawa, got \"{other}\""
            ))),
        }
    }
}

/// Per-case verdict of the validation run.
#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub id: String,
    pub suite: String,
    pub label: String,
    pub expected: f64,
    pub computed: f64,
    pub abs_error: f64,
    pub rel_error: f64,
    pub tolerance: String,
    pub provenance: String,
    pub pass: bool,
}

/// The full validation report.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub cases: Vec<CaseReport>,
    pub passed: usize,
    pub failed: usize,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

fn run_case(case: &ValidationCase) -> Result<CaseReport> {
    let request = SpectrumRequest {
        potential: case.potential.clone(),
        l: case.l,
        n_states: case.n_index + 1,
        grid: case.grid,
        convention: case.convention,
    };
    let result = solve_spectrum(&request)?;
    let computed = result.energies[case.n_index];
    let abs_error = (computed - case.expected).abs();
    let rel_error = abs_error / case.expected.abs().max(f64::MIN_POSITIVE);
    let (pass, tolerance) = match case.tolerance {
        Tolerance::Abs(tol) => (abs_error <= tol, format!("abs {tol:.1e}")),
        Tolerance::Rel(tol) => (rel_error <= tol, format!("rel {tol:.1e}")),
    };
    Ok(CaseReport {
        id: case.id.clone(),
        suite: case.suite.to_string(),
        label: case.label.clone(),
        expected: case.expected,
        computed,
        abs_error,
        rel_error,
        tolerance,
        provenance: case.provenance.to_string(),
        pass,
    })
}

/// Execute the registered benchmark cases for the requested suites.
///
/// Cases run concurrently but the report preserves registry order.
pub fn run_validate(suite_selector: &str) -> Result<ValidationReport> {
    let known = registry::suites();
    let wanted: Vec<&str> = if suite_selector == "all" {
        known.clone()
    } else {
        let list: Vec<&str> = suite_selector.split(',').map(|s| s.trim()).collect();
        for s in &list {
            if !known.contains(s) {
                return Err(GpsError::InvalidConfig(format!(
                    "unknown suite \"{s}\"; known: all, {}",
                    known.join(", ")
                )));
            }
        }
        list
    };
    let selected: Vec<ValidationCase> = registry::cases()
        .into_iter()
        .filter(|c| wanted.contains(&c.suite))
        .collect();
    let reports: Result<Vec<CaseReport>> = selected.par_iter().map(run_case).collect();
    let cases = reports?;
    let passed = cases.iter().filter(|c| c.pass).count();
    let failed = cases.len() - passed;
    Ok(ValidationReport {
        cases,
        passed,
        failed,
    })
}

/// Twelve significant digits, scientific notation.
pub fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

/// Spectrum output, CSV: one row per state.
pub fn spectrum_csv(result: &SpectrumResult) -> String {
    let mut out = String::from("index,energy,nodes\n");
    for (k, e) in result.energies.iter().enumerate() {
        out.push_str(&format!(
            "{k},{},{}\n",
            sig12(*e),
            result.states[k].node_count
        ));
    }
    out
}

/// Density output, CSV rows (r, u2) at the interior nodes.
pub fn density_csv(result: &SpectrumResult, state: usize) -> Result<String> {
    let st = result.states.get(state).ok_or_else(|| {
        GpsError::InvalidConfig(format!(
            "density state {state} not among the {} solved states",
            result.states.len()
        ))
    })?;
    let mut out = String::from("r,u2\n");
    for (j, &r) in st.radii().iter().enumerate() {
        out.push_str(&format!("{},{}\n", sig12(r), sig12(st.u[j] * st.u[j])));
    }
    Ok(out)
}

/// Spectrum output, JSON.
pub fn spectrum_json(result: &SpectrumResult, request: &SpectrumRequest) -> serde_json::Value {
    serde_json::json!({
        "potential": request.potential,
        "l": result.l,
        "energies": result.energies,
        "node_counts": result.states.iter().map(|s| s.node_count).collect::<Vec<_>>(),
        "convention": result.convention,
        "grid": request.grid,
        "max_residual": result.max_residual,
    })
}

/// Sweep output, CSV: (param, E_<label>...) columns.
pub fn sweep_csv(result: &SweepResult) -> String {
    let mut header = result.param.clone();
    for &nr in &result.track {
        header.push_str(&format!(",E_{}", spectroscopic_label(nr, result.l)));
    }
    let mut out = header;
    out.push('\n');
    for (i, &v) in result.values.iter().enumerate() {
        out.push_str(&sig12(v));
        for e in &result.energies[i] {
            out.push(',');
            out.push_str(&sig12(*e));
        }
        out.push('\n');
    }
    out
}

/// Critical-screening output, CSV.
pub fn critical_csv(result: &CriticalScreeningResult) -> String {
    let family = match result.family {
        ScreenedFamily::Hulthen => "hulthen",
        ScreenedFamily::Yukawa => "yukawa",
    };
    format!(
        "family,state,gamma_c,bracket_width\n{family},{},{},{}\n",
        spectroscopic_label(result.n_r, result.l),
        sig12(result.gamma_c),
        sig12(result.bracket_width),
    )
}

/// Validation report, CSV.
pub fn validate_csv(report: &ValidationReport) -> String {
    let mut out =
        String::from("id,label,expected,computed,abs_error,rel_error,tolerance,provenance,pass\n");
    for c in &report.cases {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            c.id,
            c.label.replace(',', ";"),
            sig12(c.expected),
            sig12(c.computed),
            sig12(c.abs_error),
            sig12(c.rel_error),
            c.tolerance.replace(',', ";"),
            c.provenance.replace(',', ";"),
            c.pass
        ));
    }
    out
}

/// Human-oriented validation summary, one line per case.
pub fn validate_lines(report: &ValidationReport) -> String {
    let mut out = String::new();
    for c in &report.cases {
        out.push_str(&format!(
            "{} {:28} expected {:>18} computed {:>18} |err| {:.2e} ({})\n",
            if c.pass { "PASS" } else { "FAIL" },
            c.id,
            sig12(c.expected),
            sig12(c.computed),
            c.abs_error,
            c.tolerance,
        ));
    }
    out.push_str(&format!(
        "{} passed, {} failed, {} total\n",
        report.passed,
        report.failed,
        report.cases.len()
    ));
    out
}

/// Write text to the path or stdout.
pub fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            let mut file = std::fs::File::create(path).map_err(|e| GpsError::Io {
                path: path.display().to_string(),
                source: e,
            })?;
            file.write_all(text.as_bytes()).map_err(|e| GpsError::Io {
                path: path.display().to_string(),
                source: e,
            })
        }
    }
}

/// Process exit code classification for library errors.
pub fn exit_code_for(err: &GpsError) -> i32 {
    match err {
        GpsError::Io { .. } => 3,
        _ => 2,
    }
}

/// Execute a parsed command; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        RunCommand::Solve(args) => {
            let request = args.request()?;
            let result = solve_spectrum(&request)?;
            let text = match (args.output.format, args.density_state) {
                (OutputFormat::Csv, None) => spectrum_csv(&result),
                (OutputFormat::Csv, Some(k)) => density_csv(&result, k)?,
                (OutputFormat::Json, None) => {
                    format!("{}\n", spectrum_json(&result, &request))
                }
                (OutputFormat::Json, Some(k)) => {
                    let st = result.states.get(k).ok_or_else(|| {
                        GpsError::InvalidConfig(format!("density state {k} not solved"))
                    })?;
                    let rows: Vec<(f64, f64)> = st
                        .radii()
                        .iter()
                        .zip(&st.u)
                        .map(|(&r, &u)| (r, u * u))
                        .collect();
                    format!(
                        "{}\n",
                        serde_json::json!({
                            "state": k,
                            "energy": st.energy,
                            "density": rows,
                        })
                    )
                }
            };
            emit(&text, args.output.out.as_deref())?;
            Ok(0)
        }
        RunCommand::Sweep(args) => {
            let request = args.request()?;
            let result = parameter_sweep(&request)?;
            let text = match args.output.format {
                OutputFormat::Csv => sweep_csv(&result),
                OutputFormat::Json => format!("{}\n", serde_json::to_value(&result).unwrap()),
            };
            emit(&text, args.output.out.as_deref())?;
            Ok(0)
        }
        RunCommand::Critical(args) => {
            let family = args.family()?;
            let result = critical_screening(
                family,
                args.n_r,
                args.l,
                (args.lo, args.hi),
                args.tol,
                &ExistenceTest::ZeroEnergyNodes,
            )?;
            let text = match args.output.format {
                OutputFormat::Csv => critical_csv(&result),
                OutputFormat::Json => format!("{}\n", serde_json::to_value(&result).unwrap()),
            };
            emit(&text, args.output.out.as_deref())?;
            Ok(0)
        }
        RunCommand::Validate(args) => {
            let report = run_validate(&args.suite)?;
            match args.output.format {
                OutputFormat::Csv => {
                    // The one-line-per-case summary goes to stdout; the CSV
                    // goes wherever --out points (stdout if nowhere).
                    if args.output.out.is_some() {
                        print!("{}", validate_lines(&report));
                        emit(&validate_csv(&report), args.output.out.as_deref())?;
                    } else {
                        print!("{}", validate_lines(&report));
                    }
                }
                OutputFormat::Json => {
                    let text = format!("{}\n", serde_json::to_value(&report).unwrap());
                    print!("{}", validate_lines(&report));
                    if args.output.out.is_some() {
                        emit(&text, args.output.out.as_deref())?;
                    }
                }
            }
            Ok(if report.all_pass() { 0 } else { 1 })
        }
        RunCommand::Classify(args) => {
            let potential = parse_potential(&args.potential)?;
            let class = potential.classify();
            let name = match class {
                SingularityClass::Regular => "regular",
                SingularityClass::Transition => "transition",
                SingularityClass::SingularRepulsive => "singular_repulsive",
                SingularityClass::SingularAttractive => "singular_attractive",
            };
            let text = match args.output.format {
                OutputFormat::Csv => format!("class\n{name}\n"),
                OutputFormat::Json => format!(
                    "{}\n",
                    serde_json::json!({ "potential": potential, "class": name })
                ),
            };
            emit(&text, args.output.out.as_deref())?;
            Ok(0)
        }
    }
}
