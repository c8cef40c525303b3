//! Command-line front end for the squeezed-coherent-state phase library:
//! contour-grid scans, line scans, and the verification harness, with CSV
//! and JSON manifest emission.

mod driver;
mod grid;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use driver::{DriverError, LineConfig, Mode, ScanConfig, ScanOutput};
use grid::GridAxis;
use scs_phase::phase::NormMode;
use scs_phase::states::Family;
use scs_phase::verify;

const EXIT_OK: u8 = 0;
const EXIT_VALIDATION: u8 = 1;
const EXIT_ACCEPTANCE: u8 = 2;
const EXIT_TRUNCATION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "scs-phase",
    version,
    about = "Geometric phases of mixed two-mode squeezed-coherent states under SU(2) evolution"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan the analytic and/or numeric geometric phase over an (alpha0, alpha1) grid
    Scan(ScanArgs),
    /// Tabulate |geometric phase| of all three families along alpha0 = alpha1 = alpha
    Line(LineArgs),
    /// Run verification suites and report pass/fail
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Entangled,
    SepUnbalanced,
    SepBalanced,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Entangled => Family::Entangled,
            FamilyArg::SepUnbalanced => Family::SepUnbalanced,
            FamilyArg::SepBalanced => Family::SepBalanced,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Analytic,
    Numeric,
    Both,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Analytic => Mode::Analytic,
            ModeArg::Numeric => Mode::Numeric,
            ModeArg::Both => Mode::Both,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum NormArg {
    /// Entangled-family normalization 2 + 2p^2
    Corrected,
    /// As-published entangled-family normalization 2 + 2p
    PaperLiteral,
}

impl From<NormArg> for NormMode {
    fn from(n: NormArg) -> NormMode {
        match n {
            NormArg::Corrected => NormMode::Corrected,
            NormArg::PaperLiteral => NormMode::PaperLiteral,
        }
    }
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

#[derive(Args)]
struct ScanArgs {
    /// Mixed-state family
    #[arg(long, value_enum, default_value_t = FamilyArg::Entangled)]
    state: FamilyArg,
    /// Rotation angle in radians; accepts pi notation such as pi/4 or 3pi/4
    #[arg(long, default_value = "pi/4", value_parser = grid::parse_theta, allow_hyphen_values = true)]
    theta: f64,
    /// Classical mixing weight in [0, 1]
    #[arg(long, default_value_t = 0.5)]
    lambda: f64,
    /// Squeezing of the first mode
    #[arg(long, default_value_t = 0.2)]
    r0: f64,
    /// Squeezing of the second mode
    #[arg(long, default_value_t = 0.2)]
    r1: f64,
    /// Reference squeezing of the evolution frame; defaults to r0 when r0 == r1
    #[arg(long)]
    r_ref: Option<f64>,
    /// alpha0 axis as start:stop:count (inclusive endpoints)
    #[arg(long, value_parser = grid::parse_range, allow_hyphen_values = true)]
    alpha0: GridAxis,
    /// alpha1 axis as start:stop:count (inclusive endpoints)
    #[arg(long, value_parser = grid::parse_range, allow_hyphen_values = true)]
    alpha1: GridAxis,
    /// What to compute per grid point
    #[arg(long, value_enum, default_value_t = ModeArg::Analytic)]
    mode: ModeArg,
    /// Entangled-family normalization convention
    #[arg(long, value_enum, default_value_t = NormArg::Corrected)]
    norm: NormArg,
    /// Fock cutoff override; default is adaptive with a small-trace floor
    #[arg(long)]
    nmax: Option<usize>,
    /// Extra levels used when assembling operators before projection
    #[arg(long, default_value_t = scs_phase::fock::DEFAULT_BUFFER)]
    buffer: usize,
    /// Largest admissible state tail mass outside the cutoff
    #[arg(long, default_value_t = scs_phase::fock::DEFAULT_TAIL_TOL)]
    tail_tol: f64,
    /// CSV output path
    #[arg(long)]
    out: PathBuf,
    /// Manifest path; defaults to the CSV path with .manifest.json appended
    #[arg(long)]
    json: Option<PathBuf>,
    /// Worker threads for grid evaluation
    #[arg(long, default_value_t = default_workers())]
    workers: usize,
    /// Lift the numeric-mode parameter envelope
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct LineArgs {
    /// Rotation angle in radians; accepts pi notation such as pi/4 or 3pi/4
    #[arg(long, default_value = "pi/4", value_parser = grid::parse_theta, allow_hyphen_values = true)]
    theta: f64,
    /// Classical mixing weight in [0, 1]
    #[arg(long, default_value_t = 0.5)]
    lambda: f64,
    /// Squeezing of the first mode
    #[arg(long, default_value_t = 0.2)]
    r0: f64,
    /// Squeezing of the second mode
    #[arg(long, default_value_t = 0.2)]
    r1: f64,
    /// Shared displacement axis as start:stop:count
    #[arg(long, value_parser = grid::parse_range, allow_hyphen_values = true)]
    alpha: GridAxis,
    /// Entangled-family normalization convention
    #[arg(long, value_enum, default_value_t = NormArg::Corrected)]
    norm: NormArg,
    /// CSV output path
    #[arg(long)]
    out: PathBuf,
    /// Manifest path; defaults to the CSV path with .manifest.json appended
    #[arg(long)]
    json: Option<PathBuf>,
    /// Worker threads for grid evaluation
    #[arg(long, default_value_t = default_workers())]
    workers: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Oracle,
    Mehler,
    Overlap,
    Generator,
    Claims,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// Mod-2pi tolerance for the analytic-vs-numeric suite
    #[arg(long, default_value_t = verify::ORACLE_TOL)]
    tol: f64,
    /// Optional JSON report path
    #[arg(long)]
    json: Option<PathBuf>,
}

fn exit_for_core(e: &scs_phase::Error) -> u8 {
    use scs_phase::Error;
    match e {
        Error::Domain(_) | Error::Dimension { .. } => EXIT_VALIDATION,
        Error::Truncation { .. }
        | Error::Overflow(_)
        | Error::Spectral(_)
        | Error::UndefinedPhase { .. }
        | Error::Hermiticity { .. } => EXIT_TRUNCATION,
    }
}

fn fail(msg: impl std::fmt::Display, code: u8) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn manifest_path(out: &Path, json: &Option<PathBuf>) -> PathBuf {
    json.clone().unwrap_or_else(|| {
        let mut os = out.as_os_str().to_owned();
        os.push(".manifest.json");
        PathBuf::from(os)
    })
}

fn write_outputs(out: &Path, json: &Option<PathBuf>, result: &ScanOutput) -> Result<(), String> {
    std::fs::write(out, result.csv.as_bytes())
        .map_err(|e| format!("cannot write {}: {e}", out.display()))?;
    let mpath = manifest_path(out, json);
    let text = serde_json::to_string_pretty(&result.manifest)
        .expect("manifest serialization cannot fail");
    std::fs::write(&mpath, text).map_err(|e| format!("cannot write {}: {e}", mpath.display()))
}

fn run_scan_cmd(args: &ScanArgs) -> ExitCode {
    let cfg = ScanConfig {
        family: args.state.into(),
        theta: args.theta,
        lambda: args.lambda,
        r0: args.r0,
        r1: args.r1,
        r_ref: args.r_ref,
        alpha0: args.alpha0.clone(),
        alpha1: args.alpha1.clone(),
        mode: args.mode.into(),
        norm: args.norm.into(),
        nmax: args.nmax,
        buffer: args.buffer,
        tail_tol: args.tail_tol,
        workers: args.workers,
        force: args.force,
    };
    match driver::run_scan(&cfg) {
        Ok(result) => {
            if let Err(msg) = write_outputs(&args.out, &args.json, &result) {
                return fail(msg, EXIT_VALIDATION);
            }
            let rows = result.csv.lines().count() - 1;
            print!("wrote {} ({rows} rows)", args.out.display());
            match result.max_abs_err {
                Some(err) => println!(", max |wrap(analytic - numeric)| = {err:.3e}"),
                None => println!(),
            }
            ExitCode::from(EXIT_OK)
        }
        Err(DriverError::Validation(msg)) => fail(msg, EXIT_VALIDATION),
        Err(DriverError::Core(e)) => fail(&e, exit_for_core(&e)),
    }
}

fn run_line_cmd(args: &LineArgs) -> ExitCode {
    let cfg = LineConfig {
        theta: args.theta,
        lambda: args.lambda,
        r0: args.r0,
        r1: args.r1,
        alpha: args.alpha.clone(),
        norm: args.norm.into(),
        workers: args.workers,
    };
    match driver::run_line(&cfg) {
        Ok(result) => {
            if let Err(msg) = write_outputs(&args.out, &args.json, &result) {
                return fail(msg, EXIT_VALIDATION);
            }
            println!(
                "wrote {} ({} rows)",
                args.out.display(),
                result.csv.lines().count() - 1
            );
            ExitCode::from(EXIT_OK)
        }
        Err(DriverError::Validation(msg)) => fail(msg, EXIT_VALIDATION),
        Err(DriverError::Core(e)) => fail(&e, exit_for_core(&e)),
    }
}

fn print_suite(report: &verify::SuiteReport) {
    let status = if report.passed { "PASS" } else { "FAIL" };
    let kind = if report.hard { "" } else { " (report-only)" };
    println!(
        "suite {}: {status}{kind} [{:.1}s]",
        report.suite, report.wall_seconds
    );
    for check in &report.checks {
        match check.threshold {
            Some(t) => println!(
                "  [{}] {}: {:.6e} (bound {:.1e})",
                if check.passed { "ok" } else { "FAIL" },
                check.label,
                check.observed,
                t
            ),
            None => println!("  [--] {}: {:.6e}", check.label, check.observed),
        }
    }
    for finding in &report.findings {
        println!("  note: {finding}");
    }
}

fn run_verify_cmd(args: &VerifyArgs) -> ExitCode {
    let reports = match args.suite {
        SuiteArg::Mehler => Ok(vec![verify::run_mehler_suite()]),
        SuiteArg::Overlap => verify::run_overlap_suite().map(|r| vec![r]),
        SuiteArg::Generator => verify::run_generator_suite().map(|r| vec![r]),
        SuiteArg::Oracle => verify::run_oracle_suite(args.tol).map(|r| vec![r]),
        SuiteArg::Claims => verify::run_claims_suite().map(|r| vec![r]),
        SuiteArg::All => verify::run_all(args.tol),
    };
    let reports = match reports {
        Ok(r) => r,
        Err(e) => return fail(&e, exit_for_core(&e)),
    };
    for report in &reports {
        print_suite(report);
    }
    let passed = reports.iter().all(|r| r.passed);
    if let Some(path) = &args.json {
        let doc = serde_json::json!({ "passed": passed, "suites": reports });
        let text = serde_json::to_string_pretty(&doc).expect("report serialization cannot fail");
        if let Err(e) = std::fs::write(path, text) {
            return fail(format!("cannot write {}: {e}", path.display()), EXIT_VALIDATION);
        }
    }
    if passed {
        println!("all suites passed");
        ExitCode::from(EXIT_OK)
    } else {
        println!("verification failed");
        ExitCode::from(EXIT_ACCEPTANCE)
    }
}

fn main() -> ExitCode {
    faer::set_global_parallelism(faer::Par::Seq);
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
            let _ = e.print();
            let _ = std::io::stdout().flush();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Scan(args) => run_scan_cmd(&args),
        Command::Line(args) => run_line_cmd(&args),
        Command::Verify(args) => run_verify_cmd(&args),
    }
}
