//! Command-line front end: instance generation, the two solvers, cuttings,
//! re-verification and calibration.
//!
//! Exit codes: 0 for a valid result, 2 for an invalid one, 1 for usage,
//! input and I/O errors.

pub mod format;
pub mod svg;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use cutnet::cutting::{simple_weak_cutting, verify_cutting, weak_cutting, CuttingParams, WeightedLineSet};
use cutnet::guarding::{solve_guarding, verify_guarding, GuardingConfig};
use cutnet::oracle::{calibrate_constants, gen_instance, GeneratorKind, GeneratorSpec};
use cutnet::reduction::{solve_reduction, verify_halving, ReductionConfig};
use cutnet::scalar::parse_rational;
use cutnet::{Error, Rational};
use serde_json::json;

use format::{GuardEntry, InstanceFile, LineEntry, LinesFile, Meta, Ratio, ResultFile};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Io(String),
    /// The computed or supplied result is not valid.
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            _ => 1,
        }
    }
}

fn solver_error(e: Error) -> CliError {
    match e {
        Error::InvalidInstance(_) | Error::InvalidParameter(_) | Error::EmptyInput => CliError::Input(e.to_string()),
        _ => CliError::Invalid(e.to_string()),
    }
}

#[derive(Debug, Parser)]
#[command(name = "cutnet", version, about = "Small line sets that cut point sets, and small guard sets that stab heavy convex regions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct SolveArgs {
    /// Instance file.
    instance: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Result file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lines such that no face holds more than fr_i * m_i points of any set.
    Halve(SolveArgs),
    /// Points meeting every convex region with at least fr_i * m_i points of a set.
    Guard(SolveArgs),
    /// Weak cutting of a (weighted) line set, with its verification.
    Cut {
        #[arg(long)]
        lines: PathBuf,
        /// As p/q.
        #[arg(long)]
        eps: String,
        #[arg(long)]
        simple: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verifies a result file against its instance.
    Verify {
        instance: PathBuf,
        #[arg(long)]
        result: PathBuf,
    },
    /// Writes a generated instance.
    Gen {
        /// grid, convex, parabola or random.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of sets; points are dealt round-robin.
        #[arg(long, default_value_t = 1)]
        sets: usize,
        #[arg(long, default_value = "1")]
        fraction: String,
        #[arg(long, default_value_t = 100)]
        bound: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fits the constants used by the soft checks.
    Calibrate {
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| CliError::Io(e.to_string())),
    }
}

fn fraction(text: &str) -> Result<Rational, CliError> {
    parse_rational(text).ok_or_else(|| CliError::Usage(format!("not a rational: {text:?}")))
}

fn load_instance(path: &Path) -> Result<cutnet::Instance, CliError> {
    format::parse::<InstanceFile>(&read(path)?, &path.display().to_string())?.to_instance()
}

/// Runs one command. Output goes to `stdout`; the single-line diagnostic of
/// a failure is left to the caller.
pub fn execute(cli_args: impl IntoIterator<Item = OsString>, stdout: &mut dyn Write) -> Result<(), CliError> {
    let cli = match Cli::try_parse_from(cli_args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand) {
                write!(stdout, "{e}").map_err(|e| CliError::Io(e.to_string()))?;
                return Ok(());
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ").to_string();
            return Err(CliError::Usage(first));
        }
    };
    match cli.command {
        Command::Halve(args) => halve(&args, stdout),
        Command::Guard(args) => guard(&args, stdout),
        Command::Cut { lines, eps, simple, seed, out } => cut(&lines, &eps, simple, seed, out.as_deref(), stdout),
        Command::Verify { instance, result } => verify(&instance, &result, stdout),
        Command::Gen { kind, n, seed, sets, fraction: fr, bound, out } => {
            let kind: GeneratorKind = kind.parse().map_err(|e: Error| CliError::Usage(e.to_string()))?;
            let spec = GeneratorSpec { kind, n, seed, bound };
            let inst = gen_instance(&spec, sets, fraction(&fr)?).map_err(|e| CliError::Usage(e.to_string()))?;
            let name = format!("{}-{n}", serde_json::to_value(kind).expect("enum").as_str().expect("string"));
            let file = InstanceFile::from_instance(&inst, Meta { seed: Some(seed), name: Some(name) });
            emit(out.as_deref(), &format::render(&file), stdout)
        }
        Command::Calibrate { trials, seed, out } => {
            let report = calibrate_constants(trials, seed).map_err(|e| CliError::Usage(e.to_string()))?;
            emit(out.as_deref(), &format::render(&report), stdout)
        }
    }
}

fn halve(args: &SolveArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let inst = load_instance(&args.instance)?;
    let sol = solve_reduction(&inst, &ReductionConfig { seed: args.seed, ..Default::default() }).map_err(solver_error)?;
    let valid = verify_halving(&inst, &sol.lines).valid;
    let s = &sol.stats;
    let stats = json!({
        "k": inst.k(),
        "m": inst.m(),
        "t_used": s.t_used,
        "t_lower": s.t_lower,
        "lp_iterations": s.lp_iterations,
        "rounding_attempts": s.rounding_attempts,
        "cutting_sizes": s.cutting_sizes,
        "candidates": s.candidates,
        "constraints": s.constraints,
        "size": sol.lines.len(),
        "size_over_lower_bound": Ratio(s.c_round.clone()),
    });
    let result = ResultFile {
        lines: Some(sol.lines.iter().cloned().map(LineEntry).collect()),
        guards: None,
        stats,
        shear: Ratio(sol.shear.clone()),
        valid,
    };
    emit(args.out.as_deref(), &format::render(&result), stdout)?;
    if let Some(p) = &args.svg {
        emit(Some(p), &svg::draw(&inst, &sol.lines, &[]), stdout)?;
    }
    if valid {
        Ok(())
    } else {
        Err(CliError::Invalid("computed line set failed verification".into()))
    }
}

fn guard(args: &SolveArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let inst = load_instance(&args.instance)?;
    let set = solve_guarding(&inst, &GuardingConfig { seed: args.seed, ..Default::default() }).map_err(solver_error)?;
    let valid = verify_guarding(&inst, &set.guards).valid;
    let s = &set.stats;
    let stats = json!({
        "k": inst.k(),
        "m": inst.m(),
        "t_used": s.t_used,
        "t_lower": s.t_lower,
        "dp_calls": s.dp_calls,
        "lp_iterations": s.lp_iterations,
        "rounding_failures": s.rounding_failures,
        "candidates": s.candidates,
        "constraints": s.constraints.len(),
        "size": set.guards.len(),
        "net": "greedy oracle net; no size guarantee beyond the LP lower bound",
    });
    let result = ResultFile {
        lines: None,
        guards: Some(set.guards.iter().cloned().map(GuardEntry).collect()),
        stats,
        shear: Ratio(set.shear.clone()),
        valid,
    };
    emit(args.out.as_deref(), &format::render(&result), stdout)?;
    if let Some(p) = &args.svg {
        emit(Some(p), &svg::draw(&inst, &[], &set.guards), stdout)?;
    }
    if valid {
        Ok(())
    } else {
        Err(CliError::Invalid("computed guard set failed verification".into()))
    }
}

fn cut(lines: &Path, eps: &str, simple: bool, seed: u64, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    let file: LinesFile = format::parse(&read(lines)?, &lines.display().to_string())?;
    let eps = fraction(eps)?;
    if eps <= Rational::ZERO || eps > Rational::ONE {
        return Err(CliError::Usage("eps must lie in (0, 1]".into()));
    }
    let weights: Vec<Rational> = match &file.weights {
        Some(w) if w.len() != file.lines.len() => return Err(CliError::Input("one weight per line expected".into())),
        Some(w) => w.iter().map(|r| r.0.clone()).collect(),
        None => vec![Rational::ONE; file.lines.len()],
    };
    if weights.iter().any(|w| *w <= Rational::ZERO) {
        return Err(CliError::Input("weights must be positive".into()));
    }
    let set = WeightedLineSet::new(file.lines.iter().map(|l| l.0.clone()).zip(weights));
    let cutting = if simple {
        simple_weak_cutting(&set, &eps, seed)
    } else {
        CuttingParams::new(eps.clone(), seed).and_then(|p| weak_cutting(&set, &eps, &p))
    }
    .map_err(solver_error)?;
    let report = verify_cutting(&set, &cutting.lines, &eps);
    let s = &cutting.stats;
    let doc = json!({
        "lines": cutting.lines.iter().cloned().map(LineEntry).collect::<Vec<_>>(),
        "stats": {
            "size": cutting.lines.len(),
            "draws": s.draws,
            "sampled": s.sampled,
            "large_faces": s.large_faces,
            "refined_complexity": s.refined_complexity,
            "refinement_lines": s.refinement_lines,
            "attempts": s.attempts,
            "method": if simple { "simple" } else { "weak" },
        },
        "eps": Ratio(eps.clone()),
        "worst_weight": Ratio(report.worst_weight.clone()),
        "total_weight": Ratio(report.total_weight.clone()),
        "valid": report.valid,
    });
    emit(out, &format::render(&doc), stdout)?;
    if report.valid {
        Ok(())
    } else {
        Err(CliError::Invalid("cutting failed verification".into()))
    }
}

fn verify(instance: &Path, result: &Path, stdout: &mut dyn Write) -> Result<(), CliError> {
    let inst = load_instance(instance)?;
    let res: ResultFile = format::parse(&read(result)?, &result.display().to_string())?;
    let (kind, recomputed) = match (&res.lines, &res.guards) {
        (Some(lines), None) => {
            let lines: Vec<_> = lines.iter().map(|l| l.0.clone()).collect();
            ("lines", verify_halving(&inst, &lines).valid)
        }
        (None, Some(guards)) => {
            let guards: Vec<_> = guards.iter().map(|g| g.0.clone()).collect();
            ("guards", verify_guarding(&inst, &guards).valid)
        }
        _ => return Err(CliError::Input("a result holds exactly one of \"lines\" and \"guards\"".into())),
    };
    let doc = json!({ "kind": kind, "valid": recomputed, "claimed_valid": res.valid });
    emit(None, &format::render(&doc), stdout)?;
    match (recomputed, res.valid) {
        (true, true) => Ok(()),
        (false, _) => Err(CliError::Invalid(format!("the {kind} do not satisfy the instance"))),
        (true, false) => Err(CliError::Invalid("result claims to be invalid".into())),
    }
}

/// Runs one command and returns the process exit code, printing any
/// failure as a single line on `stderr`.
pub fn run(cli_args: impl IntoIterator<Item = OsString>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    match execute(cli_args, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.to_string().replace('\n', " "));
            e.exit_code()
        }
    }
}
