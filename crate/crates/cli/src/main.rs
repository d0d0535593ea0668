//! `bezroot`: exact real-root counting from the command line.
//!
//! Every command reads polynomials as JSON arrays of rational strings by
//! ascending degree (`x^2 + 1` is `["1","0","1"]`), either inline or from
//! a file path, and writes a single JSON object to stdout. Exit codes:
//! 0 on success (and every assertion passing), 1 when a verification
//! command finds a failing assertion, 2 on malformed input.

use std::fmt::Display;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bezroot_core::bezout::{bezout_matrix, bezout_of};
use bezroot_core::checks::reference_example_checks;
use bezroot_core::family::{
    build_family, construct_totally_complex, predict, probe_charpoly, sweep_harness,
    verify_prediction, SweepConfig, ThresholdMode,
};
use bezroot_core::inertia::inertia_by_congruence;
use bezroot_core::realroots::count_real_roots;
use bezroot_core::resdisc::{bezout_disc_check, disc_in_t};
use bezroot_core::{Rational, SymMatrix, UniPoly};

#[derive(Parser)]
#[command(
    name = "bezroot",
    version,
    about = "Count real roots of rational polynomials exactly, via Bezoutian inertia and Sturm sequences"
)]
struct Cli {
    /// Omit the elapsed_ms field so identical requests emit identical bytes.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count distinct real roots, by Sturm and by Bezoutian signature.
    Count {
        /// Polynomial: inline JSON array or a file path.
        poly: String,
    },
    /// Print the Bezoutian matrix of f1 and f2 (f2 defaults to f1').
    Bezout {
        #[arg(long)]
        f1: String,
        #[arg(long)]
        f2: Option<String>,
        /// Matrix order; defaults to max(deg f1, deg f2).
        #[arg(long)]
        order: Option<usize>,
    },
    /// Inertia of a symmetric rational matrix {"order": n, "entries": [[..]]}.
    Inertia { matrix: String },
    /// Discriminant next to the Bezoutian determinant, with their ratio.
    Disc { poly: String },
    /// Discriminant of x^n + t*g(x) as a polynomial in t.
    DiscT {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: String,
    },
    /// Predictions for the family x^n + t*g(x).
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Build x^n + beta*g(x) with no real roots from a totally complex seed.
    TotallyComplex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: String,
    },
    /// Re-derive built-in reference values.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Args)]
struct ModeArg {
    /// Root bound gating the prediction.
    #[arg(long, value_enum, default_value_t = ModeChoice::MaxAbsRoot)]
    threshold_mode: ModeChoice,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeChoice {
    /// Strictly beyond the largest real root of det M_n(f(t; x)).
    MaxRoot,
    /// Beyond the largest |real root| of the stripped discriminant.
    MaxAbsRoot,
}

impl From<ModeChoice> for ThresholdMode {
    fn from(choice: ModeChoice) -> Self {
        match choice {
            ModeChoice::MaxRoot => ThresholdMode::MaxRoot,
            ModeChoice::MaxAbsRoot => ThresholdMode::MaxAbsRoot,
        }
    }
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Predict the real-root count beyond the threshold.
    Predict {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: String,
        #[command(flatten)]
        mode: ModeArg,
    },
    /// Verify the prediction at explicit points xi (repeat --xi).
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: String,
        #[arg(long = "xi", required = true)]
        xis: Vec<String>,
        #[command(flatten)]
        mode: ModeArg,
    },
    /// Randomized verification sweep over a grid of (n, s).
    Sweep {
        /// Inclusive n range, e.g. 2..8 or a single value.
        #[arg(long)]
        n: String,
        /// Inclusive s range; defaults to 1..n-1 for each n.
        #[arg(long)]
        s: Option<String>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        mode: ModeArg,
        /// Also write the report JSON to this path.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Characteristic polynomial of the corrected probe-seed Bezoutian.
    Phi {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Reproduce the published reference examples exactly.
    PaperExamples,
}

/// An input error: exit code 2, message names the offending flag.
struct InputError(String);

impl InputError {
    fn new(flag: &str, err: impl Display) -> Self {
        InputError(format!("{flag}: {err}"))
    }
}

type CmdResult = Result<(Value, bool), InputError>;

fn read_source(flag: &str, input: &str) -> Result<String, InputError> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        Ok(input.to_string())
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| InputError::new(flag, format!("cannot read file {input:?}: {e}")))
    }
}

fn read_poly(flag: &str, input: &str) -> Result<UniPoly<Rational>, InputError> {
    let text = read_source(flag, input)?;
    serde_json::from_str(&text).map_err(|e| InputError::new(flag, e))
}

fn read_matrix(flag: &str, input: &str) -> Result<SymMatrix<Rational>, InputError> {
    let text = read_source(flag, input)?;
    serde_json::from_str(&text).map_err(|e| InputError::new(flag, e))
}

fn read_rational(flag: &str, input: &str) -> Result<Rational, InputError> {
    input.parse().map_err(|e| InputError::new(flag, e))
}

/// "2..8", "2..=8", or "4".
fn parse_range(flag: &str, input: &str) -> Result<(usize, usize), InputError> {
    let parse_end = |side: &str| {
        side.parse::<usize>()
            .map_err(|_| InputError::new(flag, format!("cannot parse {side:?} as an integer")))
    };
    if let Some((lo, hi)) = input.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        Ok((parse_end(lo)?, parse_end(hi)?))
    } else {
        let v = parse_end(input)?;
        Ok((v, v))
    }
}

fn to_value(payload: impl serde::Serialize) -> Value {
    serde_json::to_value(payload).expect("report types serialize")
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Count { poly } => {
            let f = read_poly("<poly>", &poly)?;
            let sturm =
                count_real_roots(&f, None, None).map_err(|e| InputError::new("<poly>", e))?;
            let signature = match f.degree() {
                Some(d) if d >= 1 => {
                    let m = bezout_of(&f, d).map_err(|e| InputError::new("<poly>", e))?;
                    inertia_by_congruence(&m).signature()
                }
                _ => 0,
            };
            Ok((
                json!({
                    "distinct_real_roots": sturm,
                    "via": { "sturm": sturm, "bezout_signature": signature },
                }),
                true,
            ))
        }
        Command::Bezout { f1, f2, order } => {
            let f = read_poly("--f1", &f1)?;
            let g = match f2 {
                Some(ref src) => Some(read_poly("--f2", src)?),
                None => None,
            };
            let max_deg = f
                .degree()
                .unwrap_or(0)
                .max(g.as_ref().and_then(|g| g.degree()).unwrap_or(0));
            let n = order.unwrap_or(max_deg);
            let m = match g {
                Some(g) => bezout_matrix(&f, &g, n),
                None => bezout_of(&f, n),
            }
            .map_err(|e| InputError::new("--order", e))?;
            Ok((to_value(m), true))
        }
        Command::Inertia { matrix } => {
            let m = read_matrix("<matrix>", &matrix)?;
            Ok((to_value(inertia_by_congruence(&m)), true))
        }
        Command::Disc { poly } => {
            let f = read_poly("<poly>", &poly)?;
            let check = bezout_disc_check(&f).map_err(|e| InputError::new("<poly>", e))?;
            Ok((to_value(check), true))
        }
        Command::DiscT { n, g } => {
            let g = read_poly("--g", &g)?;
            let d = disc_in_t(n, &g).map_err(|e| InputError::new("--n/--g", e))?;
            Ok((to_value(d), true))
        }
        Command::Family(cmd) => run_family(cmd),
        Command::TotallyComplex { n, g } => {
            let g = read_poly("--g", &g)?;
            let out =
                construct_totally_complex(n, &g).map_err(|e| InputError::new("--n/--g", e))?;
            let pass = out.certificate.pass;
            Ok((to_value(out), pass))
        }
        Command::Verify(VerifyCommand::PaperExamples) => {
            let records = reference_example_checks();
            let pass = records.iter().all(|r| r.pass);
            Ok((json!({ "checks": to_value(records), "pass": pass }), pass))
        }
    }
}

fn run_family(cmd: FamilyCommand) -> CmdResult {
    match cmd {
        FamilyCommand::Predict { n, g, mode } => {
            let g = read_poly("--g", &g)?;
            let (spec, _) = build_family(n, &g).map_err(|e| InputError::new("--n/--g", e))?;
            let prediction = predict(&spec, mode.threshold_mode.into())
                .map_err(|e| InputError::new("--n/--g", e))?;
            Ok((to_value(prediction), true))
        }
        FamilyCommand::Verify { n, g, xis, mode } => {
            let g = read_poly("--g", &g)?;
            let (spec, _) = build_family(n, &g).map_err(|e| InputError::new("--n/--g", e))?;
            let xis = xis
                .iter()
                .map(|x| read_rational("--xi", x))
                .collect::<Result<Vec<_>, _>>()?;
            let report = verify_prediction(&spec, &xis, mode.threshold_mode.into())
                .map_err(|e| InputError::new("--xi", e))?;
            let pass = report.pass;
            Ok((to_value(report), pass))
        }
        FamilyCommand::Sweep {
            n,
            s,
            trials,
            seed,
            mode,
            out,
        } => {
            let n_range = parse_range("--n", &n)?;
            let s_range = s.as_deref().map(|s| parse_range("--s", s)).transpose()?;
            let config = SweepConfig {
                n_range,
                s_range,
                trials,
                seed,
                mode: mode.threshold_mode.into(),
            };
            let report =
                sweep_harness(&config).map_err(|e| InputError::new("--n/--s/--trials", e))?;
            let pass = report.failed == 0;
            let value = to_value(report);
            if let Some(path) = out {
                std::fs::write(&path, format!("{value}"))
                    .map_err(|e| InputError::new("--out", e))?;
            }
            Ok((value, pass))
        }
        FamilyCommand::Phi { s, n } => {
            let phi = probe_charpoly(s, n).map_err(|e| InputError::new("--s/--n", e))?;
            Ok((json!({ "s": s, "n": n, "phi": to_value(phi) }), true))
        }
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("BEZROOT_THREADS") {
        if let Ok(count) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(count)
                .build_global();
        }
    }
    let cli = Cli::parse();
    let started = Instant::now();
    match run(cli.command) {
        Ok((mut value, pass)) => {
            if !cli.no_timing {
                if let Value::Object(map) = &mut value {
                    map.insert(
                        "elapsed_ms".into(),
                        json!(started.elapsed().as_millis() as u64),
                    );
                }
            }
            println!("{value}");
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
