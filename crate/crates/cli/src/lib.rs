//! Command-line front end. [`run`] parses arguments, dispatches to the
//! core crate and returns the process exit status.
//!
//! Exit status: 0 success, 1 failed verification, 2 bad flags, 3 dimension
//! mismatch, 4 parameter outside the domain, 5 IO or malformed input.

mod args;
mod error;
pub mod values;

use std::fs;
use std::io::{Read, Write};

use clap::Parser;
use krawtchouk_core::transform::inverse_phi_matrix;
use krawtchouk_core::verify::{verify, Outcome, Report};
use krawtchouk_core::{
    antidiagonal_factorization, binomial_image, build_shift_kit, convolve, convolve_via_inversion,
    convolve_via_shift, forward_transform, inverse_transform, phi_matrix, row_binomial_image,
    weight_matrices, KMatrix, Params, Rational, Signal,
};
use serde_json::{json, Value};

pub use args::{Backend, BasisKind, Cli, Command, Common, Format, Route, Which};
pub use error::CliError;
use values::{parse_rational, parse_vector, CliScalar};

/// Largest `N` served by the exact backend when `--backend` is omitted.
pub const EXACT_DEFAULT_MAX_N: usize = 16;

enum Output<S> {
    Vector(Vec<S>),
    Matrix(Vec<Vec<S>>),
    Report(Report),
}

/// Runs the command line `args` (including the program name) and returns
/// the exit status. Diagnostics go to `stderr`.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = write!(stderr, "{err}");
            return if err.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli.command, stdin, stdout) {
        Ok(()) => 0,
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            err.exit_code()
        }
    }
}

fn execute(
    command: &Command,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let common = command.common();
    let p = parse_rational(&common.p).map_err(|e| CliError::Usage(format!("--p: {e}")))?;
    let lambda =
        parse_rational(&common.lambda).map_err(|e| CliError::Usage(format!("--lambda: {e}")))?;
    let backend = common
        .backend
        .unwrap_or(if common.n <= EXACT_DEFAULT_MAX_N {
            Backend::Exact
        } else {
            Backend::Float
        });
    let mut sink = Vec::new();
    let status = match backend {
        Backend::Exact => {
            let params = Params::new(common.n, p, lambda)?;
            dispatch::<Rational>(command, &params, stdin, &mut sink)
        }
        Backend::Float => {
            let params = Params::new(
                common.n,
                f64::from_rational(&p),
                f64::from_rational(&lambda),
            )?;
            dispatch::<f64>(command, &params, stdin, &mut sink)
        }
    };
    // A failed verification still prints its report.
    if status.is_ok() || matches!(status, Err(CliError::Verification(_))) {
        write_output(&common.output, &sink, stdout)?;
    }
    status
}

fn dispatch<S: CliScalar>(
    command: &Command,
    params: &Params<S>,
    stdin: &mut dyn Read,
    sink: &mut Vec<u8>,
) -> Result<(), CliError> {
    let output = match command {
        Command::Matrix { which, .. } => Output::Matrix(rows(&matrix(*which, params)?)),
        Command::Transform { input, .. } => {
            let f = read_signal::<S>(input, stdin)?;
            Output::Vector(forward_transform(&f, params)?.into_values())
        }
        Command::Inverse { input, .. } => {
            let big_f = read_signal::<S>(input, stdin)?;
            Output::Vector(inverse_transform(&big_f, params)?.into_values())
        }
        Command::Convolve { f, g, route, .. } => {
            if f == "-" && g == "-" {
                return Err(CliError::Usage("--f and --g cannot both read stdin".into()));
            }
            let f = read_signal::<S>(f, stdin)?;
            let g = read_signal::<S>(g, stdin)?;
            let conv = match route {
                Route::Direct => convolve(&f, &g, params)?,
                Route::Shift => convolve_via_shift(&f, &g, params)?,
                Route::Inversion => convolve_via_inversion(&f, &g, params)?,
            };
            Output::Vector(conv.into_values())
        }
        Command::Basis { kind, index, .. } => {
            let image = |m: usize| match kind {
                BasisKind::Dual => binomial_image(m, params),
                BasisKind::Row => row_binomial_image(m, params),
            };
            match index {
                Some(m) => Output::Vector(image(*m)?.into_values()),
                None => Output::Matrix(
                    (0..params.dim())
                        .map(|m| image(m).map(Signal::into_values))
                        .collect::<Result<_, _>>()?,
                ),
            }
        }
        Command::Verify { tol, .. } => Output::Report(verify(params, *tol)),
    };
    let failed = match &output {
        Output::Report(report) => report.failures().count(),
        _ => 0,
    };
    render(&output, command.common().format, sink)?;
    if failed > 0 {
        return Err(CliError::Verification(format!(
            "{failed} identity check(s) failed"
        )));
    }
    Ok(())
}

fn matrix<S: CliScalar>(which: Which, params: &Params<S>) -> Result<KMatrix<S>, CliError> {
    Ok(match which {
        Which::Phi => phi_matrix(params),
        Which::PhiInv => inverse_phi_matrix(params),
        Which::B => weight_matrices(params).b,
        Which::Gamma => weight_matrices(params).gamma,
        Which::P => weight_matrices(params).p,
        Which::Pprime => weight_matrices(params).p_prime,
        Which::Tn => build_shift_kit(params).tn,
        Which::U => build_shift_kit(params).u,
        Which::Jd => antidiagonal_factorization(params)?.jd(),
    })
}

fn rows<S: CliScalar>(m: &KMatrix<S>) -> Vec<Vec<S>> {
    m.rows().map(<[S]>::to_vec).collect()
}

fn read_signal<S: CliScalar>(path: &str, stdin: &mut dyn Read) -> Result<Signal<S>, CliError> {
    let mut text = String::new();
    if path == "-" {
        stdin.read_to_string(&mut text)?;
    } else {
        text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
    }
    let values = parse_vector::<S>(&text).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
    Ok(Signal::new(values))
}

fn write_output(path: &str, bytes: &[u8], stdout: &mut dyn Write) -> Result<(), CliError> {
    if path == "-" {
        stdout.write_all(bytes)?;
        stdout.flush()?;
        Ok(())
    } else {
        fs::write(path, bytes).map_err(|e| CliError::Io(format!("{path}: {e}")))
    }
}

fn outcome_label(outcome: Outcome) -> &'static str {
    match outcome {
        Outcome::Pass => "PASS",
        Outcome::Fail => "FAIL",
        Outcome::Skipped => "SKIP",
    }
}

fn render<S: CliScalar>(
    output: &Output<S>,
    format: Format,
    out: &mut Vec<u8>,
) -> std::io::Result<()> {
    match (output, format) {
        (Output::Vector(v), Format::Csv) => {
            for x in v {
                writeln!(out, "{x}")?;
            }
        }
        (Output::Matrix(m), Format::Csv) => {
            for row in m {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(out, "{}", cells.join(","))?;
            }
        }
        (Output::Vector(v), Format::Json) => {
            let arr = Value::Array(v.iter().map(CliScalar::to_json).collect());
            writeln!(out, "{arr}")?;
        }
        (Output::Matrix(m), Format::Json) => {
            let arr: Vec<Value> = m
                .iter()
                .map(|row| Value::Array(row.iter().map(CliScalar::to_json).collect()))
                .collect();
            writeln!(out, "{}", Value::Array(arr))?;
        }
        (Output::Report(report), Format::Csv) => {
            for check in &report.checks {
                writeln!(out, "{} {}", outcome_label(check.outcome), check.name)?;
            }
        }
        (Output::Report(report), Format::Json) => {
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| json!({ "check": c.name, "outcome": outcome_label(c.outcome) }))
                .collect();
            writeln!(
                out,
                "{}",
                json!({ "passed": report.all_passed(), "checks": checks })
            )?;
        }
    }
    Ok(())
}
