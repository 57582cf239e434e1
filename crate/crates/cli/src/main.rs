//! `hypertrig`: hypergroup tables, function families, equation checks and
//! classification from the command line.
//!
//! Machine output is JSON on stdout. Notes and errors go to stderr.
//! Exit codes: 0 success, 1 negative finding, 2 usage or I/O error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hypertrig_core::io::{
    axiom_report_json, classification_json, counterexample_json, function_from_json, parse_json,
    recurrence_from_json, residual_json, scalar_value, table_from_json, table_to_json, to_canonical_string,
    TableFile,
};
use hypertrig_core::polynomial::{additive_fn, exponential_fn, sine_fn};
use hypertrig_core::solutions::{
    is_exponential_with, is_m_sine_with, residual_additive_with, residual_cosine_with, residual_sine_with,
    Classifier, ClassifierTolerances, EvalOptions, Residual,
};
use hypertrig_core::{
    counterexample_report, linearization_table, HFunction, Recurrence, RecurrenceError, Scalar, Tolerance,
};

/// Tolerance used to decide that a counterexample deviation is genuine.
const COUNTEREXAMPLE_TOL: f64 = 1e-9;

#[derive(Parser)]
#[command(name = "hypertrig", version, about = "Sine and cosine addition equations on discrete hypergroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a polynomial hypergroup table from a recurrence spec
    Table {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check the hypergroup axioms of a table up to a depth
    Axioms {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        depth: usize,
    },
    /// Evaluate a polynomial family at one element
    Eval {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// λ for exponential and sine; the constant for additive
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        n: usize,
    },
    /// Compute the residual of one functional equation
    Verify {
        #[arg(long)]
        table: PathBuf,
        #[arg(long, value_enum)]
        equation: EquationArg,
        /// Function spec: a file path or inline JSON
        #[arg(long = "f")]
        f: String,
        #[arg(long = "g")]
        g: Option<String>,
        /// Relative tolerance for float mode
        #[arg(long)]
        tol: Option<f64>,
        /// Force float arithmetic
        #[arg(long)]
        float: bool,
    },
    /// Classify a solution pair of the sine or cosine addition equation
    Classify {
        #[arg(long)]
        table: PathBuf,
        #[arg(long, value_enum)]
        equation: PairEquation,
        #[arg(long = "f")]
        f: String,
        #[arg(long = "g")]
        g: String,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Show that n -> P_n'(λ) is not a constant times P_n'(x0) P_n(λ)
    Counterexample {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        nmax: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Exponential,
    Sine,
    Additive,
}

#[derive(Clone, Copy, ValueEnum)]
enum EquationArg {
    Sine,
    Cosine,
    Exponential,
    Msine,
    Additive,
}

#[derive(Clone, Copy, ValueEnum)]
enum PairEquation {
    Sine,
    Cosine,
}

/// Errors that end a command with exit code 2.
struct Fatal(String);

impl<E: std::fmt::Display> From<E> for Fatal {
    fn from(e: E) -> Self {
        Fatal(e.to_string())
    }
}

type Outcome = Result<(Value, bool), Fatal>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table { spec, nmax, out } => cmd_table(&spec, nmax, &out),
        Command::Axioms { table, depth } => cmd_axioms(&table, depth),
        Command::Eval { spec, family, lambda, n } => cmd_eval(&spec, family, &lambda, n),
        Command::Verify {
            table,
            equation,
            f,
            g,
            tol,
            float,
        } => cmd_verify(&table, equation, &f, g.as_deref(), tol, float),
        Command::Classify {
            table,
            equation,
            f,
            g,
            tol,
        } => cmd_classify(&table, equation, &f, &g, tol),
        Command::Counterexample { spec, lambda, nmax } => cmd_counterexample(&spec, &lambda, nmax),
    };
    match result {
        Ok((json, success)) => {
            print!("{}", to_canonical_string(&json));
            if success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Fatal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_json(path: &Path) -> Result<Value, Fatal> {
    let text = fs::read_to_string(path).map_err(|e| Fatal(format!("{}: {e}", path.display())))?;
    parse_json(&text).map_err(|e| Fatal(format!("{}: {e}", path.display())))
}

fn read_recurrence(path: &Path) -> Result<Recurrence, Fatal> {
    Ok(recurrence_from_json(&read_json(path)?)?)
}

fn read_table(path: &Path) -> Result<TableFile, Fatal> {
    Ok(table_from_json(&read_json(path)?)?)
}

/// A function spec given inline (`{...}`) or as a path.
fn read_function(arg: &str, table: &TableFile) -> Result<HFunction, Fatal> {
    let doc = if arg.trim_start().starts_with('{') {
        parse_json(arg)?
    } else {
        read_json(Path::new(arg))?
    };
    let f = function_from_json(&doc, table.recurrence.as_ref())?;
    // Surface short tables and family evaluation errors before any scan.
    f.values(table.hypergroup.size())?;
    Ok(f)
}

fn parse_scalar_arg(s: &str) -> Result<Scalar, Fatal> {
    s.parse::<Scalar>().map_err(|e| Fatal(format!("invalid complex literal {s:?}: {e}")))
}

fn cmd_table(spec: &Path, nmax: usize, out: &Path) -> Outcome {
    let r = read_recurrence(spec)?;
    match linearization_table(&r, nmax) {
        Ok(table) => {
            let h = table.to_hypergroup();
            let doc = table_to_json(&h, Some(&r));
            fs::write(out, to_canonical_string(&doc)).map_err(|e| Fatal(format!("{}: {e}", out.display())))?;
            eprintln!("wrote {} rows to {}", h.pairs().iter().filter(|(x, y)| x <= y).count(), out.display());
            Ok((json!({ "out": out.display().to_string(), "nmax": nmax, "recurrence": r.name() }), true))
        }
        Err(RecurrenceError::NotAHypergroup { n, m, k, value }) => {
            let diag = json!({
                "error": "NotAHypergroup",
                "n": n,
                "m": m,
                "k": k,
                "value": value,
            });
            fs::write(out, to_canonical_string(&diag)).map_err(|e| Fatal(format!("{}: {e}", out.display())))?;
            eprintln!("linearization coefficient c({n},{m},{k}) = {value} is negative");
            Ok((diag, false))
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_axioms(table: &Path, depth: usize) -> Outcome {
    let t = read_table(table)?;
    let report = t.hypergroup.check_axioms(depth);
    Ok((axiom_report_json(&report), report.all_pass()))
}

fn cmd_eval(spec: &Path, family: FamilyArg, lambda: &str, n: usize) -> Outcome {
    let r = read_recurrence(spec)?;
    let param = parse_scalar_arg(lambda)?;
    let (name, f) = match family {
        FamilyArg::Exponential => ("exponential", exponential_fn(&r, param.clone())),
        FamilyArg::Sine => ("sine", sine_fn(&r, param.clone())),
        FamilyArg::Additive => ("additive", additive_fn(&r, param.clone())),
    };
    let value = f.eval(n)?;
    let key = if matches!(family, FamilyArg::Additive) { "const" } else { "lambda" };
    Ok((
        json!({
            "family": name,
            "recurrence": r.name(),
            key: scalar_value(&param),
            "n": n,
            "value": scalar_value(&value),
            "mode": value.mode().as_str(),
        }),
        true,
    ))
}

fn options(tol: Option<f64>, float: bool) -> EvalOptions {
    EvalOptions {
        tol: tol.map_or_else(Tolerance::default, Tolerance::relative),
        force_float: float,
        ..EvalOptions::default()
    }
}

fn cmd_verify(table: &Path, equation: EquationArg, f: &str, g: Option<&str>, tol: Option<f64>, float: bool) -> Outcome {
    let t = read_table(table)?;
    let h = &t.hypergroup;
    let opts = options(tol, float);
    let f = read_function(f, &t)?;
    let g = g.map(|g| read_function(g, &t)).transpose()?;
    let need_g = || g.as_ref().ok_or_else(|| Fatal("this equation needs --g".into()));
    let (residual, reason): (Residual, Option<String>) = match equation {
        EquationArg::Sine => (residual_sine_with(h, &f, need_g()?, &opts)?, None),
        EquationArg::Cosine => (residual_cosine_with(h, &f, need_g()?, &opts)?, None),
        EquationArg::Additive => (residual_additive_with(h, &f, &opts)?, None),
        EquationArg::Exponential => {
            let check = is_exponential_with(h, &f, &opts)?;
            (check.residual, check.reason)
        }
        EquationArg::Msine => {
            let check = is_m_sine_with(h, &f, need_g()?, &opts)?;
            (check.residual, check.reason)
        }
    };
    let pass = residual.pass && reason.is_none();
    let mut doc = residual_json(&residual);
    doc["pass"] = pass.into();
    if let Some(reason) = reason {
        eprintln!("{reason}");
        doc["reason"] = reason.into();
    }
    Ok((doc, pass))
}

fn cmd_classify(table: &Path, equation: PairEquation, f: &str, g: &str, tol: Option<f64>) -> Outcome {
    let t = read_table(table)?;
    let h = &t.hypergroup;
    let f = read_function(f, &t)?;
    let g = read_function(g, &t)?;
    let classifier = Classifier {
        tol: ClassifierTolerances {
            residual: tol.map_or_else(Tolerance::default, Tolerance::relative),
            ..ClassifierTolerances::default()
        },
        recurrence: t.recurrence.clone(),
        ..Classifier::default()
    };
    let result = match equation {
        PairEquation::Sine => classifier.classify_sine(h, &f, &g)?,
        PairEquation::Cosine => classifier.classify_cosine(h, &f, &g)?,
    };
    for note in &result.notes {
        eprintln!("note: {note}");
    }
    let recognized = result.case != hypertrig_core::solutions::CaseTag::NotASolution;
    Ok((classification_json(&result, h.size())?, recognized))
}

fn cmd_counterexample(spec: &Path, lambda: &str, nmax: usize) -> Outcome {
    let r = read_recurrence(spec)?;
    let lambda = parse_scalar_arg(lambda)?;
    let report = counterexample_report(&r, &lambda, nmax)?;
    let demonstrated = report.max_deviation > 10.0 * COUNTEREXAMPLE_TOL;
    if demonstrated {
        eprintln!(
            "deviation {:e} at n = {}: not of the form const * P_n'(x0) * P_n(λ)",
            report.max_deviation, report.argmax
        );
    }
    Ok((counterexample_json(&report), demonstrated))
}
