//! `qesrep`: run verification suites, dump realizations, emit JSON reports.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use qesrep::error::Error;
use qesrep::scalar::{QLaurent, Rational};
use qesrep::suites::{self, Params, Suite};

#[derive(Parser, Debug)]
#[command(name = "qesrep", version, about = "Exact checks of QES operator realizations of Lie (super)algebras")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Run a suite (or `all`); exit 1 on any failed check.
    Verify(Target),
    /// Dump the generator matrices of a suite's realization.
    Realize(Target),
    /// Module dimensions.
    Dims(Target),
    /// Casimir data for sl2, gl-product, qspl21 or qcasimir.
    Casimir(Target),
    /// Word-length growth of the enveloping span.
    Span(Target),
}

#[derive(Args, Debug)]
struct Target {
    /// Suite name, or `all` for `verify`.
    suite: String,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Args, Debug)]
struct Flags {
    /// Number of variables `M` for gl(M+1).
    #[arg(long = "M")]
    mm: Option<usize>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    /// spl(2,1) parameter `t`, e.g. `1/3`.
    #[arg(long, allow_hyphen_values = true)]
    t: Option<Rational>,
    /// Comma-separated shifts, one per gl component.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    gamma: Option<Vec<Rational>>,
    /// Δ.
    #[arg(long)]
    dx: Option<u32>,
    /// Δ′.
    #[arg(long)]
    dy: Option<u32>,
    /// `λ` as a rational or a Laurent polynomial such as `q^-3`.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<QLaurent>,
    /// Evaluation point for `s = q^{1/2}`.
    #[arg(long, allow_hyphen_values = true)]
    s: Option<Rational>,
    /// Deformed realization: 2 or 4 components.
    #[arg(long, value_parser = ["2", "4"])]
    rep: Option<String>,
    #[arg(long)]
    max_words: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Smallest nondegenerate parameters; other parameter flags are ignored.
    #[arg(long)]
    small: bool,
}

impl Flags {
    fn params(&self) -> Params {
        if self.small {
            return Params {
                max_words: self.max_words,
                ..Params::default()
            };
        }
        Params {
            mm: self.mm,
            m: self.m,
            n: self.n,
            t: self.t.clone(),
            gamma: self.gamma.clone(),
            dx: self.dx,
            dy: self.dy,
            lambda: self.lambda.clone(),
            s: self.s.clone(),
            rep: self.rep.as_deref().map(|r| r.parse().expect("validated by clap")),
            max_words: self.max_words,
        }
    }
}

enum Outcome {
    Pass(Value),
    Fail(Value),
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("qesrep: {msg}");
    ExitCode::from(2)
}

fn execute(verb: &Verb) -> Result<Outcome, Error> {
    let (target, run): (&Target, fn(Suite, &Params) -> Result<Outcome, Error>) = match verb {
        Verb::Verify(t) if t.suite == "all" => {
            let r = suites::run_all_small(false)?;
            let v = r.to_json();
            return Ok(if r.pass() { Outcome::Pass(v) } else { Outcome::Fail(v) });
        }
        Verb::Verify(t) => (t, |s, p| {
            let r = suites::run(s, p, false)?;
            let v = r.to_json();
            Ok(if r.pass() { Outcome::Pass(v) } else { Outcome::Fail(v) })
        }),
        Verb::Realize(t) => (t, |s, p| Ok(Outcome::Pass(suites::realization(s, p)?.to_json()?))),
        Verb::Dims(t) => (t, |s, p| Ok(Outcome::Pass(suites::dims_report(s, p)?.to_json()))),
        Verb::Casimir(t) => (t, |s, p| {
            let r = suites::casimir_report(s, p)?;
            let v = r.to_json();
            Ok(if r.pass() { Outcome::Pass(v) } else { Outcome::Fail(v) })
        }),
        Verb::Span(t) => (t, |s, p| Ok(Outcome::Pass(suites::span_report(s, p)?.to_json()))),
    };
    let suite: Suite = target.suite.parse()?;
    run(suite, &target.flags.params())
}

fn flags(verb: &Verb) -> &Flags {
    match verb {
        Verb::Verify(t) | Verb::Realize(t) | Verb::Dims(t) | Verb::Casimir(t) | Verb::Span(t) => &t.flags,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match execute(&cli.verb) {
        Ok(o) => o,
        Err(
            e @ (Error::Parse(_)
            | Error::DegenerateModule(_)
            | Error::SingularParameter(_)
            | Error::NegativeQInt(_)
            | Error::EvalAtZero),
        ) => return usage(e),
        Err(e) => {
            eprintln!("qesrep: {e}");
            return ExitCode::from(1);
        }
    };
    let (value, code) = match outcome {
        Outcome::Pass(v) => (v, 0),
        Outcome::Fail(v) => (v, 1),
    };
    let text = serde_json::to_string_pretty(&value).expect("json values serialize") + "\n";
    match &flags(&cli.verb).out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("qesrep: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code)
}
