//! Front end for the `qset` command: an expression language over
//! quasi-sets plus occupancy statistics reports.
//!
//! Exit codes: 0 on success, 1 when evaluation fails, 2 for parse and
//! usage errors. Results go to stdout, diagnostics to stderr.

pub mod ast;
pub mod eval;
pub mod output;
pub mod parse;
pub mod universe_file;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use quasiset::stat::{self, Model};

use crate::eval::{evaluate, EvalOptions, Value};
use crate::output::RenderOptions;
use crate::universe_file::UniverseConfig;

pub const EXIT_OK: i32 = 0;
pub const EXIT_EVAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qset", version, about = "Evaluate quasi-set expressions and occupancy statistics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Mb,
    Be,
    Fd,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Mb => Model::MaxwellBoltzmann,
            ModelArg::Be => Model::BoseEinstein,
            ModelArg::Fd => Model::FermiDirac,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one expression, e.g. `qc(union([m s:2], [M"a"]))`.
    Eval {
        expr: String,
        /// File declaring `species NAME COUNT` and `atom "LABEL"` lines.
        #[arg(long)]
        universe: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Seed for strong-singleton draws.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print witnesses of m-atom occurrences.
        #[arg(long)]
        debug_witnesses: bool,
    },
    /// Distribute N particles among n boxes under one counting model.
    Stats {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(short = 'n', value_name = "BOXES")]
        boxes: usize,
        #[arg(short = 'N', value_name = "PARTICLES")]
        particles: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Distribute the members of a qset among n labeled boxes.
    Dist {
        #[arg(long)]
        expr: String,
        #[arg(short = 'n', value_name = "BOXES")]
        boxes: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the built-in laws on seeded random values.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn emit(out: &mut dyn Write, v: &Value, format: Format, opts: RenderOptions) -> std::io::Result<()> {
    match format {
        Format::Text => out.write_all(output::text(v, opts).as_bytes()),
        Format::Json => writeln!(out, "{}", output::json(v, opts)),
    }
}

/// Run the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(rendered.as_bytes());
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_EVAL
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    match cmd {
        Command::Eval {
            expr,
            universe,
            format,
            seed,
            debug_witnesses,
        } => {
            let parsed = match parse::parse(&expr) {
                Ok(p) => p,
                Err(e) => {
                    writeln!(err, "parse error at {e}")?;
                    return Ok(EXIT_USAGE);
                }
            };
            let universe = match universe {
                None => None,
                Some(path) => {
                    let src = match std::fs::read_to_string(&path) {
                        Ok(s) => s,
                        Err(e) => {
                            writeln!(err, "cannot read {}: {e}", path.display())?;
                            return Ok(EXIT_USAGE);
                        }
                    };
                    match UniverseConfig::parse(&src) {
                        Ok(cfg) => Some(cfg.to_universe()),
                        Err(e) => {
                            writeln!(err, "{}: {e}", path.display())?;
                            return Ok(EXIT_USAGE);
                        }
                    }
                }
            };
            match evaluate(&parsed, &EvalOptions { universe, seed }) {
                Ok(v) => {
                    emit(out, &v, format, RenderOptions { debug_witnesses })?;
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    writeln!(err, "evaluation error: {e}")?;
                    Ok(EXIT_EVAL)
                }
            }
        }
        Command::Stats {
            model,
            boxes,
            particles,
            format,
        } => match stat::report(model.into(), boxes, particles) {
            Ok(r) => {
                emit(out, &Value::Report(r), format, RenderOptions::default())?;
                Ok(EXIT_OK)
            }
            Err(e) => {
                writeln!(err, "error: {e}")?;
                Ok(EXIT_EVAL)
            }
        },
        Command::Dist { expr, boxes, format } => {
            let parsed = match parse::parse(&expr) {
                Ok(p) => p,
                Err(e) => {
                    writeln!(err, "parse error at {e}")?;
                    return Ok(EXIT_USAGE);
                }
            };
            let result = evaluate(&parsed, &EvalOptions::default()).and_then(|v| match v {
                Value::Qset(q) => Ok(q),
                other => Err(eval::EvalError::Type {
                    op: "dist".into(),
                    index: 1,
                    expected: "qset",
                    found: other.kind(),
                }),
            });
            let q = match result {
                Ok(q) => q,
                Err(e) => {
                    writeln!(err, "evaluation error: {e}")?;
                    return Ok(EXIT_EVAL);
                }
            };
            match stat::distributions_of_qset(&q, boxes) {
                Ok(d) => {
                    emit(out, &Value::Tuples(d), format, RenderOptions::default())?;
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    Ok(EXIT_EVAL)
                }
            }
        }
        Command::Selftest { seed } => {
            let outcomes = quasiset::laws::run_all(seed);
            let mut failed = 0;
            for o in &outcomes {
                match &o.result {
                    Ok(()) => writeln!(out, "PASS  {}", o.name)?,
                    Err(msg) => {
                        failed += 1;
                        writeln!(out, "FAIL  {}: {msg}", o.name)?;
                    }
                }
            }
            writeln!(out, "{} of {} laws hold", outcomes.len() - failed, outcomes.len())?;
            Ok(if failed == 0 { EXIT_OK } else { EXIT_EVAL })
        }
    }
}
