//! Command line front end for the rigid orbit ledger.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on a
//! usage or parse error.

#![forbid(unsafe_code)]

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};
use lie_bvduality::{bv_type_d, orth_centralizer_dim, rs_shape};
use lie_grading::{graded_positive_roots, Cocharacter};
use lie_losev::integral_root_system;
use lie_rootsys::{format_vec, parse_rational_list, RootSystem, Series, Weight};
use rigid_ledger::{emit_report, parse_cases, verify_all, CaseRecord, Format, SHIPPED};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rigid",
    version,
    about = "Exact verification of rigid nilpotent orbit data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Verify case records and print a table, or every check with --detail.
    Verify {
        /// Case file; the shipped ledger when omitted.
        #[arg(long)]
        cases: Option<PathBuf>,
        /// Restrict to one case, e.g. `E8/A3+A1`.
        #[arg(long = "case", value_name = "SYSTEM/LABEL")]
        case: Option<String>,
        #[arg(long)]
        detail: bool,
    },
    /// Print the computed table for every case.
    Table {
        #[arg(long)]
        cases: Option<PathBuf>,
    },
    /// Robinson–Schensted row shape of a sequence, e.g. `5,3,-1/2`.
    Rs {
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// Barbasch–Vogan type D output for ε-coordinates.
    Bv {
        #[arg(allow_hyphen_values = true)]
        eps: String,
    },
    /// Type of the integral root system of a weight in ϖ-coordinates.
    IntegralType {
        system: String,
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// Positive roots of grade k for a cocharacter given on simple roots.
    Grade {
        system: String,
        #[arg(allow_hyphen_values = true)]
        tau: String,
        #[arg(allow_hyphen_values = true)]
        k: i64,
    },
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn load(path: Option<&PathBuf>) -> anyhow::Result<Vec<CaseRecord>> {
    let text = match path {
        Some(p) => {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
        }
        None => SHIPPED.to_string(),
    };
    Ok(parse_cases(&text)?)
}

fn system(name: &str) -> anyhow::Result<RootSystem> {
    let series: Series = name.parse()?;
    Ok(RootSystem::build(series)?)
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> anyhow::Result<i32> {
    match cmd {
        Command::Verify {
            cases,
            case,
            detail,
        } => {
            let mut records = load(cases.as_ref())?;
            if let Some(id) = case {
                records.retain(|r| r.id() == id);
                if records.is_empty() {
                    bail!("no case `{id}`");
                }
            }
            let reports = verify_all(&records);
            let format = if detail {
                Format::Detail
            } else {
                Format::Table
            };
            out.write_all(emit_report(&reports, format).as_bytes())?;
            Ok(if reports.iter().all(|r| r.passed()) {
                EXIT_PASS
            } else {
                EXIT_FAIL
            })
        }
        Command::Table { cases } => {
            let reports = verify_all(&load(cases.as_ref())?);
            out.write_all(emit_report(&reports, Format::Table).as_bytes())?;
            Ok(if reports.iter().all(|r| r.passed()) {
                EXIT_PASS
            } else {
                EXIT_FAIL
            })
        }
        Command::Rs { seq } => {
            let v = parse_rational_list(&seq)?;
            writeln!(out, "{}", rs_shape(&v))?;
            Ok(EXIT_PASS)
        }
        Command::Bv { eps } => {
            let v = parse_rational_list(&eps)?;
            let trace = bv_type_d(&v)?;
            let cent = orth_centralizer_dim(&trace.output)?;
            writeln!(out, "rs shape: {}", trace.rs_shape)?;
            writeln!(out, "output: {}", trace.output)?;
            writeln!(out, "centraliser dimension: {cent}")?;
            Ok(EXIT_PASS)
        }
        Command::IntegralType {
            system: name,
            weight,
        } => {
            let rs = system(&name)?;
            let w = Weight(parse_rational_list(&weight)?);
            if w.rank() != rs.rank() {
                bail!("expected {} coordinates, got {}", rs.rank(), w.rank());
            }
            let sub = integral_root_system(&rs, &w);
            writeln!(out, "{}", sub.cartan_type)?;
            writeln!(out, "roots: {}", sub.root_count())?;
            writeln!(out, "dimension: {}", sub.dim_algebra(&rs))?;
            Ok(EXIT_PASS)
        }
        Command::Grade {
            system: name,
            tau,
            k,
        } => {
            let rs = system(&name)?;
            let values = parse_rational_list(&tau)?
                .into_iter()
                .map(|x| {
                    if x.is_integer() {
                        i64::try_from(x.to_integer()).map_err(|_| anyhow!("{x} is out of range"))
                    } else {
                        Err(anyhow!("cocharacter values must be integers, got {x}"))
                    }
                })
                .collect::<anyhow::Result<Vec<i64>>>()?;
            let tau = Cocharacter::new(&rs, values)?;
            let roots = graded_positive_roots(&rs, &tau, k);
            for r in &roots {
                writeln!(out, "{}", format_vec(&r.0))?;
            }
            writeln!(out, "count: {}", roots.len())?;
            Ok(EXIT_PASS)
        }
    }
}
