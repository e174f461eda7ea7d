//! The `forcible` command-line front end.
//!
//! Exit codes: 0 forcibly hamiltonian (or success for non-verdict commands),
//! 1 usage or input error, 2 not graphical, 3 not forcibly hamiltonian,
//! 4 inconclusive.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use serde::Serialize;
use serde_json::json;

use crate::degseq::DegreeSequence;
use crate::error::Error;
use crate::graph::{build_cnk, build_exception_graph, SimpleGraph};
use crate::nwgen::{
    count_lower_bound, count_total_lower_bound, enumerate_nw_sequences, nw_construct,
    pi_prime_count, NwParams, PiPrime,
};
use crate::verify::{
    classify, verify_forcibly_hamiltonian, Budget, Verdict, VerificationReport, VerifyOptions,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_GRAPHICAL: i32 = 2;
pub const EXIT_NOT_FORCIBLY_HAMILTONIAN: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "forcible",
    version,
    about = "Forcibly hamiltonian degree sequences: checks, Nash-Williams generator, exhaustive verifier"
)]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    /// K_k ∨ (K̄_k ∪ K_{n−2k})
    Cnk,
    /// K_1 ∨ (K_k ∪ K_{n−k−1})
    Exception,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Theory-only classification of a degree sequence
    Check {
        /// Comma-separated degrees, any order
        #[arg(allow_hyphen_values = true)]
        sequence: String,
    },
    /// Construct Nash-Williams (n,k)-sequences
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Every sequence the construction produces
        #[arg(
            long,
            conflicts_with = "pi_prime",
            required_unless_present = "pi_prime"
        )]
        all: bool,
        /// A single comma-separated modifier of length k-1
        #[arg(long)]
        pi_prime: Option<String>,
    },
    /// Decide forcible hamiltonicity by exhausting all realizations
    Verify {
        #[arg(allow_hyphen_values = true)]
        sequence: String,
        /// Worker threads
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
        /// Realization cap, or `unlimited`
        #[arg(long)]
        budget: Option<String>,
        /// Test each realization directly instead of through its closure
        #[arg(long)]
        no_closure: bool,
    },
    /// Count Nash-Williams sequences against the lower bound
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Print an extremal nonhamiltonian graph as an edge list
    Witness {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        which: Which,
    },
}

/// Failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

pub fn exit_code(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::ForciblyHamiltonian => EXIT_OK,
        Verdict::NotGraphical => EXIT_NOT_GRAPHICAL,
        Verdict::NotForciblyHamiltonian => EXIT_NOT_FORCIBLY_HAMILTONIAN,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

/// Parses `args` (including the program name), runs the command, and
/// returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut buffer = Vec::new();
    let code = match dispatch(&cli, &mut buffer) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            return f.code;
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &buffer),
        None => stdout.write_all(&buffer),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_USAGE;
    }
    code
}

fn dispatch(cli: &Cli, out: &mut Vec<u8>) -> Result<i32, Failure> {
    match &cli.command {
        Command::Check { sequence } => {
            let seq = parse_sequence(sequence)?;
            let report = classify(&seq)?;
            write_report(&report, cli.format, out)?;
            Ok(exit_code(report.verdict))
        }
        Command::Verify {
            sequence,
            jobs,
            budget,
            no_closure,
        } => {
            let seq = parse_sequence(sequence)?;
            let options = VerifyOptions {
                budget: parse_budget(budget.as_deref())?,
                jobs: *jobs as usize,
                closure_fast_path: !no_closure,
            };
            let report = verify_forcibly_hamiltonian(&seq, &options)?;
            write_report(&report, cli.format, out)?;
            Ok(exit_code(report.verdict))
        }
        Command::Generate {
            n,
            k,
            all,
            pi_prime,
        } => {
            let params = NwParams::new(*n, *k)?;
            let (pi, sequences) = match pi_prime {
                Some(raw) if !*all => {
                    let pi = PiPrime::new(parse_list(raw)?, *k)?;
                    let seq = nw_construct(params, &pi)?;
                    (Some(pi), vec![seq])
                }
                _ => (None, enumerate_nw_sequences(params).into_iter().collect()),
            };
            write_sequences(params, pi.as_ref(), &sequences, cli.format, out)?;
            Ok(EXIT_OK)
        }
        Command::Count { n, k } => {
            let total_bound = count_total_lower_bound(*n)?;
            let params: Vec<NwParams> = match k {
                Some(k) => vec![NwParams::new(*n, *k)?],
                None => NwParams::all_for(*n).collect(),
            };
            let rows = params
                .iter()
                .map(|&p| CountRow::compute(p))
                .collect::<Result<Vec<_>, Failure>>()?;
            let total = k.is_none().then(|| {
                let count: usize = rows.iter().map(|r| r.count).sum();
                (count, total_bound)
            });
            write_counts(*n, &rows, total, cli.format, out)?;
            Ok(EXIT_OK)
        }
        Command::Witness { n, k, which } => {
            let g = match which {
                Which::Cnk => build_cnk(*n, *k)?,
                Which::Exception => build_exception_graph(*n, *k, 1)?,
            };
            write_graph(&g, cli.format, out)?;
            Ok(EXIT_OK)
        }
    }
}

fn parse_sequence(raw: &str) -> Result<DegreeSequence, Failure> {
    raw.parse::<DegreeSequence>().map_err(Failure::from)
}

fn parse_list(raw: &str) -> Result<Vec<usize>, Failure> {
    raw.split(',')
        .map(|t| {
            t.trim().parse::<usize>().map_err(|_| Failure {
                code: EXIT_USAGE,
                message: format!("not a nonnegative integer: {:?}", t.trim()),
            })
        })
        .collect()
}

fn parse_budget(raw: Option<&str>) -> Result<Budget, Failure> {
    match raw {
        None => Ok(Budget::Auto),
        Some("unlimited") => Ok(Budget::Unlimited),
        Some(s) => s.parse().map(Budget::Cap).map_err(|_| Failure {
            code: EXIT_USAGE,
            message: format!("budget must be a count or `unlimited`, got {s:?}"),
        }),
    }
}

fn fmt_opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

fn edges_inline(g: &SimpleGraph) -> String {
    g.edges()
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_report(r: &VerificationReport, format: Format, out: &mut Vec<u8>) -> Result<(), Failure> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, r).map_err(|e| Failure {
                code: EXIT_USAGE,
                message: e.to_string(),
            })?;
            out.push(b'\n');
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["key", "value"])?;
            let basis = r.basis.map(|b| serde_json::to_value(b).unwrap_or_default());
            let rows = [
                ("sequence", r.sequence.to_string()),
                ("graphical", r.graphical.to_string()),
                ("chvatal_satisfied", r.chvatal.satisfied.to_string()),
                ("chvatal_failing_k", fmt_opt(r.chvatal.failing_k)),
                ("nw_shape_k", fmt_opt(r.nw_shape_k)),
                ("exception", r.exception.to_string()),
                ("verdict", r.verdict.as_str().to_string()),
                ("basis", fmt_opt(basis.as_ref().and_then(|b| b.as_str()))),
                ("realizations_checked", r.realizations_checked.to_string()),
                ("closure_accepts", r.closure_accepts.to_string()),
                (
                    "counterexample",
                    r.counterexample
                        .as_ref()
                        .map_or_else(String::new, edges_inline),
                ),
            ];
            for (k, v) in rows {
                w.write_record([k, v.as_str()])?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "sequence: {}", r.sequence)?;
            writeln!(out, "graphical: {}", r.graphical)?;
            match r.chvatal.failing_k {
                None => writeln!(out, "chvatal condition: satisfied")?,
                Some(k) => writeln!(out, "chvatal condition: fails at k = {k}")?,
            }
            match r.nw_shape_k {
                None => writeln!(out, "nash-williams shape: none")?,
                Some(k) => writeln!(out, "nash-williams shape: k = {k}")?,
            }
            writeln!(out, "exception: {}", r.exception)?;
            match r.basis {
                Some(b) => writeln!(
                    out,
                    "verdict: {} ({})",
                    r.verdict.as_str(),
                    serde_json::to_value(b)
                        .unwrap_or_default()
                        .as_str()
                        .unwrap_or("")
                )?,
                None => writeln!(out, "verdict: {}", r.verdict.as_str())?,
            }
            writeln!(
                out,
                "realizations checked: {} (closure accepts: {})",
                r.realizations_checked, r.closure_accepts
            )?;
            if let Some(g) = &r.counterexample {
                writeln!(out, "counterexample:")?;
                out.extend_from_slice(g.to_edge_list().as_bytes());
            }
        }
    }
    Ok(())
}

fn write_sequences(
    p: NwParams,
    pi: Option<&PiPrime>,
    sequences: &[DegreeSequence],
    format: Format,
    out: &mut Vec<u8>,
) -> Result<(), Failure> {
    match format {
        Format::Json => {
            let value = json!({
                "n": p.n(),
                "k": p.k(),
                "pi_prime": pi.map(|x| x.entries()),
                "sequences": sequences,
            });
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&value).unwrap_or_default()
            )?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header = vec!["n".to_string(), "k".to_string()];
            header.extend((1..=p.n()).map(|j| format!("d{j}")));
            w.write_record(&header)?;
            for s in sequences {
                let mut row = vec![p.n().to_string(), p.k().to_string()];
                row.extend(s.degrees().iter().map(|d| d.to_string()));
                w.write_record(&row)?;
            }
            w.flush()?;
        }
        Format::Text => {
            for s in sequences {
                writeln!(out, "{s}")?;
            }
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct CountRow {
    k: usize,
    count: usize,
    pi_primes: u128,
    #[serde(serialize_with = "ratio_string")]
    lower_bound: Ratio<u128>,
    bound_holds: bool,
}

fn ratio_string<S: serde::Serializer>(r: &Ratio<u128>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl CountRow {
    fn compute(p: NwParams) -> Result<Self, Failure> {
        let count = enumerate_nw_sequences(p).len();
        let pi_primes = pi_prime_count(p.k())?;
        Ok(Self {
            k: p.k(),
            count,
            pi_primes,
            lower_bound: count_lower_bound(p.k())?,
            bound_holds: 2 * count as u128 >= pi_primes,
        })
    }
}

fn write_counts(
    n: usize,
    rows: &[CountRow],
    total: Option<(usize, Ratio<u128>)>,
    format: Format,
    out: &mut Vec<u8>,
) -> Result<(), Failure> {
    match format {
        Format::Json => {
            let value = json!({
                "n": n,
                "rows": rows,
                "total": total.map(|t| t.0),
                "total_lower_bound": total.map(|t| t.1.to_string()),
            });
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&value).unwrap_or_default()
            )?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["k", "count", "lower_bound"])?;
            for r in rows {
                w.write_record([
                    r.k.to_string(),
                    r.count.to_string(),
                    r.lower_bound.to_string(),
                ])?;
            }
            if let Some((count, bound)) = total {
                w.write_record(["total".to_string(), count.to_string(), bound.to_string()])?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "n = {n}")?;
            writeln!(out, "{:<6} {:>8} {:>12}", "k", "count", "lower_bound")?;
            for r in rows {
                writeln!(
                    out,
                    "{:<6} {:>8} {:>12}",
                    r.k,
                    r.count,
                    r.lower_bound.to_string()
                )?;
            }
            if let Some((count, bound)) = total {
                writeln!(out, "{:<6} {:>8} {:>12}", "total", count, bound.to_string())?;
            }
        }
    }
    Ok(())
}

fn write_graph(g: &SimpleGraph, format: Format, out: &mut Vec<u8>) -> Result<(), Failure> {
    match format {
        Format::Json => {
            let value = json!({
                "n": g.n(),
                "edges": g.edges(),
                "degree_sequence": g.degree_sequence(),
            });
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&value).unwrap_or_default()
            )?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["u", "v"])?;
            for (u, v) in g.edges() {
                w.write_record([u.to_string(), v.to_string()])?;
            }
            w.flush()?;
        }
        Format::Text => out.extend_from_slice(g.to_edge_list().as_bytes()),
    }
    Ok(())
}
