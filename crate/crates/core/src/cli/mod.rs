//! The `homdual` command line.

mod spec;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};

use crate::automata::nfa_of_graph;
use crate::cores::{antichain_violation, core_of};
use crate::digraph::{hom_exists, DiGraph, VertexMap};
use crate::error::Error;
use crate::families::family_hits;
use crate::verify::{enumerate_ids, verify_duality, VerifyOptions, MAX_ENUMERATION_VERTICES};

pub use spec::{parse_family_spec, parse_graph_spec, read_graph_file};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "homdual", version, about = "Digraph homomorphisms, cores and duality pairs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Search for a homomorphism A -> B; prints it as `u f(u)` lines.
    Hom { a: String, b: String },
    /// Print the core of a graph.
    Core { graph: String },
    /// Check that no graph maps to another one in the list.
    Antichain {
        #[arg(required = true)]
        graphs: Vec<String>,
    },
    /// Print a named graph, e.g. `P 3 2`, `D 3`, `G1`, `gadget (()()) +- -+ -- ++`.
    Gen {
        #[arg(required = true, trailing_var_arg = true, allow_hyphen_values = true)]
        spec: Vec<String>,
    },
    /// Find a member of a family mapping to a graph.
    FamilyMember { family: String, graph: String },
    /// Print the path-word automaton of a graph.
    Nfa { graph: String },
    /// Check a duality pair on every digraph of the given sizes.
    VerifyDuality {
        family: String,
        #[arg(required = true)]
        duals: Vec<String>,
        #[arg(long)]
        n_max: usize,
        /// Smallest vertex count checked; defaults to `--n-max`.
        #[arg(long)]
        n_min: Option<usize>,
        /// Check one graph per isomorphism class.
        #[arg(long)]
        dedup: bool,
        /// Worker threads; overrides the HOMDUAL_JOBS environment variable.
        #[arg(long)]
        jobs: Option<usize>,
        /// Label the run as evidence even for an exact family.
        #[arg(long)]
        truncated: bool,
    },
    /// List all digraphs on N vertices.
    Enumerate {
        n: usize,
        #[arg(long)]
        dedup: bool,
    },
}

enum Failure {
    Usage(String),
    Input(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

fn write_map(out: &mut dyn Write, m: &VertexMap) -> std::io::Result<()> {
    for (u, v) in m.images().iter().enumerate() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

fn graph(arg: &str) -> Result<DiGraph, Failure> {
    Ok(parse_graph_spec(arg)?)
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let io = |e: std::io::Error| Failure::Usage(format!("write failed: {e}"));
    match command {
        Command::Hom { a, b } => {
            let (a, b) = (graph(&a)?, graph(&b)?);
            match hom_exists(&a, &b) {
                Some(m) => {
                    write_map(out, &m).map_err(io)?;
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "no homomorphism").map_err(io)?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Core { graph: g } => {
            write!(out, "{}", core_of(&graph(&g)?)).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Antichain { graphs } => {
            let gs = graphs.iter().map(|g| graph(g)).collect::<Result<Vec<_>, _>>()?;
            match antichain_violation(&gs) {
                None => {
                    writeln!(out, "antichain").map_err(io)?;
                    Ok(EXIT_OK)
                }
                Some((i, j)) => {
                    writeln!(out, "not an antichain: {} -> {}", graphs[i], graphs[j]).map_err(io)?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Gen { spec } => {
            write!(out, "{}", graph(&spec.join(":"))?).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::FamilyMember { family, graph: g } => {
            let family = parse_family_spec(&family)?;
            match family_hits(&family, &graph(&g)?) {
                Some(w) => {
                    writeln!(out, "member {}", w.member).map_err(io)?;
                    write!(out, "{}", w.graph).map_err(io)?;
                    writeln!(out, "map").map_err(io)?;
                    write_map(out, &w.map).map_err(io)?;
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "no member").map_err(io)?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Nfa { graph: g } => {
            write!(out, "{}", nfa_of_graph(&graph(&g)?)).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::VerifyDuality { family, duals, n_max, n_min, dedup, jobs, truncated } => {
            if n_max > MAX_ENUMERATION_VERTICES {
                return Err(Failure::Usage(format!("--n-max is at most {MAX_ENUMERATION_VERTICES}")));
            }
            let n_min = n_min.unwrap_or(n_max);
            if n_min > n_max {
                return Err(Failure::Usage("--n-min exceeds --n-max".into()));
            }
            let family = parse_family_spec(&family)?;
            let duals = duals.iter().map(|d| graph(d)).collect::<Result<Vec<_>, _>>()?;
            let options =
                VerifyOptions { n_min, ..VerifyOptions::up_to(n_max) }.dedup(dedup).jobs(jobs).truncated(truncated);
            let report = verify_duality(&family, &duals, &options);
            write!(out, "{}", report.render()).map_err(io)?;
            writeln!(err, "checked {} graphs in {:.2?}", report.tested(), report.elapsed).map_err(io)?;
            Ok(if report.is_ok() { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Enumerate { n, dedup } => {
            if n > MAX_ENUMERATION_VERTICES {
                return Err(Failure::Usage(format!("N is at most {MAX_ENUMERATION_VERTICES}")));
            }
            let ids = enumerate_ids(n, dedup);
            for id in &ids {
                writeln!(out, "graph {id}").map_err(io)?;
                write!(out, "{}", id.graph()).map_err(io)?;
            }
            writeln!(out, "count {}", ids.len()).map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line with `args` (program name first) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
