//! The `domtile` command line.
//!
//! Tilings are referred to by their 1-based position in the canonical
//! enumeration order; `domtile enumerate --show-edges` prints that table.
//! Exit codes: 0 success, 1 domain failure (untileable, not connected, not
//! simply connected, certificate rejected), 2 usage or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::binomial::{cycle_decomposition, quadratic_decomposition, verify_certificate, DecompositionCertificate, DecompositionError};
use crate::graph::TilingGraph;
use crate::ideal::{presentation, CasStyle, IdealKind};
use crate::moves::{apply_move, connection_path, is_connected_by, move_set, MoveKind};
use crate::region::Region;
use crate::sampler::{empirical_distribution, random_walk, ChainConfig};
use crate::tiling::{enumerate_tilings, count_tilings, Tiling};

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "domtile", version, about = "Domino tilings of cubiculated regions and their binomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the number of tilings.
    Count { region: PathBuf },
    /// List all tilings, one edge set per line.
    Enumerate {
        region: PathBuf,
        /// Print `index<TAB>edges<TAB>dominoes` instead.
        #[arg(long)]
        show_edges: bool,
    },
    /// Decide whether a move set connects the tiling space.
    Connectivity {
        region: PathBuf,
        /// flip, flip+trit or cycles
        #[arg(long, default_value = "flip")]
        moves: MoveKind,
    },
    /// Shortest move sequence between two tilings.
    Path {
        region: PathBuf,
        #[arg(long)]
        t1: usize,
        #[arg(long)]
        t2: usize,
        #[arg(long, default_value = "flip")]
        moves: MoveKind,
    },
    /// Certificate writing y^T1 - y^T2 in terms of flip (or cycle) binomials.
    Decompose {
        region: PathBuf,
        #[arg(long)]
        t1: usize,
        #[arg(long)]
        t2: usize,
        #[arg(long, value_enum, default_value_t = Method::Quadratic)]
        method: Method,
    },
    /// Check a certificate file (`-` reads standard input).
    Verify {
        certificate: String,
        /// Also check that claimed flips and cycles exist in this region.
        #[arg(long)]
        region: Option<PathBuf>,
    },
    /// Print generators of an ideal of the region.
    Ideals {
        region: PathBuf,
        #[arg(long, default_value = "toric")]
        which: IdealKind,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run the Metropolis chain; prints the final tiling, or a frequency
    /// table when more than one sample is requested.
    Sample {
        region: PathBuf,
        #[arg(long, default_value = "flip")]
        moves: MoveKind,
        #[arg(long, default_value_t = 10_000)]
        steps: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        burn_in: u64,
        /// Index of the start tiling.
        #[arg(long, default_value_t = 1)]
        start: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Quadratic,
    Cycles,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Plain,
    Macaulay2,
    Singular,
}

enum Failure {
    Usage(String),
    Domain { stdout: String, message: String },
}

impl Failure {
    fn domain(message: impl ToString) -> Failure {
        Failure::Domain {
            stdout: String::new(),
            message: message.to_string(),
        }
    }
}

/// Runs the command line `args` (program name first), reading standard
/// input only if `verify -` asks for it.
pub fn run<I, T>(args: I) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    execute(args, &mut || {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    })
}

/// Like [`run`], with `input` standing in for standard input.
pub fn run_with_input<I, T>(args: I, input: &str) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    execute(args, &mut || Ok(input.to_string()))
}

fn execute<I, T>(args: I, stdin: &mut dyn FnMut() -> std::io::Result<String>) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CliOutcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(cli.command, stdin) {
        Ok(stdout) => CliOutcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Usage(message)) => CliOutcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        },
        Err(Failure::Domain { stdout, message }) => CliOutcome {
            code: 1,
            stdout,
            stderr: format!("error: {message}\n"),
        },
    }
}

fn load(path: &Path) -> Result<TilingGraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let region = Region::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(TilingGraph::new(&region))
}

fn tilings_of(graph: &TilingGraph) -> Result<Vec<Tiling>, Failure> {
    let tilings = enumerate_tilings(graph);
    if tilings.is_empty() {
        return Err(Failure::domain("region has no tiling"));
    }
    Ok(tilings)
}

fn pick(tilings: &[Tiling], index: usize) -> Result<&Tiling, Failure> {
    index
        .checked_sub(1)
        .and_then(|i| tilings.get(i))
        .ok_or_else(|| Failure::Usage(format!("tiling index {index} is out of range 1..={}", tilings.len())))
}

fn index_of(tilings: &[Tiling], t: &Tiling) -> usize {
    tilings.binary_search(t).map_or(0, |i| i + 1)
}

fn dispatch(command: Command, stdin: &mut dyn FnMut() -> std::io::Result<String>) -> Result<String, Failure> {
    match command {
        Command::Count { region } => Ok(format!("{}\n", count_tilings(&load(&region)?))),

        Command::Enumerate { region, show_edges } => {
            let graph = load(&region)?;
            let mut out = String::new();
            for (i, t) in enumerate_tilings(&graph).iter().enumerate() {
                if show_edges {
                    let dominoes: Vec<String> = t
                        .edges()
                        .iter()
                        .map(|&e| {
                            let (a, b) = graph.endpoints(e);
                            format!("{}-{}", graph.cell(a), graph.cell(b))
                        })
                        .collect();
                    out.push_str(&format!("{}\t{t}\t{}\n", i + 1, dominoes.join(" ")));
                } else {
                    out.push_str(&format!("{t}\n"));
                }
            }
            Ok(out)
        }

        Command::Connectivity { region, moves } => {
            let graph = load(&region)?;
            let verdict = is_connected_by(&graph, moves).map_err(Failure::domain)?;
            let line = format!("{verdict}\n");
            if verdict.connected {
                Ok(line)
            } else {
                Err(Failure::Domain {
                    stdout: line,
                    message: format!("{moves} moves do not connect the tiling space"),
                })
            }
        }

        Command::Path { region, t1, t2, moves } => {
            let graph = load(&region)?;
            let tilings = tilings_of(&graph)?;
            let (a, b) = (pick(&tilings, t1)?, pick(&tilings, t2)?);
            let path = connection_path(a, b, &move_set(&graph, moves)).map_err(Failure::domain)?;
            let mut out = format!("{t1}\t{a}\n");
            let mut current = a.clone();
            for m in path {
                current = apply_move(&current, &m).map_err(Failure::domain)?;
                out.push_str(&format!("{}\t{current}\t{m}\n", index_of(&tilings, &current)));
            }
            Ok(out)
        }

        Command::Decompose { region, t1, t2, method } => {
            let graph = load(&region)?;
            let tilings = tilings_of(&graph)?;
            let (a, b) = (pick(&tilings, t1)?, pick(&tilings, t2)?);
            let cert = match method {
                Method::Quadratic => quadratic_decomposition(&graph, a, b),
                Method::Cycles => cycle_decomposition(&graph, a, b),
            }
            .map_err(|e| match e {
                DecompositionError::Region(_) | DecompositionError::NotPlanar(_) | DecompositionError::NotSimplyConnected => {
                    Failure::domain(e)
                }
                other => Failure::domain(format!("internal: {other}")),
            })?;
            Ok(cert.to_text())
        }

        Command::Verify { certificate, region } => {
            let text = if certificate == "-" {
                stdin().map_err(|e| Failure::Usage(format!("standard input: {e}")))?
            } else {
                fs::read_to_string(&certificate).map_err(|e| Failure::Usage(format!("{certificate}: {e}")))?
            };
            let cert = DecompositionCertificate::parse(&text).map_err(|e| Failure::Usage(e.to_string()))?;
            let graph = region.as_deref().map(load).transpose()?;
            match verify_certificate(&cert, graph.as_ref()) {
                Ok(()) => Ok(format!("ok {} terms\n", cert.len())),
                Err(e) => Err(Failure::Domain {
                    stdout: format!("mismatch {e}\n"),
                    message: "certificate rejected".into(),
                }),
            }
        }

        Command::Ideals { region, which, format } => {
            let graph = load(&region)?;
            let pres = presentation(&graph, which).map_err(Failure::domain)?;
            Ok(match format {
                Format::Plain => pres.to_plain(),
                Format::Macaulay2 => pres.export(CasStyle::Macaulay2),
                Format::Singular => pres.export(CasStyle::Singular),
            })
        }

        Command::Sample {
            region,
            moves,
            steps,
            seed,
            samples,
            burn_in,
            start,
        } => {
            let graph = load(&region)?;
            let tilings = tilings_of(&graph)?;
            let cfg = ChainConfig {
                moves,
                steps,
                seed,
                start: pick(&tilings, start)?.clone(),
            };
            if samples <= 1 {
                let mut cfg = cfg;
                cfg.steps += burn_in;
                let t = random_walk(&graph, &cfg).map_err(Failure::domain)?;
                Ok(format!("{}\t{t}\n", index_of(&tilings, &t)))
            } else {
                let d = empirical_distribution(&graph, &cfg, samples, burn_in).map_err(Failure::domain)?;
                Ok(d
                    .counts
                    .iter()
                    .map(|(t, &k)| format!("{}\t{t}\t{k}\t{:.6}\n", index_of(&tilings, t), d.frequency(t)))
                    .collect())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors_exit_two() {
        let out = run(["domtile", "frobnicate"]);
        assert_eq!(out.code, 2);
        assert!(!out.stderr.is_empty());
        let out = run(["domtile", "count", "/nonexistent.region"]);
        assert_eq!(out.code, 2);
    }

    #[test]
    fn help_exits_zero() {
        let out = run(["domtile", "--help"]);
        assert_eq!(out.code, 0);
        for sub in ["count", "enumerate", "connectivity", "path", "decompose", "verify", "ideals", "sample"] {
            assert!(out.stdout.contains(sub), "{sub} missing from help");
        }
    }

    #[test]
    fn verify_reads_input() {
        let cert = "target: y1*y4 - y2*y3\n+ 1 * ( y1*y4 - y2*y3 )\n";
        let out = run_with_input(["domtile", "verify", "-"], cert);
        assert_eq!((out.code, out.stdout.as_str()), (0, "ok 1 terms\n"));
        let out = run_with_input(["domtile", "verify", "-"], "target: y1 - y2\n");
        assert_eq!(out.code, 1);
        let out = run_with_input(["domtile", "verify", "-"], "nonsense");
        assert_eq!(out.code, 2);
    }
}
