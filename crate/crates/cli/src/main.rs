//! `splitoff`: (2k,k)-connectivity tools on text-format multigraphs.
//!
//! Exit codes: 0 positive verdict or success, 1 negative verdict (not
//! connected, obstacle found), 2 usage, format or precondition error,
//! 3 decomposition refused for odd `k`, 4 internal defect.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use splitoff::augmentation::{augment, certificate_bruteforce};
use splitoff::connectivity::{check, check_in_v};
use splitoff::construction::{decompose, generate};
use splitoff::splitting::{complete_splitting, SplitOutcome};
use splitoff::{BiSet, ConnParams, Error, MultiGraph, VertexId};

const COUNTEREXAMPLE: &str = "fixtures/k4_plus_t.txt";

#[derive(Parser)]
#[command(
    name = "splitoff",
    version,
    about = "(2k,k)-connectivity: check, split, augment, construct"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Graph file in the text format, or `-` for stdin
    input: PathBuf,
    /// Connectivity parameter k (target is (2k,k))
    #[arg(long)]
    k: u32,
    /// Print JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Test (2k,k)-connectivity; exit 1 with a violated bi-set otherwise
    Check(Common),
    /// Split off vertex S completely, or report an obstacle (exit 1)
    Split {
        #[command(flatten)]
        common: Common,
        /// Vertex to split off
        #[arg(long)]
        s: u32,
    },
    /// Add the fewest edges making the graph (2k,k)-connected
    Augment {
        #[command(flatten)]
        common: Common,
        /// Write the augmented graph here
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a random (2k,k)-connected graph from kK3 (k even)
    Generate {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        seed: u64,
        /// Graph output file; stdout when absent
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the construction trace (JSON lines) here
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Print a construction trace (JSON lines) rebuilding the graph from kK3
    Decompose {
        /// Graph file in the text format, or `-` for stdin
        input: PathBuf,
        #[arg(long)]
        k: u32,
    },
    /// Best family of innerly-disjoint deficient bi-sets (small graphs)
    Certify(Common),
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OddK { .. } => 3,
            Error::Defect(_) => 4,
            _ => 2,
        };
        let mut message = e.to_string();
        if code == 3 {
            message.push_str(&format!("; see {COUNTEREXAMPLE}"));
        }
        Failure { code, message }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    io::stdout()
        .write_all(out.as_bytes())
        .expect("stdout is writable");
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command, out: &mut String) -> Result<u8, Failure> {
    match command {
        Command::Check(c) => {
            let (g, p) = load(&c)?;
            let verdict = check(&g, p);
            if c.json {
                line(out, &serde_json::to_string(&verdict).expect("serializable"));
            } else if verdict.ok {
                line(out, &format!("ok: ({},{})-connected", p.target(), p.k()));
            } else {
                let mut msg = format!("not ({},{})-connected", p.target(), p.k());
                if let (Some(w), Some(f)) = (&verdict.witness, verdict.f) {
                    msg.push_str(&format!(": {} has f = {f} < {}", show(w), p.target()));
                } else {
                    msg.push_str(": fewer than 3 vertices");
                }
                line(out, &msg);
            }
            Ok(if verdict.ok { 0 } else { 1 })
        }
        Command::Split { common, s } => {
            let (h, p) = load(&common)?;
            let s = VertexId(s);
            if !check_in_v(&h, s, p)?.ok {
                return Err(usage(format!(
                    "graph is not ({},{})-connected in V - {s}",
                    p.target(),
                    p.k()
                )));
            }
            match complete_splitting(&h, s, p)? {
                SplitOutcome::Complete(trace) => {
                    if common.json {
                        line(out, &serde_json::to_string(&trace).expect("serializable"));
                    } else {
                        for pair in trace.pairs() {
                            line(
                                out,
                                &format!("split ({s}{}, {s}{})", tag(pair.u), tag(pair.v)),
                            );
                        }
                        out.push_str(&trace.final_graph.to_text());
                    }
                    Ok(0)
                }
                SplitOutcome::Obstacle(ob) => {
                    if common.json {
                        line(out, &serde_json::to_string(&ob).expect("serializable"));
                    } else {
                        line(out, &format!("obstacle at {s} with hub {}", ob.t));
                        for m in &ob.members {
                            line(out, &format!("  {}", show(m)));
                        }
                    }
                    Ok(1)
                }
            }
        }
        Command::Augment { common, output } => {
            let (g, p) = load(&common)?;
            let r = augment(&g, p)?;
            if let Some(path) = output {
                write_file(&path, &r.augmented.to_text())?;
            }
            if common.json {
                line(out, &serde_json::to_string(&r).expect("serializable"));
            } else {
                line(out, &format!("alpha = {}", r.alpha()));
                for (u, v) in &r.added {
                    line(out, &format!("add {u} {v}"));
                }
            }
            Ok(0)
        }
        Command::Generate {
            k,
            steps,
            seed,
            output,
            trace,
        } => {
            let p = params(k)?;
            let (g, t) = generate(p, steps, seed)?;
            if let Some(path) = trace {
                write_file(&path, &t.to_jsonl())?;
            }
            match output {
                Some(path) => write_file(&path, &g.to_text())?,
                None => out.push_str(&g.to_text()),
            }
            Ok(0)
        }
        Command::Decompose { input, k } => {
            let p = params(k)?;
            let g = read_graph(&input)?;
            out.push_str(&decompose(&g, p)?.to_jsonl());
            Ok(0)
        }
        Command::Certify(c) => {
            let (g, p) = load(&c)?;
            let cert = certificate_bruteforce(&g, p)?;
            if c.json {
                line(out, &serde_json::to_string(&cert).expect("serializable"));
            } else {
                line(
                    out,
                    &format!(
                        "value = {} (at least {} edges needed)",
                        cert.value,
                        cert.value.div_ceil(2)
                    ),
                );
                for m in &cert.members {
                    line(out, &format!("  {}", show(m)));
                }
            }
            Ok(0)
        }
    }
}

fn tag(v: VertexId) -> String {
    format!("-{v}")
}

fn show(x: &BiSet) -> String {
    let v = json!({"outer": x.outer(), "inner": x.inner()});
    format!("(outer {}, inner {})", v["outer"], v["inner"])
}

fn line(out: &mut String, s: &str) {
    out.push_str(s);
    out.push('\n');
}

fn params(k: u32) -> Result<ConnParams, Failure> {
    ConnParams::new(k).map_err(Failure::from)
}

fn load(c: &Common) -> Result<(MultiGraph, ConnParams), Failure> {
    let p = params(c.k)?;
    Ok((read_graph(&c.input)?, p))
}

fn read_graph(path: &Path) -> Result<MultiGraph, Failure> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| usage(format!("stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?
    };
    MultiGraph::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}
