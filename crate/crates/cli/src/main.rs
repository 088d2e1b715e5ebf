use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ijcomp_core::chordality::{find_good_subdigraph, induces_triangle, is_chordal};
use ijcomp_core::cover::{check_cover, find_sdr, repair_cover, search_cover, witness_digraph, SdrOutcome};
use ijcomp_core::designs::{bibd_to_digraph, steiner_triple, verify_bibd, Bibd};
use ijcomp_core::families::containment;
use ijcomp_core::io::{digraph_to_dot, graph_to_dot, parse_any, AnyGraph, Labelled, ParseError};
use ijcomp_core::{competition_graph, recognize, CliqueCover, DegreeBounds, Digraph, Graph, SdrAssignment};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(name = "ijcomp", version, about = "Competition graphs of digraphs with bounded in- and outdegrees")]
struct Cli {
    /// Output format for the result document.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Competition graph of a digraph.
    Compete { input: Option<PathBuf> },
    /// Decide membership in the <i,j> family, with a certificate.
    Recognize {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        input: Option<PathBuf>,
    },
    /// Search for a cover meeting the <i,j> conditions.
    Cover {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        /// Repair the cover until its complements have an SDR and print it.
        #[arg(long)]
        sdr: bool,
        input: Option<PathBuf>,
    },
    /// Chordality of a graph, with a hole when it is not chordal.
    Chordal { input: Option<PathBuf> },
    /// Search a digraph for a good subdigraph.
    GoodSubdigraph { input: Option<PathBuf> },
    /// Whether a digraph contains a triangle-inducing pattern.
    Triangle { input: Option<PathBuf> },
    /// Check a block design given as JSON.
    BibdVerify { input: Option<PathBuf> },
    /// Variety-to-block digraph of a design with lambda = 1.
    BibdDigraph { input: Option<PathBuf> },
    /// Steiner triple system on n points.
    Sts {
        #[arg(long)]
        n: usize,
    },
    /// Witness digraph of a graph from a cover and an optional SDR.
    Witness {
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        sdr: Option<PathBuf>,
        input: Option<PathBuf>,
    },
    /// Containment between two families, given as `i,j` pairs.
    Containment {
        #[arg(long, value_parser = parse_bounds)]
        a: DegreeBounds,
        #[arg(long, value_parser = parse_bounds)]
        b: DegreeBounds,
    },
    /// Re-emit a graph or digraph as DOT, keeping vertex names.
    ExportDot {
        /// Read text input as a digraph.
        #[arg(long)]
        directed: bool,
        input: Option<PathBuf>,
    },
}

fn parse_bounds(s: &str) -> Result<DegreeBounds, String> {
    let (i, j) = s.split_once(',').ok_or_else(|| format!("expected `i,j`, got `{s}`"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    DegreeBounds::new(num(i)?, num(j)?).map_err(|e| e.to_string())
}

/// A finished command: the document to print and whether the answer was
/// positive.
struct Outcome {
    document: String,
    positive: bool,
}

impl Outcome {
    fn json(value: &impl Serialize, positive: bool) -> Result<Self, String> {
        let document = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
        Ok(Self { document, positive })
    }

    fn graph(g: &Graph, names: Option<&[String]>, format: Format) -> Result<Self, String> {
        match format {
            Format::Json => Self::json(g, true),
            Format::Dot => Ok(Self { document: graph_to_dot(g, names), positive: true }),
        }
    }

    fn digraph(d: &Digraph, names: Option<&[String]>, format: Format) -> Result<Self, String> {
        match format {
            Format::Json => Self::json(d, true),
            Format::Dot => Ok(Self { document: digraph_to_dot(d, names), positive: true }),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command, cli.format) {
        Ok(out) => {
            println!("{}", out.document.trim_end());
            if out.positive {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, format: Format) -> Result<Outcome, String> {
    let json_only = |name: &str| -> Result<(), String> {
        if format == Format::Dot {
            return Err(format!("{name} produces no graph; DOT output is not available"));
        }
        Ok(())
    };
    match command {
        Command::Compete { input } => {
            let Labelled { value, names } = read_digraph(input.as_deref())?;
            Outcome::graph(&competition_graph(&value), names.as_deref(), format)
        }
        Command::Recognize { i, j, input } => {
            let b = bounds(i, j)?;
            let Labelled { value: g, names } = read_graph(input.as_deref())?;
            let cert = recognize(&g, b).map_err(|e| e.to_string())?;
            match (format, cert.witness()) {
                (Format::Dot, Some(d)) => Outcome::digraph(d, names.as_deref(), format),
                _ => Outcome::json(&cert, cert.is_member()),
            }
        }
        Command::Cover { i, j, sdr, input } => {
            json_only("cover")?;
            let b = bounds(i, j)?;
            let g = read_graph(input.as_deref())?.value;
            let Some(cover) = search_cover(&g, b).map_err(|e| e.to_string())? else {
                return Outcome::json(&json!({ "verdict": "none exists" }), false);
            };
            if !sdr {
                return Outcome::json(&cover, true);
            }
            let (cover, sdr) = if g.is_edgeless() {
                (cover, SdrAssignment::new(Vec::new()))
            } else if cover.cliques().iter().any(|c| c.len() == g.vertex_count()) {
                // a spanning clique means a complete graph; its SDR is taken as found
                match find_sdr(&g, &cover) {
                    SdrOutcome::Sdr(s) => (cover, s),
                    SdrOutcome::Violation(v) => {
                        return Outcome::json(&json!({ "cliques": cover.cliques(), "violation": v }), false)
                    }
                }
            } else {
                let r = repair_cover(&g, &cover, b).map_err(|e| e.to_string())?;
                (r.cover, r.sdr)
            };
            Outcome::json(&json!({ "cliques": cover.cliques(), "representatives": sdr.representatives() }), true)
        }
        Command::Chordal { input } => {
            json_only("chordal")?;
            let report = is_chordal(&read_graph(input.as_deref())?.value);
            Outcome::json(&report, report.chordal)
        }
        Command::GoodSubdigraph { input } => {
            json_only("good-subdigraph")?;
            let report = find_good_subdigraph(&read_digraph(input.as_deref())?.value).map_err(|e| e.to_string())?;
            Outcome::json(&report, report.found)
        }
        Command::Triangle { input } => {
            json_only("triangle")?;
            let found = induces_triangle(&read_digraph(input.as_deref())?.value);
            Outcome::json(&json!({ "induces_triangle": found }), found)
        }
        Command::BibdVerify { input } => {
            json_only("bibd-verify")?;
            let design: Bibd = read_json(input.as_deref())?;
            match verify_bibd(&design) {
                Ok(()) => Outcome::json(&json!({ "valid": true }), true),
                Err(v) => Outcome::json(&json!({ "valid": false, "violation": v.to_string() }), false),
            }
        }
        Command::BibdDigraph { input } => {
            let design: Bibd = read_json(input.as_deref())?;
            let d = bibd_to_digraph(&design).map_err(|e| e.to_string())?;
            Outcome::digraph(&d, None, format)
        }
        Command::Sts { n } => {
            json_only("sts")?;
            match steiner_triple(n).map_err(|e| e.to_string())? {
                Some(design) => Outcome::json(&design, true),
                None => Outcome::json(&json!({ "verdict": "none exists" }), false),
            }
        }
        Command::Witness { cover, sdr, input } => {
            let Labelled { value: g, names } = read_graph(input.as_deref())?;
            let c: CliqueCover = read_json(Some(&cover))?;
            let n = g.vertex_count().max(1);
            check_cover(&g, &c, bounds(n, n)?).map_err(|d| format!("cover rejected: {d}"))?;
            let s = match sdr {
                Some(path) => read_json::<SdrAssignment>(Some(&path))?,
                None => match find_sdr(&g, &c) {
                    SdrOutcome::Sdr(s) => s,
                    SdrOutcome::Violation(v) => return Outcome::json(&json!({ "verdict": "no SDR", "violation": v }), false),
                },
            };
            let d = witness_digraph(&g, &c, &s).map_err(|e| e.to_string())?;
            Outcome::digraph(&d, names.as_deref(), format)
        }
        Command::Containment { a, b } => {
            json_only("containment")?;
            let verdict = containment(a, b).map_err(|e| e.to_string())?;
            Outcome::json(&verdict, true)
        }
        Command::ExportDot { directed, input } => {
            let Labelled { value, names } = parse_any(&read_input(input.as_deref())?, directed).map_err(located)?;
            let document = match value {
                AnyGraph::Undirected(g) => graph_to_dot(&g, names.as_deref()),
                AnyGraph::Directed(d) => digraph_to_dot(&d, names.as_deref()),
            };
            Ok(Outcome { document, positive: true })
        }
    }
}

fn bounds(i: usize, j: usize) -> Result<DegreeBounds, String> {
    DegreeBounds::new(i, j).map_err(|e| e.to_string())
}

fn located(e: ParseError) -> String {
    format!("parse error at {e}")
}

fn read_input(path: Option<&Path>) -> Result<String, String> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
            Ok(s)
        }
    }
}

fn read_graph(path: Option<&Path>) -> Result<Labelled<Graph>, String> {
    let Labelled { value, names } = parse_any(&read_input(path)?, false).map_err(located)?;
    match value {
        AnyGraph::Undirected(g) => Ok(Labelled { value: g, names }),
        AnyGraph::Directed(_) => Err("expected an undirected graph, found a digraph".into()),
    }
}

fn read_digraph(path: Option<&Path>) -> Result<Labelled<Digraph>, String> {
    let Labelled { value, names } = parse_any(&read_input(path)?, true).map_err(located)?;
    match value {
        AnyGraph::Directed(d) => Ok(Labelled { value: d, names }),
        AnyGraph::Undirected(_) => Err("expected a digraph, found an undirected graph".into()),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: Option<&Path>) -> Result<T, String> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| format!("parse error at line {}, column {}: {e}", e.line(), e.column()))
}
