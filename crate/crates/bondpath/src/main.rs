//! Command-line interface: certify and verify bond certificates, run the
//! exact solvers, generate instances, and drive verification campaigns.

use bondpath::campaign::{run_campaign, CampaignConfig};
use bondpath::certify::{self, CertificateKind, TheoremId};
use bondpath::graph::{DotHighlight, Graph, VertexSet};
use bondpath::{bond, catalog, gen, path, Error};
use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "bondpath",
    about = "Bond certificates meeting all long paths in connected, 3-connected and k-connected graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Exactly one graph source.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// graph6-encoded graph
    #[arg(long)]
    graph6: Option<String>,
    /// file holding one graph6 line or an `n m` edge list
    #[arg(long)]
    file: Option<PathBuf>,
    /// catalog name (e.g. W4, K33, petersen, C_6, P_5, star_4, spider_2_2_1)
    #[arg(long)]
    catalog: Option<String>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph, Error> {
        if let Some(text) = &self.graph6 {
            return Graph::from_graph6(text);
        }
        if let Some(name) = &self.catalog {
            return catalog::catalog(name);
        }
        let path = self.file.as_ref().expect("clap enforces one source");
        let text = std::fs::read_to_string(path)?;
        let first = text
            .trim()
            .lines()
            .next()
            .ok_or_else(|| Error::Config(format!("{} is empty", path.display())))?;
        if first.split_whitespace().count() >= 2
            || first.chars().next().is_some_and(|c| c.is_ascii_digit())
        {
            Graph::from_edge_list_text(&text)
        } else {
            Graph::from_graph6(first)
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Construct a certificate and verify it independently by enumeration
    Certify {
        /// 1 = connected (threshold p-1), 2 = 3-connected (p-2),
        /// 3 = k-connected (p-t+1)
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        theorem: u8,
        /// connectivity for --theorem 3
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[command(flatten)]
        input: GraphInput,
        /// write the verification report as JSON
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that the bond delta(side1) meets all paths of length >= threshold
    VerifyBond {
        /// comma-separated vertices of side 1
        #[arg(long, value_delimiter = ',')]
        side1: Vec<usize>,
        #[arg(long)]
        threshold: usize,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Exact longest path (deterministic tie-break)
    LongestPath {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Exact longest cycle length
    LongestCycle {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Longest-path transversal number lpt(G) with witness
    Lpt {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Enumerate all bonds (n <= 16)
    Bonds {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Generate a seeded random k-connected graph (graph6 to stdout)
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a verification campaign from a JSON config
    Campaign {
        #[arg(long)]
        config: PathBuf,
        /// override the report path from the config
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// DOT export, optionally highlighting a certificate
    ExportDot {
        #[command(flatten)]
        input: GraphInput,
        /// highlight the certificate of this theorem (1, 2 or 3)
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        highlight: Option<u8>,
        /// connectivity for --highlight 3
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Falsification(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Certify {
            theorem,
            k,
            input,
            out,
        } => {
            let g = input.load()?;
            let theorem = TheoremId::from_number(theorem).unwrap();
            let cert = certify::certify(&g, theorem, k)?;
            let report = certify::verify_certificate(&g, &cert);
            println!("graph      : {} (n={}, m={})", report.graph6, g.n(), g.edge_count());
            println!("theorem    : {theorem}");
            println!("longest p  : {}", cert.p);
            println!("threshold  : {}", cert.threshold);
            println!("certificate: {cert}");
            println!(
                "verified   : {} (independent enumeration, {:.2?})",
                report.verified, report.elapsed
            );
            for f in &report.failures {
                println!("  failure: {f}");
            }
            if let Some(path) = out {
                std::fs::write(&path, serde_json::to_string_pretty(&report)?)?;
                println!("report     : {}", path.display());
            }
            Ok(if report.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::VerifyBond {
            side1,
            threshold,
            input,
        } => {
            let g = input.load()?;
            if threshold < 1 {
                return Err(Error::Precondition("threshold must be at least 1".into()));
            }
            let side: VertexSet = side1.into_iter().collect();
            let b = bond::Bond::from_side(&g, side)?;
            println!("bond       : {:?} (sides {} | {})", b.cross_edges(), b.side1(), b.side2());
            let by_oracle = b.meets_all_long_paths(&g, threshold);
            // independent route: exhaustive enumeration
            let mut violation: Option<path::Path> = None;
            for p in path::long_paths(&g, threshold) {
                if !b.meets_path(&p) {
                    violation = Some(p);
                    break;
                }
            }
            println!("meets all paths of length >= {threshold}: {by_oracle}");
            match &violation {
                Some(p) => println!("counterexample path: {p}"),
                None => println!("enumeration agrees: no avoiding path"),
            }
            if by_oracle != violation.is_none() {
                return Err(Error::Falsification(
                    "oracle and enumeration disagree".into(),
                ));
            }
            Ok(if by_oracle {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::LongestPath { input } => {
            let g = input.load()?;
            let p = path::longest_path(&g);
            println!("length {}: {}", p.len(), p);
            Ok(ExitCode::SUCCESS)
        }
        Command::LongestCycle { input } => {
            let g = input.load()?;
            match path::longest_cycle_witness(&g) {
                None => println!("length 0: acyclic"),
                Some(c) => {
                    let cycle: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                    println!("length {}: {}", c.len(), cycle.join(" "));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Lpt { input } => {
            let g = input.load()?;
            let r = path::longest_path_transversal(&g)?;
            println!(
                "lpt = {} witness {} ({} longest paths)",
                r.size, r.witness, r.longest_path_count
            );
            let check = certify::check_lpt_bound(&g)?;
            println!(
                "bound lpt <= max bond size: {} <= {} -> {}",
                check.lpt.size,
                check.max_bond_size,
                if check.holds { "holds" } else { "FALSIFIED" }
            );
            if !check.holds {
                return Err(Error::Falsification(format!(
                    "lpt {} exceeds max bond size {} (witness {})",
                    check.lpt.size, check.max_bond_size, check.lpt.witness
                )));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bonds { input } => {
            let g = input.load()?;
            let mut count = 0usize;
            for b in bond::bonds(&g)? {
                count += 1;
                let edges: Vec<String> = b
                    .cross_edges()
                    .iter()
                    .map(|(u, v)| format!("{u}-{v}"))
                    .collect();
                println!("{} | {} : {}", b.side1(), b.side2(), edges.join(" "));
            }
            println!("{count} bonds");
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { n, k, seed } => {
            let g = gen::gen_k_connected(n, k, seed)?;
            println!("{}", g.to_graph6());
            Ok(ExitCode::SUCCESS)
        }
        Command::Campaign { config, out } => {
            let text = std::fs::read_to_string(&config)?;
            let mut cfg = CampaignConfig::from_json(&text)?;
            if out.is_some() {
                cfg.out = out;
            }
            let report = run_campaign(&cfg)?;
            let s = &report.summary;
            println!(
                "instances {}  verified {}  vacuous {}  skipped {}  capped {}  failed {}",
                s.instances, s.verified, s.vacuous, s.skipped, s.capped, s.failed
            );
            println!("wall clock {:.2?}", report.wall);
            for f in &s.falsifications {
                println!("FALSIFICATION: {f}");
            }
            if let Some(path) = &cfg.out {
                println!("report written to {}", path.display());
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::ExportDot {
            input,
            highlight,
            k,
            out,
        } => {
            let g = input.load()?;
            let hl = match highlight {
                None => None,
                Some(t) => {
                    let theorem = TheoremId::from_number(t).unwrap();
                    let cert = certify::certify(&g, theorem, k)?;
                    Some(match cert.kind {
                        CertificateKind::Bond { bond } => DotHighlight {
                            edges: bond.cross_edges().to_vec(),
                            vertices: VertexSet::EMPTY,
                        },
                        CertificateKind::CutEdge { u, v } => DotHighlight {
                            edges: vec![(u, v)],
                            vertices: VertexSet::from_iter([u, v]),
                        },
                        CertificateKind::CutVertex { v } => DotHighlight {
                            edges: Vec::new(),
                            vertices: VertexSet::singleton(v),
                        },
                        CertificateKind::Vacuous => DotHighlight::default(),
                    })
                }
            };
            let dot = g.to_dot(hl.as_ref());
            match out {
                Some(path) => std::fs::write(path, dot)?,
                None => print!("{dot}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
