//! Command-line surface for the internal spanning tree pipeline.
//!
//! Every command reads and writes the line formats defined by the library:
//! graphs as `p`/`e` lines, trees as `t` lines, covers as `P`/`C` lines,
//! reduction traces as `DE`/`DL` lines. Exit codes: 0 success, 1 usage
//! error, 2 instance error (unreadable or unsolvable input), 3 invariant
//! violation (a check or audit found the guarantee broken).

use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use mist::assemble::{PipelineError, TreeError};
use mist::audit::{ratio_audit, CorpusSpec};
use mist::cover::{max_path_cycle_cover, max_two_matching, CoverMode};
use mist::gen::{gen_random, gen_tight};
use mist::oracle::exact_mist;
use mist::reduce::reduce;
use mist::{approx_mist, parse_graph, Graph, ShortCircuit, SpanningTree};

#[derive(Parser)]
#[command(name = "mist", version, about = "Spanning trees with many internal vertices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Delete provably safe edges and leaves; print the reduced graph plus
    /// the trace as DE/DL lines
    Reduce {
        /// Graph file, or - for stdin
        input: PathBuf,
    },
    /// Compute a maximum path-cycle cover (cycles of at least `min-cycle` edges)
    Cover {
        /// Graph file, or - for stdin
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        mode: Mode,
        /// 4 forbids triangles (the pipeline's constraint); 3 allows them,
        /// solved exactly by the matching gadget in either mode
        #[arg(long = "min-cycle", default_value_t = 4, value_parser = clap::value_parser!(usize))]
        min_cycle: usize,
    },
    /// Run the 4/3-approximation end to end; print the tree and its stats
    Solve {
        /// Graph file, or - for stdin
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        mode: Mode,
        /// Also write the stats block to this file
        #[arg(long)]
        stats: Option<PathBuf>,
    },
    /// Exhaustive optimum for small instances
    Exact {
        /// Graph file, or - for stdin
        input: PathBuf,
        /// Largest vertex count the search will accept
        #[arg(long, default_value_t = 12)]
        bound: usize,
    },
    /// Verify that a tree file is a spanning tree of a graph
    Check {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        tree: PathBuf,
    },
    /// Write a generated instance to stdout
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Sweep corpora, print one record per instance and a summary line
    Audit {
        /// Corpus spec such as exhaustive:5, classes:7, tight:2..25, or
        /// random:100:n=9,m=14,seed=1; repeatable
        #[arg(long = "corpus", required = true)]
        corpus: Vec<String>,
        /// Also run the exhaustive solver and compare
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t)]
        mode: Mode,
        /// Largest vertex count the oracle will accept
        #[arg(long, default_value_t = 12)]
        bound: usize,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Chain of k squares whose best constrained cover is the squares
    Tight {
        #[arg(long)]
        k: usize,
    },
    /// Seeded connected graph: random spanning tree plus random extra edges
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Default, PartialEq, Eq)]
enum Mode {
    /// Branch-and-bound optimum, bounded instance size
    #[default]
    Exact,
    /// Matching gadget plus triangle repair; any size, may lose edges
    Heuristic,
}

impl Mode {
    fn cover_mode(self) -> CoverMode {
        match self {
            Mode::Exact => CoverMode::exact(),
            Mode::Heuristic => CoverMode::Heuristic,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Heuristic => "heuristic",
        }
    }
}

/// A failed run, carrying its exit code.
enum Failure {
    Usage(String),
    Instance(String),
    Violation(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Instance(_) => 2,
            Failure::Violation(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Instance(m) | Failure::Violation(m) => m,
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = i32::from(e.use_stderr());
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(()) => {}
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            std::process::exit(failure.code());
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Instance(format!("reading stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure::Instance(format!("reading {}: {e}", path.display())))?
    };
    parse_graph(&text).map_err(|e| Failure::Instance(e.to_string()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Reduce { input } => {
            let g = read_graph(&input)?;
            let (reduced, trace) = reduce(&g);
            print!("{}{}", reduced.to_text(), trace.trace_lines());
            Ok(())
        }
        Command::Cover { input, mode, min_cycle } => {
            let g = read_graph(&input)?;
            if !g.is_connected() {
                return Err(Failure::Instance("input graph is disconnected".into()));
            }
            let (cover, lossy) = match min_cycle {
                3 => (max_two_matching(&g), 0),
                4 => {
                    let (cover, stats) = max_path_cycle_cover(&g, mode.cover_mode())
                        .map_err(|e| Failure::Instance(e.to_string()))?;
                    (cover, stats.lossy_repairs)
                }
                other => {
                    return Err(Failure::Usage(format!(
                        "--min-cycle must be 3 or 4, got {other}"
                    )));
                }
            };
            print!("{}", cover.to_text());
            println!(
                "edges={} mode={} lossy_repairs={lossy}",
                cover.edge_count(),
                mode.name()
            );
            Ok(())
        }
        Command::Solve { input, mode, stats } => {
            let g = read_graph(&input)?;
            let (tree, pipeline) = approx_mist(&g, mode.cover_mode()).map_err(|e| match e {
                PipelineError::Invariant(_) => Failure::Violation(e.to_string()),
                _ => Failure::Instance(e.to_string()),
            })?;
            let block = stats_block(mode, &pipeline);
            print!("{}{block}", tree.to_text());
            if let Some(path) = stats {
                fs::write(&path, block)
                    .map_err(|e| Failure::Instance(format!("writing {}: {e}", path.display())))?;
            }
            Ok(())
        }
        Command::Exact { input, bound } => {
            let g = read_graph(&input)?;
            let tree = exact_mist(&g, bound).map_err(|e| Failure::Instance(e.to_string()))?;
            print!("{}", tree.to_text());
            println!("internal={}", tree.internal_count());
            println!("mode=exact-oracle");
            Ok(())
        }
        Command::Check { graph, tree } => {
            let g = read_graph(&graph)?;
            let text = fs::read_to_string(&tree)
                .map_err(|e| Failure::Instance(format!("reading {}: {e}", tree.display())))?;
            let t = SpanningTree::parse(&g, &text).map_err(|e| match e {
                TreeError::MalformedLine { .. } => Failure::Instance(e.to_string()),
                _ => Failure::Violation(e.to_string()),
            })?;
            println!("ok internal={}", t.internal_count());
            Ok(())
        }
        Command::Gen { family } => {
            let g = match family {
                GenFamily::Tight { k } => gen_tight(k),
                GenFamily::Random { n, m, seed } => gen_random(n, m, seed),
            }
            .map_err(|e| Failure::Instance(e.to_string()))?;
            print!("{}", g.to_text());
            Ok(())
        }
        Command::Audit { corpus, oracle, mode, bound } => {
            let specs: Vec<CorpusSpec> = corpus
                .iter()
                .map(|s| s.parse().map_err(|e: mist::audit::CorpusParseError| {
                    Failure::Usage(e.to_string())
                }))
                .collect::<Result<_, _>>()?;
            let summary = ratio_audit(&specs, mode.cover_mode(), oracle.then_some(bound));
            for record in &summary.records {
                println!("{}", record.to_line());
            }
            println!("{}", summary.summary_line());
            if summary.violations > 0 {
                return Err(Failure::Violation(format!(
                    "{} instance(s) broke the ratio guarantee",
                    summary.violations
                )));
            }
            if summary.errors > 0 {
                return Err(Failure::Instance(format!(
                    "{} instance(s) could not be fully audited",
                    summary.errors
                )));
            }
            Ok(())
        }
    }
}

fn stats_block(mode: Mode, s: &mist::PipelineStats) -> String {
    let mut out = String::new();
    let sc = match s.short_circuit {
        ShortCircuit::None => "none",
        ShortCircuit::ReducedTree => "reduced-tree",
        ShortCircuit::SinglePath => "single-path",
        ShortCircuit::SingleCycle => "single-cycle",
    };
    let _ = writeln!(out, "internal={}", s.internal);
    let _ = writeln!(out, "mode={}", mode.name());
    let _ = writeln!(out, "n={}", s.original_n);
    let _ = writeln!(out, "m={}", s.original_m);
    let _ = writeln!(out, "reduced_n={}", s.reduced_n);
    let _ = writeln!(out, "reduced_m={}", s.reduced_m);
    let _ = writeln!(out, "deleted_edges={}", s.deleted_edges);
    let _ = writeln!(out, "deleted_leaves={}", s.deleted_leaves);
    let _ = writeln!(out, "short_circuit={sc}");
    let _ = writeln!(out, "cover_edges={}", s.cover_edges);
    let _ = writeln!(out, "two_matching_edges={}", s.unconstrained_cover_edges);
    let _ = writeln!(out, "lossy_repairs={}", s.lossy_repairs);
    let _ = writeln!(out, "rerouted={}", s.rerouted);
    let _ = writeln!(out, "rewrite_steps={}", s.rewrite_steps);
    let _ = writeln!(out, "trees={}", s.tree_margins.len());
    let _ = writeln!(out, "alpha_violations={}", s.alpha_violations);
    let _ = writeln!(out, "fallback_attachments={}", s.fallback_attachments);
    let _ = writeln!(out, "degraded={}", s.degraded);
    out
}
