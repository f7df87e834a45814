mod analyze;
mod input;

use std::fmt;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use critgraph::canon::canonical_form;
use critgraph::domination::DvReading;
use critgraph::enumerate::{enumerate_graphs, MAX_ENUMERATION_ORDER};
use critgraph::harness::{
    filter_corpus, reconstruct_case_1_2, reconstruct_case_3_2, reconstruct_case_4_2, run_suite, with_workers, Corpus,
    MatchingSuite, Predicate, Suite,
};
use critgraph::named::NamedGraph;
use critgraph::{to_graph6, Graph};

/// Usage, parse or I/O failure; exits with status 2.
#[derive(Debug)]
pub struct Failure(pub String);

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Reading {
    Choosable,
    Strict,
}

#[derive(Debug, Parser, Serialize)]
#[command(name = "critgraph", version, about = "Domination-criticality and matching certification for small graphs")]
struct Cli {
    /// Output format; the default depends on the subcommand.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads (not echoed in reports; output does not depend on it).
    #[arg(long, global = true)]
    #[serde(skip)]
    workers: Option<usize>,
    /// Seed for sampling and random generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args, Serialize)]
struct Inputs {
    /// graph6 files, `-` for standard input.
    paths: Vec<String>,
    /// Inline graph6 strings.
    #[arg(long = "graph6", short = 'g')]
    graph6: Vec<String>,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "lowercase", tag = "subcommand")]
enum Command {
    /// Full certificate bundle for each input graph.
    Analyze {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_enum, default_value_t = Reading::Choosable)]
        reading: Reading,
    },
    /// Print the input graphs satisfying every predicate.
    Filter {
        #[command(flatten)]
        inputs: Inputs,
        /// Predicate such as `gamma=3`, `vertex-critical`, `star-free=6`.
        #[arg(long = "pred", short = 'p')]
        predicates: Vec<String>,
    },
    /// Run a verification suite: 2critical, matching:K:PARITY, cut-lemma, 3conn, facts.
    Verify {
        suite: String,
        #[command(flatten)]
        inputs: Inputs,
        /// Use every graph of order 1..=N instead of input files.
        #[arg(long, conflicts_with_all = ["paths", "graph6"])]
        exhaustive: Option<usize>,
        /// Treat the input files as complete for every order they contain.
        #[arg(long)]
        assume_exhaustive: bool,
        /// Restrict to orders `A..B` (inclusive) or a single order.
        #[arg(long)]
        orders: Option<String>,
        /// Verify a seeded random sample of this many graphs.
        #[arg(long)]
        sample: Option<usize>,
        /// Star bound for `matching` (alternative to `matching:K:PARITY`).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_parser = ["even", "odd"])]
        parity: Option<String>,
    },
    /// Run a reconstruction search: case1.2, case3.2:K, case4.2.
    Search { case: String },
    /// Emit graphs: a named construction (`cocktail_party 3`),
    /// `enumerate N`, or `random N`.
    Gen {
        target: String,
        args: Vec<String>,
        /// With `enumerate`: connected graphs only.
        #[arg(long)]
        connected: bool,
        /// With `random`: number of graphs.
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// With `random`: edge probability.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
    },
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    tool: &'static str,
    version: &'static str,
    seed: u64,
    config: &'a Cli,
    result: T,
}

struct Output {
    text: String,
    violations: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, violations: false }
    }
}

fn json<T: Serialize>(cli: &Cli, result: T) -> Result<String, Failure> {
    let env = Envelope {
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        seed: cli.seed,
        config: cli,
        result,
    };
    Ok(serde_json::to_string_pretty(&env)? + "\n")
}

fn graph6_lines<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> String {
    graphs.into_iter().map(|g| to_graph6(g) + "\n").collect()
}

fn unsupported(format: Format, what: &str) -> Failure {
    Failure(format!("format {format:?} is not supported by {what}").to_lowercase())
}

fn parse_orders(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure(format!("bad order range `{text}`"));
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (lo.parse().map_err(|_| bad())?, hi.parse().map_err(|_| bad())?),
        None => {
            let n = text.parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn parse_suite(name: &str, k: Option<usize>, parity: Option<&str>) -> Result<Suite, Failure> {
    if name == "matching" {
        let (Some(k), Some(parity)) = (k, parity) else {
            return Err(Failure("suite `matching` needs --k and --parity".into()));
        };
        return Ok(Suite::Matching(MatchingSuite::new(k, parity.parse()?)?));
    }
    Ok(name.parse()?)
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Analyze { inputs, reading } => {
            let format = cli.format.unwrap_or(Format::Json);
            if format != Format::Json {
                return Err(unsupported(format, "analyze"));
            }
            let graphs = input::read_graphs(&inputs.paths, &inputs.graph6)?;
            let reading = match reading {
                Reading::Choosable => DvReading::Choosable,
                Reading::Strict => DvReading::Strict,
            };
            let results: Vec<_> = graphs.iter().map(|g| analyze::analyze(g, reading)).collect();
            Ok(Output::ok(json(cli, results)?))
        }
        Command::Filter { inputs, predicates } => {
            let predicates: Vec<Predicate> = predicates.iter().map(|p| p.parse()).collect::<Result<_, _>>()?;
            let graphs = input::read_graphs(&inputs.paths, &inputs.graph6)?;
            let kept = with_workers(cli.workers.unwrap_or_else(default_workers), || filter_corpus(&graphs, &predicates))?;
            match cli.format.unwrap_or(Format::Graph6) {
                Format::Graph6 => Ok(Output::ok(graph6_lines(&kept))),
                Format::Json => Ok(Output::ok(json(cli, kept.iter().map(to_graph6).collect::<Vec<_>>())?)),
                Format::Csv => Err(unsupported(Format::Csv, "filter")),
            }
        }
        Command::Verify {
            suite,
            inputs,
            exhaustive,
            assume_exhaustive,
            orders,
            sample: sample_size,
            k,
            parity,
        } => {
            let suite = parse_suite(suite, *k, parity.as_deref())?;
            let mut corpus = match exhaustive {
                Some(n) => {
                    if *n == 0 || *n > MAX_ENUMERATION_ORDER {
                        return Err(Failure(format!("--exhaustive must be in 1..={MAX_ENUMERATION_ORDER}")));
                    }
                    Corpus::exhaustive(*n)?
                }
                None => {
                    let graphs = input::read_graphs(&inputs.paths, &inputs.graph6)?;
                    let mut c = Corpus::sampled(input::source_id(&inputs.paths, &inputs.graph6), graphs);
                    if *assume_exhaustive {
                        c.exhaustive_orders = c.graphs.iter().map(Graph::order).collect();
                    }
                    c
                }
            };
            if let Some(range) = orders {
                let (lo, hi) = parse_orders(range)?;
                corpus.graphs.retain(|g| (lo..=hi).contains(&g.order()));
                corpus.exhaustive_orders.retain(|n| (lo..=hi).contains(n));
                corpus.id = format!("{}[order={lo}..{hi}]", corpus.id);
            }
            if let Some(m) = sample_size {
                let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                let mut picked = sample(&mut rng, corpus.graphs.len(), (*m).min(corpus.graphs.len())).into_vec();
                picked.sort_unstable();
                corpus.graphs = picked.into_iter().map(|i| corpus.graphs[i].clone()).collect();
                corpus.exhaustive_orders.clear();
                corpus.id = format!("{}[sample={m}]", corpus.id);
            }
            let report = with_workers(cli.workers.unwrap_or_else(default_workers), || run_suite(&corpus, suite))?;
            let text = match cli.format.unwrap_or(Format::Json) {
                Format::Json => json(cli, &report)?,
                Format::Csv => report.to_csv(),
                Format::Graph6 => report.exception_graph6().iter().map(|s| format!("{s}\n")).collect(),
            };
            Ok(Output {
                text,
                violations: !report.passed(),
            })
        }
        Command::Search { case } => {
            let workers = cli.workers.unwrap_or_else(default_workers);
            let graphs = match case.as_str() {
                "case1.2" => with_workers(workers, reconstruct_case_1_2)?,
                "case4.2" => with_workers(workers, reconstruct_case_4_2)?,
                other => match other.strip_prefix("case3.2:").map(str::parse::<usize>) {
                    Some(Ok(k)) => with_workers(workers, || reconstruct_case_3_2(k))??,
                    _ => return Err(Failure(format!("unknown search `{other}`"))),
                },
            };
            match cli.format.unwrap_or(Format::Json) {
                Format::Graph6 => Ok(Output::ok(graph6_lines(&graphs))),
                Format::Json => {
                    #[derive(Serialize)]
                    struct Found {
                        graph6: String,
                        canonical: String,
                        order: usize,
                    }
                    #[derive(Serialize)]
                    struct SearchResult {
                        case: String,
                        count: usize,
                        graphs: Vec<Found>,
                    }
                    let found = graphs
                        .iter()
                        .map(|g| Found {
                            graph6: to_graph6(g),
                            canonical: canonical_form(g),
                            order: g.order(),
                        })
                        .collect();
                    let result = SearchResult {
                        case: case.clone(),
                        count: graphs.len(),
                        graphs: found,
                    };
                    Ok(Output::ok(json(cli, result)?))
                }
                Format::Csv => Err(unsupported(Format::Csv, "search")),
            }
        }
        Command::Gen {
            target,
            args,
            connected,
            count,
            p,
        } => {
            let number = |what: &str| -> Result<usize, Failure> {
                match args.as_slice() {
                    [n] => n.parse().map_err(|_| Failure(format!("{what}: bad order `{n}`"))),
                    _ => Err(Failure(format!("{what} takes one order argument"))),
                }
            };
            let graphs = match target.as_str() {
                "enumerate" => enumerate_graphs(number("enumerate")?, *connected)?,
                "random" => {
                    let n = number("random")?;
                    if !(0.0..=1.0).contains(p) {
                        return Err(Failure(format!("--p must lie in [0, 1], got {p}")));
                    }
                    random_graphs(n, *p, *count, cli.seed)?
                }
                name => {
                    let spec = std::iter::once(name.to_string()).chain(args.iter().cloned()).collect::<Vec<_>>().join(":");
                    vec![spec.parse::<NamedGraph>()?.build()?]
                }
            };
            match cli.format.unwrap_or(Format::Graph6) {
                Format::Graph6 => Ok(Output::ok(graph6_lines(&graphs))),
                Format::Json => Ok(Output::ok(json(cli, graphs.iter().map(to_graph6).collect::<Vec<_>>())?)),
                Format::Csv => Err(unsupported(Format::Csv, "gen")),
            }
        }
    }
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// `G(n, p)` graphs from a ChaCha8 stream seeded with `seed`.
fn random_graphs(n: usize, p: f64, count: usize, seed: u64) -> Result<Vec<Graph>, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let edges: Vec<(usize, usize)> =
                (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).filter(|_| rng.gen_bool(p)).collect();
            Ok(Graph::from_edges(n, edges)?)
        })
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            if out.violations {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("critgraph: {e}");
            ExitCode::from(2)
        }
    }
}
