//! `cospec` — batch spectral analysis of cographs.
//!
//! Subcommands: `analyze` (full per-graph report), `cotree` (cotree or P4
//! witness), `enumerate` (unlabeled cographs on n vertices), and `verify`
//! (theorem-check campaigns). Exit codes are a stable contract: 0 success,
//! 1 usage or parse error, 2 check failure, 3 conjecture counterexample.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cograph_spectra::verify::{analyze, verify_analysis, CheckStatus};
use cograph_spectra::{
    build_cotree, enumerate_cotrees, numeric_eigenvalues, parse_graph6, run_campaign,
    CampaignConfig, CampaignMode, CampaignSummary, CotreeOutcome, VerificationReport,
};

const EXIT_USAGE: u8 = 1;
const EXIT_CHECK_FAILURE: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 3;

/// Environment variable holding the default worker count for `verify`.
const WORKERS_ENV: &str = "COSPEC_WORKERS";

#[derive(Parser)]
#[command(
    name = "cospec",
    version,
    about = "Exact spectral analysis of cographs: recognition, neighborhood orders, \
             integer characteristic polynomials, and theorem-check campaigns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
    #[value(name = "all-graphs")]
    AllGraphs,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for each input graph: recognition, classes, order,
    /// chain cover, exact spectrum, and every theorem check.
    Analyze {
        /// A graph6 string; alternatively use --file or --stdin.
        graph6: Option<String>,
        /// File of newline-delimited graph6 strings.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Read newline-delimited graph6 strings from standard input.
        #[arg(long)]
        stdin: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print the cotree of each input graph, or its P4 witness.
    Cotree {
        graph6: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        stdin: bool,
    },
    /// List all cographs on n vertices, one per isomorphism class.
    Enumerate {
        n: usize,
        /// Print only the number of graphs.
        #[arg(long)]
        count_only: bool,
        /// Print cotree text instead of graph6.
        #[arg(long)]
        cotrees: bool,
    },
    /// Run every theorem check over a family of graphs.
    Verify {
        /// Order range, e.g. `6` or `1..10` (inclusive).
        #[arg(long = "n")]
        n_range: String,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        /// Random mode: cographs sampled per order.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Seed for all randomness in the campaign.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads (default: COSPEC_WORKERS or available parallelism).
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version are successes; anything else is a usage error.
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Analyze { graph6, file, stdin, format } => cmd_analyze(graph6, file, stdin, format),
        Command::Cotree { graph6, file, stdin } => cmd_cotree(graph6, file, stdin),
        Command::Enumerate { n, count_only, cotrees } => cmd_enumerate(n, count_only, cotrees),
        Command::Verify { n_range, mode, samples, seed, workers, format } => {
            cmd_verify(&n_range, mode, samples, seed, workers, format)
        }
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

/// Collects graph6 lines from exactly one input source.
fn input_lines(
    graph6: Option<String>,
    file: Option<PathBuf>,
    stdin: bool,
) -> Result<Vec<String>, String> {
    let sources = graph6.is_some() as u8 + file.is_some() as u8 + stdin as u8;
    if sources != 1 {
        return Err("provide exactly one input: a graph6 argument, --file, or --stdin".into());
    }
    let text = if let Some(g6) = graph6 {
        g6
    } else if let Some(path) = file {
        std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?
    } else {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("stdin: {e}"))?;
        buf
    };
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect())
}

fn cmd_analyze(
    graph6: Option<String>,
    file: Option<PathBuf>,
    stdin: bool,
    format: Format,
) -> ExitCode {
    let lines = match input_lines(graph6, file, stdin) {
        Ok(lines) => lines,
        Err(e) => return usage_error(&e),
    };
    let mut saw_failure = false;
    let mut saw_counterexample = false;
    for line in lines {
        let graph = match parse_graph6(&line) {
            Ok(g) => g,
            Err(e) => return usage_error(&format!("{line:?}: {e}")),
        };
        let analysis = analyze(&graph);
        let report = verify_analysis(&analysis, None);
        for record in report.checks.values() {
            match record.status {
                CheckStatus::Fail => saw_failure = true,
                CheckStatus::Counterexample => saw_counterexample = true,
                _ => {}
            }
        }
        match format {
            Format::Json => println!("{}", analysis_json(&analysis, &report)),
            Format::Text => print!("{}", analysis_text(&analysis, &report)),
        }
    }
    if saw_failure {
        ExitCode::from(EXIT_CHECK_FAILURE)
    } else if saw_counterexample {
        ExitCode::from(EXIT_COUNTEREXAMPLE)
    } else {
        ExitCode::SUCCESS
    }
}

fn analysis_json(
    analysis: &cograph_spectra::verify::GraphAnalysis,
    report: &VerificationReport,
) -> String {
    let g = &analysis.graph;
    let factors: Vec<Value> = analysis
        .spectrum
        .factors
        .iter()
        .map(|r| {
            json!({
                "text": r.factor.to_string(),
                "coeffs": r.factor.coeff_strings(),
                "multiplicity": r.multiplicity,
            })
        })
        .collect();
    let numeric = numeric_eigenvalues(g, cograph_spectra::spectral::JACOBI_DEFAULT_TOL).ok();
    let detail = json!({
        "n": g.order(),
        "edge_count": g.edge_count(),
        "cotree": analysis.cotree.as_ref().map(|t| t.to_string()),
        "p4_witness": analysis.witness.map(|w| w.vertices),
        "duplication_classes": analysis.classes.duplication,
        "coduplication_classes": analysis.classes.coduplication,
        "equivalence_classes": analysis.order.classes(),
        "representatives": analysis.order.representatives(),
        "order_relation": analysis.order.relation_pairs(),
        "chain_cover": {
            "count": analysis.chain_cover.count(),
            "chains": analysis.chain_cover.chains,
            "antichain": analysis.chain_cover.antichain,
        },
        "is_threshold": analysis.is_threshold(),
        "char_poly": {
            "text": analysis.char_poly.to_string(),
            "coeffs": analysis.char_poly.coeff_strings(),
        },
        "spectrum": {
            "factors": factors,
            "mult_zero": analysis.spectrum.mult_zero,
            "mult_minus_one": analysis.spectrum.mult_minus_one,
        },
        "numeric_eigenvalues": numeric,
    });
    let mut value = serde_json::to_value(report).expect("report serializes");
    value
        .as_object_mut()
        .expect("report is an object")
        .insert("analysis".into(), detail);
    value.to_string()
}

fn analysis_text(
    analysis: &cograph_spectra::verify::GraphAnalysis,
    report: &VerificationReport,
) -> String {
    use std::fmt::Write;
    let g = &analysis.graph;
    let mut out = String::new();
    let _ = writeln!(out, "graph {} (n={}, edges={})", report.graph6, g.order(), g.edge_count());
    match (&analysis.cotree, &analysis.witness) {
        (Some(t), _) => {
            let _ = writeln!(out, "  cograph: yes, cotree {t}");
        }
        (None, Some(w)) => {
            let v = w.vertices;
            let _ = writeln!(out, "  cograph: no, P4 witness: {} {} {} {}", v[0], v[1], v[2], v[3]);
        }
        (None, None) => {
            let _ = writeln!(out, "  cograph: yes (empty graph)");
        }
    }
    let _ = writeln!(out, "  duplication classes:   {:?}", analysis.classes.duplication);
    let _ = writeln!(out, "  coduplication classes: {:?}", analysis.classes.coduplication);
    let _ = writeln!(out, "  representatives: {:?}", analysis.order.representatives());
    let _ = writeln!(out, "  order relation:  {:?}", analysis.order.relation_pairs());
    let _ = writeln!(
        out,
        "  chain cover: {} chain(s) {:?}, antichain {:?}",
        analysis.chain_cover.count(),
        analysis.chain_cover.chains,
        analysis.chain_cover.antichain
    );
    let _ = writeln!(out, "  threshold: {}", analysis.is_threshold());
    let _ = writeln!(out, "  char poly: {}", analysis.char_poly);
    for r in &analysis.spectrum.factors {
        let _ = writeln!(out, "    factor ({})^{}", r.factor, r.multiplicity);
    }
    let _ = writeln!(
        out,
        "  mult(0) = {}, mult(-1) = {}",
        analysis.spectrum.mult_zero, analysis.spectrum.mult_minus_one
    );
    if let Ok(eigs) = numeric_eigenvalues(g, cograph_spectra::spectral::JACOBI_DEFAULT_TOL) {
        let rendered: Vec<String> = eigs.iter().map(|x| format!("{x:.6}")).collect();
        let _ = writeln!(out, "  numeric eigenvalues: [{}]", rendered.join(", "));
    }
    let _ = writeln!(out, "  checks:");
    for (name, record) in &report.checks {
        let status = match record.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::NotApplicable => "n/a",
            CheckStatus::Counterexample => "COUNTEREXAMPLE",
        };
        let timing = report
            .timing_seconds
            .get(name)
            .map_or(String::new(), |s| format!(" ({:.1}us)", s * 1e6));
        let _ = writeln!(out, "    {name:<24} {status}{timing}");
        if record.status == CheckStatus::Fail || record.status == CheckStatus::Counterexample {
            let _ = writeln!(out, "      witness: {}", record.witness);
        }
    }
    out
}

fn cmd_cotree(graph6: Option<String>, file: Option<PathBuf>, stdin: bool) -> ExitCode {
    let lines = match input_lines(graph6, file, stdin) {
        Ok(lines) => lines,
        Err(e) => return usage_error(&e),
    };
    for line in lines {
        let graph = match parse_graph6(&line) {
            Ok(g) => g,
            Err(e) => return usage_error(&format!("{line:?}: {e}")),
        };
        match build_cotree(&graph) {
            Ok(CotreeOutcome::Cotree(t)) => println!("{t}"),
            Ok(CotreeOutcome::NotCograph(w)) => {
                let v = w.vertices;
                println!("P4 witness: {} {} {} {}", v[0], v[1], v[2], v[3]);
            }
            Err(e) => return usage_error(&format!("{line:?}: {e}")),
        }
    }
    ExitCode::SUCCESS
}

fn cmd_enumerate(n: usize, count_only: bool, cotrees: bool) -> ExitCode {
    let trees = match enumerate_cotrees(n) {
        Ok(trees) => trees,
        Err(e) => return usage_error(&e.to_string()),
    };
    if count_only {
        println!("{}", trees.len());
        return ExitCode::SUCCESS;
    }
    for tree in &trees {
        if cotrees {
            println!("{tree}");
        } else {
            println!("{}", cograph_spectra::write_graph6(&tree.to_graph()));
        }
    }
    ExitCode::SUCCESS
}

fn parse_range(text: &str) -> Result<(usize, usize), String> {
    let parse_one = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid order {s:?} in --n"))
    };
    if let Some((lo, hi)) = text.split_once("..") {
        Ok((parse_one(lo)?, parse_one(hi)?))
    } else {
        let n = parse_one(text)?;
        Ok((n, n))
    }
}

fn default_workers() -> usize {
    if let Ok(value) = std::env::var(WORKERS_ENV) {
        if let Ok(parsed) = value.parse::<usize>() {
            if parsed >= 1 {
                return parsed;
            }
        }
    }
    std::thread::available_parallelism().map_or(1, |p| p.get())
}

fn cmd_verify(
    n_range: &str,
    mode: Mode,
    samples: usize,
    seed: u64,
    workers: Option<usize>,
    format: Format,
) -> ExitCode {
    let (n_min, n_max) = match parse_range(n_range) {
        Ok(range) => range,
        Err(e) => return usage_error(&e),
    };
    let mode = match mode {
        Mode::Exhaustive => CampaignMode::Exhaustive,
        Mode::Random => CampaignMode::Random,
        Mode::AllGraphs => CampaignMode::AllGraphs,
    };
    let config = CampaignConfig {
        n_min,
        n_max,
        mode,
        samples,
        seed,
        workers: workers.unwrap_or_else(default_workers),
    };
    let summary: CampaignSummary = match run_campaign(&config) {
        Ok(summary) => summary,
        Err(e) => return usage_error(&e.to_string()),
    };
    match format {
        Format::Json => println!("{}", summary.to_json()),
        Format::Text => print!("{}", summary.render_text()),
    }
    if summary.failure_count() > 0 {
        ExitCode::from(EXIT_CHECK_FAILURE)
    } else if summary.counterexample_count() > 0 {
        ExitCode::from(EXIT_COUNTEREXAMPLE)
    } else {
        ExitCode::SUCCESS
    }
}
