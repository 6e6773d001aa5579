//! Machine checks for the spectral statements about cographs, plus the
//! campaign driver that sweeps them over exhaustive or randomized graph
//! families.
//!
//! Every verdict is computed with exact integer arithmetic; the only
//! floating-point check is eigenvalue interlacing, which is advisory by
//! nature. A failing check always carries a concrete witness. The conjecture
//! check is special: a violation is reported as a counterexample, never as a
//! bug, because searching for one is the point.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cograph::{
    build_cotree, enumerate_all_graphs, enumerate_cographs, find_induced_p4, random_cograph,
    Cotree, CotreeOutcome, EnumerationError, P4Witness,
};
use crate::graph::{Graph, MAX_ORDER};
use crate::graph6::write_graph6;
use crate::neighborhood::{build_order, min_chain_cover, ChainCover, ClassPartition, QuotientOrder};
use crate::poly::IntPoly;
use crate::spectral::{
    char_poly, numeric_eigenvalues, square_free_decomposition, strip_zero_and_minus_one,
    MultiplicitySpectrum, JACOBI_DEFAULT_TOL,
};

/// Numeric tolerance for the interlacing check.
pub const INTERLACING_TOL: f64 = 1e-6;

/// Campaign caps per mode.
pub const EXHAUSTIVE_CAP: usize = 12;
pub const ALL_GRAPHS_CAP: usize = 7;
pub const RANDOM_CAP: usize = MAX_ORDER;

pub const CHECK_NAMES: [&str; 6] = [
    "conjecture",
    "interlacing",
    "interval_theorem",
    "mult_bounds",
    "multiplicity_formulas",
    "threshold_simple",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "n/a")]
    NotApplicable,
    #[serde(rename = "counterexample")]
    Counterexample,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub status: CheckStatus,
    pub expected: Value,
    pub actual: Value,
    pub witness: Value,
}

impl CheckRecord {
    fn pass(expected: Value, actual: Value) -> CheckRecord {
        CheckRecord { status: CheckStatus::Pass, expected, actual, witness: Value::Null }
    }

    fn fail(expected: Value, actual: Value, witness: Value) -> CheckRecord {
        CheckRecord { status: CheckStatus::Fail, expected, actual, witness }
    }

    fn not_applicable(reason: &str) -> CheckRecord {
        CheckRecord {
            status: CheckStatus::NotApplicable,
            expected: Value::Null,
            actual: Value::Null,
            witness: json!({ "reason": reason }),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportMeta {
    pub version: String,
    pub seed: Option<u64>,
}

/// Per-graph verification record. The JSON form is exactly
/// `{graph6, is_cograph, checks, meta}`; timings are kept for display only.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub graph6: String,
    pub is_cograph: bool,
    pub checks: BTreeMap<String, CheckRecord>,
    pub meta: ReportMeta,
    #[serde(skip)]
    pub timing_seconds: BTreeMap<String, f64>,
}

/// Shared per-graph computations: recognition, classes, order, spectrum.
pub struct GraphAnalysis {
    pub graph: Graph,
    pub witness: Option<P4Witness>,
    pub cotree: Option<Cotree>,
    pub classes: ClassPartition,
    pub order: QuotientOrder,
    pub chain_cover: ChainCover,
    pub char_poly: IntPoly,
    pub spectrum: MultiplicitySpectrum,
}

impl GraphAnalysis {
    pub fn is_cograph(&self) -> bool {
        self.witness.is_none()
    }

    pub fn is_threshold(&self) -> bool {
        self.chain_cover.count() <= 1
    }
}

pub fn analyze(g: &Graph) -> GraphAnalysis {
    let (cotree, witness) = match build_cotree(g) {
        Ok(CotreeOutcome::Cotree(t)) => (Some(t), None),
        Ok(CotreeOutcome::NotCograph(w)) => (None, Some(w)),
        Err(_) => (None, find_induced_p4(g)), // n = 0: vacuously a cograph
    };
    let order = build_order(g);
    let chain_cover = min_chain_cover(&order);
    let cp = char_poly(g);
    let spectrum = square_free_decomposition(&cp);
    GraphAnalysis {
        graph: g.clone(),
        witness,
        cotree,
        classes: ClassPartition::compute(g),
        order,
        chain_cover,
        char_poly: cp,
        spectrum,
    }
}

fn poly_value(p: &IntPoly) -> Value {
    json!({ "text": p.to_string(), "coeffs": p.coeff_strings() })
}

/// Eigenvalue-free interval: a cograph must have no eigenvalue in (-1, 0);
/// a non-cograph must exhibit an induced P4, which has exactly one there.
fn interval_theorem(a: &GraphAnalysis) -> CheckRecord {
    if let Some(w) = &a.witness {
        let sub = a
            .graph
            .induced_subgraph(&w.vertices)
            .expect("witness ids are valid");
        let count = MultiplicitySpectrum::of_graph(&sub).count_roots_open(-1, 0);
        let actual = json!({ "p4_witness": w.vertices, "witness_interval_count": count });
        if count == 1 {
            CheckRecord::pass(json!({ "witness_interval_count": 1 }), actual.clone())
        } else {
            CheckRecord::fail(json!({ "witness_interval_count": 1 }), actual.clone(), actual)
        }
    } else {
        let count = a.spectrum.count_roots_open(-1, 0);
        if count == 0 {
            CheckRecord::pass(json!(0), json!(count))
        } else {
            CheckRecord::fail(
                json!(0),
                json!(count),
                json!({ "count_in_open_interval": count, "char_poly": poly_value(&a.char_poly) }),
            )
        }
    }
}

/// Multiplicity formulas for 0 and -1 on cographs, with the isolated-vertex
/// correction: mult(0) = Σ(|C_i|-1) + [isolated vertex exists] and
/// mult(-1) = Σ(|D_i|-1). The uncorrected sum is reported alongside.
fn multiplicity_formulas(a: &GraphAnalysis) -> CheckRecord {
    if !a.is_cograph() {
        return CheckRecord::not_applicable("not a cograph");
    }
    let verbatim_zero = a.classes.dup_excess() as u32;
    let iso = a.graph.has_isolated_vertex() as u32;
    let corrected_zero = verbatim_zero + iso;
    let minus_one = a.classes.codup_excess() as u32;
    let expected = json!({
        "mult_zero": corrected_zero,
        "mult_minus_one": minus_one,
        "verbatim_mult_zero": verbatim_zero,
    });
    let actual = json!({
        "mult_zero": a.spectrum.mult_zero,
        "mult_minus_one": a.spectrum.mult_minus_one,
    });
    if a.spectrum.mult_zero == corrected_zero && a.spectrum.mult_minus_one == minus_one {
        CheckRecord::pass(expected, actual)
    } else {
        CheckRecord::fail(expected, actual, json!({ "classes": a.classes }))
    }
}

/// Multiplicity bounds on cographs: any eigenvalue other than 0, -1 has
/// multiplicity at most the number of classes, and any eigenvalue at all has
/// multiplicity at most mult(0) + mult(-1).
fn mult_bounds(a: &GraphAnalysis) -> CheckRecord {
    if !a.is_cograph() {
        return CheckRecord::not_applicable("not a cograph");
    }
    let class_bound = a.classes.total() as u32;
    let zero_minus_one_bound = a.spectrum.mult_zero + a.spectrum.mult_minus_one;
    let max_other = a.spectrum.max_mult_excluding_zero_minus_one();
    let max_any = a.spectrum.max_mult();
    let expected = json!({
        "class_count_bound": class_bound,
        "zero_minus_one_bound": zero_minus_one_bound,
    });
    let actual = json!({ "max_mult_other": max_other, "max_mult_any": max_any });
    if max_other <= class_bound && max_any <= zero_minus_one_bound {
        CheckRecord::pass(expected, actual)
    } else {
        let violating: Vec<Value> = a
            .spectrum
            .factors
            .iter()
            .map(|r| json!({ "factor": poly_value(&r.factor), "multiplicity": r.multiplicity }))
            .collect();
        CheckRecord::fail(expected, actual, json!({ "factors": violating }))
    }
}

/// On threshold graphs every eigenvalue other than 0 and -1 is simple.
fn threshold_simple(a: &GraphAnalysis) -> CheckRecord {
    if !a.is_threshold() {
        return CheckRecord::not_applicable("not a threshold graph");
    }
    let repeated: Vec<Value> = a
        .spectrum
        .factors
        .iter()
        .filter(|r| {
            r.multiplicity >= 2
                && strip_zero_and_minus_one(&r.factor).degree().is_some_and(|d| d > 0)
        })
        .map(|r| json!({ "factor": poly_value(&r.factor), "multiplicity": r.multiplicity }))
        .collect();
    let expected = json!({ "repeated_eigenvalues_other_than_zero_minus_one": 0 });
    let actual = json!({ "repeated": repeated.len() });
    if repeated.is_empty() {
        CheckRecord::pass(expected, actual)
    } else {
        CheckRecord::fail(expected, actual, json!({ "factors": repeated }))
    }
}

/// Open conjecture: on a cograph, the multiplicity of any eigenvalue other
/// than 0, -1 is at most the minimum chain count of the quotient order.
/// A violation is a counterexample finding, not a failure.
fn conjecture(a: &GraphAnalysis) -> CheckRecord {
    if !a.is_cograph() {
        return CheckRecord::not_applicable("not a cograph");
    }
    let max_mult = a.spectrum.max_mult_excluding_zero_minus_one();
    let chains = a.chain_cover.count() as u32;
    let expected = json!({ "chain_bound": chains });
    let actual = json!({ "max_mult_other": max_mult, "min_chain_count": chains });
    if max_mult <= chains {
        CheckRecord::pass(expected, actual)
    } else {
        CheckRecord {
            status: CheckStatus::Counterexample,
            expected,
            actual,
            witness: json!({
                "chains": a.chain_cover.chains,
                "antichain": a.chain_cover.antichain,
                "factors": a
                    .spectrum
                    .factors
                    .iter()
                    .map(|r| json!({
                        "factor": poly_value(&r.factor),
                        "multiplicity": r.multiplicity,
                    }))
                    .collect::<Vec<_>>(),
            }),
        }
    }
}

/// Numeric interlacing of each single-vertex-deleted spectrum.
fn interlacing(a: &GraphAnalysis) -> CheckRecord {
    let n = a.graph.order();
    if n < 2 {
        return CheckRecord::not_applicable("needs at least two vertices");
    }
    let expected = json!({ "tolerance": INTERLACING_TOL });
    let lambda = match numeric_eigenvalues(&a.graph, JACOBI_DEFAULT_TOL) {
        Ok(e) => e,
        Err(e) => {
            return CheckRecord::fail(
                expected,
                Value::Null,
                json!({ "eigensolver_error": e.to_string() }),
            )
        }
    };
    for v in 0..n {
        let mu = match numeric_eigenvalues(&a.graph.delete_vertex(v), JACOBI_DEFAULT_TOL) {
            Ok(e) => e,
            Err(e) => {
                return CheckRecord::fail(
                    expected,
                    Value::Null,
                    json!({ "eigensolver_error": e.to_string(), "deleted_vertex": v }),
                )
            }
        };
        for i in 0..n - 1 {
            if !(lambda[i] >= mu[i] - INTERLACING_TOL && mu[i] >= lambda[i + 1] - INTERLACING_TOL)
            {
                return CheckRecord::fail(
                    expected,
                    json!({ "deleted_vertex": v }),
                    json!({
                        "deleted_vertex": v,
                        "index": i,
                        "lambda_i": lambda[i],
                        "mu_i": mu[i],
                        "lambda_next": lambda[i + 1],
                    }),
                );
            }
        }
    }
    CheckRecord::pass(expected, json!({ "deletions": n }))
}

pub fn check_interval_theorem(g: &Graph) -> CheckRecord {
    interval_theorem(&analyze(g))
}

pub fn check_multiplicity_formulas(g: &Graph) -> CheckRecord {
    multiplicity_formulas(&analyze(g))
}

pub fn check_mult_bounds(g: &Graph) -> CheckRecord {
    mult_bounds(&analyze(g))
}

pub fn check_threshold_simple(g: &Graph) -> CheckRecord {
    threshold_simple(&analyze(g))
}

pub fn check_conjecture(g: &Graph) -> CheckRecord {
    conjecture(&analyze(g))
}

pub fn check_interlacing(g: &Graph) -> CheckRecord {
    interlacing(&analyze(g))
}

/// Runs every check on one graph.
pub fn verify_graph(g: &Graph, seed: Option<u64>) -> VerificationReport {
    let analysis = analyze(g);
    verify_analysis(&analysis, seed)
}

type CheckFn = fn(&GraphAnalysis) -> CheckRecord;

pub fn verify_analysis(analysis: &GraphAnalysis, seed: Option<u64>) -> VerificationReport {
    let runners: [(&str, CheckFn); 6] = [
        ("conjecture", conjecture),
        ("interlacing", interlacing),
        ("interval_theorem", interval_theorem),
        ("mult_bounds", mult_bounds),
        ("multiplicity_formulas", multiplicity_formulas),
        ("threshold_simple", threshold_simple),
    ];
    let mut checks = BTreeMap::new();
    let mut timing = BTreeMap::new();
    for (name, run) in runners {
        let start = Instant::now();
        let record = run(analysis);
        timing.insert(name.to_string(), start.elapsed().as_secs_f64());
        checks.insert(name.to_string(), record);
    }
    VerificationReport {
        graph6: write_graph6(&analysis.graph),
        is_cograph: analysis.is_cograph(),
        checks,
        meta: ReportMeta { version: env!("CARGO_PKG_VERSION").to_string(), seed },
        timing_seconds: timing,
    }
}

// ---------------------------------------------------------------------------
// Campaigns
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CampaignMode {
    /// Every cograph up to isomorphism for each n (cap 12).
    Exhaustive,
    /// Seeded random cographs, `samples` per n (cap 64).
    Random,
    /// Every graph up to isomorphism for each n, cographs or not (cap 7).
    AllGraphs,
}

impl CampaignMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CampaignMode::Exhaustive => "exhaustive",
            CampaignMode::Random => "random",
            CampaignMode::AllGraphs => "all-graphs",
        }
    }

    fn cap(self) -> usize {
        match self {
            CampaignMode::Exhaustive => EXHAUSTIVE_CAP,
            CampaignMode::Random => RANDOM_CAP,
            CampaignMode::AllGraphs => ALL_GRAPHS_CAP,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CampaignConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub mode: CampaignMode,
    /// Random mode only: cographs generated per n.
    pub samples: usize,
    pub seed: u64,
    /// Worker threads; 1 means serial. Has no effect on the summary bytes.
    pub workers: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CampaignError {
    #[error("empty or inverted n range {n_min}..{n_max}")]
    BadRange { n_min: usize, n_max: usize },
    #[error("n = {n} exceeds the {mode} campaign cap {cap}")]
    CapExceeded { n: usize, cap: usize, mode: &'static str },
    #[error("random mode needs samples >= 1")]
    NoSamples,
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("worker pool: {0}")]
    WorkerPool(String),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub pass: u64,
    pub fail: u64,
    pub na: u64,
    pub counterexample: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailingGraph {
    pub graph6: String,
    pub failed_checks: Vec<String>,
}

/// Deterministic campaign outcome: byte-identical JSON for identical
/// configurations regardless of worker count.
#[derive(Debug, Clone, Serialize)]
pub struct CampaignSummary {
    pub n_min: usize,
    pub n_max: usize,
    pub mode: String,
    pub samples: Option<usize>,
    pub graph_counts: BTreeMap<usize, u64>,
    pub total_graphs: u64,
    pub tallies: BTreeMap<String, CheckTally>,
    pub failures: Vec<FailingGraph>,
    pub conjecture_counterexamples: Vec<String>,
    pub meta: ReportMeta,
}

impl CampaignSummary {
    pub fn failure_count(&self) -> usize {
        self.failures.len()
    }

    pub fn counterexample_count(&self) -> usize {
        self.conjecture_counterexamples.len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("summary serializes")
    }

    /// Plain-text table for human consumption.
    pub fn render_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "campaign: mode={} n={}..{} graphs={}{}",
            self.mode,
            self.n_min,
            self.n_max,
            self.total_graphs,
            self.samples.map_or(String::new(), |s| format!(" samples/n={s}")),
        );
        let _ = writeln!(out, "graphs per n:");
        for (n, count) in &self.graph_counts {
            let _ = writeln!(out, "  n={n:<3} {count}");
        }
        let _ = writeln!(
            out,
            "{:<24} {:>8} {:>8} {:>8} {:>16}",
            "check", "pass", "fail", "n/a", "counterexample"
        );
        for (name, t) in &self.tallies {
            let _ = writeln!(
                out,
                "{:<24} {:>8} {:>8} {:>8} {:>16}",
                name, t.pass, t.fail, t.na, t.counterexample
            );
        }
        if self.failures.is_empty() {
            let _ = writeln!(out, "failures: none");
        } else {
            let _ = writeln!(out, "failures ({}):", self.failures.len());
            for f in &self.failures {
                let _ = writeln!(out, "  {} [{}]", f.graph6, f.failed_checks.join(", "));
            }
        }
        if self.conjecture_counterexamples.is_empty() {
            let _ = writeln!(out, "conjecture counterexamples: none");
        } else {
            let _ = writeln!(
                out,
                "CONJECTURE COUNTEREXAMPLES ({}):",
                self.conjecture_counterexamples.len()
            );
            for g6 in &self.conjecture_counterexamples {
                let _ = writeln!(out, "  {g6}");
            }
        }
        let _ = writeln!(out, "summary hash: {:016x}", fnv1a64(self.to_json().as_bytes()));
        out
    }
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf29ce484222325u64;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// Per-graph seed for random campaigns, derived from (seed, n, index).
fn sample_seed(seed: u64, n: usize, index: usize) -> u64 {
    splitmix64(seed ^ splitmix64((n as u64) << 32 | index as u64))
}

/// Applies every check to every graph of the configured family. Graphs are
/// processed in (n, graph6)-sorted order and merged positionally, so the
/// summary does not depend on the worker count.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignSummary, CampaignError> {
    if cfg.n_min == 0 || cfg.n_min > cfg.n_max {
        return Err(CampaignError::BadRange { n_min: cfg.n_min, n_max: cfg.n_max });
    }
    if cfg.n_max > cfg.mode.cap() {
        return Err(CampaignError::CapExceeded {
            n: cfg.n_max,
            cap: cfg.mode.cap(),
            mode: cfg.mode.as_str(),
        });
    }
    if cfg.mode == CampaignMode::Random && cfg.samples == 0 {
        return Err(CampaignError::NoSamples);
    }

    let mut items: Vec<(usize, String, Graph)> = Vec::new();
    for n in cfg.n_min..=cfg.n_max {
        let graphs = match cfg.mode {
            CampaignMode::Exhaustive => enumerate_cographs(n)?,
            CampaignMode::AllGraphs => enumerate_all_graphs(n)?,
            CampaignMode::Random => (0..cfg.samples)
                .map(|i| random_cograph(n, sample_seed(cfg.seed, n, i)))
                .collect(),
        };
        for g in graphs {
            items.push((n, write_graph6(&g), g));
        }
    }
    items.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));

    let seed = Some(cfg.seed);
    let reports: Vec<VerificationReport> = if cfg.workers <= 1 {
        items.iter().map(|(_, _, g)| verify_graph(g, seed)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| CampaignError::WorkerPool(e.to_string()))?;
        pool.install(|| items.par_iter().map(|(_, _, g)| verify_graph(g, seed)).collect())
    };

    let mut graph_counts: BTreeMap<usize, u64> = BTreeMap::new();
    let mut tallies: BTreeMap<String, CheckTally> = CHECK_NAMES
        .iter()
        .map(|&name| (name.to_string(), CheckTally::default()))
        .collect();
    let mut failures = Vec::new();
    let mut counterexamples = Vec::new();
    for ((n, graph6, _), report) in items.iter().zip(&reports) {
        *graph_counts.entry(*n).or_insert(0) += 1;
        let mut failed_checks = Vec::new();
        for (name, record) in &report.checks {
            let tally = tallies.get_mut(name).expect("known check");
            match record.status {
                CheckStatus::Pass => tally.pass += 1,
                CheckStatus::Fail => {
                    tally.fail += 1;
                    failed_checks.push(name.clone());
                }
                CheckStatus::NotApplicable => tally.na += 1,
                CheckStatus::Counterexample => {
                    tally.counterexample += 1;
                    counterexamples.push(graph6.clone());
                }
            }
        }
        if !failed_checks.is_empty() {
            failures.push(FailingGraph { graph6: graph6.clone(), failed_checks });
        }
    }

    Ok(CampaignSummary {
        n_min: cfg.n_min,
        n_max: cfg.n_max,
        mode: cfg.mode.as_str().to_string(),
        samples: (cfg.mode == CampaignMode::Random).then_some(cfg.samples),
        graph_counts,
        total_graphs: items.len() as u64,
        tallies,
        failures,
        conjecture_counterexamples: counterexamples,
        meta: ReportMeta { version: env!("CARGO_PKG_VERSION").to_string(), seed: Some(cfg.seed) },
    })
}
