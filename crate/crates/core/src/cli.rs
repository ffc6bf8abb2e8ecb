//! The `rigiditylab` command line.
//!
//! Structured results go to stdout (canonical JSON by default, or a short
//! human-readable summary with `--format text`); diagnostics go to stderr.
//! Exit codes: 0 when a verdict was computed, 1 when a demanded boolean
//! verdict is negative, 2 for usage and input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::component::giant_component_experiment;
use crate::construct::{
    bipartite_strong_partition, common_neighbour_partition, complete_bipartite_partition, dirac_partition, random_partition,
    strong_partition_via_sparse_connector, PartitionRequest, DEFAULT_MAX_RETRIES,
};
use crate::experiments::{
    bipartite_table_experiment, bound_survey_experiment, hitting_time_experiment, hyperoctahedral_experiment,
};
use crate::generators::{gnm, gnnp, gnp, process_hitting_time, random_regular};
use crate::graph::{BipartiteGraph, Graph, Vertex, VertexSubset};
use crate::partition::{convert_to_rigid_partition, verify_rigid_partition, PartitionSource, RigidPartition, Verdict};
use crate::properties::{
    is_bi_connector, is_connector, is_expander, is_sparse, jumbled_certificate_regular, CheckOptions, PropertyVerdict,
};
use crate::report::{real, to_canonical_json, ExperimentReport};
use crate::rigidity::{quantitative_bound_check, randomized_rigidity_test, rigidity_scan, DEFAULT_TOL, DEFAULT_TRIALS};
use crate::rng::RngSeed;

/// Exit code for a computed verdict.
pub const EXIT_OK: i32 = 0;
/// Exit code for a negative verdict where a boolean was demanded.
pub const EXIT_NEGATIVE: i32 = 1;
/// Exit code for usage and input errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "rigiditylab", version, about = "Certify d-dimensional graph rigidity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Master seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug, Clone)]
struct GraphInput {
    /// Graph in edge-list text format (`-` for stdin).
    #[arg(long)]
    input: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Randomized rigidity tests.
    #[command(subcommand)]
    Rigidity(RigidityCmd),
    /// Rigid partitions: verification, conversion, construction.
    #[command(subcommand)]
    Partition(PartitionCmd),
    /// The eigenvalue lower bound.
    #[command(subcommand)]
    Bound(BoundCmd),
    /// Pseudo-random graph properties.
    #[command(subcommand)]
    Property(PropertyCmd),
    /// Random graph generators (graph text on stdout by default).
    #[command(subcommand)]
    Gen(GenCmd),
    /// Reproducible experiments (reports on stdout).
    #[command(subcommand)]
    Experiment(ExperimentCmd),
}

#[derive(Subcommand, Debug)]
enum RigidityCmd {
    /// Test d-rigidity; exit 1 when no certificate is found.
    Test {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[command(flatten)]
        common: Common,
    },
    /// The largest certified dimension.
    Number {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        /// Also test every dimension above the first flexible one.
        #[arg(long)]
        probe_above: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Uniform random parts with the minimum cross-degree condition.
    Random,
    /// Strong type I partition from a sparse connector graph.
    SparseConnector,
    /// Bipartite strong partition (sides from --side-a, default first half).
    Bipartite,
    /// The explicit partition of K_{m,n} (no input graph).
    CompleteBipartite,
    /// Equipartition with common neighbours in every part.
    CommonNeighbour,
    /// Dimension from the minimum degree, then common-neighbour partition.
    Dirac,
}

#[derive(Subcommand, Debug)]
enum PartitionCmd {
    /// Verify a rigid partition; exit 1 when rejected.
    Verify {
        #[command(flatten)]
        graph: GraphInput,
        /// Rigid partition JSON.
        #[arg(long)]
        partition: PathBuf,
        /// Parts up to this size are also checked by the all-subsets oracle.
        #[arg(long, default_value_t = 0)]
        exact_threshold: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Convert a CDS family or strong partition into a rigid partition;
    /// exit 1 when the source is invalid for the graph.
    Convert {
        #[command(flatten)]
        graph: GraphInput,
        /// Source partition JSON.
        #[arg(long)]
        partition: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Construct a partition; exit 1 when the construction fails.
    Construct {
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        dim: Option<usize>,
        /// Side sizes for complete-bipartite.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated side A for the bipartite method.
        #[arg(long, value_delimiter = ',')]
        side_a: Option<Vec<Vertex>>,
        #[arg(long, default_value_t = DEFAULT_MAX_RETRIES)]
        max_retries: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand, Debug)]
enum BoundCmd {
    /// Verify a rigid partition and check the eigenvalue bound; exit 1 when
    /// the partition is rejected or the bound fails.
    Check {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        partition: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Clone)]
struct Search {
    /// Use seeded random search instead of exhaustive search.
    #[arg(long)]
    random: bool,
    /// Improvement steps per random-search start.
    #[arg(long, default_value_t = 200)]
    budget: usize,
}

impl Search {
    fn options(&self, seed: u64) -> CheckOptions {
        if self.random {
            CheckOptions::random(self.budget, RngSeed::from(seed))
        } else {
            CheckOptions {
                budget: self.budget,
                seed: RngSeed::from(seed),
                ..CheckOptions::default()
            }
        }
    }
}

#[derive(Subcommand, Debug)]
enum PropertyCmd {
    /// (x, y)-sparseness; exit 1 on a violation.
    Sparse {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        x: f64,
        #[arg(long)]
        y: f64,
        #[command(flatten)]
        search: Search,
        #[command(flatten)]
        common: Common,
    },
    /// K-connector (K-bi-connector with --side-a); exit 1 on a violation.
    Connector {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',')]
        side_a: Option<Vec<Vertex>>,
        #[command(flatten)]
        search: Search,
        #[command(flatten)]
        common: Common,
    },
    /// R-expander; exit 1 on a violation.
    Expander {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        search: Search,
        #[command(flatten)]
        common: Common,
    },
    /// Spectral jumbledness certificate of a regular graph.
    Jumbled {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand, Debug)]
enum GenCmd {
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Bipartite G(n, n, p) with sides 0..n and n..2n.
    Gnnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[command(flatten)]
        common: GenCommon,
    },
    Gnm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Configuration-model k-regular graph.
    Regular {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Collapse loops and parallel edges instead of rejecting.
        #[arg(long)]
        allow_multi: bool,
        #[command(flatten)]
        common: GenCommon,
    },
    /// The random graph process at the minimum-degree-d hitting time.
    Process {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dim: usize,
        #[command(flatten)]
        common: GenCommon,
    },
}

#[derive(Args, Debug, Clone)]
struct GenCommon {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// `text` writes the graph file; `json` wraps it with metadata.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum ExperimentCmd {
    HittingTime {
        #[arg(long, default_value_t = 300)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[command(flatten)]
        common: Common,
    },
    Giant {
        #[arg(long, default_value_t = 2000)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// The constant C in p = C d ln d / n.
        #[arg(long, default_value_t = 20.0)]
        c: f64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[command(flatten)]
        common: Common,
    },
    BipartiteTable {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 5)]
        max_d: usize,
        #[command(flatten)]
        common: Common,
    },
    Hyperoctahedral {
        #[arg(long, default_value_t = 6)]
        min_n: usize,
        #[arg(long, default_value_t = 16)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[command(flatten)]
        common: Common,
    },
    BoundSurvey {
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long, default_value_t = 40)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_d: usize,
        #[command(flatten)]
        common: Common,
    },
}

/// A command's result: what to print and the exit code.
struct Outcome {
    json: Value,
    text: String,
    code: i32,
}

impl Outcome {
    fn new(json: Value, text: String, positive: bool) -> Self {
        Outcome {
            json,
            text,
            code: if positive { EXIT_OK } else { EXIT_NEGATIVE },
        }
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => crate::report::canonical_json(&self.json),
            Format::Text => self.text.trim_end().to_string(),
        }
    }
}

/// Parses `args` (including the program name), runs the command, prints its
/// output and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok((outcome, format)) => {
            println!("{}", outcome.render(format));
            outcome.code
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin()).context("reading stdin")
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_graph(input: &Path) -> Result<Graph> {
    Graph::from_text(&read_text(input)?).with_context(|| format!("parsing graph {}", input.display()))
}

fn read_partition(path: &Path) -> Result<RigidPartition> {
    RigidPartition::from_json(&read_text(path)?).with_context(|| format!("parsing partition {}", path.display()))
}

fn bipartite(g: Graph, side_a: Option<Vec<Vertex>>) -> Result<BipartiteGraph> {
    let n = g.n();
    let a = match side_a {
        Some(a) => VertexSubset::new(a),
        None if n.is_multiple_of(2) => VertexSubset::new(0..n / 2),
        None => bail!("an odd vertex count needs an explicit --side-a"),
    };
    BipartiteGraph::new(g, a).context("building the bipartition")
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("result serializes")
}

fn execute(command: Command) -> Result<(Outcome, Format)> {
    match command {
        Command::Rigidity(cmd) => rigidity(cmd),
        Command::Partition(cmd) => partition(cmd),
        Command::Bound(BoundCmd::Check {
            graph,
            partition,
            tol,
            common,
        }) => {
            let g = read_graph(&graph.input)?;
            let rp = read_partition(&partition)?;
            let report = verify_rigid_partition(&g, &rp, 0)?;
            let outcome = match report.hierarchy() {
                Some(h) => {
                    let bound = quantitative_bound_check(&g, &rp, h, tol)?;
                    let text = format!(
                        "bound {}: lambda_{} = {:.12e} vs min a/2 = {:.12e}; decomposition error {:.3e}",
                        if bound.holds { "holds" } else { "FAILS" },
                        bound.lambda_index,
                        bound.lambda_value,
                        bound.min_half_a,
                        bound.decomposition_error
                    );
                    Outcome::new(to_value(&bound), text, bound.holds)
                }
                None => rejected_outcome(&report.verdict),
            };
            Ok((outcome, common.format))
        }
        Command::Property(cmd) => property(cmd),
        Command::Gen(cmd) => generate(cmd),
        Command::Experiment(cmd) => experiment(cmd),
    }
}

fn rigidity(cmd: RigidityCmd) -> Result<(Outcome, Format)> {
    match cmd {
        RigidityCmd::Test {
            graph,
            dim,
            trials,
            common,
        } => {
            let g = read_graph(&graph.input)?;
            let v = randomized_rigidity_test(&g, dim, trials, RngSeed::from(common.seed))?;
            let text = format!(
                "{}: rank {} of {} at dimension {} ({} trials)",
                if v.is_rigid() { "RigidCertified" } else { "ProbablyFlexible" },
                v.observed_rank,
                v.required_rank,
                v.dim,
                v.trials
            );
            Ok((Outcome::new(to_value(&v), text, v.is_rigid()), common.format))
        }
        RigidityCmd::Number {
            graph,
            trials,
            probe_above,
            common,
        } => {
            let g = read_graph(&graph.input)?;
            let scan = rigidity_scan(&g, trials, RngSeed::from(common.seed), probe_above)?;
            let mut text = format!("rigidity {}", scan.rigidity);
            if !scan.non_monotone.is_empty() {
                write!(text, " (non-monotone at {:?})", scan.non_monotone).expect("write to string");
            }
            Ok((Outcome::new(to_value(&scan), text, true), common.format))
        }
    }
}

fn rejected_outcome(verdict: &Verdict) -> Outcome {
    match verdict {
        Verdict::Accepted(_) => unreachable!("only called on rejections"),
        Verdict::Rejected(r) => Outcome::new(
            json!({"verdict": "rejected", "rejection": to_value(r)}),
            format!("Rejected: {}", serde_json::to_string(r).expect("rejection serializes")),
            false,
        ),
    }
}

fn partition(cmd: PartitionCmd) -> Result<(Outcome, Format)> {
    match cmd {
        PartitionCmd::Verify {
            graph,
            partition,
            exact_threshold,
            common,
        } => {
            let g = read_graph(&graph.input)?;
            let rp = read_partition(&partition)?;
            let report = verify_rigid_partition(&g, &rp, exact_threshold)?;
            let outcome = match &report.verdict {
                Verdict::Accepted(h) => Outcome::new(
                    json!({"verdict": "accepted", "hierarchy": to_value(h), "oracle": to_value(&report.oracle)}),
                    format!("Accepted\nhierarchy {}", serde_json::to_string(h).expect("hierarchy serializes")),
                    true,
                ),
                rejected => rejected_outcome(rejected),
            };
            Ok((outcome, common.format))
        }
        PartitionCmd::Convert {
            graph,
            partition,
            common,
        } => {
            let g = read_graph(&graph.input)?;
            let source: PartitionSource = serde_json::from_str(&read_text(&partition)?)
                .with_context(|| format!("parsing source partition {}", partition.display()))?;
            let outcome = match convert_to_rigid_partition(&g, &source) {
                Ok(rp) => Outcome::new(to_value(&rp), rp.to_json(), true),
                Err(e) => {
                    eprintln!("conversion failed: {e}");
                    Outcome::new(json!({"error": e.to_string()}), format!("conversion failed: {e}"), false)
                }
            };
            Ok((outcome, common.format))
        }
        PartitionCmd::Construct {
            method,
            input,
            dim,
            m,
            n,
            side_a,
            max_retries,
            common,
        } => {
            let seed = RngSeed::from(common.seed);
            let graph = || -> Result<Graph> {
                read_graph(input.as_deref().context("--input is required for this method")?)
            };
            let dim = || dim.context("--dim is required for this method");
            let (json, success) = match method {
                Method::CompleteBipartite => {
                    let (m, n) = (m.context("--m is required")?, n.context("--n is required")?);
                    match complete_bipartite_partition(m, n, dim()?) {
                        Ok(sp) => (to_value(&sp), true),
                        Err(e) => (json!({"error": e.to_string()}), false),
                    }
                }
                Method::Random => {
                    let req = PartitionRequest {
                        max_retries,
                        ..PartitionRequest::new(dim()?, seed)
                    };
                    let outcome = random_partition(&graph()?, &req)?;
                    (to_value(&outcome), outcome.is_success())
                }
                Method::SparseConnector => strong_outcome(strong_partition_via_sparse_connector(&graph()?, dim()?, seed)?),
                Method::Bipartite => strong_outcome(bipartite_strong_partition(&bipartite(graph()?, side_a)?, dim()?, seed)?),
                Method::CommonNeighbour => strong_outcome(common_neighbour_partition(&graph()?, dim()?, seed, max_retries)?),
                Method::Dirac => {
                    let (params, outcome) = dirac_partition(&graph()?, seed, max_retries)?;
                    eprintln!(
                        "dimension {} from ell = {} (guaranteed range: {})",
                        params.d, params.ell, params.in_guaranteed_range
                    );
                    strong_outcome(outcome)
                }
            };
            let text = serde_json::to_string(&json).expect("value serializes");
            Ok((Outcome::new(json, text, success), common.format))
        }
    }
}

/// A successful strong partition is printed bare, ready for `partition
/// convert`; failures print the attempt statistics.
fn strong_outcome(outcome: crate::construct::ConstructionOutcome<crate::partition::StrongPartition>) -> (Value, bool) {
    eprintln!("attempts: {}", outcome.attempts);
    match &outcome.result {
        Some(sp) => (to_value(sp), true),
        None => (to_value(&outcome), false),
    }
}

fn property_outcome(v: PropertyVerdict) -> Outcome {
    let text = format!(
        "{} ({:?}, budget {}){}",
        match v.kind {
            crate::properties::VerdictKind::Holds => "holds",
            crate::properties::VerdictKind::Violated(_) => "violated",
            crate::properties::VerdictKind::NoViolationFound => "no violation found",
        },
        v.mode,
        v.search_budget,
        v.witness().map(|w| format!(": witness {}", serde_json::to_string(w).expect("witness serializes"))).unwrap_or_default()
    );
    let positive = !v.is_violated();
    Outcome::new(to_value(&v), text, positive)
}

fn property(cmd: PropertyCmd) -> Result<(Outcome, Format)> {
    match cmd {
        PropertyCmd::Sparse {
            graph,
            x,
            y,
            search,
            common,
        } => {
            let g = read_graph(&graph.input)?;
            let v = is_sparse(&g, x, y, &search.options(common.seed))?;
            Ok((property_outcome(v), common.format))
        }
        PropertyCmd::Connector {
            graph,
            k,
            side_a,
            search,
            common,
        } => {
            let g = read_graph(&graph.input)?;
            let opts = search.options(common.seed);
            let v = match side_a {
                Some(a) => is_bi_connector(&bipartite(g, Some(a))?, k, &opts)?,
                None => is_connector(&g, k, &opts)?,
            };
            Ok((property_outcome(v), common.format))
        }
        PropertyCmd::Expander {
            graph,
            r,
            search,
            common,
        } => {
            let g = read_graph(&graph.input)?;
            let v = is_expander(&g, r, &search.options(common.seed))?;
            Ok((property_outcome(v), common.format))
        }
        PropertyCmd::Jumbled { graph, common } => {
            let g = read_graph(&graph.input)?;
            let (p, beta) = jumbled_certificate_regular(&g)?;
            let outcome = Outcome::new(
                json!({"p": real(p), "beta": real(beta)}),
                format!("({p:.12e}, {beta:.12e})-jumbled"),
                true,
            );
            Ok((outcome, common.format))
        }
    }
}

fn generate(cmd: GenCmd) -> Result<(Outcome, Format)> {
    let (graph, meta, common) = match cmd {
        GenCmd::Gnp { n, p, common } => (gnp(n, p, RngSeed::from(common.seed))?, json!({"model": "gnp", "n": n, "p": real(p)}), common),
        GenCmd::Gnnp { n, p, common } => (
            gnnp(n, p, RngSeed::from(common.seed))?.graph().clone(),
            json!({"model": "gnnp", "n": n, "p": real(p), "side_a": [0, n]}),
            common,
        ),
        GenCmd::Gnm { n, m, common } => (gnm(n, m, RngSeed::from(common.seed))?, json!({"model": "gnm", "n": n, "m": m}), common),
        GenCmd::Regular {
            n,
            k,
            allow_multi,
            common,
        } => {
            let s = random_regular(n, k, RngSeed::from(common.seed), !allow_multi)?;
            let meta = json!({"model": "regular", "n": n, "k": k, "collapsed": s.collapsed, "attempts": s.attempts});
            (s.graph, meta, common)
        }
        GenCmd::Process { n, dim, common } => {
            let snap = process_hitting_time(n, dim, RngSeed::from(common.seed))?;
            let meta = json!({"model": "process", "snapshot": to_value(&snap)});
            (snap.graph, meta, common)
        }
    };
    let text = graph.to_text();
    let mut json = meta;
    json["seed"] = json!(common.seed);
    json["graph"] = json!(text);
    Ok((Outcome::new(json, text, true), common.format))
}

fn report_outcome(report: ExperimentReport, text: String) -> Outcome {
    eprintln!("wall clock {:.3}s, content hash {}", report.wall_clock_seconds, report.content_hash());
    Outcome::new(to_value(&report), text, true)
}

fn aggregate_text(report: &ExperimentReport) -> String {
    format!("{} {}", report.experiment, to_canonical_json(&report.aggregate))
}

fn experiment(cmd: ExperimentCmd) -> Result<(Outcome, Format)> {
    match cmd {
        ExperimentCmd::HittingTime { n, dim, trials, common } => {
            let r = hitting_time_experiment(n, dim, trials, RngSeed::from(common.seed));
            let text = aggregate_text(&r);
            Ok((report_outcome(r, text), common.format))
        }
        ExperimentCmd::Giant {
            n,
            dim,
            c,
            trials,
            common,
        } => {
            let r = giant_component_experiment(n, dim, c, trials, RngSeed::from(common.seed))?;
            let text = aggregate_text(&r);
            Ok((report_outcome(r, text), common.format))
        }
        ExperimentCmd::BipartiteTable { max_n, max_d, common } => {
            let r = bipartite_table_experiment(max_n, max_d, RngSeed::from(common.seed));
            let text = aggregate_text(&r);
            Ok((report_outcome(r, text), common.format))
        }
        ExperimentCmd::Hyperoctahedral {
            min_n,
            max_n,
            trials,
            common,
        } => {
            let r = hyperoctahedral_experiment(min_n, max_n, trials, RngSeed::from(common.seed));
            let mut text = String::from("n\trigidity\tformula\tmatch\n");
            for row in &r.trials {
                writeln!(text, "{}\t{}\t{}\t{}", row["n"], row["rigidity"], row["formula"], row["matches"]).expect("write to string");
            }
            Ok((report_outcome(r, text), common.format))
        }
        ExperimentCmd::BoundSurvey {
            cases,
            max_n,
            max_d,
            common,
        } => {
            let r = bound_survey_experiment(cases, max_n, max_d, RngSeed::from(common.seed));
            let text = aggregate_text(&r);
            Ok((report_outcome(r, text), common.format))
        }
    }
}
