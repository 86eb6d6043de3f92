//! Command-line front end: loads graphs, communities, node weights and
//! rule files, dispatches every solver, and emits ranked reports.
//!
//! Exit codes: 0 success, 2 usage error, 3 input/format error, 4 size
//! limit exceeded.

use crate::betweenness::{self, SizeDistribution};
use crate::community::{self, WeightPreset};
use crate::connectivity::{self, ConnectivityGame};
use crate::degree::{self, DistanceDecay};
use crate::games::{self, Coalition, GameError};
use crate::graph::{self, CentralityKind, CommunityStructure, Graph};
use crate::mcnets::{self, OrderedSolution};
use crate::report::{format_sig12, CentralityReport};
use crate::vulnerability::{self, FailureModel, ProtectionStrategy};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::path::{Path, PathBuf};

#[derive(Debug)]
enum CliError {
    Usage(String),
    Input(String),
    Limit(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Input(_) => 3,
            CliError::Limit(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Input(m) | CliError::Limit(m) => m,
        }
    }
}

impl From<graph::GraphError> for CliError {
    fn from(e: graph::GraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<GameError> for CliError {
    fn from(e: GameError) -> Self {
        match e {
            GameError::TooManyPlayers { .. } => CliError::Limit(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<degree::DegreeGameError> for CliError {
    fn from(e: degree::DegreeGameError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<betweenness::BetweennessError> for CliError {
    fn from(e: betweenness::BetweennessError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<community::CommunityError> for CliError {
    fn from(e: community::CommunityError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<connectivity::ConnectivityError> for CliError {
    fn from(e: connectivity::ConnectivityError) -> Self {
        match e {
            connectivity::ConnectivityError::Game(GameError::TooManyPlayers { .. }) => {
                CliError::Limit(e.to_string())
            }
            connectivity::ConnectivityError::Graph(graph::GraphError::TooLarge { .. }) => {
                CliError::Limit(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<mcnets::McNetsError> for CliError {
    fn from(e: mcnets::McNetsError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<vulnerability::SimulationError> for CliError {
    fn from(e: vulnerability::SimulationError) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "gtcent",
    version,
    about = "Game-theoretic centrality measures for networks",
    disable_help_subcommand = true
)]
struct Cli {
    /// Worker threads for the parallel solvers (0 = all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classic and game-theoretic node centralities.
    Centrality(CentralityArgs),
    /// Shapley value of connectivity games.
    Connectivity(ConnectivityArgs),
    /// Rule-based ordered-coalition games.
    Gmcnets(GmcnetsArgs),
    /// Node-failure simulation against a centrality ranking.
    Simulate(SimulateArgs),
    /// Brute-force oracles for cross-checking.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Measure {
    Degree,
    Closeness,
    Betweenness,
    SvG1,
    SvG2,
    SvG3,
    SvG4,
    SvG5,
    Svb,
    SemivalueB,
    OwenDegree,
    CoalitionalSemivalue,
}

#[derive(Args)]
struct CentralityArgs {
    /// Edge-list file: `u v` or `u v w` per line, `#` comments.
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    directed: bool,
    #[arg(long, value_enum)]
    measure: Measure,
    /// Threshold for sv-g2 (uniform across nodes).
    #[arg(long)]
    k: Option<u32>,
    /// Distance / weight cutoff for sv-g3 and sv-g5.
    #[arg(long)]
    cutoff: Option<f64>,
    /// Distance decay for sv-g4: inverse, inverse-square, exponential,
    /// or step:CUTOFF.
    #[arg(long)]
    f: Option<String>,
    /// Coalition-size distribution: `interval:a,b` or `uniform`.
    #[arg(long)]
    pd: Option<String>,
    /// Community file (`node community_id` lines).
    #[arg(long)]
    communities: Option<PathBuf>,
    /// Node-weight file (`node value` lines; defaults to 1 per node).
    #[arg(long)]
    node_weights: Option<PathBuf>,
    /// Two-level weights: owen, banzhaf, sym-banzhaf or p-binomial:P.
    #[arg(long)]
    preset: Option<String>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConnectivityPreset {
    Unit,
    EdgesOverWeight,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConnectivityMode {
    Exact,
    Faster,
    Approx,
}

#[derive(Args)]
struct ConnectivityArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    directed: bool,
    /// Valuation of connected coalitions.
    #[arg(long, value_enum, default_value = "unit")]
    f: ConnectivityPreset,
    #[arg(long, value_enum, default_value = "faster")]
    mode: ConnectivityMode,
    /// Samples for approximate mode.
    #[arg(long, default_value_t = 100_000)]
    iters: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Override the exact-mode node limit.
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderedKind {
    Nr,
    Sb,
}

impl OrderedKind {
    fn solution(self) -> OrderedSolution {
        match self {
            OrderedKind::Nr => OrderedSolution::NowakRadzik,
            OrderedKind::Sb => OrderedSolution::SanchezBergantinos,
        }
    }
}

#[derive(Args)]
struct GmcnetsArgs {
    #[command(subcommand)]
    sub: Option<GmcnetsSub>,
    /// Rule file path, or inline rule text.
    #[arg(long)]
    rules: Option<String>,
    #[arg(long, value_enum, default_value = "nr")]
    value: OrderedKind,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Subcommand)]
enum GmcnetsSub {
    /// Ordered-value betweenness built from the graph's geodesics.
    Betweenness {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        directed: bool,
        #[arg(long, value_enum, default_value = "nr")]
        value: OrderedKind,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    directed: bool,
    /// Failure-set size interval `a,b` (half-open).
    #[arg(long)]
    interval: String,
    /// rank-inv-sq, top:FRACTION or full.
    #[arg(long, default_value = "rank-inv-sq")]
    strategy: String,
    #[arg(long, default_value_t = 5000)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Ranking measure: betweenness, svb or semivalue-b (the latter
    /// reuses the failure interval as its size distribution).
    #[arg(long, default_value = "betweenness")]
    measure: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Concept {
    Sv,
    Semivalue,
    Owen,
    Csemi,
    Nr,
    Sb,
}

#[derive(Args)]
struct OracleArgs {
    /// Solution concept to brute-force.
    #[arg(long, value_enum)]
    concept: Concept,
    /// Underlying game for subset concepts: g1, g2, g3, g4, g5,
    /// betweenness, weighted-degree, connectivity-unit or
    /// connectivity-edges.
    #[arg(long)]
    game: Option<String>,
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    directed: bool,
    /// Rule file or inline rules (for nr/sb concepts).
    #[arg(long)]
    rules: Option<String>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    cutoff: Option<f64>,
    #[arg(long)]
    f: Option<String>,
    /// Size weights for the semivalue concept: `interval:a,b`, `uniform`
    /// or `banzhaf`.
    #[arg(long)]
    pd: Option<String>,
    #[arg(long)]
    communities: Option<PathBuf>,
    #[arg(long)]
    node_weights: Option<PathBuf>,
    #[arg(long)]
    preset: Option<String>,
    /// Override the documented player limit.
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I>(args: I) -> i32
where
    I: IntoIterator<Item = OsString>,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are successful exits.
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            eprintln!("{e}");
            return 2;
        }
    };
    if let Some(threads) = cli.threads {
        if threads > 0 {
            // Ignore failure when a global pool already exists.
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global();
        }
    }
    match dispatch(cli.command) {
        Ok(output) => {
            print!("{output}");
            0
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

fn dispatch(command: Command) -> Result<String, CliError> {
    match command {
        Command::Centrality(args) => centrality_command(args),
        Command::Connectivity(args) => connectivity_command(args),
        Command::Gmcnets(args) => gmcnets_command(args),
        Command::Simulate(args) => simulate_command(args),
        Command::Oracle(args) => oracle_command(args),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path, directed: bool) -> Result<Graph, CliError> {
    let text = read_file(path)?;
    Ok(Graph::parse_edge_list(&text, directed)?)
}

fn load_node_weights(g: &Graph, path: Option<&PathBuf>) -> Result<Vec<f64>, CliError> {
    match path {
        Some(p) => Ok(g.parse_node_weights(&read_file(p)?)?),
        None => Ok(vec![1.0; g.node_count()]),
    }
}

fn load_communities(g: &Graph, path: &Path) -> Result<CommunityStructure, CliError> {
    Ok(CommunityStructure::parse(g, &read_file(path)?)?)
}

fn parse_decay(spec: &str) -> Result<DistanceDecay, CliError> {
    match spec {
        "inverse" => Ok(DistanceDecay::Inverse),
        "inverse-square" => Ok(DistanceDecay::InverseSquare),
        "exponential" => Ok(DistanceDecay::Exponential),
        other => {
            if let Some(rest) = other.strip_prefix("step:") {
                let cutoff: f64 = rest
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad step cutoff `{rest}`")))?;
                Ok(DistanceDecay::Step(cutoff))
            } else {
                Err(CliError::Usage(format!(
                    "unknown decay `{other}` (expected inverse, inverse-square, exponential or step:X)"
                )))
            }
        }
    }
}

fn parse_pd(spec: &str, n: usize) -> Result<SizeDistribution, CliError> {
    if spec == "uniform" {
        return Ok(SizeDistribution::uniform(n));
    }
    if let Some(rest) = spec.strip_prefix("interval:") {
        let parts: Vec<&str> = rest.split(',').collect();
        if parts.len() != 2 {
            return Err(CliError::Usage(format!("bad interval `{rest}`")));
        }
        let a: usize = parts[0]
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("bad interval bound `{}`", parts[0])))?;
        let b: usize = parts[1]
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("bad interval bound `{}`", parts[1])))?;
        return Ok(vulnerability::interval_pd(a, b, n)?);
    }
    Err(CliError::Usage(format!(
        "unknown size distribution `{spec}` (expected uniform or interval:a,b)"
    )))
}

fn parse_preset(spec: &str) -> Result<WeightPreset, CliError> {
    match spec {
        "owen" => Ok(WeightPreset::Owen),
        "banzhaf" => Ok(WeightPreset::OwenBanzhaf),
        "sym-banzhaf" => Ok(WeightPreset::SymmetricBanzhaf),
        other => {
            if let Some(rest) = other.strip_prefix("p-binomial:") {
                let p: f64 = rest
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad probability `{rest}`")))?;
                Ok(WeightPreset::PBinomial(p))
            } else {
                Err(CliError::Usage(format!(
                    "unknown preset `{other}` (expected owen, banzhaf, sym-banzhaf or p-binomial:P)"
                )))
            }
        }
    }
}

fn require<T>(value: Option<T>, what: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("missing required flag {what}")))
}

fn emit(report: &CentralityReport, labels: &[String], format: Format) -> String {
    match format {
        Format::Csv => report.to_csv(labels),
        Format::Json => {
            let mut s = report.to_json(labels);
            s.push('\n');
            s
        }
    }
}

fn centrality_command(args: CentralityArgs) -> Result<String, CliError> {
    let g = load_graph(&args.graph, args.directed)?;
    let n = g.node_count();
    let report = match args.measure {
        Measure::Degree => CentralityReport::new(
            "degree",
            graph::classic_centrality(&g, CentralityKind::Degree),
        ),
        Measure::Closeness => CentralityReport::new(
            "closeness",
            graph::classic_centrality(&g, CentralityKind::Closeness),
        ),
        Measure::Betweenness => CentralityReport::new(
            "betweenness",
            graph::classic_centrality(&g, CentralityKind::Betweenness),
        ),
        Measure::SvG1 => CentralityReport::new("sv-g1", degree::sv_g1(&g)),
        Measure::SvG2 => {
            let k = args.k.unwrap_or(1);
            let thresholds: Vec<u32> = (0..n).map(|v| k.min(1 + g.in_degree(v) as u32)).collect();
            CentralityReport::new("sv-g2", degree::sv_g2(&g, &thresholds)?).param("k", k)
        }
        Measure::SvG3 => {
            let cutoff = require(args.cutoff, "--cutoff")?;
            CentralityReport::new("sv-g3", degree::sv_g3(&g, &vec![cutoff; n])?)
                .param("cutoff", cutoff)
        }
        Measure::SvG4 => {
            let decay = parse_decay(args.f.as_deref().unwrap_or("inverse"))?;
            CentralityReport::new("sv-g4", degree::sv_g4(&g, move |d| decay.eval(d))?)
                .param("f", args.f.as_deref().unwrap_or("inverse"))
        }
        Measure::SvG5 => {
            let cutoff = require(args.cutoff, "--cutoff")?;
            CentralityReport::new("sv-g5", degree::sv_g5_approx(&g, &vec![cutoff; n])?)
                .param("cutoff", cutoff)
        }
        Measure::Svb => {
            let scores = if g.is_weighted() {
                betweenness::wsvb(&g)?
            } else {
                betweenness::svb(&g)?
            };
            CentralityReport::new("svb", scores)
        }
        Measure::SemivalueB => {
            let pd = parse_pd(&require(args.pd.clone(), "--pd")?, n)?;
            let scores = if g.is_weighted() {
                betweenness::wsb(&g, &pd)?
            } else {
                betweenness::semivalue_betweenness(&g, &pd)?
            };
            CentralityReport::new("semivalue-b", scores).param("pd", args.pd.unwrap())
        }
        Measure::OwenDegree => {
            let cs = load_communities(&g, &require(args.communities.clone(), "--communities")?)?;
            let f = load_node_weights(&g, args.node_weights.as_ref())?;
            CentralityReport::new("owen-degree", community::owen_degree(&g, &cs, &f)?)
        }
        Measure::CoalitionalSemivalue => {
            let cs = load_communities(&g, &require(args.communities.clone(), "--communities")?)?;
            let f = load_node_weights(&g, args.node_weights.as_ref())?;
            let preset = parse_preset(args.preset.as_deref().unwrap_or("owen"))?;
            let sizes: Vec<usize> = (0..cs.community_count())
                .map(|c| cs.members(c).len())
                .collect();
            let weights = community::preset_weights(preset, cs.community_count(), &sizes)?;
            CentralityReport::new(
                "coalitional-semivalue",
                community::coalitional_semivalue_degree(&g, &cs, &weights, &f)?,
            )
            .param("preset", args.preset.as_deref().unwrap_or("owen"))
        }
    };
    Ok(emit(&report, g.labels(), args.format))
}

fn connectivity_command(args: ConnectivityArgs) -> Result<String, CliError> {
    let g = load_graph(&args.graph, args.directed)?;
    let game = match args.f {
        ConnectivityPreset::Unit => ConnectivityGame::unit(&g)?,
        ConnectivityPreset::EdgesOverWeight => ConnectivityGame::edges_over_weight(&g)?,
    };
    let (name, scores, seed) = match args.mode {
        ConnectivityMode::Exact => {
            let limit = args.limit.unwrap_or(connectivity::DEFAULT_GENERAL_LIMIT);
            (
                "connectivity-exact",
                connectivity::general_sv_connectivity_with_limit(&game, limit)?,
                None,
            )
        }
        ConnectivityMode::Faster => (
            "connectivity-faster",
            connectivity::faster_svcg(&game),
            None,
        ),
        ConnectivityMode::Approx => (
            "connectivity-approx",
            connectivity::approximate_svcg(&game, args.iters, args.seed)?,
            Some(args.seed),
        ),
    };
    let mut report = CentralityReport::new(name, scores).param(
        "f",
        match args.f {
            ConnectivityPreset::Unit => "unit",
            ConnectivityPreset::EdgesOverWeight => "edges-over-weight",
        },
    );
    if let Some(seed) = seed {
        report = report.seeded(seed).param("iters", args.iters);
    }
    Ok(emit(&report, g.labels(), args.format))
}

fn load_rules(spec: &str) -> Result<mcnets::RuleSet, CliError> {
    let path = Path::new(spec);
    if path.exists() {
        return Ok(mcnets::parse_rules(&read_file(path)?)?);
    }
    // Quality-of-life: accept inline rule text (';' as a line break).
    let inline = spec.replace(';', "\n");
    mcnets::parse_rules(&inline).map_err(|e| {
        CliError::Input(format!(
            "`{spec}` is neither a readable file nor parseable rules: {e}"
        ))
    })
}

fn gmcnets_command(args: GmcnetsArgs) -> Result<String, CliError> {
    match args.sub {
        Some(GmcnetsSub::Betweenness {
            graph,
            directed,
            value,
            format,
        }) => {
            let g = load_graph(&graph, directed)?;
            let scores = mcnets::generalized_betweenness(&g, value.solution());
            let report = CentralityReport::new(
                match value {
                    OrderedKind::Nr => "gmcnets-betweenness-nr",
                    OrderedKind::Sb => "gmcnets-betweenness-sb",
                },
                scores,
            );
            Ok(emit(&report, g.labels(), format))
        }
        None => {
            let rules = load_rules(&require(args.rules, "--rules")?)?;
            let scores = match args.value {
                OrderedKind::Nr => mcnets::comp_nr(&rules),
                OrderedKind::Sb => mcnets::comp_sb(&rules),
            };
            let report = CentralityReport::new(
                match args.value {
                    OrderedKind::Nr => "gmcnets-nr",
                    OrderedKind::Sb => "gmcnets-sb",
                },
                scores,
            );
            Ok(emit(&report, rules.player_labels(), args.format))
        }
    }
}

fn simulate_command(args: SimulateArgs) -> Result<String, CliError> {
    let g = load_graph(&args.graph, args.directed)?;
    let n = g.node_count();
    let parts: Vec<&str> = args.interval.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::Usage(format!(
            "bad interval `{}` (expected a,b)",
            args.interval
        )));
    }
    let a: usize = parts[0]
        .trim()
        .parse()
        .map_err(|_| CliError::Usage("bad interval bound".into()))?;
    let b: usize = parts[1]
        .trim()
        .parse()
        .map_err(|_| CliError::Usage("bad interval bound".into()))?;
    let strategy = match args.strategy.as_str() {
        "rank-inv-sq" => ProtectionStrategy::RankInverseSquare,
        "full" => ProtectionStrategy::Full,
        other => {
            if let Some(rest) = other.strip_prefix("top:") {
                let f: f64 = rest
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad fraction `{rest}`")))?;
                ProtectionStrategy::TopFraction(f)
            } else {
                return Err(CliError::Usage(format!(
                    "unknown strategy `{other}` (expected rank-inv-sq, top:frac or full)"
                )));
            }
        }
    };
    let ranking = match args.measure.as_str() {
        "betweenness" => graph::classic_centrality(&g, CentralityKind::Betweenness),
        "svb" => {
            if g.is_weighted() {
                betweenness::wsvb(&g)?
            } else {
                betweenness::svb(&g)?
            }
        }
        "semivalue-b" => {
            let pd = vulnerability::interval_pd(a, b.min(n + 1), n)?;
            if g.is_weighted() {
                betweenness::wsb(&g, &pd)?
            } else {
                betweenness::semivalue_betweenness(&g, &pd)?
            }
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown ranking measure `{other}` (expected betweenness, svb or semivalue-b)"
            )))
        }
    };
    let outcome = vulnerability::simulate_failures(
        &g,
        &ranking,
        strategy,
        FailureModel {
            interval: (a, b),
            trials: args.trials,
            seed: args.seed,
        },
    )?;
    let mut out = String::from("interval,strategy,measure,mean_igm,ci_low,ci_high,seed\n");
    out.push_str(&format!(
        "\"[{a},{b})\",{},{},{},{},{},{}\n",
        args.strategy,
        args.measure,
        format_sig12(outcome.mean_igm),
        format_sig12(outcome.ci_low),
        format_sig12(outcome.ci_high),
        args.seed
    ));
    Ok(out)
}

fn oracle_command(args: OracleArgs) -> Result<String, CliError> {
    if matches!(args.concept, Concept::Nr | Concept::Sb) {
        let rules = load_rules(&require(args.rules, "--rules")?)?;
        let limit = args.limit.unwrap_or(games::DEFAULT_ORDERED_LIMIT);
        let (name, scores) = match args.concept {
            Concept::Nr => ("oracle-nr", games::nr_oracle_with_limit(&rules, limit)?),
            _ => ("oracle-sb", games::sb_oracle_with_limit(&rules, limit)?),
        };
        let report = CentralityReport::new(name, scores);
        return Ok(emit(&report, rules.player_labels(), args.format));
    }

    let g = load_graph(&require(args.graph.clone(), "--graph")?, args.directed)?;
    let n = g.node_count();
    let game_name = require(args.game.clone(), "--game")?;
    let f_weights = load_node_weights(&g, args.node_weights.as_ref())?;
    let gref = &g;
    let value: Box<dyn Fn(Coalition) -> f64 + '_> = match game_name.as_str() {
        "g1" => Box::new(|c: Coalition| {
            degree::nu_degree_game(gref, &degree::DegreeGameSpec::G1, &c.to_vec()).unwrap_or(0.0)
        }),
        "g2" => {
            let k = args.k.unwrap_or(1);
            let spec = degree::DegreeGameSpec::G2 {
                thresholds: (0..n).map(|v| k.min(1 + g.in_degree(v) as u32)).collect(),
            };
            spec.validate(&g)?;
            Box::new(move |c: Coalition| {
                degree::nu_degree_game(gref, &spec, &c.to_vec()).expect("validated spec")
            })
        }
        "g3" => {
            let cutoff = require(args.cutoff, "--cutoff")?;
            let spec = degree::DegreeGameSpec::G3 {
                cutoffs: vec![cutoff; n],
            };
            spec.validate(&g)?;
            Box::new(move |c: Coalition| {
                degree::nu_degree_game(gref, &spec, &c.to_vec()).expect("validated spec")
            })
        }
        "g4" => {
            let decay = parse_decay(args.f.as_deref().unwrap_or("inverse"))?;
            let spec = degree::DegreeGameSpec::G4 { decay };
            spec.validate(&g)?;
            Box::new(move |c: Coalition| {
                degree::nu_degree_game(gref, &spec, &c.to_vec()).expect("validated spec")
            })
        }
        "g5" => {
            let cutoff = require(args.cutoff, "--cutoff")?;
            let spec = degree::DegreeGameSpec::G5 {
                cutoffs: vec![cutoff; n],
            };
            spec.validate(&g)?;
            Box::new(move |c: Coalition| {
                degree::nu_degree_game(gref, &spec, &c.to_vec()).expect("validated spec")
            })
        }
        "betweenness" => Box::new(|c: Coalition| {
            graph::group_centrality(gref, CentralityKind::Betweenness, &c.to_vec()).unwrap_or(0.0)
        }),
        "weighted-degree" => {
            let f = f_weights.clone();
            Box::new(move |c: Coalition| community::weighted_group_degree(gref, &f, &c.to_vec()))
        }
        "connectivity-unit" | "connectivity-edges" => {
            let game = if game_name == "connectivity-unit" {
                ConnectivityGame::unit(gref)?
            } else {
                ConnectivityGame::edges_over_weight(gref)?
            };
            Box::new(move |c: Coalition| game.coalition_value(&c.to_vec()))
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown game `{other}` (expected g1..g5, betweenness, weighted-degree, connectivity-unit or connectivity-edges)"
            )))
        }
    };
    let game = games::coalition_game(n, value);
    let limit = args.limit.unwrap_or(games::DEFAULT_SUBSET_LIMIT);
    let report = match args.concept {
        Concept::Sv => {
            CentralityReport::new("oracle-sv", games::shapley_oracle_with_limit(&game, limit)?)
        }
        Concept::Semivalue => {
            let weights = match args.pd.as_deref() {
                Some("banzhaf") => games::SemivalueWeights::banzhaf(n),
                Some(spec) => parse_pd(spec, n)?.to_semivalue_weights(),
                None => games::SemivalueWeights::shapley(n),
            };
            CentralityReport::new(
                "oracle-semivalue",
                games::semivalue_oracle_with_limit(&game, &weights, limit)?,
            )
        }
        Concept::Owen | Concept::Csemi => {
            let cs = load_communities(&g, &require(args.communities.clone(), "--communities")?)?;
            let partition: Vec<Vec<usize>> = (0..cs.community_count())
                .map(|c| cs.members(c).to_vec())
                .collect();
            let inner_limit = args.limit.unwrap_or(20);
            match args.concept {
                Concept::Owen => CentralityReport::new(
                    "oracle-owen",
                    games::owen_oracle_with_limit(&game, &partition, inner_limit)?,
                ),
                _ => {
                    let preset = parse_preset(args.preset.as_deref().unwrap_or("owen"))?;
                    let sizes: Vec<usize> = partition.iter().map(Vec::len).collect();
                    let weights = community::preset_weights(preset, partition.len(), &sizes)?;
                    CentralityReport::new(
                        "oracle-csemi",
                        games::coalitional_semivalue_oracle_with_limit(
                            &game,
                            &partition,
                            &weights,
                            inner_limit,
                        )?,
                    )
                }
            }
        }
        Concept::Nr | Concept::Sb => unreachable!("handled above"),
    };
    Ok(emit(&report, g.labels(), args.format))
}
