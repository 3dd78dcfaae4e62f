//! The `avoid` command line.
//!
//! Exit codes: 0 success, 1 usage error (including malformed input),
//! 2 budget exceeded, 3 property violation.

pub mod engine;
pub mod input;
pub mod server;
pub mod session;

use std::fs;
use std::io::{BufRead, Write};
use std::net::SocketAddr;
use std::time::Duration;

use avoid_core::game::{
    kn_p2_defender, kn_symmetry_breaker, product_board, product_breaker, ProductBoard,
};
use avoid_core::graph::make_family;
use avoid_core::morphisms::find_fixed_edge_free_involution;
use avoid_core::reductions::{
    gi_to_par, par_via_iso, recover_isomorphism, reduce_r, reduction_correctness_check, ParError,
};
use avoid_core::solver::{
    classify_with, decide_symm_with, enumerate_graphs, solve_avoidance_with, verify_strategy,
    Adversary, AvoidOptions, Property, SolveError, Stats, SymmOptions, VerifyError, VerifyOptions,
    DEFAULT_NODE_BUDGET,
};
use avoid_core::{Budget, FamilySpec, Graph, Player, Status, Strategy, Transcript};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::engine::{build_engine, EngineKind};
use crate::input::{
    parse_family, parse_forbidden, parse_graph6, parse_json_graph, read_source, InputError,
};
use crate::session::{Session, SessionError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "avoid",
    version,
    about = "Avoidance games on graphs: symmetry, solving, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a graph from a family expression and print it.
    Gen {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
    /// AUTO membership, with a fixed-edge-free involution as witness.
    CheckAuto {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Decide SYMM exactly.
    SolveSymm {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Disable the transposition table.
        #[arg(long)]
        no_memo: bool,
    },
    /// Solve the avoidance game (G, F).
    SolveAvoid {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        forbidden: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Classify every graph with a given number of edges (JSON lines).
    ClassifyCensus {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        connected: bool,
        /// Largest vertex count considered (at most 8).
        #[arg(long, default_value_t = 7)]
        order: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<String>,
    },
    /// The reduction R from fixed-point-free to fixed-edge-free involutions.
    ReduceR {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// Also search both sides of the equivalence.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Reduce graph isomorphism of two graphs to PAR, and optionally solve it.
    ///
    /// Takes two graphs: every --graph6, then every --family, then every --json.
    Gi2par {
        #[command(flatten)]
        input: GraphInput,
        /// Solve the instance and recover an isomorphism of the inputs.
        #[arg(long)]
        solve: bool,
    },
    /// Play a strategy against adversaries and check a property, or replay a transcript.
    Verify(VerifyArgs),
    /// Play a text game against the engine on stdin/stdout.
    Play {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value = "none")]
        forbidden: String,
        /// The human's side.
        #[arg(long, value_enum, default_value_t = Side::A)]
        side: Side,
        #[arg(long, default_value = "optimal")]
        engine: String,
        /// Write the final transcript here.
        #[arg(long)]
        out: Option<String>,
    },
    /// Run the HTTP game service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
        #[arg(long, default_value_t = server::DEFAULT_SESSIONS)]
        sessions: usize,
    },
}

#[derive(Debug, Args)]
struct GraphInput {
    #[arg(long)]
    graph6: Vec<String>,
    /// JSON graph file, `-` for stdin.
    #[arg(long)]
    json: Vec<String>,
    /// Family expression, e.g. `K6`, `C4`, `cartesian(K3+e, P2)`.
    #[arg(long)]
    family: Vec<String>,
}

impl GraphInput {
    fn all(&self) -> Result<Vec<Graph>, InputError> {
        let mut out = Vec::new();
        for g in &self.graph6 {
            out.push(parse_graph6(g)?);
        }
        for f in &self.family {
            out.push(parse_family(f)?);
        }
        for path in &self.json {
            out.push(parse_json_graph(&read_source(path)?)?);
        }
        Ok(out)
    }

    fn exactly(&self, count: usize) -> Result<Vec<Graph>, CliError> {
        let gs = self.all()?;
        if gs.len() != count {
            let what = if count == 1 {
                "one graph"
            } else {
                "two graphs"
            };
            return Err(CliError::Usage(format!(
                "expected {what} via --graph6, --family or --json, got {}",
                gs.len()
            )));
        }
        Ok(gs)
    }

    fn one(&self) -> Result<Graph, CliError> {
        Ok(self.exactly(1)?.remove(0))
    }

    fn given(&self) -> bool {
        !(self.graph6.is_empty() && self.json.is_empty() && self.family.is_empty())
    }
}

#[derive(Debug, Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget_nodes: u64,
    #[arg(long)]
    budget_secs: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        let b = Budget::nodes(self.budget_nodes);
        match self.budget_secs {
            Some(s) => b.with_time(Duration::from_secs_f64(s.max(0.0))),
            None => b,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Side {
    A,
    B,
}

impl From<Side> for Player {
    fn from(s: Side) -> Player {
        match s {
            Side::A => Player::A,
            Side::B => Player::B,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyKind {
    KnP2,
    KnBreaker,
    Automorphism,
    ProductBreaker,
    Optimal,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AdversaryKind {
    Exhaustive,
    Random,
    MirrorRandom,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Pruning {
    None,
    Orbit,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PropertyKind {
    NeverLoses,
    Symmetric,
    BrokenBy,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum, required_unless_present = "replay")]
    strategy: Option<StrategyKind>,
    /// Board order for the K_n strategies.
    #[arg(long)]
    n: Option<usize>,
    /// Product board for product-breaker (default: the board given, else cartesianK3eP2).
    #[arg(long)]
    product: Option<String>,
    #[command(flatten)]
    input: GraphInput,
    #[arg(long)]
    forbidden: Option<String>,
    /// Side for the optimal strategy.
    #[arg(long, value_enum)]
    side: Option<Side>,
    #[arg(long, value_enum, default_value_t = AdversaryKind::Exhaustive)]
    adversary: AdversaryKind,
    #[arg(long, value_enum, default_value_t = Pruning::None)]
    pruning: Pruning,
    /// Games for the random adversaries.
    #[arg(long, default_value_t = 10_000)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Check only this property instead of the strategy's defaults.
    #[arg(long, value_enum)]
    property: Option<PropertyKind>,
    /// Round limit for broken-by.
    #[arg(long)]
    round: Option<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Replay a transcript file (`-` for stdin) and check its recorded status.
    #[arg(long, conflicts_with = "strategy")]
    replay: Option<String>,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("{0}")]
    Violation(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Budget(_) => EXIT_BUDGET,
            CliError::Violation(_) => EXIT_VIOLATION,
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Runs the CLI with stdio; returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    // stdin stays unlocked: `--json -` reads it directly
    let mut stdin = std::io::BufReader::new(std::io::stdin());
    let stdout = std::io::stdout();
    run_with(argv, &mut stdin, &mut stdout.lock())
}

/// Runs the CLI against the given streams. Diagnostics go to stderr.
pub fn run_with<I, T>(argv: I, input: &mut dyn BufRead, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command, input, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("avoid: {e}");
            e.code()
        }
    }
}

fn stats_json(s: &Stats) -> Value {
    // elapsed time stays off stdout so that output is reproducible
    log::info!(
        "{} positions, {} memo hits, {:?}",
        s.positions,
        s.memo_hits,
        s.elapsed
    );
    json!({ "positions": s.positions, "memo_hits": s.memo_hits })
}

fn emit(out: &mut dyn Write, path: Option<&str>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn line(out: &mut dyn Write, v: &Value) -> Result<(), CliError> {
    writeln!(out, "{v}")?;
    Ok(())
}

fn dispatch(cmd: Command, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Gen {
            input: gi,
            format,
            out: path,
        } => {
            let g = gi.one()?;
            let text = match format {
                Format::Graph6 => format!("{}\n", g.to_graph6()),
                Format::Json => format!("{}\n", g.to_json_string()),
            };
            emit(out, path.as_deref(), &text)?;
        }
        Command::CheckAuto { input: gi } => {
            let g = gi.one()?;
            let witness = find_fixed_edge_free_involution(&g);
            line(
                out,
                &json!({ "graph6": g.to_graph6(), "in_auto": witness.is_some(), "witness": witness }),
            )?;
        }
        Command::SolveSymm {
            input: gi,
            budget,
            no_memo,
        } => {
            let g = gi.one()?;
            let r = decide_symm_with(
                &g,
                &SymmOptions {
                    budget: budget.budget(),
                    memo: !no_memo,
                },
            )?;
            let mut v = json!({
                "graph6": g.to_graph6(),
                "outcome": r.outcome,
                "strategy_size": r.strategy().len(),
                "stats": stats_json(&r.stats),
            });
            if let Some(l) = r.breaking_line() {
                v["line"] = json!(l);
            }
            line(out, &v)?;
        }
        Command::SolveAvoid {
            input: gi,
            forbidden,
            budget,
        } => {
            let g = gi.one()?;
            let f = parse_forbidden(&forbidden)?
                .ok_or_else(|| CliError::Usage("solve-avoid needs a forbidden graph".into()))?;
            let r = solve_avoidance_with(
                &g,
                &f,
                &AvoidOptions {
                    budget: budget.budget(),
                },
            )?;
            line(
                out,
                &json!({
                    "graph6": g.to_graph6(),
                    "forbidden": f.to_graph6(),
                    "outcome": r.outcome,
                    "table_size": r.strategy.len(),
                    "stats": stats_json(&r.stats),
                }),
            )?;
        }
        Command::ClassifyCensus {
            size,
            connected,
            order,
            budget,
            out: path,
        } => {
            if !(1..=8).contains(&order) {
                return Err(CliError::Usage(format!(
                    "--order must be in 1..=8, got {order}"
                )));
            }
            let options = SymmOptions {
                budget: budget.budget(),
                memo: true,
            };
            let mut text = String::new();
            let mut undecided = false;
            for g in enumerate_graphs(order, Some(size), connected) {
                let c = classify_with(&g, &options);
                undecided |= c.in_symm.is_none();
                text.push_str(&c.to_json_line());
                text.push('\n');
            }
            emit(out, path.as_deref(), &text)?;
            if undecided {
                return Err(CliError::Budget("some graphs were left undecided".into()));
            }
        }
        Command::ReduceR {
            input: gi,
            format,
            check,
            budget,
        } => {
            let g = gi.one()?;
            let r = reduce_r(&g);
            if check {
                let c = reduction_correctness_check(&g, &budget.budget())
                    .map_err(|_| CliError::Budget("reduction check".into()))?;
                line(
                    out,
                    &json!({
                        "graph6": r.to_graph6(),
                        "point_free": c.point_free,
                        "edge_free": c.edge_free,
                        "agrees": c.agrees(),
                    }),
                )?;
                if !c.agrees() {
                    return Ok(EXIT_VIOLATION);
                }
            } else {
                match format {
                    Format::Graph6 => writeln!(out, "{}", r.to_graph6())?,
                    Format::Json => writeln!(out, "{}", r.to_json_string())?,
                }
            }
        }
        Command::Gi2par { input: gi, solve } => {
            let gs = gi.exactly(2)?;
            let reduction = gi_to_par(&gs[0], &gs[1]);
            let mut v = json!({ "reduction": reduction });
            if solve {
                match par_via_iso(&reduction.instance) {
                    Ok(alpha) => {
                        let iso = recover_isomorphism(&alpha, &reduction).map_err(|e| {
                            CliError::Violation(format!("recovered map is invalid: {e}"))
                        })?;
                        v["isomorphic"] = json!(true);
                        v["alpha"] = json!(alpha);
                        v["isomorphism"] = json!(iso);
                    }
                    Err(ParError::NoIsomorphism) => v["isomorphic"] = json!(false),
                    Err(e) => return Err(CliError::Violation(e.to_string())),
                }
            }
            line(out, &v)?;
        }
        Command::Verify(args) => return verify(args, out),
        Command::Play {
            input: gi,
            forbidden,
            side,
            engine,
            out: path,
        } => {
            let g = gi.one()?;
            let f = parse_forbidden(&forbidden)?;
            let kind: EngineKind = engine.parse().map_err(CliError::Usage)?;
            return play(g, f, side.into(), kind, path.as_deref(), input, out);
        }
        Command::Serve {
            port,
            host,
            sessions,
        } => {
            let addr: SocketAddr = format!("{host}:{port}")
                .parse()
                .map_err(|e| CliError::Usage(format!("bad address: {e}")))?;
            let rt = tokio::runtime::Runtime::new()?;
            rt.block_on(server::serve(addr, sessions))?;
        }
    }
    Ok(EXIT_OK)
}

fn complete(n: usize) -> Graph {
    make_family(&FamilySpec::Complete(n)).expect("n > 0")
}

struct Plan {
    board: Graph,
    forbidden: Option<Graph>,
    subject: Box<dyn Strategy>,
    properties: Vec<Property>,
}

fn verify_plan(args: &VerifyArgs, kind: StrategyKind) -> Result<Plan, CliError> {
    let forbidden = args
        .forbidden
        .as_deref()
        .map(parse_forbidden)
        .transpose()?
        .flatten();
    let need_n = |min: usize| -> Result<usize, CliError> {
        match args.n {
            Some(n) if n >= min => Ok(n),
            _ => Err(CliError::Usage(format!("--n must be at least {min}"))),
        }
    };
    let half = |g: &Graph| g.size() / 2;
    Ok(match kind {
        StrategyKind::KnP2 => {
            let n = need_n(3)?;
            Plan {
                board: complete(n),
                forbidden: Some(make_family(&FamilySpec::Path(2)).expect("fixed family")),
                subject: Box::new(kn_p2_defender(n)),
                properties: vec![Property::NeverLoses, Property::SymmetricAfterBMoves],
            }
        }
        StrategyKind::KnBreaker => {
            let n = need_n(4)?;
            Plan {
                board: complete(n),
                forbidden: None,
                subject: Box::new(kn_symmetry_breaker(n)),
                properties: vec![Property::SymmetryBrokenBy(n - 1)],
            }
        }
        StrategyKind::Automorphism => {
            let board = args.input.one()?;
            let subject = build_engine(EngineKind::Automorphism, &board, None, Player::B)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let mut properties = vec![Property::SymmetricAfterBMoves];
            if forbidden.is_some() {
                properties.push(Property::NeverLoses);
            }
            Plan {
                board,
                forbidden,
                subject,
                properties,
            }
        }
        StrategyKind::ProductBreaker => {
            let which = match (&args.product, args.input.given()) {
                (Some(p), _) => p.parse::<ProductBoard>().map_err(CliError::Usage)?,
                (None, true) => {
                    let g = args.input.one()?;
                    ProductBoard::ALL
                        .into_iter()
                        .find(|&b| product_board(b) == g)
                        .ok_or_else(|| {
                            CliError::Usage("the board is not one of the product boards".into())
                        })?
                }
                (None, false) => ProductBoard::CartesianK3eP2,
            };
            let board = product_board(which);
            let limit = half(&board);
            Plan {
                board,
                forbidden: None,
                subject: Box::new(product_breaker(which)),
                properties: vec![Property::SymmetryBrokenBy(limit)],
            }
        }
        StrategyKind::Optimal => {
            let board = args.input.one()?;
            let side: Player = args
                .side
                .ok_or_else(|| CliError::Usage("optimal needs --side".into()))?
                .into();
            if forbidden.is_none() {
                return Err(CliError::Usage("optimal needs --forbidden".into()));
            }
            let subject = Box::new(avoid_core::solver::optimal_strategy(
                side,
                AvoidOptions {
                    budget: args.budget.budget(),
                },
            ));
            Plan {
                board,
                forbidden,
                subject,
                properties: vec![Property::NeverLoses],
            }
        }
    })
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if let Some(path) = &args.replay {
        return replay(path, out);
    }
    let kind = args.strategy.expect("clap requires --strategy");
    let plan = verify_plan(&args, kind)?;
    let properties = match args.property {
        None => plan.properties.clone(),
        Some(PropertyKind::NeverLoses) => vec![Property::NeverLoses],
        Some(PropertyKind::Symmetric) => vec![Property::SymmetricAfterBMoves],
        Some(PropertyKind::BrokenBy) => {
            let r = args.round.unwrap_or(plan.board.size() / 2);
            vec![Property::SymmetryBrokenBy(r)]
        }
    };
    let adversary = match args.adversary {
        AdversaryKind::Exhaustive => Adversary::Exhaustive {
            prune: matches!(args.pruning, Pruning::Orbit),
        },
        AdversaryKind::Random => Adversary::Random {
            count: args.count,
            seed: args.seed,
        },
        AdversaryKind::MirrorRandom => Adversary::MirrorRandom {
            count: args.count,
            seed: args.seed,
        },
    };
    let options = VerifyOptions {
        budget: args.budget.budget(),
        keep_violations: 4,
    };
    let side = plan.subject.side();
    let mut failed = false;
    for property in properties {
        let report = verify_strategy(
            &plan.board,
            plan.forbidden.as_ref(),
            plan.subject.as_ref(),
            side,
            adversary,
            property,
            &options,
        )
        .map_err(|e| match e {
            VerifyError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Usage(other.to_string()),
        })?;
        failed |= !report.passed();
        line(
            out,
            &json!({
                "strategy": report.strategy,
                "side": report.side,
                "adversary": report.adversary,
                "property": report.property,
                "games": report.games,
                "violation_count": report.violation_count,
                "violations": report.violations,
                "passed": report.passed(),
                "stats": stats_json(&report.stats),
            }),
        )?;
    }
    Ok(if failed { EXIT_VIOLATION } else { EXIT_OK })
}

fn replay(path: &str, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = read_source(path)?;
    let t: Transcript = serde_json::from_str(&text).map_err(|e| InputError::Json {
        line: e.line(),
        column: e.column(),
        reason: e.to_string(),
    })?;
    match t.replay() {
        Ok(state) => {
            line(
                out,
                &json!({
                    "status": state.status(),
                    "moves": state.history().len(),
                    "red_blue_isomorphic": state.red_blue_isomorphic(),
                    "matches": true,
                }),
            )?;
            Ok(EXIT_OK)
        }
        Err(e) => {
            line(out, &json!({ "matches": false, "error": e.to_string() }))?;
            Ok(EXIT_VIOLATION)
        }
    }
}

fn render(s: &Session, out: &mut dyn Write) -> std::io::Result<()> {
    let state = s.state();
    let show = |edges: Vec<avoid_core::Edge>| {
        edges
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    writeln!(out, "red:  {}", show(state.red_edges()))?;
    writeln!(out, "blue: {}", show(state.blue_edges()))?;
    writeln!(out, "free: {}", show(state.uncolored_edges()))?;
    writeln!(out, "red ≅ blue: {}", state.red_blue_isomorphic())
}

fn play(
    board: Graph,
    forbidden: Option<Graph>,
    human: Player,
    kind: EngineKind,
    path: Option<&str>,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let session_err = |e: SessionError| match e {
        SessionError::Fault(f) if f.reason.contains("budget") => CliError::Budget(f.to_string()),
        other => CliError::Usage(other.to_string()),
    };
    let mut s = Session::new("text".into(), board, forbidden, human, kind).map_err(session_err)?;
    writeln!(
        out,
        "you play {human} ({}); enter moves as `u v`",
        if human == Player::A { "red" } else { "blue" }
    )?;
    if let Some(&e) = s.state().history().last() {
        writeln!(out, "engine: {e}")?;
    }
    let mut buf = String::new();
    while !s.state().is_over() {
        render(&s, out)?;
        write!(out, "> ")?;
        out.flush()?;
        buf.clear();
        if input.read_line(&mut buf)? == 0 {
            writeln!(out, "\nabandoned")?;
            break;
        }
        let nums: Vec<usize> = buf
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse().ok())
            .collect();
        let [u, v] = nums[..] else {
            writeln!(out, "expected two vertex numbers")?;
            continue;
        };
        match s.human_move(u, v) {
            Ok(reply) => {
                if let Some(e) = reply.engine_move {
                    writeln!(out, "engine: {e}")?;
                }
            }
            Err(SessionError::Illegal(e)) => writeln!(out, "{e}")?,
            Err(e) => return Err(session_err(e)),
        }
    }
    let status = s.state().status();
    let verdict = match status {
        Status::InProgress => "unfinished".to_string(),
        Status::Drawn => "draw".to_string(),
        st if st == Status::lost_by(human) => "you lose".to_string(),
        _ => "you win".to_string(),
    };
    let view = s.view();
    if let Some(copy) = &view.losing_copy {
        let edges: Vec<String> = copy.iter().map(|e| e.to_string()).collect();
        writeln!(out, "monochromatic copy: {}", edges.join(" "))?;
    }
    writeln!(out, "{status:?}: {verdict}")?;
    if let Some(p) = path {
        fs::write(
            p,
            serde_json::to_string(&view.transcript).expect("transcript serializes") + "\n",
        )?;
    }
    Ok(EXIT_OK)
}
