//! The `srd-kit` command line.
//!
//! Exit codes: 0 success or verdict true, 1 verdict false or counterexample,
//! 2 usage or input error, 3 search budget exhausted. Every text report
//! starts with a `# srd-kit <command> seed=<seed>` line; `--json` replaces
//! the text with one JSON object.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::{json, Value};

use crate::coloring::{
    color_auto, color_cactus, color_complete, color_complete_multipartite, color_general_upper, color_grid,
    color_regular, color_tree, greedy_fan_coloring, parse_coloring, serialize_coloring, EdgeColoring,
};
use crate::connectivity::{edge_connectivity, local_edge_connectivity, min_edge_cut, upper_edge_connectivity};
use crate::error::Error;
use crate::graph::{blocks, export_dot_labeled, parse_graph, serialize_graph, DotLabels, Graph};
use crate::reduction::{self, Equivalence};
use crate::solve::{self, ScanStatus, SolveOptions, SolveResult};
use crate::verify::{self, Mode, SearchOptions, SearchOutcome, SearchStrategy};

#[derive(Parser, Debug)]
#[command(name = "srd-kit", version, about = "Strong rainbow disconnection colorings")]
struct Cli {
    /// Print one JSON object instead of the text report.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized commands; recorded in every report header.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "SRD_KIT_JOBS", default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// λ(u,v) for one pair, or λ and λ+ of the graph.
    Lambda {
        graph: PathBuf,
        u: Option<usize>,
        v: Option<usize>,
    },
    /// Blocks and cut vertices.
    Blocks { graph: PathBuf },
    /// Build an srd-coloring for a family or a given graph.
    Color(ColorArgs),
    /// Check an srd- or rd-coloring.
    Verify(VerifyArgs),
    /// Compute srd and/or rd exactly.
    Solve(SolveArgs),
    /// Compare rd and srd over all small connected graphs or given files.
    Scan(ScanArgs),
    /// Build the rainbow minimum cut instance of a 3-CNF formula.
    #[command(name = "reduce-3sat")]
    Reduce3Sat(ReduceArgs),
    /// Graphviz rendering of a graph and optional coloring.
    #[command(name = "export-dot")]
    ExportDot {
        graph: PathBuf,
        coloring: Option<PathBuf>,
        /// Roles sidecar from reduce-3sat, used for labels.
        #[arg(long)]
        roles: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Tree,
    Cactus,
    Complete,
    Multipartite,
    Grid,
    Regular,
    General,
    Proper,
    Auto,
}

#[derive(Args, Debug)]
struct ColorArgs {
    family: Family,
    /// Input graph (tree, cactus, regular, general, proper, auto).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Order of the complete graph.
    #[arg(long)]
    n: Option<usize>,
    /// Part sizes, ascending, comma separated.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long)]
    cols: Option<usize>,
    #[arg(long)]
    out_graph: Option<PathBuf>,
    #[arg(long)]
    out_coloring: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Srd,
    Rd,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Srd => Mode::Srd,
            ModeArg::Rd => Mode::Rd,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Auto,
    Enumerate,
    Dfs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    graph: PathBuf,
    coloring: PathBuf,
    #[arg(long, value_enum, default_value_t = ModeArg::Srd)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,
    /// Enumerated cuts above which `auto` switches to the class search.
    #[arg(long, default_value_t = verify::DEFAULT_THRESHOLD)]
    threshold: usize,
    /// Class-search node budget per pair.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    node_budget: Option<u64>,
    /// Check only this pair.
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    pair: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SolveMode {
    Srd,
    Rd,
    Both,
}

#[derive(Args, Debug)]
struct SolveArgs {
    graph: PathBuf,
    #[arg(long, value_enum, default_value_t = SolveMode::Srd)]
    mode: SolveMode,
    /// Largest edge count searched exhaustively.
    #[arg(long, default_value_t = solve::DEFAULT_MAX_EDGES, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    max_edges: usize,
    /// Lift the edge budget entirely.
    #[arg(long)]
    slow: bool,
    /// Solve srd block by block.
    #[arg(long)]
    by_blocks: bool,
}

#[derive(Args, Debug)]
struct ScanArgs {
    /// Scan all connected graphs with 2..=n vertices.
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Scan these graph files instead.
    #[arg(long, num_args = 1..)]
    graphs: Vec<PathBuf>,
    /// Also write the report here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = solve::DEFAULT_MAX_EDGES, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    max_edges: usize,
    /// Allow n = 6.
    #[arg(long)]
    slow: bool,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    /// DIMACS CNF input.
    cnf: Option<PathBuf>,
    /// Generate a random formula with N variables and M clauses (uses --seed).
    #[arg(long, num_args = 2, value_names = ["N", "M"], conflicts_with = "cnf")]
    random: Option<Vec<usize>>,
    /// Write <prefix>.graph, <prefix>.coloring and <prefix>.roles.
    #[arg(long)]
    out_prefix: Option<PathBuf>,
    /// Cross-check the instance against brute-force satisfiability.
    #[arg(long)]
    check: bool,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    node_budget: Option<u64>,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::fmt::Error> for Failure {
    fn from(e: std::fmt::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(i32, Report), Failure>;

/// Text lines and the JSON mirror of one command's output.
struct Report {
    text: String,
    json: Value,
}

impl Report {
    fn new() -> Self {
        Self { text: String::new(), json: json!({}) }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn set(&mut self, key: &str, value: impl serde::Serialize) {
        self.json[key] = serde_json::to_value(value).expect("serializable");
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> std::result::Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_coloring(path: &Path, g: &Graph) -> std::result::Result<EdgeColoring, Failure> {
    let c = parse_coloring(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    c.check_domain(g)?;
    Ok(c)
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_lambda(graph: &Path, u: Option<usize>, v: Option<usize>) -> Outcome {
    let g = load_graph(graph)?;
    let mut r = Report::new();
    match (u, v) {
        (Some(u), Some(v)) => {
            let value = local_edge_connectivity(&g, u, v)?;
            let cert = min_edge_cut(&g, u, v)?;
            r.line(format!("lambda({u},{v})={value}"));
            r.line(format!("cut: {}", join(cert.cut.iter())));
            r.set("u", u);
            r.set("v", v);
            r.set("lambda", value);
            r.set("cut", &cert.cut);
        }
        (None, None) => {
            let lambda = edge_connectivity(&g)?;
            let plus = upper_edge_connectivity(&g)?;
            r.line(format!("lambda={lambda} lambda_plus={plus}"));
            r.set("lambda", lambda);
            r.set("lambda_plus", plus);
        }
        _ => return Err(Failure::Usage("give both vertices of the pair or neither".into())),
    }
    Ok((0, r))
}

fn cmd_blocks(graph: &Path) -> Outcome {
    let g = load_graph(graph)?;
    let dec = blocks(&g)?;
    let mut r = Report::new();
    let mut listed = Vec::new();
    for (i, b) in dec.blocks.iter().enumerate() {
        let kind = if b.is_bridge() {
            "bridge"
        } else if b.is_cycle() {
            "cycle"
        } else {
            "block"
        };
        r.line(format!(
            "block {i} {kind} vertices: {} edges: {}",
            join(b.vertices.iter()),
            join(b.edges.iter())
        ));
        listed.push(json!({"kind": kind, "vertices": b.vertices.as_slice(), "edges": b.edges.as_slice()}));
    }
    r.line(format!("cut vertices: {}", join(dec.cut_vertices.iter())));
    r.set("blocks", listed);
    r.set("cut_vertices", dec.cut_vertices.as_slice());
    Ok((0, r))
}

fn need<T>(x: Option<T>, flag: &str, family: Family) -> std::result::Result<T, Failure> {
    x.ok_or_else(|| Failure::Usage(format!("family {family:?} needs {flag}").to_lowercase()))
}

fn cmd_color(a: &ColorArgs) -> Outcome {
    let given = |a: &ColorArgs| -> std::result::Result<Graph, Failure> {
        load_graph(need(a.graph.as_deref(), "--graph", a.family)?)
    };
    let (g, c) = match a.family {
        Family::Complete => color_complete(need(a.n, "--n", a.family)?)?,
        Family::Multipartite => {
            if a.parts.is_empty() {
                return Err(Failure::Usage("family multipartite needs --parts".into()));
            }
            color_complete_multipartite(&a.parts)?
        }
        Family::Grid => color_grid(need(a.rows, "--rows", a.family)?, need(a.cols, "--cols", a.family)?)?,
        family => {
            let g = given(a)?;
            let c = match family {
                Family::Tree => color_tree(&g)?,
                Family::Cactus => color_cactus(&g)?,
                Family::Regular => color_regular(&g)?,
                Family::General => color_general_upper(&g)?,
                Family::Proper => greedy_fan_coloring(&g)?,
                _ => color_auto(&g)?,
            };
            (g, c)
        }
    };
    if let Some(p) = &a.out_graph {
        write_file(p, &serialize_graph(&g))?;
    }
    let body = serialize_coloring(&c);
    let mut r = Report::new();
    r.line(format!("# vertices={} edges={} colors={}", g.vertex_count(), g.edge_count(), c.num_colors()));
    match &a.out_coloring {
        Some(p) => write_file(p, &body)?,
        None => r.text.push_str(&body),
    }
    r.set("vertices", g.vertex_count());
    r.set("edges", g.edges());
    r.set("colors", c.num_colors());
    r.set("coloring", c.colors());
    Ok((0, r))
}

fn cmd_verify(a: &VerifyArgs) -> Outcome {
    let g = load_graph(&a.graph)?;
    let c = load_coloring(&a.coloring, &g)?;
    let mode: Mode = a.mode.into();
    let strategy = match a.strategy {
        StrategyArg::Auto => SearchStrategy::Auto { threshold: a.threshold },
        StrategyArg::Enumerate => SearchStrategy::Enumerate,
        StrategyArg::Dfs => SearchStrategy::ColorDfs,
    };
    let opts = SearchOptions { strategy, node_budget: a.node_budget };
    let mut r = Report::new();
    r.set("mode", mode);
    if let Some(pair) = &a.pair {
        let (u, v) = (pair[0], pair[1]);
        let (outcome, stats) = match mode {
            Mode::Srd => {
                let (o, s) = verify::find_rainbow_min_cut_with(&g, &c, u, v, &opts)?;
                (map_outcome(o, |cert| cert.cut), s)
            }
            Mode::Rd => verify::find_rainbow_cut_with(&g, &c, u, v, &opts)?,
        };
        r.set("nodes", stats.nodes);
        return Ok(match outcome {
            SearchOutcome::Found(cut) => {
                r.line("verdict: true");
                r.line(format!("{u} {v} : {} {}", cut.len(), join(cut.iter())));
                r.set("verdict", true);
                r.set("cut", &cut);
                (0, r)
            }
            SearchOutcome::Absent => {
                r.line("verdict: false");
                r.line(format!("failing pair: {u} {v}"));
                r.set("verdict", false);
                r.set("failing_pair", (u, v));
                (1, r)
            }
            SearchOutcome::Exhausted => {
                r.line("verdict: unknown (node budget exhausted)");
                r.set("verdict", Value::Null);
                (3, r)
            }
        });
    }
    let report = verify::verify_with(&g, &c, mode, &opts)?;
    r.line(format!("verdict: {}", report.verdict));
    if report.verdict {
        for ((u, v), cert) in &report.witnesses {
            r.line(format!("{u} {v} : {} {}", cert.value, join(cert.cut.iter())));
        }
    } else if let Some((u, v)) = report.failing_pair {
        r.line(format!("failing pair: {u} {v}"));
    }
    r.set("verdict", report.verdict);
    r.set("failing_pair", report.failing_pair);
    let witnesses: Vec<Value> =
        report.witnesses.values().map(|c| json!({"u": c.u, "v": c.v, "size": c.value, "cut": c.cut})).collect();
    r.set("witnesses", witnesses);
    r.set("nodes", report.stats.nodes);
    Ok((if report.verdict { 0 } else { 1 }, r))
}

fn map_outcome<T, U>(o: SearchOutcome<T>, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
    match o {
        SearchOutcome::Found(t) => SearchOutcome::Found(f(t)),
        SearchOutcome::Absent => SearchOutcome::Absent,
        SearchOutcome::Exhausted => SearchOutcome::Exhausted,
    }
}

fn solve_json(res: &SolveResult) -> Value {
    json!({
        "value": res.value,
        "witness": res.witness.colors(),
        "colorings_tested": res.colorings_tested,
        "bounds": res.bounds,
    })
}

fn cmd_solve(a: &SolveArgs, jobs: usize) -> Outcome {
    let g = load_graph(&a.graph)?;
    let opts = SolveOptions {
        jobs,
        max_edges: if a.slow { usize::MAX } else { a.max_edges },
        ..SolveOptions::default()
    };
    let mut r = Report::new();
    let mut results: Vec<(&str, SolveResult)> = Vec::new();
    let mut budget: Vec<String> = Vec::new();
    if a.mode != SolveMode::Srd {
        match solve::rd_number_with(&g, &opts) {
            Ok(res) => results.push(("rd", res)),
            Err(Error::BudgetExceeded { lower, upper }) => budget.push(format!("rd in [{lower},{upper}]")),
            Err(e) => return Err(e.into()),
        }
    }
    if a.mode != SolveMode::Rd {
        let res = if a.by_blocks { solve::srd_by_blocks_with(&g, &opts) } else { solve::srd_number_with(&g, &opts) };
        match res {
            Ok(res) => results.push(("srd", res)),
            Err(Error::BudgetExceeded { lower, upper }) => budget.push(format!("srd in [{lower},{upper}]")),
            Err(e) => return Err(e.into()),
        }
    }
    if !results.is_empty() {
        r.line(join(results.iter().map(|(name, res)| format!("{name}={}", res.value))));
    }
    for (name, res) in &results {
        r.line(format!("{name}_witness: {}", join(res.witness.colors())));
        r.line(format!(
            "# {name}: bounds [{},{}] colorings_tested={}",
            res.bounds.lower, res.bounds.upper, res.colorings_tested
        ));
        r.set(name, solve_json(res));
    }
    for b in &budget {
        r.line(format!("{b} (edge budget exceeded; use --max-edges or --slow)"));
    }
    if !budget.is_empty() {
        r.set("budget_exceeded", &budget);
        return Ok((3, r));
    }
    Ok((0, r))
}

fn cmd_scan(a: &ScanArgs, jobs: usize) -> Outcome {
    let graphs: Vec<Graph> = if a.graphs.is_empty() {
        if a.n > 6 || (a.n == 6 && !a.slow) {
            return Err(Failure::Usage(format!("scan --n {} needs n <= 5 (or n = 6 with --slow)", a.n)));
        }
        (2..=a.n).flat_map(solve::connected_graphs).collect()
    } else {
        a.graphs.iter().map(|p| load_graph(p)).collect::<std::result::Result<_, _>>()?
    };
    let opts = SolveOptions { jobs, max_edges: a.max_edges, ..SolveOptions::default() };
    let records: Vec<_> = solve::conjecture_scan(graphs, &opts).collect();
    let mut r = Report::new();
    let mut body = String::new();
    let (mut equal, mut counter, mut skipped) = (0, 0, 0);
    for rec in &records {
        writeln!(body, "{}", rec.line())?;
        match rec.status {
            ScanStatus::Equal => equal += 1,
            ScanStatus::Counterexample => counter += 1,
            ScanStatus::Skipped { .. } => skipped += 1,
        }
    }
    let summary = format!("# graphs={} equal={equal} counterexamples={counter} skipped={skipped}", records.len());
    r.text.push_str(&body);
    r.line(&summary);
    if let Some(p) = &a.out {
        write_file(p, &format!("{body}{summary}\n"))?;
    }
    r.set("records", &records);
    r.set("counterexamples", counter);
    r.set("skipped", skipped);
    let code = if counter > 0 {
        1
    } else if skipped > 0 {
        3
    } else {
        0
    };
    Ok((code, r))
}

fn cmd_reduce(a: &ReduceArgs, seed: u64, jobs: usize) -> Outcome {
    let phi = match (&a.cnf, &a.random) {
        (Some(path), None) => reduction::parse_dimacs_cnf(&read(path)?)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
        (None, Some(nm)) => reduction::random_formula(nm[0], nm[1], &mut StdRng::seed_from_u64(seed))?,
        _ => return Err(Failure::Usage("give a CNF file or --random N M".into())),
    };
    let inst = reduction::build_reduction(&phi)?;
    let mut r = Report::new();
    r.line(format!(
        "vertices={} edges={} colors={} clauses={} variables={} lambda_st={}",
        inst.graph.vertex_count(),
        inst.graph.edge_count(),
        inst.coloring.num_colors(),
        inst.m,
        phi.variable_count,
        6 * inst.m
    ));
    r.set("vertices", inst.graph.vertex_count());
    r.set("edges", inst.graph.edge_count());
    r.set("colors", inst.coloring.num_colors());
    r.set("clauses", inst.m);
    r.set("s", inst.s);
    r.set("t", inst.t);
    if let Some(prefix) = &a.out_prefix {
        let with = |ext: &str| PathBuf::from(format!("{}.{ext}", prefix.display()));
        write_file(&with("graph"), &serialize_graph(&inst.graph))?;
        write_file(&with("coloring"), &serialize_coloring(&inst.coloring))?;
        write_file(&with("roles"), &inst.roles_text())?;
        if a.random.is_some() {
            write_file(&with("cnf"), &phi.to_dimacs())?;
        }
    }
    if !a.check {
        return Ok((0, r));
    }
    let report = reduction::check_equivalence_all(std::slice::from_ref(&phi), a.node_budget, jobs)?.remove(0);
    r.set("equivalence", &report);
    let code = match &report.result {
        Equivalence::Consistent { satisfiable, assignment, .. } => {
            r.line(format!(
                "equivalence: consistent ({})",
                if *satisfiable { "satisfiable, rainbow minimum cut found" } else { "unsatisfiable, no rainbow minimum cut" }
            ));
            if let Some(a) = assignment {
                r.line(format!("assignment: {}", join(a.iter().map(|&b| u8::from(b)))));
            }
            0
        }
        Equivalence::Counterexample { detail } => {
            r.line(format!("equivalence: COUNTEREXAMPLE {detail}"));
            1
        }
        Equivalence::Inconclusive => {
            r.line("equivalence: inconclusive (node budget exhausted)");
            3
        }
    };
    r.line(format!("# search nodes={}", report.search_nodes));
    Ok((code, r))
}

/// Reads `vertex <id> <role>` and `color <id> <role>` lines.
fn parse_roles(text: &str) -> std::result::Result<DotLabels, Failure> {
    let mut vertices = BTreeMap::new();
    let mut colors = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.is_empty() || parts[0].starts_with('#') {
            continue;
        }
        let bad = || Failure::Usage(format!("roles line {}: expected `vertex|color <id> <role>`", i + 1));
        if parts.len() != 3 {
            return Err(bad());
        }
        let id: usize = parts[1].parse().map_err(|_| bad())?;
        match parts[0] {
            "vertex" => vertices.insert(id, parts[2].to_string()),
            "color" => colors.insert(id as u32, parts[2].to_string()),
            _ => return Err(bad()),
        };
    }
    let vertex_names = if vertices.is_empty() {
        None
    } else {
        let n = vertices.keys().max().map_or(0, |&m| m + 1);
        Some((0..n).map(|v| vertices.get(&v).cloned().unwrap_or_else(|| v.to_string())).collect())
    };
    Ok(DotLabels { vertex_names, color_names: colors })
}

fn cmd_export_dot(graph: &Path, coloring: Option<&Path>, roles: Option<&Path>, out: Option<&Path>) -> Outcome {
    let g = load_graph(graph)?;
    let c = coloring.map(|p| load_coloring(p, &g)).transpose()?;
    let labels = match roles {
        Some(p) => parse_roles(&read(p)?)?,
        None => DotLabels::default(),
    };
    let dot = export_dot_labeled(&g, c.as_ref(), &labels)?;
    let mut r = Report::new();
    match out {
        Some(p) => write_file(p, &dot)?,
        None => r.text.push_str(&dot),
    }
    r.set("dot", &dot);
    Ok((0, r))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Lambda { .. } => "lambda",
        Command::Blocks { .. } => "blocks",
        Command::Color(_) => "color",
        Command::Verify(_) => "verify",
        Command::Solve(_) => "solve",
        Command::Scan(_) => "scan",
        Command::Reduce3Sat(_) => "reduce-3sat",
        Command::ExportDot { .. } => "export-dot",
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Lambda { graph, u, v } => cmd_lambda(graph, *u, *v),
        Command::Blocks { graph } => cmd_blocks(graph),
        Command::Color(a) => cmd_color(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Solve(a) => cmd_solve(a, cli.jobs),
        Command::Scan(a) => cmd_scan(a, cli.jobs),
        Command::Reduce3Sat(a) => cmd_reduce(a, cli.seed, cli.jobs),
        Command::ExportDot { graph, coloring, roles, out } => {
            cmd_export_dot(graph, coloring.as_deref(), roles.as_deref(), out.as_deref())
        }
    }
}

/// Runs one command line (`argv[0]` is the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return 2;
        }
    };
    let name = command_name(&cli.command);
    match pool.install(|| dispatch(&cli)) {
        Ok((code, report)) => {
            let written = if cli.json {
                let mut json = report.json;
                json["command"] = json!(name);
                json["seed"] = json!(cli.seed);
                json["exit_code"] = json!(code);
                writeln!(out, "{}", serde_json::to_string_pretty(&json).expect("serializable"))
            } else {
                write!(out, "# srd-kit {name} seed={}\n{}", cli.seed, report.text)
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
            code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::BudgetExceeded { .. } | Error::BudgetExhausted(_) => 3,
                _ => 2,
            }
        }
    }
}
