//! Rainbow cut search and srd/rd verification.
//!
//! Two strategies find a rainbow minimum `u`-`v` cut: enumerate every
//! minimum cut and test each one, or run a color-class search that picks at
//! most one edge per color and prunes with a max flow. Enumeration is cheap
//! when a pair has few minimum cuts; the class search handles instances with
//! huge numbers of them.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::connectivity::flow::{Capacity, FlowNetwork};
use crate::connectivity::{boundary, enumerate_min_cuts, local_edge_connectivity, side_of, CutCertificate};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, Graph, Vertex};

/// Default number of enumerated minimum cuts above which the search
/// switches to the color-class strategy.
pub const DEFAULT_THRESHOLD: usize = 10_000;

/// Vertex count up to which rd checks enumerate bonds instead of searching.
const BOND_VERTEX_LIMIT: usize = 16;

pub fn is_rainbow(c: &EdgeColoring, f: &EdgeSet) -> bool {
    c.is_rainbow(f)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Rainbow cut of minimum size per pair.
    Srd,
    /// Rainbow cut of any size per pair.
    Rd,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Srd => "srd",
            Mode::Rd => "rd",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStrategy {
    /// Enumerate cuts unless there are more than `threshold` of them.
    Auto { threshold: usize },
    Enumerate,
    ColorDfs,
}

impl Default for SearchStrategy {
    fn default() -> Self {
        SearchStrategy::Auto { threshold: DEFAULT_THRESHOLD }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchOptions {
    pub strategy: SearchStrategy,
    /// Maximum number of class-search nodes per pair; `None` is unbounded.
    pub node_budget: Option<u64>,
}

impl SearchOptions {
    pub fn color_dfs() -> Self {
        Self { strategy: SearchStrategy::ColorDfs, node_budget: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The search completed without finding a cut.
    Absent,
    /// The node budget ran out first.
    Exhausted,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Class-search nodes: the root plus one per edge added to the partial cut.
    pub nodes: u64,
    /// Cuts tested by the enumeration strategy.
    pub cuts_tested: u64,
}

impl std::ops::AddAssign for SearchStats {
    fn add_assign(&mut self, other: Self) {
        self.nodes += other.nodes;
        self.cuts_tested += other.cuts_tested;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub mode: Mode,
    pub verdict: bool,
    /// One certificate per pair checked before the verdict was settled; on
    /// success this covers every unordered pair.
    pub witnesses: BTreeMap<(Vertex, Vertex), CutCertificate>,
    /// Lexicographically first pair with no qualifying rainbow cut.
    pub failing_pair: Option<(Vertex, Vertex)>,
    pub stats: SearchStats,
}

/// Picks at most one edge per color class, in ascending color order. Edges
/// of decided classes that were not picked get infinite capacity, so the
/// max flow bounds how many more edges any completion still needs.
struct ClassSearch<'a> {
    g: &'a Graph,
    u: Vertex,
    v: Vertex,
    classes: Vec<Vec<EdgeId>>,
    state: Vec<Capacity>,
    chosen: Vec<EdgeId>,
    /// Required cut size in srd mode.
    target: Option<usize>,
    stats: SearchStats,
    budget: Option<u64>,
    exhausted: bool,
}

impl<'a> ClassSearch<'a> {
    fn new(g: &'a Graph, c: &EdgeColoring, u: Vertex, v: Vertex, target: Option<usize>, budget: Option<u64>) -> Self {
        let mut state = vec![Capacity::Unit; g.edge_count()];
        let mut by_color: BTreeMap<u32, Vec<EdgeId>> = BTreeMap::new();
        for (e, slot) in state.iter_mut().enumerate() {
            let useful = match target {
                // Only edges lying on some minimum cut can belong to one.
                Some(lambda) => {
                    let mut net = FlowNetwork::from_graph(g, |f| if f == e { Capacity::Removed } else { Capacity::Unit });
                    (net.max_flow(u, v, lambda as u64) as usize) < lambda
                }
                None => true,
            };
            if useful {
                by_color.entry(c.color(e)).or_default().push(e);
            } else {
                *slot = Capacity::Infinite;
            }
        }
        Self {
            g,
            u,
            v,
            classes: by_color.into_values().collect(),
            state,
            chosen: Vec::new(),
            target,
            stats: SearchStats::default(),
            budget,
            exhausted: false,
        }
    }

    fn count_node(&mut self) -> bool {
        self.stats.nodes += 1;
        if self.budget.is_some_and(|b| self.stats.nodes > b) {
            self.exhausted = true;
        }
        !self.exhausted
    }

    fn run(&mut self) -> SearchOutcome<EdgeSet> {
        if !self.count_node() {
            return SearchOutcome::Exhausted;
        }
        match self.search(0) {
            Some(cut) => SearchOutcome::Found(cut),
            None if self.exhausted => SearchOutcome::Exhausted,
            None => SearchOutcome::Absent,
        }
    }

    fn search(&mut self, class: usize) -> Option<EdgeSet> {
        let remaining = self.classes.len() - class;
        let budget = match self.target {
            Some(lambda) => (lambda - self.chosen.len()).min(remaining),
            None => remaining,
        };
        let state = &self.state;
        let mut net = FlowNetwork::from_graph(self.g, |e| state[e]);
        let flow = net.max_flow(self.u, self.v, budget as u64 + 1);
        if flow == 0 {
            let chosen: EdgeSet = self.chosen.iter().copied().collect();
            return Some(bond_within(self.g, &side_of(self.g, &chosen, self.u), self.v));
        }
        if flow > budget as u64 || remaining == 0 {
            return None;
        }
        let edges = std::mem::take(&mut self.classes[class]);
        for &e in &edges {
            self.state[e] = Capacity::Infinite;
        }
        let mut result = None;
        for &e in &edges {
            if !self.count_node() {
                break;
            }
            self.state[e] = Capacity::Removed;
            self.chosen.push(e);
            result = self.search(class + 1);
            self.chosen.pop();
            self.state[e] = Capacity::Infinite;
            if result.is_some() || self.exhausted {
                break;
            }
        }
        if result.is_none() && !self.exhausted {
            result = self.search(class + 1);
        }
        for &e in &edges {
            self.state[e] = Capacity::Unit;
        }
        self.classes[class] = edges;
        result
    }
}

fn check_inputs(g: &Graph, c: &EdgeColoring, u: Vertex, v: Vertex) -> Result<()> {
    c.check_domain(g)?;
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(())
}

/// A rainbow `u`-`v` cut of size `λ(u, v)`, or `None` after a complete search.
pub fn find_rainbow_min_cut(g: &Graph, c: &EdgeColoring, u: Vertex, v: Vertex) -> Result<Option<CutCertificate>> {
    Ok(find_rainbow_min_cut_with(g, c, u, v, &SearchOptions::default())?.0.found())
}

pub fn find_rainbow_min_cut_with(
    g: &Graph,
    c: &EdgeColoring,
    u: Vertex,
    v: Vertex,
    opts: &SearchOptions,
) -> Result<(SearchOutcome<CutCertificate>, SearchStats)> {
    check_inputs(g, c, u, v)?;
    let lambda = local_edge_connectivity(g, u, v)?;
    let limit = match opts.strategy {
        SearchStrategy::Auto { threshold } => Some(threshold),
        SearchStrategy::Enumerate => Some(usize::MAX - 1),
        SearchStrategy::ColorDfs => None,
    };
    if let Some(limit) = limit {
        let cuts = enumerate_min_cuts(g, u, v, limit.saturating_add(1))?;
        if cuts.len() <= limit {
            let mut stats = SearchStats::default();
            for cert in cuts {
                stats.cuts_tested += 1;
                if c.is_rainbow(&cert.cut) {
                    return Ok((SearchOutcome::Found(cert), stats));
                }
            }
            return Ok((SearchOutcome::Absent, stats));
        }
    }
    let mut search = ClassSearch::new(g, c, u, v, Some(lambda), opts.node_budget);
    let outcome = match search.run() {
        SearchOutcome::Found(cut) => {
            debug_assert_eq!(cut.len(), lambda);
            SearchOutcome::Found(CutCertificate::new(u, v, cut))
        }
        SearchOutcome::Absent => SearchOutcome::Absent,
        SearchOutcome::Exhausted => SearchOutcome::Exhausted,
    };
    Ok((outcome, search.stats))
}

/// A rainbow `u`-`v` cut of any size, or `None` after a complete search.
/// The returned cut is a bond contained in the chosen edges.
pub fn find_rainbow_cut(g: &Graph, c: &EdgeColoring, u: Vertex, v: Vertex) -> Result<Option<EdgeSet>> {
    Ok(find_rainbow_cut_with(g, c, u, v, &SearchOptions::default())?.0.found())
}

/// The rd search always uses the color-class strategy; `Enumerate` instead
/// tests every bond (needs at most 20 vertices).
pub fn find_rainbow_cut_with(
    g: &Graph,
    c: &EdgeColoring,
    u: Vertex,
    v: Vertex,
    opts: &SearchOptions,
) -> Result<(SearchOutcome<EdgeSet>, SearchStats)> {
    check_inputs(g, c, u, v)?;
    if opts.strategy == SearchStrategy::Enumerate {
        if g.vertex_count() > 20 {
            return Err(Error::Precondition("bond enumeration needs at most 20 vertices".into()));
        }
        let mut stats = SearchStats::default();
        for bond in bonds(g) {
            if bond.side[u] != bond.side[v] {
                stats.cuts_tested += 1;
                if c.is_rainbow(&bond.cut) {
                    return Ok((SearchOutcome::Found(bond.cut), stats));
                }
            }
        }
        return Ok((SearchOutcome::Absent, stats));
    }
    let mut search = ClassSearch::new(g, c, u, v, None, opts.node_budget);
    let outcome = search.run();
    Ok((outcome, search.stats))
}

pub fn is_srd_coloring(g: &Graph, c: &EdgeColoring) -> Result<VerificationReport> {
    verify_with(g, c, Mode::Srd, &SearchOptions::default())
}

pub fn is_rd_coloring(g: &Graph, c: &EdgeColoring) -> Result<VerificationReport> {
    verify_with(g, c, Mode::Rd, &SearchOptions::default())
}

/// Checks every pair in lexicographic order and stops at the first failure.
/// A pair whose search runs out of nodes is an error, never a verdict.
pub fn verify_with(g: &Graph, c: &EdgeColoring, mode: Mode, opts: &SearchOptions) -> Result<VerificationReport> {
    c.check_domain(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut report = VerificationReport {
        mode,
        verdict: true,
        witnesses: BTreeMap::new(),
        failing_pair: None,
        stats: SearchStats::default(),
    };
    for u in g.vertices() {
        for v in u + 1..g.vertex_count() {
            let (outcome, stats) = match mode {
                Mode::Srd => find_rainbow_min_cut_with(g, c, u, v, opts)?,
                Mode::Rd => {
                    let (o, s) = find_rainbow_cut_with(g, c, u, v, opts)?;
                    let o = match o {
                        SearchOutcome::Found(cut) => SearchOutcome::Found(CutCertificate::new(u, v, cut)),
                        SearchOutcome::Absent => SearchOutcome::Absent,
                        SearchOutcome::Exhausted => SearchOutcome::Exhausted,
                    };
                    (o, s)
                }
            };
            report.stats += stats;
            match outcome {
                SearchOutcome::Found(cert) => {
                    report.witnesses.insert((u, v), cert);
                }
                SearchOutcome::Absent => {
                    report.verdict = false;
                    report.failing_pair = Some((u, v));
                    return Ok(report);
                }
                SearchOutcome::Exhausted => {
                    return Err(Error::BudgetExhausted(format!("rainbow cut search for pair ({u}, {v})")));
                }
            }
        }
    }
    Ok(report)
}

/// A minimal edge cut `∂(side)` with both sides connected.
#[derive(Clone, Debug)]
pub struct Bond {
    pub side: Vec<bool>,
    pub cut: EdgeSet,
}

/// Every bond of a connected graph, each listed once (with vertex 0 on the
/// `side`). Exponential in the vertex count.
pub fn bonds(g: &Graph) -> Vec<Bond> {
    let n = g.vertex_count();
    if n < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << (n - 1)) {
        let side: Vec<bool> = (0..n).map(|x| x == 0 || (mask >> (x - 1)) & 1 == 1).collect();
        if side.iter().all(|&s| s) {
            continue;
        }
        if connected_within(g, &side, true) && connected_within(g, &side, false) {
            out.push(Bond { cut: boundary(g, &side), side });
        }
    }
    out
}

/// `∂(D)` for the component `D` of `v` in `G - side`. With `side` connected,
/// both `D` and its complement are connected, so this is a bond inside
/// `∂(side)`.
fn bond_within(g: &Graph, side: &[bool], v: Vertex) -> EdgeSet {
    let mut far = vec![false; g.vertex_count()];
    far[v] = true;
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for &(y, _) in g.incident(x) {
            if !side[y] && !far[y] {
                far[y] = true;
                stack.push(y);
            }
        }
    }
    boundary(g, &far)
}

fn connected_within(g: &Graph, side: &[bool], which: bool) -> bool {
    let Some(start) = side.iter().position(|&s| s == which) else {
        return false;
    };
    let mut seen = vec![false; g.vertex_count()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &(y, _) in g.incident(x) {
            if side[y] == which && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    (0..g.vertex_count()).all(|x| side[x] != which || seen[x])
}

fn rainbow_edges(colors: &[u32], edges: &[EdgeId]) -> bool {
    let mut seen: u128 = 0;
    for &e in edges {
        let c = colors[e];
        if c >= 128 {
            let mut cs: Vec<u32> = edges.iter().map(|&f| colors[f]).collect();
            cs.sort_unstable();
            return cs.windows(2).all(|w| w[0] != w[1]);
        }
        if seen >> c & 1 == 1 {
            return false;
        }
        seen |= 1 << c;
    }
    true
}

enum PairPlan {
    Cuts(Vec<Vec<EdgeId>>),
    Search,
}

/// Reusable verifier for one graph and many colorings: the per-pair cut
/// lists are computed once.
pub struct Verifier<'a> {
    g: &'a Graph,
    mode: Mode,
    pairs: Vec<(Vertex, Vertex, PairPlan)>,
}

impl<'a> Verifier<'a> {
    pub fn new(g: &'a Graph, mode: Mode) -> Result<Self> {
        Self::with_threshold(g, mode, DEFAULT_THRESHOLD)
    }

    /// In srd mode, pairs with more than `threshold` minimum cuts fall back
    /// to the class search. In rd mode, graphs with at most 16 vertices use
    /// their bond list and larger ones always search.
    pub fn with_threshold(g: &'a Graph, mode: Mode, threshold: usize) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = g.vertex_count();
        let mut pairs = Vec::new();
        match mode {
            Mode::Srd => {
                for u in 0..n {
                    for v in u + 1..n {
                        let cuts = enumerate_min_cuts(g, u, v, threshold + 1)?;
                        let plan = if cuts.len() <= threshold {
                            PairPlan::Cuts(cuts.into_iter().map(|c| c.cut.as_slice().to_vec()).collect())
                        } else {
                            PairPlan::Search
                        };
                        pairs.push((u, v, plan));
                    }
                }
            }
            Mode::Rd if n <= BOND_VERTEX_LIMIT => {
                let all = bonds(g);
                for u in 0..n {
                    for v in u + 1..n {
                        let cuts = all
                            .iter()
                            .filter(|b| b.side[u] != b.side[v])
                            .map(|b| b.cut.as_slice().to_vec())
                            .collect();
                        pairs.push((u, v, PairPlan::Cuts(cuts)));
                    }
                }
            }
            Mode::Rd => {
                for u in 0..n {
                    for v in u + 1..n {
                        pairs.push((u, v, PairPlan::Search));
                    }
                }
            }
        }
        Ok(Self { g, mode, pairs })
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    fn pair_witness(&self, c: &EdgeColoring, u: Vertex, v: Vertex, plan: &PairPlan) -> Result<Option<CutCertificate>> {
        match plan {
            PairPlan::Cuts(cuts) => Ok(cuts
                .iter()
                .find(|cut| rainbow_edges(c.colors(), cut))
                .map(|cut| CutCertificate::new(u, v, cut.iter().copied().collect()))),
            PairPlan::Search => {
                let opts = SearchOptions::color_dfs();
                Ok(match self.mode {
                    Mode::Srd => find_rainbow_min_cut_with(self.g, c, u, v, &opts)?.0.found(),
                    Mode::Rd => find_rainbow_cut_with(self.g, c, u, v, &opts)?.0.found().map(|cut| CutCertificate::new(u, v, cut)),
                })
            }
        }
    }

    /// Verdict only. `colors[e]` is the color of edge `e`.
    pub fn check(&self, colors: &[u32]) -> bool {
        debug_assert_eq!(colors.len(), self.g.edge_count());
        let mut owned = None;
        self.pairs.iter().all(|(u, v, plan)| match plan {
            PairPlan::Cuts(cuts) => cuts.iter().any(|cut| rainbow_edges(colors, cut)),
            PairPlan::Search => {
                let c = owned.get_or_insert_with(|| EdgeColoring::new(colors.to_vec()).expect("positive colors"));
                matches!(self.pair_witness(c, *u, *v, plan), Ok(Some(_)))
            }
        })
    }

    pub fn report(&self, c: &EdgeColoring) -> Result<VerificationReport> {
        c.check_domain(self.g)?;
        let mut report = VerificationReport {
            mode: self.mode,
            verdict: true,
            witnesses: BTreeMap::new(),
            failing_pair: None,
            stats: SearchStats::default(),
        };
        for (u, v, plan) in &self.pairs {
            match self.pair_witness(c, *u, *v, plan)? {
                Some(cert) => {
                    report.witnesses.insert((*u, *v), cert);
                }
                None => {
                    report.verdict = false;
                    report.failing_pair = Some((*u, *v));
                    break;
                }
            }
        }
        Ok(report)
    }
}
