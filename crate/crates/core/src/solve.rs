//! Exact `srd(G)` and `rd(G)` by exhaustive search over canonical colorings,
//! the block-wise solver, small-graph generation and the `rd = srd` scan.

use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{color_auto, color_by_blocks, EdgeColoring};
use crate::connectivity::{edge_connectivity, upper_edge_connectivity};
use crate::error::{Error, Result};
use crate::graph::{blocks, Graph};
use crate::verify::{verify_with, Mode, SearchOptions, Verifier};

/// Edge count above which the exhaustive search refuses to run by default.
pub const DEFAULT_MAX_EDGES: usize = 12;

const CHUNK: usize = 4096;

/// Restricted-growth strings of length `m` with at most `k` values, in
/// lexicographic order, emitted as colors `1..=k`. With `exact`, only
/// strings using all `k` values.
#[derive(Clone, Debug)]
pub struct RestrictedGrowth {
    a: Vec<u32>,
    prefix_max: Vec<u32>,
    k: u32,
    exact: bool,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(m: usize, k: u32, exact: bool) -> Self {
        let mut it = Self {
            a: vec![0; m],
            prefix_max: vec![0; m],
            k,
            exact,
            started: false,
            done: m == 0 || k == 0 || (exact && k as usize > m),
        };
        if !it.done {
            it.fill_from(0, 1);
        }
        it
    }

    /// Minimal completion of positions `from..` when `used` values are taken.
    fn fill_from(&mut self, from: usize, used: u32) {
        let m = self.a.len();
        let need = if self.exact { self.k - used } else { 0 } as usize;
        for i in from..m {
            let tail = m - i;
            self.a[i] = if tail <= need { used + (need - tail) as u32 } else { 0 };
            let before = if i == 0 { 0 } else { self.prefix_max[i - 1] };
            self.prefix_max[i] = before.max(self.a[i]);
        }
    }

    fn advance(&mut self) -> bool {
        let m = self.a.len();
        for i in (1..m).rev() {
            let before = self.prefix_max[i - 1];
            let top = (before + 1).min(self.k - 1);
            for value in self.a[i] + 1..=top {
                let used = before.max(value) + 1;
                if self.exact && (self.k - used) as usize > m - 1 - i {
                    continue;
                }
                self.a[i] = value;
                self.prefix_max[i] = before.max(value);
                self.fill_from(i + 1, used);
                return true;
            }
        }
        false
    }
}

impl Iterator for RestrictedGrowth {
    /// Colors `1..=k` for edges `0..m`.
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(self.a.iter().map(|&x| x + 1).collect())
    }
}

/// Colorings of `m` edges with at most `k` classes, one per renaming orbit.
pub fn canonical_colorings(m: usize, k: u32) -> impl Iterator<Item = EdgeColoring> {
    RestrictedGrowth::new(m, k, false).map(|c| EdgeColoring::new(c).expect("positive colors"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerBound {
    LambdaPlus,
    Given,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UpperBound {
    Construction,
    Given,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub lower: u32,
    pub upper: u32,
    pub lower_source: LowerBound,
    pub upper_source: UpperBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: u32,
    pub witness: EdgeColoring,
    /// Colorings handed to the verifier before the witness was accepted.
    pub colorings_tested: u64,
    pub bounds: Bounds,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Worker threads; 0 lets the thread pool pick.
    pub jobs: usize,
    pub max_edges: usize,
    pub lower: Option<u32>,
    pub upper: Option<u32>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { jobs: 0, max_edges: DEFAULT_MAX_EDGES, lower: None, upper: None }
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))
}

/// First coloring (in enumeration order) accepted by the verifier, and the
/// number of colorings examined up to and including it.
fn first_passing(
    verifier: &Verifier<'_>,
    colorings: impl Iterator<Item = Vec<u32>>,
    pool: &rayon::ThreadPool,
) -> (Option<Vec<u32>>, u64) {
    let mut tested = 0u64;
    for chunk in &colorings.chunks(CHUNK) {
        let chunk: Vec<Vec<u32>> = chunk.collect();
        let hit = pool.install(|| chunk.par_iter().position_first(|c| verifier.check(c)));
        match hit {
            Some(i) => return (Some(chunk[i].clone()), tested + i as u64 + 1),
            None => tested += chunk.len() as u64,
        }
    }
    (None, tested)
}

fn solve(g: &Graph, mode: Mode, opts: &SolveOptions) -> Result<SolveResult> {
    if g.vertex_count() < 2 {
        return Err(Error::Precondition("graph needs at least one edge".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let construction = color_auto(g)?.normalized();
    let (lower, lower_source) = match opts.lower {
        Some(l) => (l, LowerBound::Given),
        None => (upper_edge_connectivity(g)? as u32, LowerBound::LambdaPlus),
    };
    let (upper, upper_source) = match opts.upper {
        Some(u) => (u, UpperBound::Given),
        None => (construction.num_colors(), UpperBound::Construction),
    };
    let bounds = Bounds { lower, upper, lower_source, upper_source };
    let use_construction = construction.num_colors() == upper;
    if lower == upper && use_construction {
        return Ok(SolveResult { value: upper, witness: construction, colorings_tested: 0, bounds });
    }
    if g.edge_count() > opts.max_edges {
        return Err(Error::BudgetExceeded { lower, upper });
    }
    let verifier = Verifier::new(g, mode)?;
    let pool = pool(opts.jobs)?;
    let mut tested = 0;
    for k in lower.max(1)..=upper {
        if k == upper && use_construction {
            return Ok(SolveResult { value: k, witness: construction, colorings_tested: tested, bounds });
        }
        let (hit, count) = first_passing(&verifier, RestrictedGrowth::new(g.edge_count(), k, true), &pool);
        tested += count;
        if let Some(colors) = hit {
            let witness = EdgeColoring::new(colors)?;
            return Ok(SolveResult { value: k, witness, colorings_tested: tested, bounds });
        }
    }
    Err(Error::Precondition(format!("no {mode}-coloring with {lower}..={upper} colors")))
}

/// `srd(G)`: the least `k` between `λ+(G)` and the best construction for
/// which some canonical `k`-coloring is srd.
pub fn srd_number(g: &Graph) -> Result<SolveResult> {
    srd_number_with(g, &SolveOptions::default())
}

pub fn srd_number_with(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    solve(g, Mode::Srd, opts)
}

/// `rd(G)`, searched like [`srd_number`] (every srd-coloring is an rd-coloring,
/// so the construction bounds both).
pub fn rd_number(g: &Graph) -> Result<SolveResult> {
    rd_number_with(g, &SolveOptions::default())
}

pub fn rd_number_with(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    solve(g, Mode::Rd, opts)
}

/// `srd(G)` as the maximum over blocks, with the block witnesses glued.
pub fn srd_by_blocks(g: &Graph) -> Result<SolveResult> {
    srd_by_blocks_with(g, &SolveOptions::default())
}

pub fn srd_by_blocks_with(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    let dec = blocks(g)?;
    if dec.blocks.is_empty() {
        return Err(Error::Precondition("graph needs at least one edge".into()));
    }
    let mut parts = Vec::with_capacity(dec.blocks.len());
    for b in &dec.blocks {
        let block_opts = SolveOptions { lower: None, upper: None, ..*opts };
        parts.push(srd_number_with(&b.view.graph, &block_opts)?);
    }
    let witnesses: Vec<EdgeColoring> = parts.iter().map(|p| p.witness.clone()).collect();
    let witness = color_by_blocks(g, &dec, &witnesses)?;
    let max = |f: fn(&SolveResult) -> u32| parts.iter().map(f).max().unwrap_or(1);
    Ok(SolveResult {
        value: max(|p| p.value),
        witness,
        colorings_tested: parts.iter().map(|p| p.colorings_tested).sum(),
        bounds: Bounds {
            lower: max(|p| p.bounds.lower),
            upper: max(|p| p.bounds.upper),
            lower_source: LowerBound::LambdaPlus,
            upper_source: UpperBound::Construction,
        },
    })
}

fn pair_index(n: usize, a: usize, b: usize) -> usize {
    let (a, b) = (a.min(b), a.max(b));
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

/// Smallest adjacency bit string over all vertex relabelings.
fn canonical_code(n: usize, edges: &[(usize, usize)]) -> u64 {
    (0..n)
        .permutations(n)
        .map(|p| edges.iter().fold(0u64, |code, &(a, b)| code | 1 << pair_index(n, p[a], p[b])))
        .min()
        .unwrap_or(0)
}

/// All connected simple graphs on `n` vertices up to isomorphism, ordered by
/// edge count and then canonical code.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "graph generation supports at most 8 vertices");
    if n <= 1 {
        return vec![Graph::empty(n)];
    }
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let codes: BTreeSet<(u32, u64)> = (0u64..1 << pairs.len())
        .into_par_iter()
        .filter_map(|mask| {
            if (mask.count_ones() as usize) < n - 1 {
                return None;
            }
            let edges: Vec<(usize, usize)> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            let g = Graph::new(n, edges.clone()).expect("valid edges");
            if !g.is_connected() {
                return None;
            }
            let code = canonical_code(n, &edges);
            (code == mask).then_some((mask.count_ones(), code))
        })
        .collect();
    codes
        .into_iter()
        .map(|(_, code)| {
            let edges = (0..pairs.len()).filter(|i| code >> i & 1 == 1).map(|i| pairs[i]).collect();
            Graph::new(n, edges).expect("valid edges")
        })
        .collect()
}

/// `"n:a-b,c-d,..."` with edges in stored order.
pub fn graph_string(g: &Graph) -> String {
    let edges = g.edges().iter().map(|(a, b)| format!("{a}-{b}")).join(",");
    format!("{}:{}", g.vertex_count(), edges)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanStatus {
    Equal,
    /// `rd < srd`, with both witnesses re-verified from scratch.
    Counterexample,
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub graph: String,
    pub vertices: usize,
    pub edges: usize,
    pub lambda: Option<u32>,
    pub lambda_plus: Option<u32>,
    pub rd: Option<u32>,
    pub srd: Option<u32>,
    pub status: ScanStatus,
    /// `λ ≤ λ+ ≤ rd ≤ srd ≤ e` for this graph.
    pub chain_holds: bool,
    #[serde(skip)]
    pub rd_witness: Option<EdgeColoring>,
    #[serde(skip)]
    pub srd_witness: Option<EdgeColoring>,
}

impl ScanRecord {
    fn skipped(g: &Graph, reason: String) -> Self {
        Self {
            graph: graph_string(g),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            lambda: None,
            lambda_plus: None,
            rd: None,
            srd: None,
            status: ScanStatus::Skipped { reason },
            chain_holds: false,
            rd_witness: None,
            srd_witness: None,
        }
    }

    /// `graph rd srd flag`, with `-` for missing values.
    pub fn line(&self) -> String {
        let show = |x: Option<u32>| x.map_or("-".to_string(), |x| x.to_string());
        let flag = match &self.status {
            ScanStatus::Equal => "equal".to_string(),
            ScanStatus::Counterexample => "COUNTEREXAMPLE".to_string(),
            ScanStatus::Skipped { reason } => format!("skipped({reason})"),
        };
        format!("{} {} {} {}", self.graph, show(self.rd), show(self.srd), flag)
    }
}

fn scan_one(g: &Graph, opts: &SolveOptions) -> Result<ScanRecord> {
    let lambda = edge_connectivity(g)? as u32;
    let lambda_plus = upper_edge_connectivity(g)? as u32;
    let rd = rd_number_with(g, opts)?;
    let srd = srd_number_with(g, opts)?;
    let mut status = ScanStatus::Equal;
    if rd.value != srd.value {
        let full = SearchOptions::color_dfs();
        let rd_ok = verify_with(g, &rd.witness, Mode::Rd, &full)?.verdict;
        let srd_ok = verify_with(g, &srd.witness, Mode::Srd, &full)?.verdict;
        if !(rd_ok && srd_ok) {
            return Err(Error::Precondition(format!(
                "witness failed re-verification on {}",
                graph_string(g)
            )));
        }
        status = ScanStatus::Counterexample;
    }
    let e = g.edge_count() as u32;
    Ok(ScanRecord {
        graph: graph_string(g),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        lambda: Some(lambda),
        lambda_plus: Some(lambda_plus),
        rd: Some(rd.value),
        srd: Some(srd.value),
        status,
        chain_holds: lambda <= lambda_plus && lambda_plus <= rd.value && rd.value <= srd.value && srd.value <= e,
        rd_witness: Some(rd.witness),
        srd_witness: Some(srd.witness),
    })
}

/// `rd` and `srd` for each graph. Graphs over the edge budget, or that fail
/// for any other reason, come back as skipped records rather than dropped.
pub fn conjecture_scan<'a>(
    graphs: impl IntoIterator<Item = Graph> + 'a,
    opts: &'a SolveOptions,
) -> impl Iterator<Item = ScanRecord> + 'a {
    graphs.into_iter().map(move |g| match scan_one(&g, opts) {
        Ok(record) => record,
        Err(Error::BudgetExceeded { lower, upper }) => {
            ScanRecord::skipped(&g, format!("budget: bounds {lower}..={upper}"))
        }
        Err(e) => ScanRecord::skipped(&g, e.to_string()),
    })
}
