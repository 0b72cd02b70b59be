//! 3-CNF formulas and the rainbow-minimum-cut instance built from them.
//!
//! For a formula `φ` with clauses `c_1..c_m` over `x_1..x_n` (variable `x_i`
//! occurring `ℓ_i` times), the instance `(G_φ, f, s, t)` has a rainbow
//! minimum `s`-`t` cut exactly when `φ` is satisfiable.
//!
//! Vertex ids: `s = 0`, `t = 1`, then `x_{i,0}, x_{i,1}` per variable,
//! `c_{i,0..3}` per clause, `p_{i,l}, q_{i,l}` per occurrence (by variable,
//! then occurrence index), and finally `y_1..y_{5m+1}`.
//!
//! Color ids form one contiguous range: `r_{i,l}^0` per occurrence first,
//! then `r_{i,1}..r_{i,5}` per clause, then `r_0`.

use std::fmt;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::connectivity::{local_edge_connectivity, side_of, CutCertificate};
use crate::error::{Error, Result};
use crate::graph::{DotLabels, EdgeId, EdgeSet, Graph, Vertex};
use crate::verify::{find_rainbow_min_cut_with, SearchOptions, SearchOutcome, SearchStrategy};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Literal {
    /// 1-based variable index.
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn new(var: usize, positive: bool) -> Self {
        Self { var, positive }
    }

    /// DIMACS form: `var` or `-var`.
    pub fn from_dimacs(x: i64) -> Self {
        Self { var: x.unsigned_abs() as usize, positive: x > 0 }
    }

    pub fn to_dimacs(self) -> i64 {
        if self.positive {
            self.var as i64
        } else {
            -(self.var as i64)
        }
    }

    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var - 1] == self.positive
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CnfFormula {
    pub variable_count: usize,
    pub clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(variable_count: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        if clauses.is_empty() {
            return Err(Error::Precondition("formula has no clauses".into()));
        }
        for lit in clauses.iter().flatten() {
            if lit.var == 0 || lit.var > variable_count {
                return Err(Error::Precondition(format!(
                    "variable {} outside 1..={variable_count}",
                    lit.var
                )));
            }
        }
        Ok(Self { variable_count, clauses })
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    /// `ℓ_i` for each variable (index `i - 1`).
    pub fn occurrence_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.variable_count];
        for lit in self.clauses.iter().flatten() {
            counts[lit.var - 1] += 1;
        }
        counts
    }

    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|l| l.holds(assignment)))
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.variable_count, self.clauses.len());
        for c in &self.clauses {
            out.push_str(&format!("{} {} {} 0\n", c[0].to_dimacs(), c[1].to_dimacs(), c[2].to_dimacs()));
        }
        out
    }
}

/// Parses DIMACS CNF with exactly three literals per clause. Lines starting
/// with `c` are comments and a line starting with `%` ends the input.
pub fn parse_dimacs_cnf(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        last_line = line_no;
        let parse_err = |message: String| Error::Parse { line: line_no, message };
        if line.starts_with('p') {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if header.is_some() || parts.len() != 4 || parts[1] != "cnf" {
                return Err(parse_err("expected a single header `p cnf <vars> <clauses>`".into()));
            }
            let n = parts[2].parse().map_err(|_| parse_err(format!("bad variable count `{}`", parts[2])))?;
            let m = parts[3].parse().map_err(|_| parse_err(format!("bad clause count `{}`", parts[3])))?;
            header = Some((n, m, line_no));
            continue;
        }
        let Some((n, _, _)) = header else {
            return Err(parse_err("clause before the `p cnf` header".into()));
        };
        for token in line.split_whitespace() {
            let x: i64 = token.parse().map_err(|_| parse_err(format!("bad literal `{token}`")))?;
            if x == 0 {
                let clause: [Literal; 3] = current
                    .as_slice()
                    .try_into()
                    .map_err(|_| parse_err(format!("clause has {} literals, expected 3", current.len())))?;
                clauses.push(clause);
                current.clear();
            } else {
                if x.unsigned_abs() as usize > n {
                    return Err(parse_err(format!("literal {x} exceeds the {n} declared variables")));
                }
                current.push(Literal::from_dimacs(x));
            }
        }
    }
    let Some((n, m, header_line)) = header else {
        return Err(Error::Parse { line: 1, message: "missing `p cnf` header".into() });
    };
    if !current.is_empty() {
        return Err(Error::Parse { line: last_line, message: "last clause is not terminated by 0".into() });
    }
    if clauses.len() != m {
        return Err(Error::Parse {
            line: header_line,
            message: format!("header declares {m} clauses, found {}", clauses.len()),
        });
    }
    CnfFormula::new(n, clauses).map_err(|e| Error::Parse { line: header_line, message: e.to_string() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VertexRole {
    S,
    T,
    /// `x_{var,side}`.
    X { var: usize, side: u8 },
    /// `c_{clause,index}`, index 0 being the clause center.
    C { clause: usize, index: u8 },
    P { var: usize, occurrence: usize },
    Q { var: usize, occurrence: usize },
    Y { index: usize },
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexRole::S => write!(f, "s"),
            VertexRole::T => write!(f, "t"),
            VertexRole::X { var, side } => write!(f, "x_{{{var},{side}}}"),
            VertexRole::C { clause, index } => write!(f, "c_{{{clause},{index}}}"),
            VertexRole::P { var, occurrence } => write!(f, "p_{{{var},{occurrence}}}"),
            VertexRole::Q { var, occurrence } => write!(f, "q_{{{var},{occurrence}}}"),
            VertexRole::Y { index } => write!(f, "y_{index}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ColorRole {
    /// `r_{var,occurrence}^0`: the four edges of one occurrence gadget.
    Occurrence { var: usize, occurrence: usize },
    /// `r_{clause,k}`: the edge from the `k`-th literal's variable vertex to `c_{clause,0}`.
    Literal { clause: usize, k: u8 },
    /// `r_{clause,4}`: edges `c_{clause,k}` to a variable vertex.
    Bridge { clause: usize },
    /// `r_{clause,5}`: edges `c_{clause,0} c_{clause,k}`.
    Spoke { clause: usize },
    /// `r_0`: the clique.
    Clique,
}

impl fmt::Display for ColorRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColorRole::Occurrence { var, occurrence } => write!(f, "r_{{{var},{occurrence}}}^0"),
            ColorRole::Literal { clause, k } => write!(f, "r_{{{clause},{k}}}"),
            ColorRole::Bridge { clause } => write!(f, "r_{{{clause},4}}"),
            ColorRole::Spoke { clause } => write!(f, "r_{{{clause},5}}"),
            ColorRole::Clique => write!(f, "r_0"),
        }
    }
}

/// Edges of one literal's clause path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LiteralEdges {
    /// Variable vertex to `c_{i,0}`, colored `r_{i,k}`.
    pub direct: EdgeId,
    /// `c_{i,0} c_{i,k}`, colored `r_{i,5}`.
    pub spoke: EdgeId,
    /// `c_{i,k}` to the other variable vertex, colored `r_{i,4}`.
    pub bridge: EdgeId,
}

#[derive(Clone, Debug)]
pub struct ReductionInstance {
    pub formula: CnfFormula,
    pub graph: Graph,
    pub coloring: EdgeColoring,
    pub s: Vertex,
    pub t: Vertex,
    pub m: usize,
    /// Role of each vertex id.
    pub vertex_roles: Vec<VertexRole>,
    /// Role of color `c` at index `c - 1`.
    pub color_roles: Vec<ColorRole>,
    /// Per variable, the `[sp, px_0, sq, qx_1]` edges of each occurrence.
    pub gadgets: Vec<Vec<[EdgeId; 4]>>,
    /// Per clause, the edges of its three literal paths.
    pub clause_edges: Vec<[LiteralEdges; 3]>,
}

impl ReductionInstance {
    pub fn x_vertex(&self, var: usize, side: u8) -> Vertex {
        2 + 2 * (var - 1) + side as usize
    }

    pub fn dot_labels(&self) -> DotLabels {
        DotLabels {
            vertex_names: Some(self.vertex_roles.iter().map(|r| r.to_string()).collect()),
            color_names: self.color_roles.iter().enumerate().map(|(i, r)| (i as u32 + 1, r.to_string())).collect(),
        }
    }

    /// The sidecar text: `vertex <id> <role>` lines, then `color <id> <role>`.
    pub fn roles_text(&self) -> String {
        let mut out = String::new();
        for (v, role) in self.vertex_roles.iter().enumerate() {
            out.push_str(&format!("vertex {v} {role}\n"));
        }
        for (i, role) in self.color_roles.iter().enumerate() {
            out.push_str(&format!("color {} {role}\n", i + 1));
        }
        out
    }

    /// Checks the counting shape of a rainbow minimum cut: per variable
    /// `j`, exactly `ℓ_j` gadget edges with distinct occurrence colors; per
    /// clause, exactly three edges of clause-local colors.
    pub fn check_cut_structure(&self, cut: &EdgeSet) -> Result<()> {
        for (j, gadgets) in self.gadgets.iter().enumerate() {
            let hits: usize = gadgets.iter().map(|g| g.iter().filter(|&&e| cut.contains(e)).count()).sum();
            let per_color = gadgets.iter().all(|g| g.iter().filter(|&&e| cut.contains(e)).count() == 1);
            if hits != gadgets.len() || !per_color {
                return Err(Error::Extraction(format!(
                    "cut uses {hits} gadget edges of x_{} (expected one per occurrence)",
                    j + 1
                )));
            }
        }
        for (i, paths) in self.clause_edges.iter().enumerate() {
            let hits = paths
                .iter()
                .flat_map(|p| [p.direct, p.spoke, p.bridge])
                .filter(|&e| cut.contains(e))
                .count();
            if hits != 3 {
                return Err(Error::Extraction(format!("cut uses {hits} edges of clause {} (expected 3)", i + 1)));
            }
        }
        Ok(())
    }
}

/// Builds `(G_φ, f, s, t)`. Every variable must occur at least once.
pub fn build_reduction(phi: &CnfFormula) -> Result<ReductionInstance> {
    let n = phi.variable_count;
    let m = phi.clause_count();
    let counts = phi.occurrence_counts();
    if let Some(j) = counts.iter().position(|&l| l == 0) {
        return Err(Error::Precondition(format!("variable x{} does not occur", j + 1)));
    }
    let total: usize = counts.iter().sum();

    let mut roles = vec![VertexRole::S, VertexRole::T];
    for var in 1..=n {
        roles.push(VertexRole::X { var, side: 0 });
        roles.push(VertexRole::X { var, side: 1 });
    }
    let c_base = roles.len();
    let c_vertex = |clause: usize, index: usize| c_base + 4 * (clause - 1) + index;
    for clause in 1..=m {
        for index in 0..4 {
            roles.push(VertexRole::C { clause, index });
        }
    }
    let mut pq = Vec::with_capacity(n);
    for (j, &l) in counts.iter().enumerate() {
        let mut per_var = Vec::with_capacity(l);
        for occurrence in 1..=l {
            let p = roles.len();
            roles.push(VertexRole::P { var: j + 1, occurrence });
            roles.push(VertexRole::Q { var: j + 1, occurrence });
            per_var.push((p, p + 1));
        }
        pq.push(per_var);
    }
    let y_base = roles.len();
    for index in 1..=5 * m + 1 {
        roles.push(VertexRole::Y { index });
    }
    let x = |var: usize, side: usize| 2 + 2 * (var - 1) + side;

    let mut color_roles = Vec::new();
    let mut edges = Vec::new();
    let mut colors = Vec::new();
    let mut push = |edges: &mut Vec<(Vertex, Vertex)>, a, b, color: usize| {
        edges.push((a, b));
        colors.push(color as u32);
        edges.len() - 1
    };

    let mut gadgets = Vec::with_capacity(n);
    for (j, per_var) in pq.iter().enumerate() {
        let mut var_gadgets = Vec::with_capacity(per_var.len());
        for (l, &(p, q)) in per_var.iter().enumerate() {
            color_roles.push(ColorRole::Occurrence { var: j + 1, occurrence: l + 1 });
            let color = color_roles.len();
            var_gadgets.push([
                push(&mut edges, 0, p, color),
                push(&mut edges, p, x(j + 1, 0), color),
                push(&mut edges, 0, q, color),
                push(&mut edges, q, x(j + 1, 1), color),
            ]);
        }
        gadgets.push(var_gadgets);
    }
    debug_assert_eq!(color_roles.len(), total);

    let mut clause_edges = Vec::with_capacity(m);
    for (ci, clause) in phi.clauses.iter().enumerate() {
        let i = ci + 1;
        let base = color_roles.len();
        for k in 1..=3 {
            color_roles.push(ColorRole::Literal { clause: i, k });
        }
        color_roles.push(ColorRole::Bridge { clause: i });
        color_roles.push(ColorRole::Spoke { clause: i });
        let paths: Vec<LiteralEdges> = clause
            .iter()
            .enumerate()
            .map(|(kk, lit)| {
                let (near, far) = if lit.positive { (0, 1) } else { (1, 0) };
                LiteralEdges {
                    direct: push(&mut edges, x(lit.var, near), c_vertex(i, 0), base + kk + 1),
                    spoke: push(&mut edges, c_vertex(i, 0), c_vertex(i, kk + 1), base + 5),
                    bridge: push(&mut edges, c_vertex(i, kk + 1), x(lit.var, far), base + 4),
                }
            })
            .collect();
        clause_edges.push([paths[0], paths[1], paths[2]]);
    }

    color_roles.push(ColorRole::Clique);
    let clique_color = color_roles.len();
    let mut clique: Vec<Vertex> = (1..=m).map(|i| c_vertex(i, 0)).collect();
    clique.extend(y_base..y_base + 5 * m + 1);
    clique.push(1);
    for (a_idx, &a) in clique.iter().enumerate() {
        for &b in &clique[a_idx + 1..] {
            push(&mut edges, a, b, clique_color);
        }
    }

    let graph = Graph::new(roles.len(), edges)?;
    let coloring = EdgeColoring::new(colors)?;
    let lambda = local_edge_connectivity(&graph, 0, 1)?;
    if lambda != 6 * m {
        return Err(Error::Precondition(format!("λ(s, t) = {lambda}, expected {}", 6 * m)));
    }
    Ok(ReductionInstance {
        formula: phi.clone(),
        graph,
        coloring,
        s: 0,
        t: 1,
        m,
        vertex_roles: roles,
        color_roles,
        gadgets,
        clause_edges,
    })
}

/// A satisfying assignment (index `i - 1` for `x_i`), trying assignments in
/// binary order with `x_1` as the lowest bit.
pub fn sat_brute_force(phi: &CnfFormula) -> Result<Option<Vec<bool>>> {
    let n = phi.variable_count;
    if n > 20 {
        return Err(Error::Precondition(format!("{n} variables is too many for brute force (max 20)")));
    }
    Ok((0u32..1 << n)
        .map(|mask| (0..n).map(|i| mask >> i & 1 == 1).collect::<Vec<bool>>())
        .find(|a| phi.evaluate(a)))
}

/// The rainbow minimum cut built from a satisfying assignment: `sp` edges
/// of false variables, `sq` edges of true ones, and per clause the direct
/// edge of each true literal, the bridge of the first false literal and the
/// spoke of the second.
pub fn cut_from_assignment(inst: &ReductionInstance, assignment: &[bool]) -> Result<EdgeSet> {
    if assignment.len() != inst.formula.variable_count || !inst.formula.evaluate(assignment) {
        return Err(Error::Precondition("assignment does not satisfy the formula".into()));
    }
    let mut cut = Vec::with_capacity(6 * inst.m);
    for (j, gadgets) in inst.gadgets.iter().enumerate() {
        for g in gadgets {
            cut.push(if assignment[j] { g[2] } else { g[0] });
        }
    }
    for (clause, paths) in inst.formula.clauses.iter().zip(&inst.clause_edges) {
        let mut false_seen = 0;
        for (lit, path) in clause.iter().zip(paths) {
            if lit.holds(assignment) {
                cut.push(path.direct);
            } else {
                cut.push(if false_seen == 0 { path.bridge } else { path.spoke });
                false_seen += 1;
            }
        }
    }
    Ok(cut.into_iter().collect())
}

/// Reads an assignment off an `s`-`t` cut: `x_j = 0` when the cut separates
/// `s` from `x_{j,0}` but not from `x_{j,1}`, `x_j = 1` in the mirror case.
/// Any other pattern, or an assignment that fails `φ`, is an extraction
/// error: a rainbow minimum cut never produces one.
pub fn extract_assignment(inst: &ReductionInstance, cut: &EdgeSet) -> Result<Vec<bool>> {
    let reach = side_of(&inst.graph, cut, inst.s);
    if reach[inst.t] {
        return Err(Error::Extraction("edge set does not separate s from t".into()));
    }
    let n = inst.formula.variable_count;
    let mut assignment = vec![false; n];
    for var in 1..=n {
        assignment[var - 1] = match (reach[inst.x_vertex(var, 0)], reach[inst.x_vertex(var, 1)]) {
            (false, true) => false,
            (true, false) => true,
            (true, true) => return Err(Error::Extraction(format!("cut blocks neither side of variable x{var}"))),
            (false, false) => return Err(Error::Extraction(format!("cut blocks both sides of variable x{var}"))),
        };
    }
    if !inst.formula.evaluate(&assignment) {
        return Err(Error::Extraction("assignment read from the cut does not satisfy the formula".into()));
    }
    Ok(assignment)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum Equivalence {
    /// Both sides agree. On satisfiable formulas the cut round-tripped to a
    /// satisfying assignment.
    Consistent {
        satisfiable: bool,
        assignment: Option<Vec<bool>>,
        cut: Option<CutCertificate>,
    },
    Counterexample { detail: String },
    /// The cut search ran out of nodes.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub result: Equivalence,
    pub search_nodes: u64,
}

impl EquivalenceReport {
    pub fn is_consistent(&self) -> bool {
        matches!(self.result, Equivalence::Consistent { .. })
    }
}

pub fn check_equivalence(phi: &CnfFormula) -> Result<EquivalenceReport> {
    check_equivalence_with(phi, None)
}

/// Compares the rainbow cut search on `G_φ` (always the color-class
/// strategy) with brute-force satisfiability.
pub fn check_equivalence_with(phi: &CnfFormula, node_budget: Option<u64>) -> Result<EquivalenceReport> {
    let inst = build_reduction(phi)?;
    let sat = sat_brute_force(phi)?;
    let opts = SearchOptions { strategy: SearchStrategy::ColorDfs, node_budget };
    let (outcome, stats) = find_rainbow_min_cut_with(&inst.graph, &inst.coloring, inst.s, inst.t, &opts)?;
    let counterexample = |detail: String| EquivalenceReport {
        result: Equivalence::Counterexample { detail },
        search_nodes: stats.nodes,
    };
    let result = match (outcome, sat) {
        (SearchOutcome::Exhausted, _) => Equivalence::Inconclusive,
        (SearchOutcome::Absent, None) => Equivalence::Consistent { satisfiable: false, assignment: None, cut: None },
        (SearchOutcome::Absent, Some(a)) => {
            return Ok(counterexample(format!("satisfiable by {a:?} but no rainbow minimum cut was found")))
        }
        (SearchOutcome::Found(cert), None) => {
            return Ok(counterexample(format!("unsatisfiable but cut {:?} was found", cert.cut.as_slice())))
        }
        (SearchOutcome::Found(cert), Some(_)) => {
            if let Err(e) = inst.check_cut_structure(&cert.cut) {
                return Ok(counterexample(e.to_string()));
            }
            match extract_assignment(&inst, &cert.cut) {
                Ok(a) => Equivalence::Consistent { satisfiable: true, assignment: Some(a), cut: Some(cert) },
                Err(e) => return Ok(counterexample(e.to_string())),
            }
        }
    };
    Ok(EquivalenceReport { result, search_nodes: stats.nodes })
}

/// Runs [`check_equivalence_with`] on each formula, one formula per worker.
pub fn check_equivalence_all(
    formulas: &[CnfFormula],
    node_budget: Option<u64>,
    jobs: usize,
) -> Result<Vec<EquivalenceReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
    pool.install(|| formulas.par_iter().map(|phi| check_equivalence_with(phi, node_budget)).collect())
}

/// A random formula with `n` variables and `m` clauses in which every
/// variable occurs (resampled until it does). Needs `n <= 3m`.
pub fn random_formula(n: usize, m: usize, rng: &mut impl Rng) -> Result<CnfFormula> {
    if n == 0 || m == 0 || n > 3 * m {
        return Err(Error::Precondition(format!("cannot use {n} variables in {m} clauses")));
    }
    loop {
        let clauses: Vec<[Literal; 3]> = (0..m)
            .map(|_| std::array::from_fn(|_| Literal::new(rng.gen_range(1..=n), rng.gen_bool(0.5))))
            .collect();
        let phi = CnfFormula::new(n, clauses)?;
        if phi.occurrence_counts().iter().all(|&l| l > 0) {
            return Ok(phi);
        }
    }
}

/// Every formula with at most `max_vars` variables and `max_clauses`
/// clauses, up to reordering literals within a clause, reordering clauses
/// and renaming variables by first occurrence. Every variable occurs.
pub fn exhaustive_formulas(max_vars: usize, max_clauses: usize) -> Vec<CnfFormula> {
    let literals: Vec<Literal> = (1..=max_vars).flat_map(|v| [Literal::new(v, true), Literal::new(v, false)]).collect();
    let mut clause_set = Vec::new();
    for a in 0..literals.len() {
        for b in a..literals.len() {
            for c in b..literals.len() {
                clause_set.push([literals[a], literals[b], literals[c]]);
            }
        }
    }
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        clause_set: &[[Literal; 3]],
        stack: &mut Vec<usize>,
        max_clauses: usize,
        out: &mut Vec<CnfFormula>,
    ) {
        if !stack.is_empty() {
            let clauses: Vec<[Literal; 3]> = stack.iter().map(|&i| clause_set[i]).collect();
            let mut next = 1;
            let mut ok = true;
            for lit in clauses.iter().flatten() {
                if lit.var == next {
                    next += 1;
                } else if lit.var > next {
                    ok = false;
                    break;
                }
            }
            if ok {
                out.push(CnfFormula { variable_count: next - 1, clauses });
            }
        }
        if stack.len() == max_clauses {
            return;
        }
        let start = stack.last().copied().unwrap_or(0);
        for i in start..clause_set.len() {
            stack.push(i);
            rec(clause_set, stack, max_clauses, out);
            stack.pop();
        }
    }
    rec(&clause_set, &mut stack, max_clauses, &mut out);
    out
}
