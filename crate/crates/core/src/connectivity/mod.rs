//! Local and global edge connectivity, minimum cut certificates and the
//! enumeration of all minimum `u`-`v` cuts.

pub(crate) mod flow;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, Vertex};
use flow::FlowNetwork;

/// An edge set claimed to separate `u` from `v`, with `value = |cut|`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub struct CutCertificate {
    pub u: Vertex,
    pub v: Vertex,
    pub cut: EdgeSet,
    pub value: usize,
}

impl CutCertificate {
    pub fn new(u: Vertex, v: Vertex, cut: EdgeSet) -> Self {
        let value = cut.len();
        Self { u, v, cut, value }
    }
}

fn check_pair(g: &Graph, u: Vertex, v: Vertex) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(())
}

/// `λ(u, v)`: the maximum number of edge-disjoint `u`-`v` paths, which is
/// also the size of a minimum `u`-`v` edge cut. Zero when `u` and `v` lie in
/// different components.
pub fn local_edge_connectivity(g: &Graph, u: Vertex, v: Vertex) -> Result<usize> {
    check_pair(g, u, v)?;
    Ok(FlowNetwork::unit(g).max_flow(u, v, u64::MAX) as usize)
}

/// Minimum `u`-`v` cut read off the source side of a maximum flow.
pub fn min_edge_cut(g: &Graph, u: Vertex, v: Vertex) -> Result<CutCertificate> {
    check_pair(g, u, v)?;
    let mut net = FlowNetwork::unit(g);
    let value = net.max_flow(u, v, u64::MAX) as usize;
    let side = net.source_side(u);
    let cut = boundary(g, &side);
    debug_assert_eq!(cut.len(), value);
    Ok(CutCertificate { u, v, cut, value })
}

/// Edges with exactly one endpoint inside `side`.
pub fn boundary(g: &Graph, side: &[bool]) -> EdgeSet {
    g.edges()
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| side[a] != side[b])
        .map(|(e, _)| e)
        .collect()
}

/// Distinct minimum `u`-`v` cuts, at most `limit` of them.
///
/// After a maximum flow, the source sides of minimum cuts are exactly the
/// vertex sets that contain `u`, avoid `v` and are closed under residual
/// arcs. Strongly connected components of the residual graph are therefore
/// all-in or all-out, and the cuts are the ideals of the condensation; each
/// branch of the search yields at least one cut. Enumeration stops after
/// `limit` cuts and the result is sorted by edge-id list.
pub fn enumerate_min_cuts(g: &Graph, u: Vertex, v: Vertex, limit: usize) -> Result<Vec<CutCertificate>> {
    check_pair(g, u, v)?;
    if limit == 0 {
        return Ok(Vec::new());
    }
    let mut net = FlowNetwork::unit(g);
    let value = net.max_flow(u, v, u64::MAX) as usize;
    if value == 0 {
        return Ok(vec![CutCertificate { u, v, cut: EdgeSet::default(), value: 0 }]);
    }

    let n = g.vertex_count();
    let mut residual = DiGraph::<(), ()>::with_capacity(n, 2 * g.edge_count());
    for _ in 0..n {
        residual.add_node(());
    }
    for (a, b) in net.residual_arcs() {
        residual.add_edge(NodeIndex::new(a), NodeIndex::new(b), ());
    }
    let mut sccs: Vec<Vec<Vertex>> = tarjan_scc(&residual)
        .into_iter()
        .map(|c| {
            let mut c: Vec<Vertex> = c.into_iter().map(|x| x.index()).collect();
            c.sort_unstable();
            c
        })
        .collect();
    sccs.sort();
    let mut scc_of = vec![0; n];
    for (i, c) in sccs.iter().enumerate() {
        for &x in c {
            scc_of[x] = i;
        }
    }
    let k = sccs.len();
    let mut succ = vec![Vec::new(); k];
    let mut pred = vec![Vec::new(); k];
    for (a, b) in net.residual_arcs() {
        let (ca, cb) = (scc_of[a], scc_of[b]);
        if ca != cb {
            succ[ca].push(cb);
            pred[cb].push(ca);
        }
    }
    for list in succ.iter_mut().chain(pred.iter_mut()) {
        list.sort_unstable();
        list.dedup();
    }

    let mut state = vec![Side::Free; k];
    let reach_u = g.reachable_avoiding(u, &vec![false; g.edge_count()]);
    for x in g.vertices().filter(|&x| !reach_u[x]) {
        state[scc_of[x]] = Side::Out;
    }
    propagate(&mut state, &succ, scc_of[u], Side::In);
    propagate(&mut state, &pred, scc_of[v], Side::Out);

    let mut search = IdealSearch { succ: &succ, pred: &pred, limit, found: Vec::new() };
    search.run(&state);

    let mut cuts: Vec<CutCertificate> = search
        .found
        .into_iter()
        .map(|state| {
            let side: Vec<bool> = (0..n).map(|x| state[scc_of[x]] == Side::In).collect();
            let cut = boundary(g, &side);
            debug_assert_eq!(cut.len(), value);
            CutCertificate { u, v, cut, value }
        })
        .collect();
    cuts.sort_by(|a, b| a.cut.cmp(&b.cut));
    cuts.dedup_by(|a, b| a.cut == b.cut);
    Ok(cuts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Free,
    In,
    Out,
}

fn propagate(state: &mut [Side], adj: &[Vec<usize>], start: usize, side: Side) {
    let mut stack = vec![start];
    while let Some(c) = stack.pop() {
        if state[c] == side {
            continue;
        }
        debug_assert_eq!(state[c], Side::Free, "closure conflict in residual condensation");
        state[c] = side;
        stack.extend(adj[c].iter().copied());
    }
}

struct IdealSearch<'a> {
    succ: &'a [Vec<usize>],
    pred: &'a [Vec<usize>],
    limit: usize,
    found: Vec<Vec<Side>>,
}

impl IdealSearch<'_> {
    fn run(&mut self, state: &[Side]) {
        if self.found.len() >= self.limit {
            return;
        }
        let Some(free) = state.iter().position(|&s| s == Side::Free) else {
            self.found.push(state.to_vec());
            return;
        };
        for (side, adj) in [(Side::In, self.succ), (Side::Out, self.pred)] {
            let mut next = state.to_vec();
            propagate(&mut next, adj, free, side);
            self.run(&next);
        }
    }
}

/// `λ(G)`: minimum of `λ(r, x)` over all `x`, for a fixed root `r`.
pub fn edge_connectivity(g: &Graph) -> Result<usize> {
    if g.vertex_count() < 2 {
        return Err(Error::Precondition("edge connectivity needs at least two vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    (1..g.vertex_count()).map(|x| local_edge_connectivity(g, 0, x)).try_fold(usize::MAX, |m, l| Ok(m.min(l?)))
}

/// `λ+(G)`: maximum of `λ(u, v)` over all distinct pairs.
pub fn upper_edge_connectivity(g: &Graph) -> Result<usize> {
    if g.vertex_count() < 2 {
        return Err(Error::Precondition("edge connectivity needs at least two vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut best = 0;
    for u in g.vertices() {
        for v in u + 1..g.vertex_count() {
            best = best.max(local_edge_connectivity(g, u, v)?);
        }
    }
    Ok(best)
}

/// True when `u` and `v` lie in different components of `g - f`.
pub fn separates(g: &Graph, f: &EdgeSet, u: Vertex, v: Vertex) -> bool {
    !g.reachable_avoiding(u, &f.mask(g.edge_count()))[v]
}

/// True when `g - f` is disconnected.
pub fn is_edge_cut(g: &Graph, f: &EdgeSet) -> bool {
    if g.vertex_count() < 2 {
        return false;
    }
    let reach = g.reachable_avoiding(0, &f.mask(g.edge_count()));
    reach.iter().any(|&r| !r)
}

/// Vertices on `u`'s side of `g - cut`.
pub fn side_of(g: &Graph, cut: &EdgeSet, u: Vertex) -> Vec<bool> {
    g.reachable_avoiding(u, &cut.mask(g.edge_count()))
}
