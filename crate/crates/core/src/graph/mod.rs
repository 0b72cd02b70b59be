//! Undirected loopless multigraphs with stable edge identities.
//!
//! Input graphs are simple, but contraction merges vertices and produces
//! parallel edges, so the representation allows them. An [`EdgeId`] is the
//! position of the edge in the edge list and never changes; derived views
//! (induced subgraphs, blocks, contractions) carry explicit maps back to the
//! parent's ids.

mod blocks;
mod dot;
pub mod families;
mod io;

pub use blocks::{blocks, Block, BlockDecomposition};
pub use dot::{export_dot, export_dot_labeled, DotLabels};
pub use io::{parse_graph, serialize_graph};
pub(crate) use io::content_lines;

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (id, &(a, b)) in edges.iter().enumerate() {
            if a >= vertex_count {
                return Err(Error::VertexOutOfRange(a));
            }
            if b >= vertex_count {
                return Err(Error::VertexOutOfRange(b));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("edge {id} is a loop at vertex {a}")));
            }
            adjacency[a].push((b, id));
            adjacency[b].push((a, id));
        }
        Ok(Self { vertex_count, edges, adjacency })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self { vertex_count, edges: Vec::new(), adjacency: vec![Vec::new(); vertex_count] }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn opposite(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// `(neighbor, edge)` pairs at `v`, in edge-id order.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn incident_edges(&self, v: Vertex) -> impl Iterator<Item = EdgeId> + '_ {
        self.adjacency[v].iter().map(|&(_, e)| e)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }

    /// True when no two edges share both endpoints.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.edges.len());
        self.edges.iter().all(|&(a, b)| seen.insert((a.min(b), a.max(b))))
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.adjacency.first().map(Vec::len)?;
        self.adjacency.iter().all(|a| a.len() == d).then_some(d)
    }

    /// Vertices reachable from `start` without using edges flagged in `removed`.
    pub fn reachable_avoiding(&self, start: Vertex, removed: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(x) = queue.pop_front() {
            for &(y, e) in &self.adjacency[x] {
                if !removed[e] && !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut out = Vec::new();
        let none = vec![false; self.edges.len()];
        for v in self.vertices() {
            if label[v] != usize::MAX {
                continue;
            }
            let reach = self.reachable_avoiding(v, &none);
            let members: Vec<Vertex> = (0..self.vertex_count).filter(|&x| reach[x]).collect();
            for &x in &members {
                label[x] = out.len();
            }
            out.push(VertexSet::from_sorted(members));
        }
        out
    }

    /// The empty graph on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.vertex_count <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count >= 1 && self.edges.len() + 1 == self.vertex_count && self.is_connected()
    }

    /// Every block is a `K_2` or a cycle, and at least one block is a cycle.
    pub fn is_cactus_with_cycle(&self) -> bool {
        let Ok(dec) = blocks(self) else { return false };
        let mut any_cycle = false;
        for b in &dec.blocks {
            if b.is_cycle() {
                any_cycle = true;
            } else if b.edges.len() != 1 {
                return false;
            }
        }
        any_cycle
    }

    pub fn induced_subgraph(&self, vertices: &VertexSet) -> Subgraph {
        let mut local = vec![usize::MAX; self.vertex_count];
        for (i, v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if local[a] != usize::MAX && local[b] != usize::MAX {
                edges.push((local[a], local[b]));
                edge_map.push(e);
            }
        }
        let graph = Graph::new(vertices.len(), edges).expect("induced subgraph is well formed");
        Subgraph { graph, vertex_map: vertices.as_slice().to_vec(), edge_map }
    }

    /// Subgraph formed by the given edges and their endpoints.
    pub fn edge_subgraph(&self, edges: &EdgeSet) -> Subgraph {
        let mut vertex_map: Vec<Vertex> =
            edges.iter().flat_map(|e| [self.edges[e].0, self.edges[e].1]).collect();
        vertex_map.sort_unstable();
        vertex_map.dedup();
        let mut local = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertex_map.iter().enumerate() {
            local[v] = i;
        }
        let local_edges = edges
            .iter()
            .map(|e| {
                let (a, b) = self.edges[e];
                (local[a], local[b])
            })
            .collect();
        let graph = Graph::new(vertex_map.len(), local_edges).expect("edge subgraph is well formed");
        Subgraph { graph, vertex_map, edge_map: edges.as_slice().to_vec() }
    }

    /// Removes `v` and its incident edges.
    pub fn remove_vertex(&self, v: Vertex) -> Subgraph {
        let keep = VertexSet::from_iter(self.vertices().filter(|&x| x != v));
        self.induced_subgraph(&keep)
    }
}

/// A graph derived from a parent, with maps from local ids to parent ids.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    pub vertex_map: Vec<Vertex>,
    pub edge_map: Vec<EdgeId>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    fn from_sorted(v: Vec<Vertex>) -> Self {
        Self(v)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.0 {
            m[v] = true;
        }
        m
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

/// A sorted, duplicate-free set of edge ids. Orders lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<EdgeId>);

impl EdgeSet {
    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[EdgeId] {
        &self.0
    }

    pub fn mask(&self, m: usize) -> Vec<bool> {
        let mut mask = vec![false; m];
        for &e in &self.0 {
            mask[e] = true;
        }
        mask
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        let mut v: Vec<EdgeId> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

/// Result of shrinking a vertex set to a single vertex.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: Graph,
    /// Parent vertex -> vertex of the contracted graph.
    pub vertex_map: Vec<Vertex>,
    /// Contracted edge -> parent edge.
    pub edge_map: Vec<EdgeId>,
    /// The vertex that replaced the contracted set.
    pub merged: Vertex,
}

/// `G/X`: merges `x` into one vertex, drops edges inside `x` and keeps
/// crossing edges (as parallel edges where they share an outside endpoint).
/// Vertices outside `x` keep their relative order; the merged vertex comes last.
pub fn contract(g: &Graph, x: &VertexSet) -> Result<Contraction> {
    if x.is_empty() {
        return Err(Error::Contract("empty set".into()));
    }
    if let Some(v) = x.iter().find(|&v| v >= g.vertex_count()) {
        return Err(Error::VertexOutOfRange(v));
    }
    if x.len() == g.vertex_count() {
        return Err(Error::Contract("set contains every vertex".into()));
    }
    let inside = x.mask(g.vertex_count());
    let merged = g.vertex_count() - x.len();
    let mut vertex_map = vec![merged; g.vertex_count()];
    let mut next = 0;
    for v in g.vertices() {
        if !inside[v] {
            vertex_map[v] = next;
            next += 1;
        }
    }
    let mut edges = Vec::new();
    let mut edge_map = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if inside[a] && inside[b] {
            continue;
        }
        edges.push((vertex_map[a], vertex_map[b]));
        edge_map.push(e);
    }
    let graph = Graph::new(merged + 1, edges)?;
    Ok(Contraction { graph, vertex_map, edge_map, merged })
}

/// `G_Δ`: the subgraph induced by the maximum-degree vertices.
pub fn max_degree_core(g: &Graph) -> Subgraph {
    let delta = g.max_degree();
    let core = VertexSet::from_iter(g.vertices().filter(|&v| g.degree(v) == delta));
    g.induced_subgraph(&core)
}

/// Sufficient test for Class 1 via the max-degree core: every component of
/// `G_Δ` is a tree or unicyclic and `G_Δ` is not a disjoint union of cycles.
///
/// `true` guarantees `χ'(g) = Δ(g)`. `false` only means the test is
/// inconclusive.
pub fn is_class1_by_core(g: &Graph) -> bool {
    let core = max_degree_core(g).graph;
    let mut all_cycles = true;
    for comp in core.components() {
        let sub = core.induced_subgraph(&comp).graph;
        let (v, e) = (sub.vertex_count(), sub.edge_count());
        if e > v {
            return false;
        }
        let is_cycle = e == v && sub.vertices().all(|x| sub.degree(x) == 2);
        all_cycles &= is_cycle;
    }
    !all_cycles
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(matches!(Graph::new(2, vec![(1, 1)]), Err(Error::InvalidGraph(_))));
        assert_eq!(Graph::new(2, vec![(0, 2)]), Err(Error::VertexOutOfRange(2)));
        assert!(Graph::new(2, vec![(0, 1), (1, 0)]).is_ok());
    }

    #[test]
    fn components_examples() {
        assert_eq!(complete(4).components().len(), 1);
        let two = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.components().len(), 2);
        assert!(!two.is_connected());
        assert_eq!(Graph::empty(3).components().len(), 3);
    }

    #[test]
    fn contract_triangle_pair() {
        let c = contract(&cycle(3), &VertexSet::from_iter([0, 1])).unwrap();
        assert_eq!(c.graph.vertex_count(), 2);
        assert_eq!(c.graph.edge_count(), 2);
        assert!(!c.graph.is_simple());
    }

    #[test]
    fn contract_path_pair() {
        let c = contract(&path(3), &VertexSet::from_iter([0, 1])).unwrap();
        assert_eq!(c.graph.vertex_count(), 2);
        assert_eq!(c.graph.edge_count(), 1);
        assert_eq!(c.edge_map, vec![1]);
    }

    #[test]
    fn contract_k4_pair() {
        let c = contract(&complete(4), &VertexSet::from_iter([0, 1])).unwrap();
        assert_eq!(c.graph.vertex_count(), 3);
        assert_eq!(c.graph.edge_count(), 5);
        let m = c.merged;
        let to_merged = c.graph.edges().iter().filter(|&&(a, b)| a == m || b == m).count();
        assert_eq!(to_merged, 4);
    }

    #[test]
    fn contract_rejects_empty_and_full() {
        assert!(matches!(contract(&path(3), &VertexSet::default()), Err(Error::Contract(_))));
        assert!(matches!(
            contract(&path(3), &VertexSet::from_iter([0, 1, 2])),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn core_examples() {
        assert_eq!(max_degree_core(&complete(4)).graph.vertex_count(), 4);
        let star_core = max_degree_core(&star(3));
        assert_eq!(star_core.graph.vertex_count(), 1);
        assert_eq!(star_core.graph.edge_count(), 0);
        let p4 = max_degree_core(&path(4));
        assert_eq!(p4.vertex_map, vec![1, 2]);
        assert_eq!(p4.graph.edge_count(), 1);
    }

    #[test]
    fn class1_examples() {
        assert!(is_class1_by_core(&star(3)));
        for n in 3..8 {
            assert!(!is_class1_by_core(&cycle(n)));
        }
        // K_{2,2,2} minus a vertex of the first part: the core is the lone
        // remaining vertex of that part.
        let f = complete_multipartite(&[2, 2, 2]).remove_vertex(0).graph;
        let core = max_degree_core(&f);
        assert_eq!(core.vertex_map, vec![0]);
        assert!(is_class1_by_core(&f));
    }

    #[test]
    fn cactus_and_tree_predicates() {
        assert!(path(5).is_tree());
        assert!(!cycle(4).is_tree());
        assert!(cycle(4).is_cactus_with_cycle());
        assert!(bowtie().is_cactus_with_cycle());
        assert!(!path(4).is_cactus_with_cycle());
        assert!(!complete(4).is_cactus_with_cycle());
    }
}
