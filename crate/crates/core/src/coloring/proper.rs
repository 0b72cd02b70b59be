use std::collections::VecDeque;

use super::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};

/// Partial proper coloring with per-vertex color slots.
struct Palette {
    color: Vec<u32>,
    /// `at[v][c]` is the edge at `v` with color `c`, if any.
    at: Vec<Vec<Option<EdgeId>>>,
}

impl Palette {
    fn new(g: &Graph, k: usize) -> Self {
        Self { color: vec![0; g.edge_count()], at: vec![vec![None; k + 1]; g.vertex_count()] }
    }

    fn is_free(&self, v: Vertex, c: u32) -> bool {
        self.at[v][c as usize].is_none()
    }

    fn first_free(&self, v: Vertex) -> u32 {
        (1..self.at[v].len()).find(|&c| self.at[v][c].is_none()).expect("a free color exists") as u32
    }

    fn set(&mut self, g: &Graph, e: EdgeId, c: u32) {
        let (a, b) = g.endpoints(e);
        debug_assert!(self.is_free(a, c) && self.is_free(b, c));
        self.color[e] = c;
        self.at[a][c as usize] = Some(e);
        self.at[b][c as usize] = Some(e);
    }

    fn clear(&mut self, g: &Graph, e: EdgeId) {
        let c = self.color[e] as usize;
        if c == 0 {
            return;
        }
        let (a, b) = g.endpoints(e);
        self.at[a][c] = None;
        self.at[b][c] = None;
        self.color[e] = 0;
    }

    /// Swaps `c` and `d` along the maximal path from `start` whose first edge
    /// has color `c`.
    fn flip_path(&mut self, g: &Graph, start: Vertex, c: u32, d: u32) {
        let mut edges = Vec::new();
        let (mut cur, mut want) = (start, c);
        while let Some(e) = self.at[cur][want as usize] {
            if edges.contains(&e) {
                break;
            }
            edges.push(e);
            cur = g.opposite(e, cur);
            want = if want == c { d } else { c };
        }
        let old: Vec<u32> = edges.iter().map(|&e| self.color[e]).collect();
        for &e in &edges {
            self.clear(g, e);
        }
        for (&e, &o) in edges.iter().zip(&old) {
            self.set(g, e, if o == c { d } else { c });
        }
    }

    fn into_coloring(self) -> EdgeColoring {
        EdgeColoring::new(self.color).expect("every edge colored")
    }
}

/// Proper edge coloring with at most `Δ + 1` colors (Misra-Gries fan
/// rotation with alternating-path inversion). Simple graphs only.
pub fn greedy_fan_coloring(g: &Graph) -> Result<EdgeColoring> {
    if !g.is_simple() {
        return Err(Error::Multigraph);
    }
    let k = g.max_degree() + 1;
    let mut p = Palette::new(g, k);
    let mut edge_to = vec![Vec::new(); g.vertex_count()];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        edge_to[a].push((b, e));
        edge_to[b].push((a, e));
    }
    let find_edge =
        |x: Vertex, y: Vertex| edge_to[x].iter().find(|&&(z, _)| z == y).map(|&(_, e)| e).expect("adjacent");

    for (e, &(u, v)) in g.edges().iter().enumerate() {
        // Maximal fan at u starting with v.
        let mut fan = vec![v];
        loop {
            let last = *fan.last().unwrap();
            let next = g.incident(u).iter().find(|&&(w, f)| {
                p.color[f] != 0 && !fan.contains(&w) && p.is_free(last, p.color[f])
            });
            match next {
                Some(&(w, _)) => fan.push(w),
                None => break,
            }
        }
        let c = p.first_free(u);
        let d = p.first_free(*fan.last().unwrap());
        if c != d {
            p.flip_path(g, u, d, c);
        }
        // Longest prefix of the fan that is still a fan and ends where d is free.
        let mut end = 0;
        for i in 0..fan.len() {
            if i > 0 {
                let col = p.color[find_edge(u, fan[i])];
                if col == 0 || !p.is_free(fan[i - 1], col) {
                    break;
                }
            }
            if p.is_free(fan[i], d) {
                end = i;
                break;
            }
        }
        debug_assert!(p.is_free(fan[end], d));
        let shifted: Vec<u32> = (1..=end).map(|i| p.color[find_edge(u, fan[i])]).collect();
        for &w in &fan[1..=end] {
            p.clear(g, find_edge(u, w));
        }
        for (i, &col) in shifted.iter().enumerate() {
            p.set(g, find_edge(u, fan[i]), col);
        }
        let last_edge = if end == 0 { e } else { find_edge(u, fan[end]) };
        p.set(g, last_edge, d);
    }
    Ok(p.into_coloring())
}

/// Odd cycle through a non-bipartite graph, found by BFS 2-coloring.
fn odd_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in g.vertices() {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &(y, _) in g.incident(x) {
                if side[y] == u8::MAX {
                    side[y] = 1 - side[x];
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                } else if side[y] == side[x] {
                    let (mut a, mut b) = (x, y);
                    let (mut left, mut right) = (vec![a], vec![b]);
                    while a != b {
                        if depth[a] >= depth[b] {
                            a = parent[a];
                            left.push(a);
                        } else {
                            b = parent[b];
                            right.push(b);
                        }
                    }
                    right.pop();
                    right.reverse();
                    left.extend(right);
                    return Some(left);
                }
            }
        }
    }
    None
}

/// Proper edge coloring of a bipartite graph with exactly `Δ` colors
/// (alternating-path recoloring).
pub fn bipartite_proper_coloring(g: &Graph) -> Result<EdgeColoring> {
    if let Some(cycle) = odd_cycle(g) {
        return Err(Error::NotBipartite { cycle });
    }
    let k = g.max_degree();
    let mut p = Palette::new(g, k);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let a = p.first_free(u);
        if !p.is_free(v, a) {
            let b = p.first_free(v);
            // The a/b path from v cannot reach u in a bipartite graph.
            p.flip_path(g, v, a, b);
        }
        p.set(g, e, a);
    }
    Ok(p.into_coloring())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChromaticIndex {
    Exact { value: u32, coloring: EdgeColoring },
    /// The node budget ran out; `χ'` lies in `[lower, upper]` and `coloring`
    /// realizes `upper`.
    Unknown { lower: u32, upper: u32, coloring: EdgeColoring },
}

impl ChromaticIndex {
    pub fn exact(&self) -> Option<u32> {
        match self {
            Self::Exact { value, .. } => Some(*value),
            Self::Unknown { .. } => None,
        }
    }

    pub fn coloring(&self) -> &EdgeColoring {
        match self {
            Self::Exact { coloring, .. } | Self::Unknown { coloring, .. } => coloring,
        }
    }
}

struct LineGraphSearch<'a> {
    neighbors: &'a [Vec<EdgeId>],
    k: u32,
    color: Vec<u32>,
    nodes: u64,
    budget: u64,
}

impl LineGraphSearch<'_> {
    /// Colors remaining edges; `used` is the largest color in play so far.
    fn solve(&mut self, colored: usize, used: u32) -> Option<bool> {
        if colored == self.color.len() {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        // DSATUR: most distinct neighbor colors, then most uncolored neighbors.
        let mut best = None;
        let mut best_key = (0usize, 0usize);
        for e in 0..self.color.len() {
            if self.color[e] != 0 {
                continue;
            }
            let mut seen = 0u64;
            let mut free = 0;
            for &f in &self.neighbors[e] {
                match self.color[f] {
                    0 => free += 1,
                    c => seen |= 1 << c,
                }
            }
            let key = (seen.count_ones() as usize, free);
            if best.is_none() || key > best_key {
                best = Some((e, seen));
                best_key = key;
            }
        }
        let (e, seen) = best.unwrap();
        let top = (used + 1).min(self.k);
        for c in 1..=top {
            if seen & (1 << c) != 0 {
                continue;
            }
            self.color[e] = c;
            match self.solve(colored + 1, used.max(c)) {
                Some(true) => return Some(true),
                None => {
                    self.color[e] = 0;
                    return None;
                }
                Some(false) => {}
            }
        }
        self.color[e] = 0;
        Some(false)
    }
}

/// Exact chromatic index by backtracking over the line graph, trying
/// `k = Δ, Δ + 1` in turn. `budget` caps the number of search nodes per `k`;
/// running out yields [`ChromaticIndex::Unknown`], never a wrong value.
pub fn exact_chromatic_index(g: &Graph, budget: Option<u64>) -> Result<ChromaticIndex> {
    if !g.is_simple() {
        return Err(Error::Multigraph);
    }
    let delta = g.max_degree() as u32;
    if g.edge_count() == 0 {
        return Ok(ChromaticIndex::Exact { value: 0, coloring: EdgeColoring::new(Vec::new())? });
    }
    if delta > 62 {
        return Err(Error::Precondition("maximum degree too large for exact search".into()));
    }
    let neighbors: Vec<Vec<EdgeId>> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(a, b))| {
            let mut adj: Vec<EdgeId> = g.incident_edges(a).chain(g.incident_edges(b)).filter(|&f| f != e).collect();
            adj.sort_unstable();
            adj.dedup();
            adj
        })
        .collect();
    let fallback = greedy_fan_coloring(g)?;
    for k in delta..=delta + 1 {
        if k == fallback.num_colors() {
            return Ok(ChromaticIndex::Exact { value: k, coloring: fallback });
        }
        let mut search = LineGraphSearch {
            neighbors: &neighbors,
            k,
            color: vec![0; g.edge_count()],
            nodes: 0,
            budget: budget.unwrap_or(u64::MAX),
        };
        match search.solve(0, 0) {
            Some(true) => {
                return Ok(ChromaticIndex::Exact { value: k, coloring: EdgeColoring::new(search.color)? })
            }
            Some(false) => continue,
            None => {
                return Ok(ChromaticIndex::Unknown {
                    lower: k,
                    upper: fallback.num_colors(),
                    coloring: fallback,
                })
            }
        }
    }
    unreachable!("Vizing: Δ + 1 colors always suffice")
}
