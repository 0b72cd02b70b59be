//! Dinic max flow on undirected networks.
//!
//! An undirected edge of capacity `c` is a pair of opposite arcs, each of
//! capacity `c` and each the other's reverse. Arc `2i` runs from the first
//! endpoint of edge `i` to the second; arc `2i + 1` runs back.

use std::collections::VecDeque;

use crate::graph::{Graph, Vertex};

pub(crate) const INFINITE: u64 = u64::MAX / 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Capacity {
    Removed,
    Unit,
    Infinite,
}

pub(crate) struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<Vertex>,
    residual: Vec<u64>,
    level: Vec<u32>,
    cursor: Vec<usize>,
}

impl FlowNetwork {
    /// One undirected edge per graph edge; `capacity` decides each edge's weight.
    pub(crate) fn from_graph(g: &Graph, capacity: impl Fn(usize) -> Capacity) -> Self {
        let n = g.vertex_count();
        let mut net = Self {
            head: vec![Vec::new(); n],
            to: Vec::with_capacity(2 * g.edge_count()),
            residual: Vec::with_capacity(2 * g.edge_count()),
            level: vec![0; n],
            cursor: vec![0; n],
        };
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            let cap = match capacity(e) {
                Capacity::Removed => 0,
                Capacity::Unit => 1,
                Capacity::Infinite => INFINITE,
            };
            net.head[a].push(2 * e);
            net.to.push(b);
            net.residual.push(cap);
            net.head[b].push(2 * e + 1);
            net.to.push(a);
            net.residual.push(cap);
        }
        net
    }

    pub(crate) fn unit(g: &Graph) -> Self {
        Self::from_graph(g, |_| Capacity::Unit)
    }

    fn bfs(&mut self, s: Vertex, t: Vertex) -> bool {
        self.level.iter_mut().for_each(|l| *l = u32::MAX);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &arc in &self.head[x] {
                let y = self.to[arc];
                if self.residual[arc] > 0 && self.level[y] == u32::MAX {
                    self.level[y] = self.level[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        self.level[t] != u32::MAX
    }

    fn dfs(&mut self, x: Vertex, t: Vertex, pushed: u64) -> u64 {
        if x == t {
            return pushed;
        }
        while self.cursor[x] < self.head[x].len() {
            let arc = self.head[x][self.cursor[x]];
            let y = self.to[arc];
            if self.residual[arc] > 0 && self.level[y] == self.level[x] + 1 {
                let got = self.dfs(y, t, pushed.min(self.residual[arc]));
                if got > 0 {
                    self.residual[arc] -= got;
                    self.residual[arc ^ 1] += got;
                    return got;
                }
            }
            self.cursor[x] += 1;
        }
        0
    }

    /// Pushes flow from `s` to `t` until the value reaches `limit` or no
    /// augmenting path remains. Returns the flow value (at most `limit`
    /// unless a single augmentation overshoots it).
    pub(crate) fn max_flow(&mut self, s: Vertex, t: Vertex, limit: u64) -> u64 {
        let mut flow = 0;
        while flow < limit && self.bfs(s, t) {
            self.cursor.iter_mut().for_each(|c| *c = 0);
            loop {
                let pushed = self.dfs(s, t, limit - flow);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
                if flow >= limit {
                    break;
                }
            }
        }
        flow
    }

    /// Vertices reachable from `s` through arcs with positive residual.
    pub(crate) fn source_side(&self, s: Vertex) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &arc in &self.head[x] {
                let y = self.to[arc];
                if self.residual[arc] > 0 && !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Residual arcs as `(from, to)` pairs.
    pub(crate) fn residual_arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.head.iter().enumerate().flat_map(move |(x, arcs)| {
            arcs.iter().filter(|&&a| self.residual[a] > 0).map(move |&a| (x, self.to[a]))
        })
    }
}
