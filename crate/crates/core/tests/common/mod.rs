//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the flow, enumeration or search code under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use srd_kit::Graph;

/// Vertices reachable from `start` without using edges in `removed` (bit mask).
pub fn reach(g: &Graph, start: usize, removed: u64) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if removed >> e & 1 == 1 {
                continue;
            }
            let y = if a == x {
                b
            } else if b == x {
                a
            } else {
                continue;
            };
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

pub fn separates_mask(g: &Graph, mask: u64, u: usize, v: usize) -> bool {
    !reach(g, u, mask)[v]
}

/// Every edge subset separating `u` from `v`, as bit masks.
pub fn separating_subsets(g: &Graph, u: usize, v: usize) -> Vec<u64> {
    assert!(g.edge_count() <= 20, "oracle limited to 20 edges");
    (0u64..1 << g.edge_count()).filter(|&m| separates_mask(g, m, u, v)).collect()
}

/// `λ(u, v)` as the smallest separating edge subset.
pub fn brute_lambda(g: &Graph, u: usize, v: usize) -> usize {
    separating_subsets(g, u, v).iter().map(|m| m.count_ones() as usize).min().unwrap_or(0)
}

/// All minimum `u`-`v` cuts as sorted edge lists.
pub fn brute_min_cuts(g: &Graph, u: usize, v: usize) -> BTreeSet<Vec<usize>> {
    let subsets = separating_subsets(g, u, v);
    let best = subsets.iter().map(|m| m.count_ones()).min().unwrap_or(0);
    subsets.into_iter().filter(|m| m.count_ones() == best).map(mask_to_vec).collect()
}

/// Inclusion-minimal separating subsets.
pub fn minimal_separating(g: &Graph, u: usize, v: usize) -> Vec<u64> {
    let all = separating_subsets(g, u, v);
    let set: BTreeSet<u64> = all.iter().copied().collect();
    all.into_iter()
        .filter(|&m| (0..g.edge_count()).all(|e| m >> e & 1 == 0 || !set.contains(&(m & !(1 << e)))))
        .collect()
}

pub fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|e| mask >> e & 1 == 1).collect()
}

pub fn rainbow_mask(colors: &[u32], mask: u64) -> bool {
    let mut seen = BTreeSet::new();
    mask_to_vec(mask).into_iter().all(|e| seen.insert(colors[e]))
}

/// Per-pair candidate cuts for a naive srd/rd check: all minimum
/// separating subsets (srd) or all minimal separating subsets (rd).
pub struct NaiveOracle {
    pairs: Vec<Vec<u64>>,
}

impl NaiveOracle {
    pub fn srd(g: &Graph) -> Self {
        Self::build(g, |g, u, v| {
            let subsets = separating_subsets(g, u, v);
            let best = subsets.iter().map(|m| m.count_ones()).min().unwrap();
            subsets.into_iter().filter(|m| m.count_ones() == best).collect()
        })
    }

    pub fn rd(g: &Graph) -> Self {
        Self::build(g, minimal_separating)
    }

    fn build(g: &Graph, f: impl Fn(&Graph, usize, usize) -> Vec<u64>) -> Self {
        let n = g.vertex_count();
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push(f(g, u, v));
            }
        }
        Self { pairs }
    }

    pub fn accepts(&self, colors: &[u32]) -> bool {
        self.pairs.iter().all(|cuts| cuts.iter().any(|&m| rainbow_mask(colors, m)))
    }
}

/// Every map from `m` edges to colors `1..=k` (not reduced by symmetry).
pub fn all_colorings(m: usize, k: u32) -> impl Iterator<Item = Vec<u32>> {
    let total = (k as u64).pow(m as u32);
    (0..total).map(move |mut code| {
        (0..m)
            .map(|_| {
                let c = (code % k as u64) as u32 + 1;
                code /= k as u64;
                c
            })
            .collect()
    })
}

/// Smallest `k` for which some coloring with colors `1..=k` passes the oracle.
pub fn brute_number(g: &Graph, oracle: &NaiveOracle) -> u32 {
    (1..=g.edge_count() as u32)
        .find(|&k| all_colorings(g.edge_count(), k).any(|c| oracle.accepts(&c)))
        .expect("e(G) colors always suffice")
}

/// Relabel colors by first appearance.
pub fn canonicalize(colors: &[u32]) -> Vec<u32> {
    let mut map = std::collections::BTreeMap::new();
    colors
        .iter()
        .map(|c| {
            let next = map.len() as u32 + 1;
            *map.entry(*c).or_insert(next)
        })
        .collect()
}

/// All connected labeled simple graphs on `n` vertices.
pub fn labeled_connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    (0u64..1 << pairs.len())
        .filter_map(|mask| {
            let edges = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            let g = Graph::new(n, edges).unwrap();
            g.is_connected().then_some(g)
        })
        .collect()
}

/// Degree-sequence-and-more invariant used to sanity-check isomorphism
/// classes: sorted (degree, sorted neighbor degrees) per vertex.
pub fn degree_signature(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut sig: Vec<(usize, Vec<usize>)> = g
        .vertices()
        .map(|v| {
            let mut nd: Vec<usize> = g.incident(v).iter().map(|&(w, _)| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    sig.sort();
    sig
}

/// Whether two small graphs are isomorphic, by trying every bijection.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let target: BTreeSet<(usize, usize)> = b.edges().iter().map(|&(x, y)| (x.min(y), x.max(y))).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if a.edges().iter().all(|&(x, y)| {
            let (p, q) = (perm[x], perm[y]);
            target.contains(&(p.min(q), p.max(q)))
        }) {
            return true;
        }
        // Next permutation in lexicographic order.
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return false;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

/// Deterministic small random connected graph: a random spanning tree plus
/// extra random edges (simple).
pub fn random_connected(n: usize, extra: usize, seed: u64) -> Graph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for _ in 0..extra {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    Graph::new(n, edges.into_iter().collect()).unwrap()
}
