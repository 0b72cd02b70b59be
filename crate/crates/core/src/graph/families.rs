//! Standard graph families with a fixed vertex and edge numbering.

use super::{Graph, Vertex};

fn build(n: usize, edges: Vec<(Vertex, Vertex)>) -> Graph {
    Graph::new(n, edges).expect("family construction is well formed")
}

/// `P_n`: `n` vertices, edges `(i, i+1)`.
pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// `C_n`: path edges followed by the closing edge `(n-1, 0)`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    build(n, edges)
}

/// `K_n` with edges `(i, j)`, `i < j`, in lexicographic order.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    build(n, edges)
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> Graph {
    build(k + 1, (1..=k).map(|i| (0, i)).collect())
}

/// Complete multipartite graph; part `i` occupies a contiguous vertex range
/// in the given order.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if part_of[a] != part_of[b] {
                edges.push((a, b));
            }
        }
    }
    build(n, edges)
}

/// Vertex index of grid position `(row, col)` (0-based) in an `rows x cols` grid.
pub fn grid_vertex(cols: usize, row: usize, col: usize) -> Vertex {
    row * cols + col
}

/// `G_{m,n} = P_m □ P_n`: all horizontal edges row by row, then all vertical
/// edges row by row.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols.saturating_sub(1) {
            edges.push((grid_vertex(cols, r, c), grid_vertex(cols, r, c + 1)));
        }
    }
    for r in 0..rows.saturating_sub(1) {
        for c in 0..cols {
            edges.push((grid_vertex(cols, r, c), grid_vertex(cols, r + 1, c)));
        }
    }
    build(rows * cols, edges)
}

/// Petersen graph: outer 5-cycle 0..5, spokes, inner pentagram 5..10.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, edges)
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> Graph {
    build(5, vec![(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
}

/// Disjoint union; vertices of `b` are shifted past those of `a`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.vertex_count();
    let mut edges = a.edges().to_vec();
    edges.extend(b.edges().iter().map(|&(x, y)| (x + shift, y + shift)));
    build(shift + b.vertex_count(), edges)
}

/// `g` plus one extra vertex joined to `v`.
pub fn with_pendant(g: &Graph, v: Vertex) -> Graph {
    let mut edges = g.edges().to_vec();
    edges.push((v, g.vertex_count()));
    build(g.vertex_count() + 1, edges)
}
