//! Constructive srd-colorings.
//!
//! Each construction returns a coloring whose validity rests on a rainbow
//! minimum cut per pair: usually the edges at one endpoint (when that star is
//! rainbow and has size `λ(u, v)`), or a fixed column or bridge cut.

use super::{exact_chromatic_index, greedy_fan_coloring, ChromaticIndex, EdgeColoring};
use crate::connectivity::{edge_connectivity, enumerate_min_cuts, side_of};
use crate::error::{Error, Result};
use crate::graph::families::{complete, complete_multipartite, grid};
use crate::graph::{blocks, BlockDecomposition, Graph, Vertex};

/// Node budget for exact chromatic index calls made by constructions.
const EXACT_BUDGET: u64 = 2_000_000;

/// Every edge gets color 1.
pub fn color_tree(g: &Graph) -> Result<EdgeColoring> {
    if !g.is_tree() {
        return Err(Error::Precondition("graph is not a tree".into()));
    }
    Ok(EdgeColoring::uniform(g.edge_count(), 1))
}

/// One edge of each cycle block gets color 1; every other edge gets color 2.
pub fn color_cactus(g: &Graph) -> Result<EdgeColoring> {
    let dec = blocks(g)?;
    let mut colors = vec![2; g.edge_count()];
    let mut any_cycle = false;
    for b in &dec.blocks {
        if b.is_cycle() {
            any_cycle = true;
            colors[b.edges.as_slice()[0]] = 1;
        } else if !b.is_bridge() {
            return Err(Error::Precondition(format!(
                "block with edges {:?} is neither a K_2 nor a cycle",
                b.edges.as_slice()
            )));
        }
    }
    if !any_cycle {
        return Err(Error::Precondition("graph has no cycle block".into()));
    }
    EdgeColoring::new(colors)
}

/// Round-robin color of pair `(i, j)` in a 1-factorization of `K_order`
/// (`order` even) on vertices `0..order`, colors `1..order`.
fn round_robin_color(order: usize, i: usize, j: usize) -> u32 {
    let r = order - 1;
    let (i, j) = (i.min(j), i.max(j));
    let slot = if j == r { (2 * i) % r } else { (i + j) % r };
    slot as u32 + 1
}

/// srd-coloring of a complete graph with `n - 1` colors, given the rank of
/// each vertex (`0..n`) in the canonical labeling.
fn complete_colors(g: &Graph, rank: impl Fn(Vertex) -> usize) -> Vec<u32> {
    let n = g.vertex_count();
    g.edges()
        .iter()
        .map(|&(a, b)| {
            let (i, j) = (rank(a), rank(b));
            if n.is_multiple_of(2) {
                round_robin_color(n, i, j)
            } else if i == n - 1 || j == n - 1 {
                // Every edge at the extra vertex gets the fresh color.
                (n - 1) as u32
            } else {
                round_robin_color(n - 1, i, j)
            }
        })
        .collect()
}

/// `K_n` with an srd-coloring using `n - 1` colors: a round-robin
/// 1-factorization for even `n`; for odd `n`, a 1-factorization of `K_{n-1}`
/// plus color `n - 1` on every edge at vertex `n - 1`.
pub fn color_complete(n: usize) -> Result<(Graph, EdgeColoring)> {
    if n < 2 {
        return Err(Error::Precondition("complete graph needs n >= 2".into()));
    }
    let g = complete(n);
    let colors = complete_colors(&g, |v| v);
    Ok((g, EdgeColoring::new(colors)?))
}

/// Extends a proper coloring of `g - removed` to `g`: each edge `removed-x`
/// takes the smallest color of `1..=palette` missing at `x`.
fn extend_by_missing_colors(
    g: &Graph,
    removed: Vertex,
    sub: &crate::graph::Subgraph,
    sub_coloring: &EdgeColoring,
    palette: u32,
) -> Result<EdgeColoring> {
    let mut colors = vec![0; g.edge_count()];
    for (local, &parent) in sub.edge_map.iter().enumerate() {
        colors[parent] = sub_coloring.color(local);
    }
    let mut local_of = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in sub.vertex_map.iter().enumerate() {
        local_of[v] = i;
    }
    for &(x, e) in g.incident(removed) {
        let lx = local_of[x];
        let missing = (1..=palette)
            .find(|&c| sub.graph.incident_edges(lx).all(|f| sub_coloring.color(f) != c))
            .ok_or_else(|| Error::Precondition(format!("no color of 1..={palette} is free at vertex {x}")))?;
        colors[e] = missing;
    }
    EdgeColoring::new(colors)
}

/// Complete multipartite graph with an srd-coloring using `n - n_2` colors
/// when `n_1 = 1` and `n - n_1` colors otherwise. Part sizes must be
/// ascending; part `i` occupies a contiguous vertex range.
pub fn color_complete_multipartite(parts: &[usize]) -> Result<(Graph, EdgeColoring)> {
    if parts.len() < 2 {
        return Err(Error::Precondition("need at least two parts".into()));
    }
    if parts.contains(&0) {
        return Err(Error::Precondition("parts must be nonempty".into()));
    }
    if parts.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Precondition("part sizes must be ascending".into()));
    }
    let g = complete_multipartite(parts);
    // Vertex 0 is the (first) vertex of the smallest part.
    let sub = g.remove_vertex(0);
    let delta = sub.graph.max_degree() as u32;
    let coloring = if parts[0] == 1 {
        let c = greedy_fan_coloring(&sub.graph)?;
        extend_by_missing_colors(&g, 0, &sub, &c, delta + 1)?
    } else {
        let mut c = greedy_fan_coloring(&sub.graph)?;
        if c.num_colors() > delta {
            c = match exact_chromatic_index(&sub.graph, Some(EXACT_BUDGET))? {
                ChromaticIndex::Exact { value, coloring } if value == delta => coloring,
                ChromaticIndex::Exact { value, .. } => {
                    return Err(Error::Precondition(format!(
                        "G - u has chromatic index {value}, expected {delta}"
                    )))
                }
                ChromaticIndex::Unknown { .. } => {
                    return Err(Error::BudgetExhausted("Class 1 coloring of G - u".into()))
                }
            };
        }
        extend_by_missing_colors(&g, 0, &sub, &c, delta)?
    };
    Ok((g, coloring))
}

/// Grid `G_{m,n}` with its srd-coloring. The grid is built with
/// `min(m, n)` rows. One row: a single color. The 4-cycle `G_{2,2}`: two
/// colors. Two or three rows: the mod-3
/// schemes (horizontal `x_{i,j}x_{i,j+1} -> i+j+1`, vertical
/// `x_{1,j}x_{2,j} -> j`, `x_{2,j}x_{3,j} -> j+2`, with 1-based `i, j`),
/// shifted from `{0,1,2}` to `{1,2,3}`. Four or more rows: a proper
/// 4-coloring of the bipartite grid.
pub fn color_grid(m: usize, n: usize) -> Result<(Graph, EdgeColoring)> {
    let (rows, cols) = (m.min(n), m.max(n));
    if rows == 0 || cols < 2 {
        return Err(Error::Precondition(format!("invalid grid dimensions {m} x {n}")));
    }
    let g = grid(rows, cols);
    let coloring = match rows {
        1 => EdgeColoring::uniform(g.edge_count(), 1),
        // G_{2,2} is a 4-cycle.
        2 if cols == 2 => color_cactus(&g)?,
        2 | 3 => {
            let colors = g
                .edges()
                .iter()
                .map(|&(a, b)| {
                    let (i, j) = (a / cols + 1, a % cols + 1);
                    let z = if a / cols == b / cols {
                        i + j + 1
                    } else if i == 1 {
                        j
                    } else {
                        j + 2
                    };
                    (z % 3) as u32 + 1
                })
                .collect();
            EdgeColoring::new(colors)?
        }
        _ => super::bipartite_proper_coloring(&g)?,
    };
    Ok((g, coloring))
}

/// Proper coloring of a `k`-edge-connected `k`-regular graph (exact `χ'`
/// when the search finishes, `Δ + 1` colors otherwise). Every vertex star is
/// then a rainbow minimum cut.
pub fn color_regular(g: &Graph) -> Result<EdgeColoring> {
    let k = g.is_regular().ok_or_else(|| Error::Precondition("graph is not regular".into()))?;
    if g.vertex_count() < 2 || edge_connectivity(g)? != k {
        return Err(Error::Precondition(format!("graph is not {k}-edge-connected")));
    }
    Ok(match exact_chromatic_index(g, Some(EXACT_BUDGET))? {
        ChromaticIndex::Exact { coloring, .. } => coloring,
        ChromaticIndex::Unknown { coloring, .. } => coloring,
    })
}

/// Glues one srd-coloring per block (indexed like `dec.blocks`, keyed by
/// each block's local edge ids) into a coloring of `g`.
pub fn color_by_blocks(
    g: &Graph,
    dec: &BlockDecomposition,
    block_colorings: &[EdgeColoring],
) -> Result<EdgeColoring> {
    if block_colorings.len() != dec.blocks.len() {
        return Err(Error::Precondition(format!(
            "{} block colorings given for {} blocks",
            block_colorings.len(),
            dec.blocks.len()
        )));
    }
    let mut colors = vec![0; g.edge_count()];
    for (block, c) in dec.blocks.iter().zip(block_colorings) {
        c.check_domain(&block.view.graph)?;
        for (local, &parent) in block.view.edge_map.iter().enumerate() {
            colors[parent] = c.color(local);
        }
    }
    EdgeColoring::new(colors)
}

/// Finds a minimum-size nontrivial minimum pair cut: a minimum `x`-`y` cut
/// with at least two vertices on each side. Returns the `x` side.
fn smallest_nontrivial_min_cut(g: &Graph) -> Result<Option<Vec<bool>>> {
    let mut best: Option<(usize, Vec<bool>)> = None;
    for x in g.vertices() {
        for y in x + 1..g.vertex_count() {
            for cert in enumerate_min_cuts(g, x, y, 100_000)? {
                if best.as_ref().is_some_and(|(v, _)| *v <= cert.value) {
                    break;
                }
                let side = side_of(g, &cert.cut, x);
                let inside = side.iter().filter(|&&s| s).count();
                if inside >= 2 && g.vertex_count() - inside >= 2 {
                    best = Some((cert.value, side));
                    break;
                }
            }
        }
    }
    Ok(best.map(|(_, side)| side))
}

/// srd-coloring with at most `e(G) - 1` colors for connected graphs on at
/// least three vertices.
///
/// Trees and cacti use their dedicated constructions. Otherwise, when some
/// pair has a nontrivial minimum cut `∂(X)`, the edges inside `X` get
/// distinct colors, the edges inside the complement get distinct colors
/// from the same range, and `∂(X)` gets fresh colors. When every minimum
/// pair cut is a vertex star, any proper coloring works.
pub fn color_general_upper(g: &Graph) -> Result<EdgeColoring> {
    if g.vertex_count() < 3 {
        return Err(Error::Precondition("needs at least three vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_tree() {
        return color_tree(g);
    }
    if g.is_cactus_with_cycle() {
        return color_cactus(g);
    }
    let coloring = match smallest_nontrivial_min_cut(g)? {
        Some(side) => {
            let (mut inside, mut outside) = (0u32, 0u32);
            let mut colors = vec![0; g.edge_count()];
            let mut crossing = Vec::new();
            for (e, &(a, b)) in g.edges().iter().enumerate() {
                match (side[a], side[b]) {
                    (true, true) => {
                        inside += 1;
                        colors[e] = inside;
                    }
                    (false, false) => {
                        outside += 1;
                        colors[e] = outside;
                    }
                    _ => crossing.push(e),
                }
            }
            let base = inside.max(outside);
            for (i, e) in crossing.into_iter().enumerate() {
                colors[e] = base + 1 + i as u32;
            }
            EdgeColoring::new(colors)?
        }
        None => greedy_fan_coloring(g)?,
    };
    assert!(
        (coloring.num_colors() as usize) < g.edge_count(),
        "construction exceeded e(G) - 1 colors"
    );
    Ok(coloring)
}

fn is_complete(g: &Graph) -> bool {
    let n = g.vertex_count();
    g.is_simple() && g.edge_count() == n * (n - 1) / 2
}

/// Best available construction for a connected graph: dedicated families
/// first, then per-block gluing, then the fewest colors among the general
/// constructions that apply.
pub fn color_auto(g: &Graph) -> Result<EdgeColoring> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    match g.vertex_count() {
        0 | 1 => return EdgeColoring::new(Vec::new()),
        2 => return Ok(EdgeColoring::uniform(g.edge_count(), 1)),
        _ => {}
    }
    if g.is_tree() {
        return color_tree(g);
    }
    if g.is_cactus_with_cycle() {
        return color_cactus(g);
    }
    let dec = blocks(g)?;
    if dec.blocks.len() > 1 {
        let per_block = dec
            .blocks
            .iter()
            .map(|b| color_auto(&b.view.graph))
            .collect::<Result<Vec<_>>>()?;
        return color_by_blocks(g, &dec, &per_block);
    }
    let mut best = color_general_upper(g)?;
    if is_complete(g) {
        let c = EdgeColoring::new(complete_colors(g, |v| v))?;
        if c.num_colors() < best.num_colors() {
            best = c;
        }
    }
    if g.is_simple() {
        if let Ok(c) = color_regular(g) {
            if c.num_colors() < best.num_colors() {
                best = c;
            }
        }
    }
    Ok(best)
}
