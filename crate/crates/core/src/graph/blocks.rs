use super::{EdgeId, EdgeSet, Graph, Subgraph, Vertex, VertexSet};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Block {
    /// Parent edge ids, sorted.
    pub edges: EdgeSet,
    /// Parent vertex ids, sorted.
    pub vertices: VertexSet,
    /// The block as a standalone graph; `view.edge_map` / `view.vertex_map`
    /// lead back to the parent.
    pub view: Subgraph,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }

    pub fn is_cycle(&self) -> bool {
        let g = &self.view.graph;
        g.vertex_count() >= 2
            && g.edge_count() == g.vertex_count()
            && g.vertices().all(|v| g.degree(v) == 2)
    }
}

#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: VertexSet,
    /// Edges `(block index, cut vertex)` of the bipartite block-cut tree.
    pub block_tree: Vec<(usize, Vertex)>,
}

impl BlockDecomposition {
    /// Index of the block containing edge `e`.
    pub fn block_of_edge(&self, e: EdgeId) -> Option<usize> {
        self.blocks.iter().position(|b| b.edges.contains(e))
    }
}

/// Block decomposition of a connected graph (Hopcroft-Tarjan, iterative).
pub fn blocks(g: &Graph) -> Result<BlockDecomposition> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::Precondition("block decomposition needs at least one vertex".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }

    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut raw_blocks: Vec<Vec<EdgeId>> = Vec::new();
    // (vertex, edge used to enter it, next adjacency index)
    let mut stack: Vec<(Vertex, Option<EdgeId>, usize)> = vec![(0, None, 0)];
    disc[0] = 0;
    low[0] = 0;
    time += 1;

    while let Some(top) = stack.last_mut() {
        let (v, parent_edge, idx) = *top;
        if idx < g.incident(v).len() {
            top.2 += 1;
            let (w, e) = g.incident(v)[idx];
            if Some(e) == parent_edge {
                continue;
            }
            if disc[w] == UNSEEN {
                disc[w] = time;
                low[w] = time;
                time += 1;
                edge_stack.push(e);
                stack.push((w, Some(e), 0));
            } else if disc[w] < disc[v] {
                edge_stack.push(e);
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let (Some(&(p, _, _)), Some(pe)) = (stack.last(), parent_edge) {
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push(e);
                        if e == pe {
                            break;
                        }
                    }
                    raw_blocks.push(block);
                }
            }
        }
    }

    let mut membership = vec![0usize; n];
    let mut blocks: Vec<Block> = raw_blocks
        .into_iter()
        .map(|edges| {
            let edges = EdgeSet::from_iter(edges);
            let view = g.edge_subgraph(&edges);
            let vertices = VertexSet::from_iter(view.vertex_map.iter().copied());
            Block { edges, vertices, view }
        })
        .collect();
    blocks.sort_by(|a, b| a.edges.cmp(&b.edges));
    for b in &blocks {
        for v in b.vertices.iter() {
            membership[v] += 1;
        }
    }
    let cut_vertices = VertexSet::from_iter(g.vertices().filter(|&v| membership[v] >= 2));
    let block_tree = blocks
        .iter()
        .enumerate()
        .flat_map(|(i, b)| {
            b.vertices.iter().filter(|&v| cut_vertices.contains(v)).map(move |v| (i, v)).collect::<Vec<_>>()
        })
        .collect();
    Ok(BlockDecomposition { blocks, cut_vertices, block_tree })
}
