//! Block decomposition and cactus recognition.
//!
//! A block is a maximal 2-connected subgraph or a bridge edge. Blocks
//! partition the edge set; two blocks meet only in cut vertices. A graph
//! is a cactus exactly when every block is a single edge or a cycle.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// What a block looks like. `Other` marks any 2-connected block that is
/// not a cycle, which is what disqualifies a graph from being a cactus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BlockKind {
    BridgeEdge,
    Cycle,
    Other,
}

/// One block: sorted vertex list, normalized sorted edge list, and kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub kind: BlockKind,
}

/// All blocks of a graph plus its cut vertices. Blocks are sorted by
/// vertex list, so the output is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: VertexSet,
}

impl BlockDecomposition {
    /// Blocks of kind `Cycle`.
    pub fn cycle_blocks(&self) -> impl Iterator<Item = &Block> {
        self.blocks.iter().filter(|b| b.kind == BlockKind::Cycle)
    }
}

/// Computes blocks and cut vertices with an iterative depth-first search
/// over an explicit edge stack. `g` should be connected; components other
/// than vertex 0's are still decomposed correctly if present.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.vertex_count();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut raw_blocks: Vec<Vec<(usize, usize)>> = Vec::new();

    // Frame: (vertex, parent, next unscanned neighbor index).
    let mut frames: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0usize;
        frames.push((root, UNSEEN, 0));
        'dfs: while let Some(frame) = frames.last_mut() {
            let (v, parent) = (frame.0, frame.1);
            while frame.2 < g.degree(v) {
                let w = g.neighbors(v)[frame.2];
                frame.2 += 1;
                if disc[w] == UNSEEN {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    frames.push((w, v, 0));
                    continue 'dfs;
                } else if w != parent && disc[w] < disc[v] {
                    // Back edge, recorded once from the deeper endpoint.
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            }
            frames.pop();
            let Some(&(p, _, _)) = frames.last() else {
                continue;
            };
            low[p] = low[p].min(low[v]);
            if low[v] >= disc[p] {
                // p separates v's subtree: edges down to (p, v) are a block.
                let mut block = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    block.push(e);
                    if e == (p, v) {
                        break;
                    }
                }
                raw_blocks.push(block);
                if p != root || root_children >= 2 {
                    is_cut[p] = true;
                }
            }
        }
    }

    let mut blocks: Vec<Block> = raw_blocks.into_iter().map(finish_block).collect();
    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    let cut_vertices = (0..n).filter(|&v| is_cut[v]).collect();
    BlockDecomposition {
        blocks,
        cut_vertices,
    }
}

fn finish_block(raw_edges: Vec<(usize, usize)>) -> Block {
    let mut edges: Vec<(usize, usize)> = raw_edges
        .into_iter()
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    edges.sort_unstable();
    let mut vertices: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    // A 2-connected block with as many edges as vertices is 2-regular,
    // hence a single cycle.
    let kind = if edges.len() == 1 {
        BlockKind::BridgeEdge
    } else if vertices.len() >= 3 && edges.len() == vertices.len() {
        BlockKind::Cycle
    } else {
        BlockKind::Other
    };
    Block {
        vertices,
        edges,
        kind,
    }
}

/// True iff every block of `g` is a bridge edge or a cycle. Trees qualify
/// with zero cycles. `g` should be connected.
pub fn is_cactus(g: &Graph) -> bool {
    block_decomposition(g)
        .blocks
        .iter()
        .all(|b| b.kind != BlockKind::Other)
}
