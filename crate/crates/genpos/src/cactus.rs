//! Structural analysis of cacti and the closed forms and bounds their
//! structure yields.
//!
//! The profile of a cactus records its cycle count k, pendant-edge count
//! t, odd-cycle count, and per-cycle data. Each cycle carries the
//! placement of its cut vertices, summarized by D_c: the number of edges
//! in the shortest path between two cut vertices that leaves the cycle's
//! longest cut-free arc untouched. Cycles whose D_c is small relative to
//! the length are classified good; good cycles admit two independent
//! witness vertices each, which drives the 2k+t bounds below.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::blocks::{block_decomposition, Block, BlockDecomposition, BlockKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solver::{GpCertificate, Method};

/// One cycle of a cactus with its cut-vertex placement and flags.
///
/// `vertices` lists the cycle in cyclic walk order starting from its least
/// vertex; `cut_vertices_on_cycle` is the subsequence of those that are
/// cut vertices of the whole graph; `gaps` holds the arc lengths between
/// cyclically consecutive cut vertices (summing to `length` when at least
/// two are present). The good and bad flags come from independent
/// thresholds and may both hold for even lengths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleRecord {
    pub vertices: Vec<usize>,
    pub length: usize,
    pub cut_vertices_on_cycle: Vec<usize>,
    pub gaps: Vec<usize>,
    pub d_c_min: Option<usize>,
    pub is_end_block: bool,
    pub is_good: bool,
    pub is_bad: bool,
}

/// A maximal subtree hanging off the 2-core, named by its attachment
/// vertex. The root is included in `vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PendantTree {
    pub root: usize,
    pub vertices: VertexSet,
}

/// Structure summary of a cactus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CactusProfile {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub k1_odd: usize,
    pub cycles: Vec<CycleRecord>,
    pub pendant_trees: Vec<PendantTree>,
    pub is_chain: bool,
}

/// An integer bound with a tag naming the structural fact it comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: usize,
    pub source: &'static str,
}

/// Every bound the profile supports, plus an exact prediction when a
/// closed form applies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub lower_t: Bound,
    pub lower_no_pendant: Option<Bound>,
    pub upper_2k_t: Bound,
    pub upper_n_minus_1: Bound,
    pub predicted_exact: Option<Bound>,
}

/// Computes the full structure profile of a connected cactus.
pub fn cactus_profile(g: &Graph) -> Result<CactusProfile> {
    let decomp = block_decomposition(g);
    if decomp.blocks.iter().any(|b| b.kind == BlockKind::Other) {
        return Err(Error::NotACactus);
    }
    let n = g.vertex_count();
    let t = (0..n).filter(|&v| g.degree(v) == 1).count();

    let mut cycles = Vec::new();
    for block in decomp.cycle_blocks() {
        let rec = cycle_record(block, &decomp.cut_vertices);
        cycles.push(classify_cycle(rec));
    }
    let k = cycles.len();
    let k1_odd = cycles.iter().filter(|c| c.length % 2 == 1).count();

    let pendant_trees = if k == 0 {
        // A tree has no cycle to hang off; the profile lists no pendant
        // trees rather than treating the whole graph as one.
        Vec::new()
    } else {
        pendant_tree_decomposition(g, &decomp)?
    };

    Ok(CactusProfile {
        n,
        k,
        t,
        k1_odd,
        cycles,
        pendant_trees,
        is_chain: chain_shaped(&decomp),
    })
}

/// A cactus is chain-shaped when no block carries more than two cut
/// vertices and every cut vertex joins exactly two blocks.
fn chain_shaped(decomp: &BlockDecomposition) -> bool {
    for block in &decomp.blocks {
        let cuts = decomp.cut_vertices.count_in(&block.vertices);
        if cuts > 2 {
            return false;
        }
    }
    for v in decomp.cut_vertices.iter() {
        let sharing = decomp
            .blocks
            .iter()
            .filter(|b| b.vertices.binary_search(&v).is_ok())
            .count();
        if sharing != 2 {
            return false;
        }
    }
    true
}

/// Builds the record for one cycle block: walk order, cut placement,
/// gaps, and D_c. Flags are left unset; [`classify_cycle`] fills them.
fn cycle_record(block: &Block, cut_vertices: &VertexSet) -> CycleRecord {
    let vertices = cycle_walk(block);
    let length = vertices.len();
    let cut_vertices_on_cycle: Vec<usize> = vertices
        .iter()
        .copied()
        .filter(|&v| cut_vertices.contains(v))
        .collect();

    let positions: Vec<usize> = (0..length)
        .filter(|&i| cut_vertices.contains(vertices[i]))
        .collect();
    let c = positions.len();
    let (gaps, d_c_min) = if c >= 2 {
        let gaps: Vec<usize> = (0..c)
            .map(|i| (positions[(i + 1) % c] + length - positions[i]) % length)
            .collect();
        let max_gap = *gaps.iter().max().expect("at least two gaps");
        (gaps, Some(length - max_gap))
    } else {
        (Vec::new(), None)
    };

    CycleRecord {
        vertices,
        length,
        cut_vertices_on_cycle,
        gaps,
        d_c_min,
        is_end_block: false,
        is_good: false,
        is_bad: false,
    }
}

/// Orders a cycle block's vertices along the cycle, starting at the least
/// vertex and stepping first to its smaller neighbor.
fn cycle_walk(block: &Block) -> Vec<usize> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(u, v) in &block.edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let start = block.vertices[0];
    let mut walk = vec![start];
    let mut prev = start;
    let mut cur = *adj[&start].iter().min().expect("cycle vertex has degree 2");
    while cur != start {
        walk.push(cur);
        let nbrs = &adj[&cur];
        let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
        prev = cur;
        cur = next;
    }
    walk
}

/// D_c of a cycle: the cycle length minus its longest cut-free arc.
///
/// Equivalently the minimum, over cut-vertex pairs whose complementary
/// arc interior is cut-free, of the edge count of the path joining them
/// the long way around. Requires at least two cut vertices on the cycle.
pub fn cut_path_distance(rec: &CycleRecord) -> Result<usize> {
    if rec.cut_vertices_on_cycle.len() < 2 {
        return Err(Error::FewerThanTwoCuts);
    }
    let max_gap = *rec.gaps.iter().max().expect("two cuts give two gaps");
    Ok(rec.length - max_gap)
}

/// Sets the end-block, good, and bad flags.
///
/// An end-block (at most one cut vertex) is always good. Otherwise, with
/// D_c the cut-path distance and l the length: good means D_c <= l/2 for
/// even l, D_c <= floor(l/2)-1 for odd l; bad means D_c >= l/2-1 for even
/// l, D_c >= floor(l/2) for odd l. The two flags are deliberately not
/// complements: both hold for even l when D_c is l/2-1 or l/2.
pub fn classify_cycle(mut rec: CycleRecord) -> CycleRecord {
    rec.is_end_block = rec.cut_vertices_on_cycle.len() <= 1;
    if rec.is_end_block {
        rec.is_good = true;
        rec.is_bad = false;
        return rec;
    }
    let l = rec.length;
    let d_c = rec.d_c_min.expect("two or more cuts imply a D_c");
    if l.is_multiple_of(2) {
        rec.is_good = d_c <= l / 2;
        rec.is_bad = d_c + 1 >= l / 2;
    } else {
        rec.is_good = d_c < l / 2;
        rec.is_bad = d_c >= l / 2;
    }
    rec
}

/// Splits off every maximal subtree hanging from the 2-core.
///
/// The 2-core (what survives repeatedly deleting degree-1 vertices) is
/// exactly the union of cycles and the paths joining them, so the shaved
/// vertices form the pendant trees. Each tree is grouped under the single
/// core vertex it attaches to. Requires at least one cycle.
pub fn pendant_tree_decomposition(
    g: &Graph,
    decomp: &BlockDecomposition,
) -> Result<Vec<PendantTree>> {
    if decomp.cycle_blocks().next().is_none() {
        return Err(Error::NoCycle);
    }
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut shaved = vec![false; n];
    let mut queue: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while let Some(v) = queue.pop() {
        if shaved[v] {
            continue;
        }
        shaved[v] = true;
        for &w in g.neighbors(v) {
            if !shaved[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    queue.push(w);
                }
            }
        }
    }

    // A shaved vertex is adjacent to at most one core vertex, so each
    // shaved component hangs under exactly one root.
    let mut claimed = vec![false; n];
    let mut trees = Vec::new();
    for root in 0..n {
        if shaved[root] || !g.neighbors(root).iter().any(|&w| shaved[w]) {
            continue;
        }
        let mut members = vec![root];
        let mut stack: Vec<usize> = g
            .neighbors(root)
            .iter()
            .copied()
            .filter(|&w| shaved[w])
            .collect();
        while let Some(v) = stack.pop() {
            if claimed[v] {
                continue;
            }
            claimed[v] = true;
            members.push(v);
            stack.extend(g.neighbors(v).iter().copied().filter(|&w| shaved[w]));
        }
        trees.push(PendantTree {
            root,
            vertices: members.into_iter().collect(),
        });
    }
    Ok(trees)
}

/// gp of a tree: its leaves, and nothing else, form a maximum general
/// position set. `g` must be connected; a lone vertex counts 1.
pub fn tree_gp(g: &Graph) -> Result<GpCertificate> {
    assert!(g.is_connected(), "tree_gp needs a connected graph");
    let n = g.vertex_count();
    if n == 1 {
        return Ok(GpCertificate {
            value: 1,
            witness: [0].into_iter().collect(),
            method: Method::ClosedForm("tree"),
        });
    }
    if g.edge_count() != n - 1 {
        return Err(Error::HasCycle);
    }
    let leaves: VertexSet = (0..n).filter(|&v| g.degree(v) == 1).collect();
    Ok(GpCertificate {
        value: leaves.len(),
        witness: leaves,
        method: Method::ClosedForm("tree"),
    })
}

/// gp of the cycle C_n: 3 for n = 3, 2 for n = 4, 3 from n = 5 on.
pub fn cycle_gp(n: usize) -> Result<usize> {
    match n {
        0..=2 => Err(Error::InvalidCycle(n)),
        4 => Ok(2),
        _ => Ok(3),
    }
}

/// gp of the wheel W_n (rim size n, n+1 vertices): 4 for n = 3, 3 for
/// n = 4 and 5, floor(2n/3) from n = 6 on.
pub fn wheel_gp(n: usize) -> Result<usize> {
    match n {
        0..=2 => Err(Error::InvalidWheel(n)),
        3 => Ok(4),
        4 | 5 => Ok(3),
        _ => Ok(2 * n / 3),
    }
}

/// Evaluates every structural bound the profile supports.
///
/// Lower bounds: the pendant count t always; max{4, odd-cycle count + 2}
/// when the cactus has no pendant edges and at least two cycles. Upper
/// bounds: max{3, 2k+t} and max{3, n-1}. An exact value is predicted when
/// all cycles are good and the graph is large enough for the 2k+t
/// equality (k >= 2 or t >= 2), or when the graph is a bare cycle.
pub fn bound_report(p: &CactusProfile) -> BoundReport {
    let lower_t = Bound {
        value: p.t,
        source: "pendant-count",
    };
    let lower_no_pendant = (p.t == 0 && p.k >= 2).then_some(Bound {
        value: 4.max(p.k1_odd + 2),
        source: "odd-cycle-count",
    });
    let upper_2k_t = Bound {
        value: 3.max(2 * p.k + p.t),
        source: "two-per-cycle-plus-pendants",
    };
    let upper_n_minus_1 = Bound {
        value: 3.max(p.n.saturating_sub(1)),
        source: "order-minus-one",
    };

    let all_good = p.cycles.iter().all(|c| c.is_good);
    let predicted_exact = if all_good && (p.k >= 2 || p.t >= 2) {
        Some(Bound {
            value: 2 * p.k + p.t,
            source: "all-good-cycles",
        })
    } else if p.k == 1 && p.n == p.cycles[0].length {
        Some(Bound {
            value: cycle_gp(p.n).expect("cycle length is at least 3"),
            source: "bare-cycle",
        })
    } else {
        None
    };

    BoundReport {
        lower_t,
        lower_no_pendant,
        upper_2k_t,
        upper_n_minus_1,
        predicted_exact,
    }
}
