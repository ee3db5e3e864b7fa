//! Seeded, deterministic graph generators for every family the tests and
//! the audit harness draw from.
//!
//! Deterministic families use canonical vertex numbering so expected
//! values are stable. Random families are driven by ChaCha8 seeded from a
//! caller-supplied 64-bit value; the same spec always yields the same
//! edge list, byte for byte.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Cycle on `n` vertices, numbered 0..n-1 in cyclic order.
pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidCycle(n));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Path on `n >= 1` vertices, numbered along the path.
pub fn gen_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// Star with the given number of leaves; the hub is vertex 0.
pub fn gen_star(leaves: usize) -> Result<Graph> {
    if leaves == 0 {
        return Err(Error::InvalidParameter("star needs >= 1 leaf".into()));
    }
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &edges)
}

/// Wheel with rim size `n >= 3`: a cycle on 0..n-1 plus a center vertex
/// `n` adjacent to the whole rim.
pub fn gen_wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidWheel(n));
    }
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (i, n)));
    Graph::from_edges(n + 1, &edges)
}

/// `k >= 1` triangles and `p` pendant edges, all sharing hub vertex 0.
/// The order is 2k + p + 1.
pub fn gen_b0(k: usize, p: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("hub of triangles needs k >= 1".into()));
    }
    let mut edges = Vec::with_capacity(3 * k + p);
    for j in 0..k {
        let (a, b) = (1 + 2 * j, 2 + 2 * j);
        edges.push((0, a));
        edges.push((0, b));
        edges.push((a, b));
    }
    for i in 0..p {
        edges.push((0, 2 * k + 1 + i));
    }
    Graph::from_edges(2 * k + p + 1, &edges)
}

/// Cycles of the given lengths and `pendant_count` pendant edges, all
/// sharing hub vertex 0.
pub fn gen_bouquet(cycle_lengths: &[usize], pendant_count: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in cycle_lengths {
        if len < 3 {
            return Err(Error::InvalidCycle(len));
        }
        let first = next;
        for v in first..first + len - 2 {
            edges.push((v, v + 1));
        }
        edges.push((0, first));
        edges.push((0, first + len - 2));
        next = first + len - 1;
    }
    for i in 0..pendant_count {
        edges.push((0, next + i));
    }
    Graph::from_edges(next + pendant_count, &edges)
}

/// Cycles glued into a chain: consecutive cycles share one vertex, each
/// cut vertex joins exactly two cycles. `cut_offsets[i]` places the two
/// cut vertices of internal cycle `i+1` at that cyclic distance; it must
/// lie in [1, floor(length/2)]. Takes at least two lengths and exactly
/// `lengths - 2` offsets.
pub fn gen_chain_cactus(cycle_lengths: &[usize], cut_offsets: &[usize]) -> Result<Graph> {
    let r = cycle_lengths.len();
    if r < 2 {
        return Err(Error::InvalidParameter(
            "chain needs at least two cycles".into(),
        ));
    }
    if cut_offsets.len() != r - 2 {
        return Err(Error::InvalidParameter(format!(
            "chain of {r} cycles needs {} offsets, got {}",
            r - 2,
            cut_offsets.len()
        )));
    }
    for &len in cycle_lengths {
        if len < 3 {
            return Err(Error::InvalidCycle(len));
        }
    }
    for (i, &off) in cut_offsets.iter().enumerate() {
        let len = cycle_lengths[i + 1];
        if off < 1 || off > len / 2 {
            return Err(Error::InvalidParameter(format!(
                "offset {off} out of range [1, {}] for cycle of length {len}",
                len / 2
            )));
        }
    }

    let mut edges = Vec::new();
    // First cycle on 0..len-1; the shared vertex with the next cycle is
    // its last vertex, keeping numbering contiguous.
    let first_len = cycle_lengths[0];
    for i in 0..first_len {
        edges.push((i, (i + 1) % first_len));
    }
    let mut attach = first_len - 1;
    let mut next = first_len;
    for (j, &len) in cycle_lengths.iter().enumerate().skip(1) {
        // New cycle: attach, next, next+1, ..., next+len-2, back to attach.
        edges.push((attach, next));
        for v in next..next + len - 2 {
            edges.push((v, v + 1));
        }
        edges.push((next + len - 2, attach));
        if j < r - 1 {
            // Walking from `attach`, cyclic distance d lands on next+d-1.
            attach = next + cut_offsets[j - 1] - 1;
        }
        next += len - 1;
    }
    Graph::from_edges(next, &edges)
}

/// Uniform random labeled tree on `n >= 1` vertices.
pub fn gen_random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("tree needs n >= 1".into()));
    }
    if n == 1 {
        return Graph::from_edges(1, &[]);
    }
    if n == 2 {
        return Graph::from_edges(2, &[(0, 1)]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Ok(tree_from_pruefer(n, &seq))
}

fn tree_from_pruefer(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("pruefer decode keeps a leaf");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(std::cmp::Reverse(s));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().expect("two leaves remain");
    let std::cmp::Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Graph::from_edges(n, &edges).expect("pruefer decode yields a simple tree")
}

/// Random connected cactus with exactly `k` cycles and `t` degree-1
/// vertices on exactly `n` vertices.
///
/// Construction: a random block tree of k cycles, joined either directly
/// at shared cut vertices or through bridge paths, plus t pendant paths
/// rooted anywhere except at a pendant leaf. The n - (2k + t + 1) spare
/// vertices are spread uniformly over cycle lengths, bridge lengths, and
/// pendant depths, so (n, k, t) hold exactly by construction.
pub fn gen_random_cactus(n: usize, k: usize, t: usize, seed: u64) -> Result<Graph> {
    if k == 0 {
        return random_caterpillar(n, t, seed);
    }
    if n < 2 * k + t + 1 {
        return Err(Error::Infeasible { n, k, t });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Spread the spare vertices: slots are k cycle lengths, k-1 block
    // connections, and t pendant depths.
    let mut cycle_len = vec![3usize; k];
    let mut bridge_len = vec![0usize; k.saturating_sub(1)];
    let mut pendant_depth = vec![1usize; t];
    let slots = k + (k - 1) + t;
    for _ in 0..n - (2 * k + t + 1) {
        let slot = rng.gen_range(0..slots);
        if slot < k {
            cycle_len[slot] += 1;
        } else if slot < 2 * k - 1 {
            bridge_len[slot - k] += 1;
        } else {
            pendant_depth[slot - (2 * k - 1)] += 1;
        }
    }

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut next = 0usize;
    // Vertices usable as attachment points: everything except pendant
    // leaves, whose degree must stay 1.
    let mut attachable: Vec<usize> = Vec::new();
    let mut cycle_vertices: Vec<Vec<usize>> = Vec::new();

    for j in 0..k {
        let len = cycle_len[j];
        let start = if j == 0 {
            // Root cycle of the block tree.
            let s = next;
            next += len;
            s
        } else {
            // Join to a random earlier spot, directly or via a bridge.
            let parent_cycle = rng.gen_range(0..j);
            let hook = cycle_vertices[parent_cycle][rng.gen_range(0..cycle_len[parent_cycle])];
            let b = bridge_len[j - 1];
            if b == 0 {
                // The new cycle passes through the shared vertex itself.
                let verts: Vec<usize> = std::iter::once(hook)
                    .chain(next..next + len - 1)
                    .collect();
                for w in verts.windows(2) {
                    edges.push((w[0], w[1]));
                }
                edges.push((verts[len - 1], hook));
                attachable.extend(next..next + len - 1);
                cycle_vertices.push(verts);
                next += len - 1;
                continue;
            }
            // Bridge path of b edges from the hook to the new cycle.
            let mut prev = hook;
            for _ in 0..b - 1 {
                edges.push((prev, next));
                attachable.push(next);
                prev = next;
                next += 1;
            }
            edges.push((prev, next));
            let s = next;
            next += len;
            s
        };
        let verts: Vec<usize> = (start..start + len).collect();
        for w in verts.windows(2) {
            edges.push((w[0], w[1]));
        }
        edges.push((verts[len - 1], verts[0]));
        attachable.extend(verts.iter().copied());
        cycle_vertices.push(verts);
    }

    for depth in pendant_depth {
        let mut prev = attachable[rng.gen_range(0..attachable.len())];
        for step in 0..depth {
            edges.push((prev, next));
            if step + 1 < depth {
                attachable.push(next);
            }
            prev = next;
            next += 1;
        }
    }

    debug_assert_eq!(next, n);
    Graph::from_edges(n, &edges)
}

/// Tree with exactly `t` leaves: a spine of n - t vertices with the
/// pendants spread over it, the spine ends always covered.
fn random_caterpillar(n: usize, t: usize, seed: u64) -> Result<Graph> {
    let feasible = match n {
        0 => false,
        1 => t == 0,
        2 => t == 2,
        _ => 2 <= t && t < n,
    };
    if !feasible {
        return Err(Error::Infeasible { n, k: 0, t });
    }
    if n <= 2 {
        return gen_path(n);
    }
    let spine = n - t;
    if spine == 1 {
        return gen_star(t);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<_> = (1..spine).map(|i| (i - 1, i)).collect();
    for i in 0..t {
        let at = match i {
            0 => 0,
            1 => spine - 1,
            _ => rng.gen_range(0..spine),
        };
        edges.push((at, spine + i));
    }
    Graph::from_edges(n, &edges)
}

/// Names one generator call: family, integer parameters, and a seed for
/// the random families. Serializes as
/// `{"family": "...", "params": [...], "seed": ...}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Path,
    Cycle,
    Star,
    RandomTree,
    Wheel,
    B0,
    Bouquet,
    ChainCactus,
    RandomCactus,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::RandomTree => "random-tree",
            Family::Wheel => "wheel",
            Family::B0 => "b0",
            Family::Bouquet => "bouquet",
            Family::ChainCactus => "chain-cactus",
            Family::RandomCactus => "random-cactus",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Some(match name {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "star" => Family::Star,
            "random-tree" => Family::RandomTree,
            "wheel" => Family::Wheel,
            "b0" => Family::B0,
            "bouquet" => Family::Bouquet,
            "chain-cactus" => Family::ChainCactus,
            "random-cactus" => Family::RandomCactus,
            _ => return None,
        })
    }
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<usize>, seed: Option<u64>) -> Self {
        Self {
            family,
            params,
            seed,
        }
    }

    /// Runs the generator this spec names.
    ///
    /// Parameter layout: `path`, `cycle`, `star`, `wheel`, `random-tree`
    /// take one value; `b0` takes (k, p); `random-cactus` takes
    /// (n, k, t); `bouquet` takes the cycle lengths followed by the
    /// pendant count; `chain-cactus` takes r cycle lengths followed by
    /// r - 2 offsets (so an even parameter count).
    pub fn generate(&self) -> Result<Graph> {
        let p = &self.params;
        let arity = |want: usize| -> Result<()> {
            if p.len() == want {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "{} takes {want} parameter(s), got {}",
                    self.family.name(),
                    p.len()
                )))
            }
        };
        let seed = self.seed.unwrap_or(0);
        match self.family {
            Family::Path => {
                arity(1)?;
                gen_path(p[0])
            }
            Family::Cycle => {
                arity(1)?;
                gen_cycle(p[0])
            }
            Family::Star => {
                arity(1)?;
                gen_star(p[0])
            }
            Family::RandomTree => {
                arity(1)?;
                gen_random_tree(p[0], seed)
            }
            Family::Wheel => {
                arity(1)?;
                gen_wheel(p[0])
            }
            Family::B0 => {
                arity(2)?;
                gen_b0(p[0], p[1])
            }
            Family::Bouquet => {
                if p.is_empty() {
                    return Err(Error::InvalidParameter(
                        "bouquet takes cycle lengths then a pendant count".into(),
                    ));
                }
                gen_bouquet(&p[..p.len() - 1], p[p.len() - 1])
            }
            Family::ChainCactus => {
                if p.len() < 2 || !p.len().is_multiple_of(2) {
                    return Err(Error::InvalidParameter(
                        "chain-cactus takes r cycle lengths then r - 2 offsets".into(),
                    ));
                }
                let r = (p.len() + 2) / 2;
                gen_chain_cactus(&p[..r], &p[r..])
            }
            Family::RandomCactus => {
                arity(3)?;
                gen_random_cactus(p[0], p[1], p[2], seed)
            }
        }
    }
}
