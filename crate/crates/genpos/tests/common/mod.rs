//! Test-side oracles, deliberately written against different algorithms
//! than the library: distances by Floyd-Warshall instead of BFS,
//! interval membership by enumerating the shortest paths themselves
//! instead of the distance identity, gp by a full subset scan, and
//! cut-path distance by scanning covering arcs instead of the max-gap
//! formula.

#![allow(dead_code)]
// Index-based loops stay: the dynamic programs below read as matrix
// arithmetic, and iterator rewrites would obscure the recurrences.
#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;

use genpos::Graph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// All-pairs distances by Floyd-Warshall.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.vertex_count();
    let mut d = vec![vec![None; n]; n];
    for v in 0..n {
        d[v][v] = Some(0);
        for &w in g.neighbors(v) {
            d[v][w] = Some(1);
        }
    }
    for m in 0..n {
        for u in 0..n {
            for v in 0..n {
                if let (Some(a), Some(b)) = (d[u][m], d[m][v]) {
                    if d[u][v].is_none_or(|cur| a + b < cur) {
                        d[u][v] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Vertices on at least one shortest x-y path, found by depth-first
/// enumeration of the paths. Returns None when y is unreachable.
pub fn interval_by_paths(
    g: &Graph,
    dist: &[Vec<Option<usize>>],
    x: usize,
    y: usize,
) -> Option<BTreeSet<usize>> {
    let target = dist[x][y]?;
    let mut members = BTreeSet::new();
    let mut path = vec![x];
    let mut on_path = vec![false; g.vertex_count()];
    on_path[x] = true;
    walk(g, dist, y, target, &mut path, &mut on_path, &mut members);
    Some(members)
}

fn walk(
    g: &Graph,
    dist: &[Vec<Option<usize>>],
    y: usize,
    target: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    members: &mut BTreeSet<usize>,
) {
    let v = *path.last().unwrap();
    if v == y {
        if path.len() == target + 1 {
            members.extend(path.iter().copied());
        }
        return;
    }
    let used = path.len() - 1;
    for &w in g.neighbors(v) {
        if on_path[w] {
            continue;
        }
        // Only extensions that can still finish a shortest path.
        if dist[w][y].is_none_or(|rest| used + 1 + rest > target) {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        walk(g, dist, y, target, path, on_path, members);
        path.pop();
        on_path[w] = false;
    }
}

/// Betweenness table from path enumeration: `between[m][x][y]` says
/// whether m is an inner vertex of some shortest x-y path.
pub fn betweenness_by_paths(g: &Graph) -> Vec<Vec<Vec<bool>>> {
    let n = g.vertex_count();
    let dist = floyd_warshall(g);
    let mut between = vec![vec![vec![false; n]; n]; n];
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            if let Some(members) = interval_by_paths(g, &dist, x, y) {
                for m in members {
                    if m != x && m != y {
                        between[m][x][y] = true;
                    }
                }
            }
        }
    }
    between
}

/// gp value plus every maximum set, by scanning all 2^n subsets against
/// the path-enumeration betweenness table. Only sensible for n <= 12.
pub fn gp_by_subset_scan(g: &Graph) -> (usize, Vec<Vec<usize>>) {
    let n = g.vertex_count();
    assert!(n <= 12, "subset scan oracle is for small graphs");
    let between = betweenness_by_paths(g);
    let mut best = 0usize;
    let mut sets: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        if members.len() < best {
            continue;
        }
        let mut ok = true;
        'outer: for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                for &m in &members {
                    if m != a && m != b && between[m][a][b] {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        if !ok {
            continue;
        }
        if members.len() > best {
            best = members.len();
            sets.clear();
        }
        sets.push(members);
    }
    (best, sets)
}

/// Cut-path distance by its covering-arc description: the shortest arc
/// between two cut positions that contains every cut position. `cuts`
/// are positions on a cycle of length `len`. None when fewer than two.
pub fn dc_by_arc_scan(len: usize, cuts: &[usize]) -> Option<usize> {
    if cuts.len() < 2 {
        return None;
    }
    let mut best: Option<usize> = None;
    for &start in cuts {
        for &end in cuts {
            if start == end {
                continue;
            }
            let arc = (end + len - start) % len;
            let covers = cuts
                .iter()
                .all(|&c| (c + len - start) % len <= arc);
            if covers && best.is_none_or(|b| arc < b) {
                best = Some(arc);
            }
        }
    }
    best
}

/// Connected G(n, p) by rejection, deterministic in the rng state.
pub fn random_connected_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    assert!(n >= 1);
    loop {
        let p = rng.gen_range(0.2..0.7_f64);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Degree-one vertices, the quantity the tree closed form counts.
pub fn leaf_count(g: &Graph) -> usize {
    (0..g.vertex_count()).filter(|&v| g.degree(v) == 1).count()
}
