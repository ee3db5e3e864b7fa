//! Simple undirected graphs, all-pairs hop distances and geodesic intervals.
//!
//! Vertices are dense 0-based indices; external labels must be resolved at
//! the parsing boundary. Graphs are immutable once built, so they can be
//! shared freely across threads.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hop-count sentinel for pairs in different components. Never exposed:
/// public accessors translate it to `None`.
const UNREACHABLE: u32 = u32::MAX;

/// A finite simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an explicit edge list.
    ///
    /// Endpoints must be `< n`; self-loops and repeated pairs (in either
    /// orientation) are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex { vertex: u, n });
            }
            if v >= n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
            if u == v {
                return Err(Error::NotSimple(format!("self-loop at vertex {u}")));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::NotSimple(format!(
                    "duplicate edge {} {}",
                    key.0, key.1
                )));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            adjacency,
            edge_count: seen.len(),
        })
    }

    /// Parses the edge-list text format.
    ///
    /// The first non-comment, non-empty line is the vertex count; every
    /// following non-empty line is `u v`. Lines starting with `#` are
    /// comments. Both LF and CRLF line endings are accepted.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if n.is_none() {
                let parsed = line.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("expected vertex count, found {line:?}"),
                })?;
                n = Some(parsed);
                continue;
            }
            let mut fields = line.split_whitespace();
            let u = parse_vertex(fields.next(), line_no)?;
            let v = parse_vertex(fields.next(), line_no)?;
            if let Some(extra) = fields.next() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("trailing token {extra:?} after edge"),
                });
            }
            edges.push((u, v));
        }
        let n = n.ok_or(Error::Parse {
            line: text.lines().count() + 1,
            msg: "missing vertex count".into(),
        })?;
        Self::from_edges(n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, list) in self.adjacency.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True iff every vertex is reachable from vertex 0 (vacuously true
    /// for graphs with at most one vertex).
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }

    /// Renders the edge-list text format, inverse of [`Graph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.vertex_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_vertex(field: Option<&str>, line: usize) -> Result<usize> {
    let token = field.ok_or(Error::Parse {
        line,
        msg: "expected two vertex indices".into(),
    })?;
    token.parse::<usize>().map_err(|_| Error::Parse {
        line,
        msg: format!("invalid vertex index {token:?}"),
    })
}

/// All-pairs hop counts, computed by one BFS per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    /// Runs a breadth-first search from every vertex. `O(n (n + m))`.
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut dist = vec![UNREACHABLE; n * n];
        let mut queue = VecDeque::new();
        for src in 0..n {
            let row = &mut dist[src * n..(src + 1) * n];
            row[src] = 0;
            queue.clear();
            queue.push_back(src);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &v in g.neighbors(u) {
                    if row[v] == UNREACHABLE {
                        row[v] = du + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        Self { n, dist }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Hop count between `u` and `v`, or `None` if they are in different
    /// components.
    pub fn distance(&self, u: usize, v: usize) -> Option<u32> {
        match self.dist[u * self.n + v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Raw hop count with the internal sentinel; crate-private fast path.
    #[inline]
    pub(crate) fn raw(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// True iff `m` lies strictly between `a` and `b` on some geodesic,
    /// i.e. `d(a,m) + d(m,b) = d(a,b)` with `m` distinct from both ends.
    #[inline]
    pub fn strictly_between(&self, a: usize, m: usize, b: usize) -> bool {
        if m == a || m == b {
            return false;
        }
        let (am, mb, ab) = (self.raw(a, m), self.raw(m, b), self.raw(a, b));
        if am == UNREACHABLE || mb == UNREACHABLE || ab == UNREACHABLE {
            return false;
        }
        am as u64 + mb as u64 == ab as u64
    }

    /// The geodesic interval: every vertex on at least one shortest
    /// `x,y`-path, endpoints included.
    ///
    /// Membership uses the distance-sum identity
    /// `d(x,u) + d(u,y) = d(x,y)`, which characterizes exactly the
    /// vertices lying on some geodesic.
    pub fn interval(&self, x: usize, y: usize) -> Result<VertexSet> {
        let dxy = self.raw(x, y);
        if dxy == UNREACHABLE {
            return Err(Error::Unreachable(x, y));
        }
        let mut members = BTreeSet::new();
        for u in 0..self.n {
            let (xu, uy) = (self.raw(x, u), self.raw(u, y));
            if xu != UNREACHABLE && uy != UNREACHABLE && xu as u64 + uy as u64 == dxy as u64 {
                members.insert(u);
            }
        }
        Ok(VertexSet(members))
    }
}

/// An ordered set of vertex indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Number of members that fall inside `vertices`.
    pub fn count_in(&self, vertices: &[usize]) -> usize {
        vertices.iter().filter(|v| self.contains(**v)).count()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
