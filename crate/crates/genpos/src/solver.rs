//! General position testing and exact gp-number search.
//!
//! Two independent routes compute the gp-number. [`gp_number_naive`]
//! enumerates vertex subsets by descending size and returns the first one
//! that passes [`is_general_position`]; it is the reference oracle.
//! [`gp_number_exact`] runs a branch-and-bound over vertices with
//! bit-parallel conflict propagation and is the solver used everywhere a
//! graph may exceed the enumeration cap. The two must agree in value on
//! every instance both can handle.

use std::fmt;
use std::time::Instant;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, VertexSet};

/// Default vertex cap for subset enumeration: 2^16 subsets scan in well
/// under a second.
pub const NAIVE_LIMIT_DEFAULT: usize = 16;

/// How a gp value was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Method {
    /// Branch-and-bound search.
    Exact,
    /// Exhaustive subset enumeration.
    NaiveOracle,
    /// A structural closed form, named by the graph class it covers.
    ClosedForm(&'static str),
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Exact => write!(f, "exact"),
            Method::NaiveOracle => write!(f, "naive-oracle"),
            Method::ClosedForm(name) => write!(f, "closed-form:{name}"),
        }
    }
}

impl Serialize for Method {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A gp value together with a witness set that attains it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GpCertificate {
    pub value: usize,
    pub witness: VertexSet,
    pub method: Method,
}

/// One forbidden triple: `middle` lies on a geodesic between the outers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ConflictTriple {
    pub outer_a: usize,
    pub middle: usize,
    pub outer_b: usize,
}

/// True iff no three members of `s` lie on a common geodesic.
///
/// For every triple, each of the three middle assignments is tested with
/// the distance-sum identity; any hit means the triple shares a geodesic.
pub fn is_general_position(d: &DistanceMatrix, s: &VertexSet) -> bool {
    let members = s.as_vec();
    let k = members.len();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                let (x, y, z) = (members[i], members[j], members[l]);
                if d.strictly_between(x, y, z)
                    || d.strictly_between(y, x, z)
                    || d.strictly_between(x, z, y)
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Materializes the forbidden-triple relation: every unordered triple that
/// violates general position, reported once with its middle vertex, sorted
/// by `(outer_a, middle, outer_b)` with `outer_a < outer_b`.
pub fn conflict_triples(d: &DistanceMatrix) -> Vec<ConflictTriple> {
    let n = d.vertex_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for m in 0..n {
                if d.strictly_between(a, m, b) {
                    out.push(ConflictTriple {
                        outer_a: a,
                        middle: m,
                        outer_b: b,
                    });
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Scans `order` and keeps every vertex that leaves the set conflict-free.
/// The result is maximal under inclusion for the given order, not maximum.
///
/// `order` must be a permutation of all vertices.
pub fn greedy_general_position(d: &DistanceMatrix, order: &[usize]) -> VertexSet {
    let n = d.vertex_count();
    assert_eq!(order.len(), n, "order must cover every vertex");
    let mut seen = vec![false; n];
    for &v in order {
        assert!(v < n && !seen[v], "order must be a permutation");
        seen[v] = true;
    }

    let mut chosen: Vec<usize> = Vec::new();
    for &v in order {
        if extends_conflict_free(d, &chosen, v) {
            chosen.push(v);
        }
    }
    chosen.into_iter().collect()
}

/// True iff `chosen ∪ {v}` stays in general position, given that `chosen`
/// already is. Only triples containing `v` need checking.
fn extends_conflict_free(d: &DistanceMatrix, chosen: &[usize], v: usize) -> bool {
    for (i, &a) in chosen.iter().enumerate() {
        for &b in &chosen[i + 1..] {
            if d.strictly_between(a, v, b)
                || d.strictly_between(v, a, b)
                || d.strictly_between(v, b, a)
            {
                return false;
            }
        }
    }
    true
}

/// Exact gp-number by subset enumeration.
///
/// Combinations are visited by descending size, each size in lexicographic
/// order of the vertex list, so the first hit is simultaneously the exact
/// value and the lexicographically least maximum witness.
pub fn gp_number_naive(g: &Graph, limit: usize) -> Result<GpCertificate> {
    gp_number_naive_within(g, limit, None)
}

/// [`gp_number_naive`] with an optional deadline.
pub fn gp_number_naive_within(
    g: &Graph,
    limit: usize,
    deadline: Option<Instant>,
) -> Result<GpCertificate> {
    let n = g.vertex_count();
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    if n == 0 {
        return Ok(GpCertificate {
            value: 0,
            witness: VertexSet::new(),
            method: Method::NaiveOracle,
        });
    }
    let d = DistanceMatrix::new(g);
    for size in (1..=n).rev() {
        let mut found = None;
        for_each_combination(n, size, deadline, |combo| {
            if combo_in_general_position(&d, combo) {
                found = Some(combo.to_vec());
                false
            } else {
                true
            }
        })?;
        if let Some(witness) = found {
            return Ok(GpCertificate {
                value: size,
                witness: witness.into_iter().collect(),
                method: Method::NaiveOracle,
            });
        }
    }
    unreachable!("every single vertex is a general position set")
}

/// Enumerates every maximum general position set of `g`.
///
/// Returns the gp value and all witnesses of that size, in lexicographic
/// order. Needed by audits that quantify over all gp-sets.
pub fn all_maximum_gp_sets(g: &Graph, limit: usize) -> Result<(usize, Vec<VertexSet>)> {
    all_maximum_gp_sets_within(g, limit, None)
}

/// [`all_maximum_gp_sets`] with an optional deadline.
pub fn all_maximum_gp_sets_within(
    g: &Graph,
    limit: usize,
    deadline: Option<Instant>,
) -> Result<(usize, Vec<VertexSet>)> {
    let best = gp_number_naive_within(g, limit, deadline)?;
    if best.value == 0 {
        return Ok((0, vec![VertexSet::new()]));
    }
    let d = DistanceMatrix::new(g);
    let mut sets = Vec::new();
    for_each_combination(g.vertex_count(), best.value, deadline, |combo| {
        if combo_in_general_position(&d, combo) {
            sets.push(combo.iter().copied().collect());
        }
        true
    })?;
    Ok((best.value, sets))
}

fn combo_in_general_position(d: &DistanceMatrix, combo: &[usize]) -> bool {
    let k = combo.len();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                let (x, y, z) = (combo[i], combo[j], combo[l]);
                if d.strictly_between(x, y, z)
                    || d.strictly_between(y, x, z)
                    || d.strictly_between(x, z, y)
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Visits all `size`-combinations of `0..n` in lexicographic order. The
/// callback returns `false` to stop early. The deadline is polled every
/// few thousand combinations.
fn for_each_combination(
    n: usize,
    size: usize,
    deadline: Option<Instant>,
    mut visit: impl FnMut(&[usize]) -> bool,
) -> Result<()> {
    debug_assert!(size >= 1 && size <= n);
    let mut combo: Vec<usize> = (0..size).collect();
    let mut ticks = 0u32;
    loop {
        if ticks & 0xfff == 0 {
            check_deadline(deadline)?;
        }
        ticks += 1;
        if !visit(&combo) {
            return Ok(());
        }
        // Advance to the next combination.
        let mut i = size;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if combo[i] < n - size + i {
                combo[i] += 1;
                for j in i + 1..size {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[inline]
fn check_deadline(deadline: Option<Instant>) -> Result<()> {
    if let Some(d) = deadline {
        if Instant::now() >= d {
            return Err(Error::Timeout);
        }
    }
    Ok(())
}

/// Knobs for the branch-and-bound search.
#[derive(Debug, Clone, Default)]
pub struct ExactOptions {
    /// Abort with [`Error::Timeout`] once this instant passes.
    pub deadline: Option<Instant>,
    /// Tighten the node bound with a greedy clique cover of the pairwise
    /// conflict graph. Pays off only on dense instances; off by default.
    pub clique_cover_bound: bool,
}

/// Exact gp-number by branch-and-bound. No vertex cap.
pub fn gp_number_exact(g: &Graph) -> GpCertificate {
    gp_number_exact_with(g, &ExactOptions::default())
        .expect("search without a deadline cannot time out")
}

/// [`gp_number_exact`] with a deadline and bound options.
///
/// Vertices are branched on by descending degree (ties by index):
/// high-degree vertices sit on many geodesics, so deciding them early
/// prunes fastest. The candidate set is maintained bit-parallel from
/// precomputed betweenness tables, making each node O(n) words.
pub fn gp_number_exact_with(g: &Graph, opts: &ExactOptions) -> Result<GpCertificate> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(GpCertificate {
            value: 0,
            witness: VertexSet::new(),
            method: Method::Exact,
        });
    }
    let d = DistanceMatrix::new(g);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    // A maximal set from the greedy pass seeds the incumbent.
    let seed = greedy_general_position(&d, &order);

    let tables = ConflictTables::new(&d);
    let mut search = Search {
        tables: &tables,
        order: &order,
        best: seed.len(),
        best_witness: seed.as_vec(),
        chosen: Vec::with_capacity(n),
        nodes: 0,
        deadline: opts.deadline,
        clique_cover: opts.clique_cover_bound,
    };
    let everyone = Bits::full(n);
    search.run(0, everyone, 0)?;

    Ok(GpCertificate {
        value: search.best,
        witness: search.best_witness.into_iter().collect(),
        method: Method::Exact,
    })
}

/// Betweenness tables over all vertex pairs.
///
/// `middle[a*n + b]` holds every vertex strictly between `a` and `b`;
/// `outer[m*n + b]` holds every `u` with `m` strictly between `u` and `b`.
/// Together they answer all three orientations of a triple containing a
/// fixed vertex with word operations.
struct ConflictTables {
    n: usize,
    middle: Vec<Bits>,
    outer: Vec<Bits>,
}

impl ConflictTables {
    fn new(d: &DistanceMatrix) -> Self {
        let n = d.vertex_count();
        let mut middle = vec![Bits::empty(n); n * n];
        let mut outer = vec![Bits::empty(n); n * n];
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                for m in 0..n {
                    if d.strictly_between(a, m, b) {
                        middle[a * n + b].set(m);
                        outer[m * n + b].set(a);
                    }
                }
            }
        }
        Self { n, middle, outer }
    }

    #[inline]
    fn middle(&self, a: usize, b: usize) -> &Bits {
        &self.middle[a * self.n + b]
    }

    #[inline]
    fn outer(&self, m: usize, b: usize) -> &Bits {
        &self.outer[m * self.n + b]
    }
}

struct Search<'a> {
    tables: &'a ConflictTables,
    order: &'a [usize],
    best: usize,
    best_witness: Vec<usize>,
    chosen: Vec<usize>,
    nodes: u64,
    deadline: Option<Instant>,
    clique_cover: bool,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, mut cand: Bits, size: usize) -> Result<()> {
        if self.nodes & 0x3ff == 0 {
            check_deadline(self.deadline)?;
        }
        self.nodes += 1;
        if size + cand.count() <= self.best {
            return Ok(());
        }
        if self.clique_cover && size + self.clique_cover_bound(&cand) <= self.best {
            return Ok(());
        }
        let Some(&v) = self.order.get(pos) else {
            return Ok(());
        };
        if !cand.test(v) {
            return self.run(pos + 1, cand, size);
        }

        // Include v: drop every candidate that now conflicts through it.
        let mut included = cand.clone();
        included.clear(v);
        for &a in &self.chosen {
            included.and_not(self.tables.middle(v, a));
            included.and_not(self.tables.outer(v, a));
            included.and_not(self.tables.outer(a, v));
        }
        self.chosen.push(v);
        if size + 1 > self.best {
            self.best = size + 1;
            self.best_witness = self.chosen.clone();
        }
        self.run(pos + 1, included, size + 1)?;
        self.chosen.pop();

        // Exclude v.
        cand.clear(v);
        self.run(pos + 1, cand, size)
    }

    /// Partitions the candidates into pairwise-conflicting cliques; any
    /// feasible extension takes at most one vertex per clique.
    fn clique_cover_bound(&self, cand: &Bits) -> usize {
        let mut cliques: Vec<Vec<usize>> = Vec::new();
        'next: for u in cand.iter_ones() {
            'clique: for clique in &mut cliques {
                for &w in clique.iter() {
                    if !self.pairwise_conflict(u, w) {
                        continue 'clique;
                    }
                }
                clique.push(u);
                continue 'next;
            }
            cliques.push(vec![u]);
        }
        cliques.len()
    }

    /// True iff adding both `u` and `w` to the current set must fail.
    fn pairwise_conflict(&self, u: usize, w: usize) -> bool {
        for &a in &self.chosen {
            if self.tables.middle(w, a).test(u)
                || self.tables.middle(u, a).test(w)
                || self.tables.middle(u, w).test(a)
            {
                return true;
            }
        }
        false
    }
}

/// Plain bitset over a fixed vertex universe.
#[derive(Clone, PartialEq, Eq)]
struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn empty(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
        }
    }

    fn full(len: usize) -> Self {
        let mut b = Self::empty(len);
        for i in 0..len {
            b.set(i);
        }
        b
    }

    #[inline]
    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    fn clear(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    fn test(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn and_not(&mut self, other: &Bits) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
    }

    fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + bit)
            })
        })
    }
}
