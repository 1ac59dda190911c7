//! Simple undirected graphs on at most 63 vertices with bit-mask adjacency.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Largest supported vertex count; every vertex set fits in one `u64`.
pub const MAX_VERTICES: usize = 63;

/// A set of vertices of some graph, stored as a bit mask over `0..n`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", from = "Vec<usize>")]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet(full_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the sorted member lists.
    pub fn lex_cmp(self, other: Self) -> std::cmp::Ordering {
        lex_cmp_masks(self.0, other.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Self {
        s.to_vec()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over the members of a mask in increasing order.
#[derive(Clone)]
pub struct Members(pub(crate) u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Members {}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Lexicographic order of sorted member lists. Below the lowest bit of the
/// symmetric difference both lists agree; the list holding that bit is
/// smaller unless the other list has already ended.
pub(crate) fn lex_cmp_masks(a: u64, b: u64) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let low = diff & diff.wrapping_neg();
    let at_or_above = !(low - 1);
    let (holder, other) = if a & low != 0 { (Ordering::Less, b) } else { (Ordering::Greater, a) };
    if other & at_or_above == 0 {
        holder.reverse()
    } else {
        holder
    }
}

/// Iterates all `k`-subsets of `0..n` as masks in increasing numeric order.
pub(crate) fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if n >= 64 { u64::MAX } else { 1u64 << n };
    let mut cur = if k == 0 {
        Some(0u64)
    } else if k > n {
        None
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let out = cur?;
        cur = if out == 0 {
            None
        } else {
            // Gosper's hack
            let c = out & out.wrapping_neg();
            let r = out.wrapping_add(c);
            let next = (((r ^ out) >> 2) / c) | r;
            (r != 0 && next < limit).then_some(next)
        };
        Some(out)
    })
}

/// Iterates all submasks of `mask`, including `mask` itself and zero.
pub(crate) fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut cur = Some(mask);
    std::iter::from_fn(move || {
        let out = cur?;
        cur = (out != 0).then(|| (out - 1) & mask);
        Some(out)
    })
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Simple undirected graph. Vertices are `0..n`; `adj[v]` is the open
/// neighbourhood of `v` as a bit mask.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from unordered pairs. Loops and repeated pairs are
    /// rejected rather than ignored.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// Rebuilds a graph from raw adjacency masks, checking symmetry and
    /// irreflexivity.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let all = full_mask(n);
        for (v, &a) in adj.iter().enumerate() {
            if a & !all != 0 {
                return Err(GraphError::VertexOutOfRange { vertex: 63 - (a.leading_zeros() as usize), n });
            }
            if a >> v & 1 == 1 {
                return Err(GraphError::Loop(v));
            }
            for u in Members(a) {
                if adj[u] >> v & 1 == 0 {
                    return Err(GraphError::Asymmetric(v, u));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub(crate) fn all(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Open neighbourhood N(v).
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighbourhood N[v].
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    pub(crate) fn adj(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn closed(&self, v: usize) -> u64 {
        self.adj[v] | 1 << v
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// N[X] for a mask X.
    pub(crate) fn closed_of(&self, set: u64) -> u64 {
        Members(set).fold(set, |acc, v| acc | self.adj[v])
    }

    /// N(X) in the sense of vertices adjacent to some member of X.
    pub(crate) fn open_of(&self, set: u64) -> u64 {
        Members(set).fold(0, |acc, v| acc | self.adj[v])
    }

    /// N[X] for a vertex set.
    pub fn closed_neighborhood_of(&self, set: VertexSet) -> VertexSet {
        VertexSet(self.closed_of(set.0))
    }

    /// Vertices not dominated by `v`, i.e. the complement of N[v].
    pub fn non_dominated_by(&self, v: usize) -> VertexSet {
        VertexSet(self.all() & !self.closed(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in Members(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn is_dominating(&self, set: VertexSet) -> bool {
        self.closed_of(set.0) == self.all()
    }

    /// True when the members of `set` are pairwise adjacent.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        Members(set.0).all(|v| set.0 & !(1 << v) & !self.adj[v] == 0)
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        Members(set.0).all(|v| self.adj[v] & set.0 == 0)
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    /// Connected component containing `v`, restricted to `within`.
    pub(crate) fn component_within(&self, v: usize, within: u64) -> u64 {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let next = self.open_of(frontier) & within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether the subgraph induced by `set` is connected (the empty set is not).
    pub(crate) fn induces_connected(&self, set: u64) -> bool {
        if set == 0 {
            return false;
        }
        self.component_within(set.trailing_zeros() as usize, set) == set
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.induces_connected(self.all())
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.all();
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.component_within(rest.trailing_zeros() as usize, rest);
            out.push(VertexSet(c));
            rest &= !c;
        }
        out
    }

    /// Subgraph induced by `set`, relabelled to `0..|set|` preserving order.
    pub fn induced_subgraph(&self, set: VertexSet) -> Graph {
        let verts = set.to_vec();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| Members(self.adj[v] & set.0).fold(0u64, |acc, u| acc | 1 << pos[u]))
            .collect();
        Graph { n: verts.len(), adj }
    }

    /// Two-colouring `(side0, side1)` if the graph is bipartite; the
    /// smallest vertex of every component lands in `side0`.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side = [u8::MAX; 64];
        let (mut a, mut b) = (0u64, 0u64);
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            a |= 1 << start;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in Members(self.adj[v]) {
                    if side[u] == u8::MAX {
                        side[u] = 1 - side[v];
                        if side[u] == 0 {
                            a |= 1 << u;
                        } else {
                            b |= 1 << u;
                        }
                        stack.push(u);
                    } else if side[u] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some((VertexSet(a), VertexSet(b)))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_triangle_free(&self) -> bool {
        (0..self.n).all(|u| Members(self.adj[u] >> u >> 1).all(|d| {
            let v = u + 1 + d;
            self.adj[u] & self.adj[v] == 0
        }))
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }

    pub fn complement(&self) -> Graph {
        let all = self.all();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// Copy with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            adj[perm[v]] = Members(self.adj[v]).fold(0, |acc, u| acc | 1 << perm[u]);
        }
        Graph { n: self.n, adj }
    }

    /// Disjoint union, vertices of `other` shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&a| a << self.n));
        Ok(Graph { n, adj })
    }

    /// Checks the structural invariants; used by tests and the decoders.
    pub fn validate(&self) -> Result<(), GraphError> {
        Graph::from_adjacency(self.adj.clone()).map(|_| ())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Cartesian product G □ H; vertex (a, x) gets index `a * |H| + x`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let n = g.n * h.n;
    let mut out = Graph::empty(n)?;
    for a in 0..g.n {
        for x in 0..h.n {
            let v = a * h.n + x;
            for y in Members(h.adj[x]) {
                out.adj[v] |= 1 << (a * h.n + y);
            }
            for b in Members(g.adj[a]) {
                out.adj[v] |= 1 << (b * h.n + x);
            }
        }
    }
    Ok(out)
}

/// Corona G ∘ K1: vertex `v + n` is a new pendant leaf on `v`.
pub fn corona(g: &Graph) -> Result<Graph, GraphError> {
    let n = g.n;
    let mut out = Graph::empty(2 * n)?;
    out.adj[..n].copy_from_slice(&g.adj);
    for v in 0..n {
        out.add_edge_unchecked(v, v + n);
    }
    Ok(out)
}
