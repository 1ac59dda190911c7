//! Exact classical parameters: domination, independence, clique cover,
//! connected domination, vertex cover and matching, private neighbourhoods.
//!
//! Every solver returns a witness. Vertex-set witnesses are the
//! lexicographically smallest optimum (sorted member lists compared
//! element by element).

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{GraphError, SolveError};
use crate::graph::{full_mask, lex_cmp_masks, Graph, Members, VertexSet};

/// Vertices `>= v` as a mask.
#[inline]
fn from(v: usize) -> u64 {
    if v >= 64 {
        0
    } else {
        !((1u64 << v) - 1)
    }
}

/// Depth-first search over vertex subsets in lexicographic preorder,
/// looking for a dominating set with at most `budget` extra vertices.
struct DomSearch<'a> {
    g: &'a Graph,
    all: u64,
    available: u64,
}

impl DomSearch<'_> {
    fn run(&self, start: usize, chosen: u64, dominated: u64, budget: usize) -> Option<u64> {
        let undominated = self.all & !dominated;
        if undominated == 0 {
            return Some(chosen);
        }
        if budget == 0 {
            return None;
        }
        let cands = self.available & from(start);
        if Members(undominated).any(|u| self.g.closed(u) & cands == 0) {
            return None;
        }
        let best_gain = Members(cands).map(|v| (self.g.closed(v) & undominated).count_ones()).max().unwrap_or(0);
        if (best_gain as usize) * budget < undominated.count_ones() as usize {
            return None;
        }
        Members(cands).find_map(|v| self.run(v + 1, chosen | 1 << v, dominated | self.g.closed(v), budget - 1))
    }
}

/// Lexicographically smallest dominating set of size at most `k`
/// containing `forced`, if any.
fn dominating_within(g: &Graph, k: usize, forced: u64) -> Option<u64> {
    let all = full_mask(g.n());
    let used = forced.count_ones() as usize;
    if used > k {
        return None;
    }
    let search = DomSearch { g, all, available: all & !forced };
    search.run(0, forced, g.closed_of(forced), k - used)
}

pub fn is_dominating_mask(g: &Graph, set: u64) -> bool {
    g.closed_of(set) == g.all()
}

/// γ(G) with its lexicographically smallest minimum dominating set.
pub fn domination_number(g: &Graph) -> (usize, VertexSet) {
    for k in 0..=g.n() {
        if let Some(d) = dominating_within(g, k, 0) {
            return (k, VertexSet(d));
        }
    }
    unreachable!("V dominates itself")
}

/// Whether some dominating set of size at most `k` exists.
pub fn has_dominating_set_of_size(g: &Graph, k: usize) -> bool {
    dominating_within(g, k, 0).is_some()
}

/// For each vertex, whether it lies in a dominating set of size `k`.
/// Returns the overall flag and the vertices that fail.
pub fn every_vertex_in_k_dominating_set(g: &Graph, k: usize) -> (bool, VertexSet) {
    let k = k.min(g.n());
    let mut uncovered = 0u64;
    let mut known = 0u64;
    for v in 0..g.n() {
        if known >> v & 1 == 1 {
            continue;
        }
        // any set found also certifies its other members; padding to size
        // exactly k is always possible since k <= n
        match dominating_within(g, k, 1 << v) {
            Some(d) => known |= d,
            None => uncovered |= 1 << v,
        }
    }
    (uncovered == 0, VertexSet(uncovered))
}

/// Lexicographically smallest connected set of `k` vertices inside `part`
/// dominating `part`. Connected sets are grown from their smallest vertex
/// through an extension set, so each is generated exactly once.
fn connected_dominating_within(g: &Graph, part: u64, k: usize) -> Option<u64> {
    struct Grow<'a> {
        g: &'a Graph,
        part: u64,
        k: usize,
        max_gain: usize,
        best: Option<u64>,
    }
    impl Grow<'_> {
        fn extend(&mut self, set: u64, frontier: u64, ext: u64, root: usize) {
            let size = set.count_ones() as usize;
            let undominated = (self.part & !self.g.closed_of(set)).count_ones() as usize;
            if size == self.k {
                if undominated == 0 && self.best.is_none_or(|b| lex_cmp_masks(set, b).is_lt()) {
                    self.best = Some(set);
                }
                return;
            }
            if undominated > (self.k - size) * self.max_gain {
                return;
            }
            let mut ext = ext;
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                let fresh = self.g.adj(w) & self.part & !frontier & from(root + 1);
                self.extend(set | 1 << w, frontier | fresh, ext | fresh, root);
            }
        }
    }
    let max_gain = Members(part).map(|v| (g.closed(v) & part).count_ones() as usize).max()?;
    let mut grow = Grow { g, part, k, max_gain, best: None };
    for v in Members(part) {
        let ext = g.adj(v) & part & from(v + 1);
        grow.extend(1 << v, g.closed(v) & part, ext, v);
    }
    grow.best
}

fn connected_domination_in(g: &Graph, part: u64) -> (usize, u64) {
    (1..=part.count_ones() as usize)
        .find_map(|k| connected_dominating_within(g, part, k).map(|d| (k, d)))
        .expect("a connected set dominates itself")
}

/// γc of the subgraph induced by a connected mask `s`.
pub(crate) fn connected_domination_of(g: &Graph, s: u64) -> usize {
    connected_domination_in(g, s).0
}

/// γc(G) and a lexicographically smallest minimum connected dominating set.
pub fn connected_domination_number(g: &Graph) -> Result<(usize, VertexSet), SolveError> {
    if !g.is_connected() || g.n() == 0 {
        return Err(SolveError::hypothesis("connected domination number needs a connected graph"));
    }
    let (k, d) = connected_domination_in(g, g.all());
    Ok((k, VertexSet(d)))
}

fn mis_size(g: &Graph, cand: u64) -> usize {
    if cand == 0 {
        return 0;
    }
    // vertices of degree <= 1 inside cand are always safe to take
    for v in Members(cand) {
        if (g.adj(v) & cand).count_ones() <= 1 {
            return 1 + mis_size(g, cand & !g.closed(v));
        }
    }
    let pivot = Members(cand).max_by_key(|&v| (g.adj(v) & cand).count_ones()).unwrap();
    let with = 1 + mis_size(g, cand & !g.closed(pivot));
    let without = mis_size(g, cand & !(1 << pivot));
    with.max(without)
}

fn independent_sets_of_size(g: &Graph, target: usize, first_only: bool) -> Vec<u64> {
    fn go(g: &Graph, cand: u64, chosen: u64, need: usize, first_only: bool, out: &mut Vec<u64>) -> bool {
        if need == 0 {
            out.push(chosen);
            return first_only;
        }
        if (cand.count_ones() as usize) < need {
            return false;
        }
        for v in Members(cand) {
            let rest = cand & !g.closed(v) & from(v + 1);
            if go(g, rest, chosen | 1 << v, need - 1, first_only, out) {
                return true;
            }
        }
        false
    }
    let mut out = Vec::new();
    go(g, g.all(), 0, target, first_only, &mut out);
    out
}

/// α(G) with its lexicographically smallest maximum independent set.
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    let alpha = mis_size(g, g.all());
    let witness = independent_sets_of_size(g, alpha, true).pop().unwrap_or(0);
    (alpha, VertexSet(witness))
}

/// Every maximum independent set, in lexicographic order.
pub fn maximum_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let alpha = mis_size(g, g.all());
    independent_sets_of_size(g, alpha, false).into_iter().map(VertexSet).collect()
}

/// Exact minimum clique partition of the vertices in `comp` by branch and
/// bound on colourings of the complement, with α as the lower bound.
fn clique_partition_of(g: &Graph, comp: u64) -> Vec<u64> {
    struct Bnb<'a> {
        g: &'a Graph,
        lower: usize,
        best: Vec<u64>,
    }
    impl Bnb<'_> {
        fn go(&mut self, uncoloured: u64, classes: &mut Vec<u64>) -> bool {
            if classes.len() >= self.best.len() {
                return false;
            }
            if uncoloured == 0 {
                self.best = classes.clone();
                return self.best.len() <= self.lower;
            }
            // most constrained vertex: fewest classes it may join
            let (v, joinable) = Members(uncoloured)
                .map(|v| {
                    let ok = classes
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| **c & !self.g.adj(v) == 0)
                        .fold(0u64, |acc, (i, _)| acc | 1 << i);
                    (v, ok)
                })
                .min_by_key(|&(v, ok)| (ok.count_ones(), v))
                .unwrap();
            for i in Members(joinable) {
                classes[i] |= 1 << v;
                let done = self.go(uncoloured & !(1 << v), classes);
                classes[i] &= !(1 << v);
                if done {
                    return true;
                }
            }
            classes.push(1 << v);
            let done = self.go(uncoloured & !(1 << v), classes);
            classes.pop();
            done
        }
    }
    if comp == 0 {
        return Vec::new();
    }
    let sub = g.induced_subgraph(VertexSet(comp));
    let lower = mis_size(&sub, sub.all());
    // initial upper bound: singletons; the search only records strict improvements
    let mut bnb = Bnb { g, lower, best: Members(comp).map(|v| 1u64 << v).collect() };
    if bnb.best.len() > lower {
        bnb.go(comp, &mut Vec::new());
    }
    bnb.best
}

/// θ(G) with a minimum partition into cliques (parts sorted by smallest
/// member). Components are solved independently.
pub fn clique_cover_number(g: &Graph) -> (usize, Vec<VertexSet>) {
    let mut parts: Vec<u64> = g.components().into_iter().flat_map(|c| clique_partition_of(g, c.bits())).collect();
    parts.sort_by_key(|p| p.trailing_zeros());
    (parts.len(), parts.into_iter().map(VertexSet).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverMatching {
    /// τ(G), size of a smallest vertex cover.
    pub tau: usize,
    /// ν(G), size of a maximum matching.
    pub nu: usize,
    pub matching: Vec<(usize, usize)>,
    pub cover: VertexSet,
}

/// Maximum matching of a bipartite graph by augmenting paths, with `left`
/// as one side. Returns `mate` for every vertex.
pub(crate) fn bipartite_matching(g: &Graph, left: u64) -> Vec<Option<usize>> {
    fn augment(g: &Graph, u: usize, seen: &mut u64, mate: &mut [Option<usize>]) -> bool {
        for w in Members(g.adj(u) & !*seen) {
            *seen |= 1 << w;
            if mate[w].is_none_or(|x| augment(g, x, seen, mate)) {
                mate[w] = Some(u);
                mate[u] = Some(w);
                return true;
            }
        }
        false
    }
    let mut mate = vec![None; g.n()];
    for u in Members(left) {
        let mut seen = 0u64;
        augment(g, u, &mut seen, &mut mate);
    }
    mate
}

/// König: from a maximum matching, the cover is (L - Z) ∪ (R ∩ Z) where Z
/// is reachable from unmatched left vertices along alternating paths.
pub(crate) fn konig_cover(g: &Graph, left: u64, mate: &[Option<usize>]) -> u64 {
    let mut z = Members(left).filter(|&u| mate[u].is_none()).fold(0u64, |a, u| a | 1 << u);
    let mut frontier = z;
    while frontier != 0 {
        let mut next = 0u64;
        for u in Members(frontier & left) {
            for w in Members(g.adj(u) & !z) {
                next |= 1 << w;
                if let Some(x) = mate[w] {
                    next |= 1 << x;
                }
            }
        }
        next &= !z;
        z |= next;
        frontier = next;
    }
    (left & !z) | (!left & g.all() & z)
}

const MATCHING_DP_MAX: usize = 26;

fn matching_dp(g: &Graph) -> Vec<(usize, usize)> {
    fn best(g: &Graph, mask: u64, memo: &mut HashMap<u64, u8>) -> u8 {
        if mask.count_ones() < 2 {
            return 0;
        }
        if let Some(&b) = memo.get(&mask) {
            return b;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut b = best(g, rest, memo);
        for u in Members(g.adj(v) & rest) {
            b = b.max(1 + best(g, rest & !(1 << u), memo));
        }
        memo.insert(mask, b);
        b
    }
    let mut memo = HashMap::new();
    let mut mask = g.all();
    let mut out = Vec::new();
    while mask.count_ones() >= 2 {
        let target = best(g, mask, &mut memo);
        if target == 0 {
            break;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        match Members(g.adj(v) & rest).find(|&u| 1 + best(g, rest & !(1 << u), &mut memo) == target) {
            Some(u) => {
                out.push((v, u));
                mask = rest & !(1 << u);
            }
            None => mask = rest,
        }
    }
    out
}

/// τ(G), ν(G), a maximum matching and a minimum vertex cover. For bipartite
/// graphs the cover is the König cover built from the matching; otherwise
/// it is the complement of the lexicographically smallest maximum
/// independent set.
pub fn vertex_cover_and_matching(g: &Graph) -> Result<CoverMatching, SolveError> {
    if let Some((left, _)) = g.bipartition() {
        let mate = bipartite_matching(g, left.bits());
        let cover = konig_cover(g, left.bits(), &mate);
        let matching: Vec<(usize, usize)> =
            Members(left.bits()).filter_map(|u| mate[u].map(|w| (u.min(w), u.max(w)))).collect();
        return Ok(CoverMatching { tau: cover.count_ones() as usize, nu: matching.len(), matching, cover: VertexSet(cover) });
    }
    if g.n() > MATCHING_DP_MAX {
        return Err(GraphError::SizeLimit { what: "matching of a non-bipartite graph", max: MATCHING_DP_MAX, n: g.n() }.into());
    }
    let mut matching = matching_dp(g);
    matching.sort_unstable();
    let (alpha, indep) = independence_number(g);
    let cover = g.all() & !indep.bits();
    Ok(CoverMatching { tau: g.n() - alpha, nu: matching.len(), matching, cover: VertexSet(cover) })
}

/// Matching number ν(G).
pub fn matching_number(g: &Graph) -> Result<usize, SolveError> {
    vertex_cover_and_matching(g).map(|cm| cm.nu)
}

/// pn(v, D) = N[v] - N[D - {v}] and epn(v, D) = pn(v, D) - {v}.
pub fn private_neighbors(g: &Graph, d: VertexSet, v: usize) -> Result<(VertexSet, VertexSet), SolveError> {
    if !d.contains(v) {
        return Err(SolveError::hypothesis(format!("vertex {v} is not in {d}")));
    }
    let (pn, epn) = private_masks(g, d.bits(), v);
    Ok((VertexSet(pn), VertexSet(epn)))
}

pub(crate) fn private_masks(g: &Graph, d: u64, v: usize) -> (u64, u64) {
    let others = g.closed_of(d & !(1 << v));
    let pn = g.closed(v) & !others;
    (pn, pn & !(1 << v))
}

/// Summary of all parameters of one graph, as emitted by sweeps and the CLI.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ParamReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    /// graph6 of the canonical relabelling, when the graph is small enough to canonise
    pub canonical: Option<String>,
    pub gamma: Option<usize>,
    pub gamma_witness: Option<VertexSet>,
    pub alpha: Option<usize>,
    pub alpha_witness: Option<VertexSet>,
    pub theta: Option<usize>,
    pub theta_witness: Option<Vec<VertexSet>>,
    pub tau: Option<usize>,
    pub nu: Option<usize>,
    pub gamma_c: Option<usize>,
    pub gamma_c_witness: Option<VertexSet>,
    pub gamma_inf: Option<usize>,
    pub gamma_inf_witness: Option<VertexSet>,
    pub gamma_m_inf: Option<usize>,
    pub gamma_m_inf_witness: Option<VertexSet>,
    pub theta_c: Option<usize>,
    pub theta_c_witness: Option<Vec<(VertexSet, usize)>>,
    /// solver failures, one per parameter that could not be computed
    pub errors: Vec<String>,
}

impl ParamReport {
    /// γ ≤ γm∞ ≤ α ≤ γ∞ ≤ θ over whichever values are present.
    pub fn chain_holds(&self) -> bool {
        let chain = [self.gamma, self.gamma_m_inf, self.alpha, self.gamma_inf, self.theta];
        let present: Vec<usize> = chain.into_iter().flatten().collect();
        present.windows(2).all(|w| w[0] <= w[1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    /// Brute force over all subsets; independent of the searches above.
    fn brute_gamma(g: &Graph) -> usize {
        (0..1u64 << g.n()).filter(|&s| is_dominating_mask(g, s)).map(|s| s.count_ones() as usize).min().unwrap()
    }

    fn brute_alpha(g: &Graph) -> usize {
        (0..1u64 << g.n())
            .filter(|&s| g.is_independent(VertexSet(s)))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    fn brute_gamma_c(g: &Graph) -> usize {
        (1..1u64 << g.n())
            .filter(|&s| is_dominating_mask(g, s) && g.induces_connected(s))
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap()
    }

    fn brute_nu(g: &Graph) -> usize {
        let edges = g.edges();
        (0..1u64 << edges.len())
            .filter(|&sel| {
                let mut used = 0u64;
                Members(sel).all(|i| {
                    let (u, v) = edges[i];
                    let ok = used & (1 << u | 1 << v) == 0;
                    used |= 1 << u | 1 << v;
                    ok
                })
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn domination_examples() {
        assert_eq!(domination_number(&complete(5).unwrap()).0, 1);
        assert_eq!(domination_number(&cycle(7).unwrap()).0, 3);
        let (k, w) = domination_number(&path(4).unwrap());
        assert_eq!(k, brute_gamma(&path(4).unwrap()));
        assert_eq!(k, 2);
        assert_eq!(w.to_vec(), vec![0, 2]);
        assert_eq!(domination_number(&Graph::empty(2).unwrap()), (2, VertexSet(0b11)));
        assert_eq!(domination_number(&Graph::empty(0).unwrap()).0, 0);
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&cycle(6).unwrap()), (3, VertexSet(0b010101)));
        assert_eq!(independence_number(&cycle(5).unwrap()).0, 2);
        assert_eq!(independence_number(&complete(4).unwrap()).0, 1);
        assert_eq!(independence_number(&Graph::empty(2).unwrap()).0, 2);
        assert_eq!(maximum_independent_sets(&cycle(6).unwrap()).len(), 2);
    }

    #[test]
    fn clique_cover_examples() {
        assert_eq!(clique_cover_number(&cycle(5).unwrap()).0, 3);
        assert_eq!(clique_cover_number(&star(4).unwrap()).0, 4);
        let cube = crate::graph::cartesian_product(&cycle(4).unwrap(), &complete(2).unwrap()).unwrap();
        assert_eq!(clique_cover_number(&cube).0, 4);
        assert_eq!(clique_cover_number(&complete(6).unwrap()).0, 1);
        assert_eq!(clique_cover_number(&Graph::empty(0).unwrap()).0, 0);
    }

    #[test]
    fn connected_domination_examples() {
        assert_eq!(connected_domination_number(&star(3).unwrap()).unwrap().0, 1);
        let p6 = path(6).unwrap();
        assert_eq!(connected_domination_number(&p6).unwrap(), (4, VertexSet(0b011110)));
        assert_eq!(brute_gamma_c(&p6), 4);
        assert_eq!(connected_domination_number(&cycle(5).unwrap()).unwrap().0, 3);
        assert_eq!(brute_gamma_c(&cycle(5).unwrap()), 3);
        assert_eq!(connected_domination_number(&complete(1).unwrap()).unwrap().0, 1);
        assert!(connected_domination_number(&Graph::empty(2).unwrap()).is_err());
    }

    #[test]
    fn cover_and_matching_examples() {
        let cm = vertex_cover_and_matching(&path(4).unwrap()).unwrap();
        assert_eq!((cm.tau, cm.nu), (2, 2));
        let cm = vertex_cover_and_matching(&star(3).unwrap()).unwrap();
        assert_eq!((cm.tau, cm.nu), (1, 1));
        assert_eq!(cm.cover, VertexSet(1));
        let c5 = cycle(5).unwrap();
        let cm = vertex_cover_and_matching(&c5).unwrap();
        assert_eq!((cm.tau, cm.nu), (3, 2));
        assert_eq!(brute_nu(&c5), 2);
    }

    #[test]
    fn private_neighbour_examples() {
        let p4 = path(4).unwrap();
        let (_, epn) = private_neighbors(&p4, VertexSet(0b0110), 1).unwrap();
        assert_eq!(epn, VertexSet(0b0001));
        let k5 = complete(5).unwrap();
        let (_, epn) = private_neighbors(&k5, VertexSet(0b11), 0).unwrap();
        assert!(epn.is_empty());
        let c5 = cycle(5).unwrap();
        let (pn, epn) = private_neighbors(&c5, VertexSet(0b00101), 0).unwrap();
        assert_eq!(pn, VertexSet(0b10001));
        assert_eq!(epn, VertexSet(0b10000));
        assert!(private_neighbors(&c5, VertexSet(0b00101), 1).is_err());
    }

    #[test]
    fn k_dominating_membership() {
        assert!(every_vertex_in_k_dominating_set(&complete_bipartite(3, 4).unwrap(), 2).0);
        assert!(every_vertex_in_k_dominating_set(&stems_with_leaves_tree(3).unwrap(), 3).0);
        let (ok, bad) = every_vertex_in_k_dominating_set(&cycle(8).unwrap(), 2);
        assert!(!ok);
        assert_eq!(bad, VertexSet::full(8));
    }

    #[test]
    fn against_brute_force_on_all_small_graphs() {
        for g in crate::canon::all_graphs(1, 7).unwrap() {
            let (gamma, dw) = domination_number(&g);
            assert_eq!(gamma, brute_gamma(&g));
            assert!(g.is_dominating(dw) && dw.len() == gamma);
            // lexicographically smallest among minimum dominating sets
            let lex_min = (0..1u64 << g.n())
                .filter(|&s| s.count_ones() as usize == gamma && is_dominating_mask(&g, s))
                .map(|s| VertexSet(s).to_vec())
                .min()
                .unwrap();
            assert_eq!(dw.to_vec(), lex_min);
            let (alpha, aw) = independence_number(&g);
            assert_eq!(alpha, brute_alpha(&g));
            assert!(g.is_independent(aw) && aw.len() == alpha);
            let cm = vertex_cover_and_matching(&g).unwrap();
            assert_eq!(cm.tau + alpha, g.n());
            if g.m() <= 14 {
                assert_eq!(cm.nu, brute_nu(&g));
            }
            let covered = cm.cover.bits();
            assert!(g.edges().iter().all(|&(u, v)| covered >> u & 1 == 1 || covered >> v & 1 == 1));
            if g.is_bipartite() {
                assert_eq!(cm.tau, cm.nu);
            }
            let (theta, parts) = clique_cover_number(&g);
            assert_eq!(parts.len(), theta);
            assert!(parts.iter().all(|&p| g.is_clique(p) && !p.is_empty()));
            assert_eq!(parts.iter().fold(0, |a, p| a | p.bits()), g.all());
            assert_eq!(parts.iter().map(|p| p.len()).sum::<usize>(), g.n());
            assert!(gamma <= alpha && alpha <= theta);
            if g.is_triangle_free() {
                assert_eq!(theta, g.n() - cm.nu);
            }
            if g.is_connected() {
                assert_eq!(connected_domination_number(&g).unwrap().0, brute_gamma_c(&g));
            }
        }
    }
}
