//! Neo-colonizations: partitions of the vertices into connected parts,
//! where a clique costs 1 and any other part costs 1 plus its connected
//! domination number. θc is the minimum total cost.

use serde::Serialize;

use crate::error::{GraphError, SolveError};
use crate::graph::{submasks, Graph, Members, VertexSet};
use crate::params::{bipartite_matching, connected_domination_of, konig_cover};

/// Largest order accepted by [`theta_c`].
pub const THETA_C_MAX: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeoColonization {
    pub parts: Vec<VertexSet>,
    pub weights: Vec<usize>,
    pub total: usize,
}

impl NeoColonization {
    fn from_parts(g: &Graph, mut parts: Vec<VertexSet>) -> Self {
        parts.sort_by_key(|p| p.first());
        let weights: Vec<usize> = parts.iter().map(|p| weight_of(g, p.bits())).collect();
        let total = weights.iter().sum();
        NeoColonization { parts, weights, total }
    }

    /// Re-checks the structural invariants against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let mut seen = 0u64;
        for (part, &w) in self.parts.iter().zip(&self.weights) {
            if part.bits() & seen != 0 {
                return Err(format!("part {part} overlaps an earlier part"));
            }
            seen |= part.bits();
            if !g.induces_connected(part.bits()) {
                return Err(format!("part {part} is not connected"));
            }
            if w != weight_of(g, part.bits()) {
                return Err(format!("part {part} has weight {w}, expected {}", weight_of(g, part.bits())));
            }
        }
        if seen != g.vertices().bits() {
            return Err("parts do not cover every vertex".into());
        }
        if self.total != self.weights.iter().sum::<usize>() {
            return Err("total is not the sum of the weights".into());
        }
        Ok(())
    }
}

fn weight_of(g: &Graph, part: u64) -> usize {
    if g.is_clique(VertexSet(part)) {
        1
    } else {
        1 + connected_domination_of(g, part)
    }
}

/// Weight of one part: 1 for a clique, otherwise 1 + γc of the part.
pub fn part_weight(g: &Graph, part: VertexSet) -> Result<usize, SolveError> {
    if !g.induces_connected(part.bits()) {
        return Err(SolveError::hypothesis(format!("part {part} does not induce a connected subgraph")));
    }
    Ok(weight_of(g, part.bits()))
}

/// θc(G) with a minimum-weight neo-colonization.
///
/// Subset DP per component: `best[U]` is the cheapest colonization of `U`,
/// choosing the part that holds the smallest vertex of `U` first.
pub fn theta_c(g: &Graph) -> Result<(usize, NeoColonization), SolveError> {
    if g.n() > THETA_C_MAX {
        return Err(GraphError::SizeLimit { what: "theta_c", max: THETA_C_MAX, n: g.n() }.into());
    }
    let mut parts = Vec::new();
    for comp in g.components() {
        let sub = g.induced_subgraph(comp);
        let verts = comp.to_vec();
        for p in colonize_connected(&sub) {
            parts.push(Members(p).map(|i| verts[i]).collect());
        }
    }
    let col = NeoColonization::from_parts(g, parts);
    Ok((col.total, col))
}

fn colonize_connected(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let size = 1usize << n;
    // 0 = not yet computed, u8::MAX = disconnected
    let mut weight = vec![0u8; size];
    let mut best = vec![u8::MAX; size];
    let mut choice = vec![0u64; size];
    best[0] = 0;
    for u in 1..size as u64 {
        let low = u & u.wrapping_neg();
        for rest in submasks(u & !low) {
            let part = rest | low;
            let remaining = (u & !part) as usize;
            if best[remaining] == u8::MAX {
                continue;
            }
            let w = &mut weight[part as usize];
            if *w == 0 {
                *w = if g.induces_connected(part) { weight_of(g, part) as u8 } else { u8::MAX };
            }
            if *w == u8::MAX {
                continue;
            }
            let cost = *w + best[remaining];
            if cost < best[u as usize] {
                best[u as usize] = cost;
                choice[u as usize] = part;
            }
        }
    }
    let mut out = Vec::new();
    let mut u = (size - 1) as u64;
    while u != 0 {
        out.push(choice[u as usize]);
        u &= !choice[u as usize];
    }
    out
}

/// Stars built around a maximum matching of a bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarColonization {
    pub colonization: NeoColonization,
    pub matching: Vec<(usize, usize)>,
    pub cover: VertexSet,
    /// vertices left unmatched by the matching
    pub unmatched: VertexSet,
}

/// Neo-colonization of a bipartite graph by stars: take a minimum vertex
/// cover and a maximum matching saturating it, then hang every unmatched
/// vertex on its smallest (necessarily matched, covering) neighbour.
/// The weight is at most τ(G) + |unmatched|.
pub fn bipartite_star_colonization(g: &Graph) -> Result<StarColonization, SolveError> {
    let Some((left, _)) = g.bipartition() else {
        return Err(SolveError::hypothesis("graph is not bipartite"));
    };
    if g.has_isolated_vertex() {
        return Err(SolveError::hypothesis("graph has an isolated vertex"));
    }
    let mate = bipartite_matching(g, left.bits());
    let cover = konig_cover(g, left.bits(), &mate);
    let matching: Vec<(usize, usize)> =
        (0..g.n()).filter_map(|u| mate[u].filter(|&w| u < w).map(|w| (u, w))).collect();
    let unmatched: u64 = (0..g.n()).filter(|&u| mate[u].is_none()).fold(0, |a, u| a | 1 << u);
    let mut part_of = vec![usize::MAX; g.n()];
    let mut parts: Vec<u64> = Vec::new();
    for &(u, w) in &matching {
        part_of[u] = parts.len();
        part_of[w] = parts.len();
        parts.push(1 << u | 1 << w);
    }
    for u in Members(unmatched) {
        let host = Members(g.adj(u)).next().expect("no isolated vertices");
        parts[part_of[host]] |= 1 << u;
    }
    let colonization = NeoColonization::from_parts(g, parts.into_iter().map(VertexSet).collect());
    Ok(StarColonization { colonization, matching, cover: VertexSet(cover), unmatched: VertexSet(unmatched) })
}
