//! Structural predicates for graphs with small or extremal domination
//! parameters, each paired with the parameter-side condition it
//! characterizes so both sides can be compared.

use serde::Serialize;

use crate::canon::is_isomorphic;
use crate::error::SolveError;
use crate::eternal::{eternal_domination_number, safe_family, Model};
use crate::families::cycle;
use crate::graph::{Graph, Members, VertexSet};
use crate::params::{domination_number, every_vertex_in_k_dominating_set, independence_number, maximum_independent_sets};

/// Witness that a graph is a complete bipartite graph minus a matching of
/// admissible size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCCertificate {
    /// the smaller part (either part when both have the same size)
    pub a: VertexSet,
    pub b: VertexSet,
    /// deleted pairs `(x, y)` with `x` in `a` and `y` in `b`
    pub deleted: Vec<(usize, usize)>,
    /// endpoints of the deleted pairs
    pub depleted: VertexSet,
    pub full: VertexSet,
}

impl ClassCCertificate {
    /// Complete bipartite graph on `(a, b)` minus the deleted pairs.
    pub fn reconstruct(&self, n: usize) -> Graph {
        let mut edges = Vec::new();
        for x in self.a {
            for y in self.b {
                if !self.deleted.contains(&(x, y)) {
                    edges.push((x, y));
                }
            }
        }
        Graph::from_edge_list(n, &edges).expect("certificate parts lie in 0..n")
    }
}

fn certificate_for(g: &Graph, a: u64, b: u64) -> Option<ClassCCertificate> {
    let (m, n) = (a.count_ones(), b.count_ones());
    if m < 2 || m > n {
        return None;
    }
    if Members(a).any(|x| g.adj(x) & a != 0) || Members(b).any(|y| g.adj(y) & b != 0) {
        return None;
    }
    let mut deleted = Vec::new();
    for x in Members(a) {
        let missing = b & !g.adj(x);
        match missing.count_ones() {
            0 => {}
            1 => deleted.push((x, missing.trailing_zeros() as usize)),
            _ => return None,
        }
    }
    // each y in b may miss at most one vertex of a
    if Members(b).any(|y| (a & !g.adj(y)).count_ones() > 1) {
        return None;
    }
    let l = deleted.len() as u32;
    if (m == n && l > m) || (m < n && l + 1 > m) {
        return None;
    }
    let depleted = deleted.iter().fold(0u64, |acc, &(x, y)| acc | 1 << x | 1 << y);
    Some(ClassCCertificate {
        a: VertexSet(a),
        b: VertexSet(b),
        deleted,
        depleted: VertexSet(depleted),
        full: VertexSet((a | b) & !depleted),
    })
}

/// Membership in the class of graphs obtained from K_{m,m} (m >= 2) by
/// deleting a matching of size at most m, or from K_{m,n} (n > m >= 2) by
/// deleting a matching of size at most m - 1.
///
/// Such graphs have at most two components (two only for 2K2), so every
/// bipartition is tried by flipping the colouring of each component.
pub fn class_c_membership(g: &Graph) -> Option<ClassCCertificate> {
    let comps = g.components();
    if comps.len() > 2 {
        return None;
    }
    let sides: Vec<(u64, u64)> = comps
        .iter()
        .map(|c| {
            let h = g.induced_subgraph(*c);
            h.bipartition().map(|(x, y)| {
                let verts = c.to_vec();
                let lift = |s: VertexSet| s.iter().fold(0u64, |acc, i| acc | 1 << verts[i]);
                (lift(x), lift(y))
            })
        })
        .collect::<Option<_>>()?;
    let flips = 1u32 << sides.len().saturating_sub(1);
    for flip in 0..flips {
        let (mut a, mut b) = (0u64, 0u64);
        for (i, &(x, y)) in sides.iter().enumerate() {
            let swap = i > 0 && flip >> (i - 1) & 1 == 1;
            let (x, y) = if swap { (y, x) } else { (x, y) };
            a |= x;
            b |= y;
        }
        let (a, b) = if a.count_ones() <= b.count_ones() { (a, b) } else { (b, a) };
        if let Some(cert) = certificate_for(g, a, b).or_else(|| {
            (a.count_ones() == b.count_ones()).then(|| certificate_for(g, b, a)).flatten()
        }) {
            return Some(cert);
        }
    }
    None
}

/// γ(G) = γm∞(G) = 2, decided by the solvers.
fn gamma_and_m_eternal_two(g: &Graph) -> Result<bool, SolveError> {
    if g.n() < 2 || domination_number(g).0 != 2 {
        return Ok(false);
    }
    Ok(!safe_family(g, 2, Model::AllGuards)?.is_empty())
}

/// For bipartite graphs: (γ = γm∞ = 2, membership in the class above).
pub fn bipartite_two_characterization(g: &Graph) -> Result<(bool, bool), SolveError> {
    if !g.is_bipartite() {
        return Err(SolveError::hypothesis("graph is not bipartite"));
    }
    Ok((gamma_and_m_eternal_two(g)?, class_c_membership(g).is_some()))
}

/// For triangle-free graphs: (γ = γm∞ = 2, G ≅ C5 or class membership).
pub fn triangle_free_two_characterization(g: &Graph) -> Result<(bool, bool), SolveError> {
    if !g.is_triangle_free() {
        return Err(SolveError::hypothesis("graph contains a triangle"));
    }
    let c5 = g.n() == 5 && is_isomorphic(g, &cycle(5).expect("C5"))?;
    Ok((gamma_and_m_eternal_two(g)?, c5 || class_c_membership(g).is_some()))
}

/// Every vertex lies in a dominating set of size two (sufficient for
/// γm∞ = 2 on non-complete graphs).
pub fn prop2_condition(g: &Graph) -> Result<bool, SolveError> {
    if g.is_complete() {
        return Err(SolveError::hypothesis("graph is complete"));
    }
    if g.n() < 2 {
        return Ok(false);
    }
    Ok(every_vertex_in_k_dominating_set(g, 2).0)
}

/// Some vertex dominates every maximum independent set (sufficient for
/// γm∞ = 2 when α = 3).
pub fn prop3_condition(g: &Graph) -> Result<bool, SolveError> {
    let alpha = independence_number(g).0;
    if alpha != 3 {
        return Err(SolveError::hypothesis(format!("independence number is {alpha}, not 3")));
    }
    let sets = maximum_independent_sets(g);
    Ok((0..g.n()).any(|v| {
        let reach = g.closed_neighbors(v);
        sets.iter().all(|s| s.is_subset(reach))
    }))
}

/// γ(G) = n/2.
pub fn gamma_half(g: &Graph) -> Result<bool, SolveError> {
    if g.has_isolated_vertex() {
        return Err(SolveError::hypothesis("graph has an isolated vertex"));
    }
    Ok(2 * domination_number(g).0 == g.n())
}

/// Every component is a 4-cycle or a corona; the structural side of
/// [`gamma_half`].
pub fn half_domination_structure(g: &Graph) -> bool {
    let c4 = cycle(4).expect("C4");
    g.components().into_iter().all(|c| {
        let h = g.induced_subgraph(c);
        is_isomorphic(&h, &c4).unwrap_or(false) || is_corona(&h).unwrap_or(false)
    })
}

/// Whether a connected graph is H ∘ K1 for a connected H.
pub fn is_corona(g: &Graph) -> Result<bool, SolveError> {
    if !g.is_connected() {
        return Err(SolveError::hypothesis("graph is not connected"));
    }
    let n = g.n();
    if n == 2 {
        return Ok(true);
    }
    let leaves = (0..n).filter(|&v| g.degree(v) == 1).fold(0u64, |a, v| a | 1 << v);
    let core = g.vertices().bits() & !leaves;
    Ok(2 * leaves.count_ones() as usize == n
        && g.induces_connected(core)
        && Members(core).all(|v| (g.adj(v) & leaves).count_ones() == 1))
}

/// For bipartite graphs without isolated vertices: (γ = γ∞, γ = n/2).
pub fn bipartite_gamma_eq_eternal(g: &Graph) -> Result<(bool, bool), SolveError> {
    if !g.is_bipartite() {
        return Err(SolveError::hypothesis("graph is not bipartite"));
    }
    if g.has_isolated_vertex() {
        return Err(SolveError::hypothesis("graph has an isolated vertex"));
    }
    let gamma = domination_number(g).0;
    let eternal = eternal_domination_number(g)?.0;
    Ok((gamma == eternal, 2 * gamma == g.n()))
}
