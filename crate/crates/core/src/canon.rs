//! Canonical forms and isomorph-free enumeration of small graphs and trees.
//!
//! The canonical form of a graph is the lexicographically smallest
//! upper-triangle adjacency string (graph6 bit order) over all labelings
//! that list the colour classes of the stable colour refinement in order.
//! The minimisation is exhaustive over those labelings; two exact prunings
//! keep it cheap: a branch is only continued when its newest column is
//! minimal among the siblings, and of two interchangeable twins only one is
//! tried.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::GraphError;
use crate::graph::{Graph, Members};

/// Largest `n` accepted by [`canonical_form`].
pub const CANON_MAX: usize = 16;
/// Largest `n` accepted by [`enumerate_nonisomorphic`].
pub const ENUM_MAX: usize = 8;
/// Largest `n` accepted by [`enumerate_trees`].
pub const TREE_ENUM_MAX: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    pub n: u8,
    /// Upper-triangle bits, pair (0,1) in the most significant used bit.
    pub code: u128,
}

impl CanonicalForm {
    /// The graph whose labelling realises this form.
    pub fn to_graph(self) -> Graph {
        let n = self.n as usize;
        let total = n * n.saturating_sub(1) / 2;
        let mut adj = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.code >> (total - 1 - k) & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_adjacency(adj).expect("decoded canonical code")
    }
}

/// Stable colour refinement. Colours are ranks of sorted signatures, so the
/// result depends on the graph only up to isomorphism.
fn refine_colours(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut colour: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let mut classes = colour.iter().collect::<BTreeSet<_>>().len();
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let ranks: BTreeMap<&(u32, Vec<u32>), u32> =
            sigs.iter().collect::<BTreeSet<_>>().into_iter().enumerate().map(|(i, s)| (s, i as u32)).collect();
        let next: Vec<u32> = sigs.iter().map(|s| ranks[s]).collect();
        let next_classes = ranks.len();
        colour = next;
        if next_classes == classes {
            return colour;
        }
        classes = next_classes;
    }
}

struct Search<'a> {
    g: &'a Graph,
    /// cell index of each position
    cell_of_pos: Vec<usize>,
    cells: Vec<u64>,
    /// smallest twin partner below each vertex, if any
    twin_rep: Vec<u64>,
    total: usize,
    best: Option<u128>,
    label: Vec<usize>,
}

impl Search<'_> {
    fn column(&self, v: usize, p: usize) -> u128 {
        let adj = self.g.adj(v);
        let mut col = 0u128;
        for &u in &self.label[..p] {
            col = (col << 1) | (adj >> u & 1) as u128;
        }
        col
    }

    fn run(&mut self, p: usize, placed: u64, code: u128) {
        let n = self.g.n();
        if p == n {
            if self.best.is_none_or(|b| code < b) {
                self.best = Some(code);
            }
            return;
        }
        let filled = p * (p + 1) / 2;
        let cands = self.cells[self.cell_of_pos[p]] & !placed;
        let mut min_col = u128::MAX;
        let mut choices = 0u64;
        for v in Members(cands) {
            // a twin with a smaller index that is still available gives an
            // isomorphic subtree
            if self.twin_rep[v] & cands != 0 {
                continue;
            }
            let col = self.column(v, p);
            if col < min_col {
                min_col = col;
                choices = 1 << v;
            } else if col == min_col {
                choices |= 1 << v;
            }
        }
        let next_code = (code << p) | min_col;
        if let Some(best) = self.best {
            let best_prefix = best >> (self.total - filled);
            if next_code > best_prefix {
                return;
            }
        }
        for v in Members(choices) {
            self.label[p] = v;
            self.run(p + 1, placed | 1 << v, next_code);
        }
    }
}

/// Canonical labelling: returns the form and the permutation `perm` with
/// `g.permuted(&perm) == form.to_graph()`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>), GraphError> {
    let n = g.n();
    if n > CANON_MAX {
        return Err(GraphError::SizeLimit { what: "canonical labelling", max: CANON_MAX, n });
    }
    if n == 0 {
        return Ok((CanonicalForm { n: 0, code: 0 }, Vec::new()));
    }
    let colour = refine_colours(g);
    let ncolours = *colour.iter().max().unwrap() as usize + 1;
    let mut cells = vec![0u64; ncolours];
    for (v, &c) in colour.iter().enumerate() {
        cells[c as usize] |= 1 << v;
    }
    let cell_of_pos: Vec<usize> =
        cells.iter().enumerate().flat_map(|(i, c)| std::iter::repeat_n(i, c.count_ones() as usize)).collect();
    let twin_rep: Vec<u64> = (0..n)
        .map(|v| {
            (0..v)
                .filter(|&u| g.adj(u) & !(1 << v) == g.adj(v) & !(1 << u))
                .fold(0u64, |acc, u| acc | 1 << u)
        })
        .collect();
    let mut search = Search {
        g,
        cell_of_pos,
        cells,
        twin_rep,
        total: n * (n - 1) / 2,
        best: None,
        label: vec![0; n],
    };
    // The search records only the best code; a second pass recovers one
    // labelling that attains it.
    search.run(0, 0, 0);
    let best = search.best.expect("at least one labelling");
    let form = CanonicalForm { n: n as u8, code: best };
    let target = form.to_graph();
    let perm = find_labeling(g, &search, &target);
    Ok((form, perm))
}

fn find_labeling(g: &Graph, s: &Search<'_>, target: &Graph) -> Vec<usize> {
    fn go(g: &Graph, s: &Search<'_>, target: &Graph, p: usize, placed: u64, label: &mut Vec<usize>) -> bool {
        let n = g.n();
        if p == n {
            return true;
        }
        let cands = s.cells[s.cell_of_pos[p]] & !placed;
        for v in Members(cands) {
            let ok = (0..p).all(|i| g.has_edge(label[i], v) == target.has_edge(i, p));
            if ok {
                label.push(v);
                if go(g, s, target, p + 1, placed | 1 << v, label) {
                    return true;
                }
                label.pop();
            }
        }
        false
    }
    let mut label = Vec::with_capacity(g.n());
    assert!(go(g, s, target, 0, 0, &mut label), "canonical code must be realisable");
    // label[p] = original vertex at position p; perm maps original -> position
    let mut perm = vec![0; g.n()];
    for (p, &v) in label.iter().enumerate() {
        perm[v] = p;
    }
    perm
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    canonical_labeling(g).map(|(f, _)| f)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, GraphError> {
    if a.n() != b.n() || a.m() != b.m() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// One representative per isomorphism class on `n` vertices, in canonical
/// labelling, sorted by canonical form.
pub fn enumerate_nonisomorphic(n: usize) -> Result<Vec<Graph>, GraphError> {
    Ok(enumerate_up_to(n)?.pop().unwrap_or_default())
}

/// Levels `0..=n_max` of the isomorph-free enumeration.
pub fn enumerate_up_to(n_max: usize) -> Result<Vec<Vec<Graph>>, GraphError> {
    if n_max > ENUM_MAX {
        return Err(GraphError::SizeLimit {
            what: "built-in enumeration (supply graph6 files from an external generator for larger n)",
            max: ENUM_MAX,
            n: n_max,
        });
    }
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::empty(0)?]];
    for n in 1..=n_max {
        let mut seen = BTreeSet::new();
        for g in &levels[n - 1] {
            let base: Vec<u64> = g.adjacency().to_vec();
            for nbrs in 0..(1u64 << (n - 1)) {
                let mut adj = base.clone();
                for u in Members(nbrs) {
                    adj[u] |= 1 << (n - 1);
                }
                adj.push(nbrs);
                let h = Graph::from_adjacency(adj)?;
                seen.insert(canonical_form(&h)?);
            }
        }
        levels.push(seen.into_iter().map(CanonicalForm::to_graph).collect());
    }
    Ok(levels)
}

/// All graphs with `lo <= n <= hi` vertices, level by level.
pub fn all_graphs(lo: usize, hi: usize) -> Result<Vec<Graph>, GraphError> {
    Ok(enumerate_up_to(hi)?.into_iter().skip(lo).flatten().collect())
}

/// Canonical string of a tree: the AHU encoding rooted at a centre, taking
/// the smaller of the two encodings when there are two centres.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TreeCode(pub String);

pub fn tree_code(t: &Graph) -> Result<TreeCode, GraphError> {
    if !t.is_tree() {
        return Err(GraphError::InvalidParameter("not a tree".into()));
    }
    Ok(tree_code_within(t, t.vertices().bits()))
}

/// AHU code of the tree induced by `alive` (assumed to induce a tree).
pub(crate) fn tree_code_within(t: &Graph, alive: u64) -> TreeCode {
    let centres = tree_centres(t, alive);
    let code = centres
        .iter()
        .map(|&c| rooted_code(t, alive, c, usize::MAX))
        .min()
        .expect("nonempty tree");
    TreeCode(code)
}

fn tree_centres(t: &Graph, alive: u64) -> Vec<usize> {
    let mut rest = alive;
    loop {
        if rest.count_ones() <= 2 {
            return Members(rest).collect();
        }
        let leaves = Members(rest).filter(|&v| (t.adj(v) & rest).count_ones() <= 1).fold(0u64, |a, v| a | 1 << v);
        rest &= !leaves;
    }
}

fn rooted_code(t: &Graph, alive: u64, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = Members(t.adj(v) & alive)
        .filter(|&u| u != parent)
        .map(|u| rooted_code(t, alive, u, v))
        .collect();
    kids.sort_unstable();
    let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
    s.push('(');
    for k in kids {
        s.push_str(&k);
    }
    s.push(')');
    s
}

impl TreeCode {
    /// Rebuilds the tree, labelling vertices in preorder of the encoding.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        let mut next = 0;
        for ch in self.0.chars() {
            if ch == '(' {
                if let Some(&p) = stack.last() {
                    edges.push((p, next));
                }
                stack.push(next);
                next += 1;
            } else {
                stack.pop();
            }
        }
        Graph::from_edge_list(next, &edges).expect("well-formed tree code")
    }
}

/// One tree per isomorphism class on `n` vertices, sorted by tree code.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > TREE_ENUM_MAX {
        return Err(GraphError::SizeLimit { what: "tree enumeration", max: TREE_ENUM_MAX, n });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: BTreeSet<TreeCode> = BTreeSet::from([TreeCode("()".into())]);
    for size in 2..=n {
        let mut next = BTreeSet::new();
        for code in &level {
            let t = code.to_graph();
            for v in 0..size - 1 {
                let mut edges = t.edges();
                edges.push((v, size - 1));
                let grown = Graph::from_edge_list(size, &edges)?;
                next.insert(tree_code_within(&grown, grown.vertices().bits()));
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(|c| c.to_graph()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, kmn_minus_matching, path, star};

    #[test]
    fn kmn_minus_perfect_matching_is_c6() {
        assert!(is_isomorphic(&kmn_minus_matching(3, 3, 3).unwrap(), &cycle(6).unwrap()).unwrap());
    }

    #[test]
    fn canonical_round_trip() {
        let g = cycle(7).unwrap();
        let (form, perm) = canonical_labeling(&g).unwrap();
        assert_eq!(g.permuted(&perm), form.to_graph());
        assert_eq!(canonical_form(&form.to_graph()).unwrap(), form);
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = enumerate_up_to(6).unwrap().iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=9).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
        for t in enumerate_trees(7).unwrap() {
            assert!(t.is_tree());
        }
    }

    #[test]
    fn tree_code_distinguishes() {
        let p4 = path(4).unwrap();
        let s3 = star(3).unwrap();
        assert_ne!(tree_code(&p4).unwrap(), tree_code(&s3).unwrap());
        let relabelled = p4.permuted(&[2, 0, 3, 1]);
        assert_eq!(tree_code(&p4).unwrap(), tree_code(&relabelled).unwrap());
        assert!(tree_code(&cycle(4).unwrap()).is_err());
    }

    #[test]
    fn limits() {
        assert!(enumerate_nonisomorphic(9).is_err());
        assert!(enumerate_trees(15).is_err());
        assert!(canonical_form(&Graph::empty(17).unwrap()).is_err());
    }
}
