//! Leaf-pruning reductions on trees.
//!
//! R1: a stem with at least two leaves and exactly one neighbour of degree
//! at least two loses all its leaves. R2: a stem of degree two with exactly
//! one leaf is deleted together with that leaf. Each application lowers the
//! m-eternal domination number by exactly one, and repeated application
//! ends in a star, so the number of steps plus the value of the star is the
//! m-eternal domination number of the tree.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::canon::{tree_code_within, TreeCode};
use crate::error::{GraphError, SolveError};
use crate::graph::{Graph, Members, VertexSet};
use crate::params::bipartite_matching;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    R1,
    R2,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::R1 => "R1",
            Rule::R2 => "R2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub rule: Rule,
    pub stem: usize,
    pub removed: VertexSet,
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at stem {}: removed {}", self.rule, self.stem, self.removed)
    }
}

/// The star a reduction ends in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Terminal {
    K1,
    K2,
    /// K1,r with r >= 2
    Star(usize),
}

impl Terminal {
    /// m-eternal domination number of the terminal star.
    pub fn value(self) -> usize {
        match self {
            Terminal::K1 | Terminal::K2 => 1,
            Terminal::Star(_) => 2,
        }
    }

    fn of_order(n: usize) -> Terminal {
        match n {
            1 => Terminal::K1,
            2 => Terminal::K2,
            _ => Terminal::Star(n - 1),
        }
    }
}

impl fmt::Display for Terminal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Terminal::K1 => f.write_str("K1"),
            Terminal::K2 => f.write_str("K2"),
            Terminal::Star(r) => write!(f, "K1,{r}"),
        }
    }
}

impl Serialize for Terminal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub terminal: Terminal,
    /// vertices of the terminal star, in the original labelling
    pub terminal_vertices: VertexSet,
    pub value: usize,
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        write!(f, "terminal {} on {}, value {}", self.terminal, self.terminal_vertices, self.value)
    }
}

fn require_tree(t: &Graph) -> Result<(), SolveError> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(SolveError::hypothesis("input is not a tree"))
    }
}

fn deg(t: &Graph, alive: u64, v: usize) -> u32 {
    (t.adj(v) & alive).count_ones()
}

fn leaves_of(t: &Graph, alive: u64, v: usize) -> u64 {
    Members(t.adj(v) & alive).filter(|&u| deg(t, alive, u) == 1).fold(0, |a, u| a | 1 << u)
}

/// A tree (given as the vertex set of a subtree) is a star when some vertex
/// is adjacent to all others.
fn is_star(t: &Graph, alive: u64) -> bool {
    let n = alive.count_ones();
    n <= 2 || Members(alive).any(|v| deg(t, alive, v) == n - 1)
}

/// The R1 or R2 step at stem `x`, if either applies there.
fn step_at(t: &Graph, alive: u64, x: usize) -> Option<ReductionStep> {
    let leaves = leaves_of(t, alive, x);
    let others = t.adj(x) & alive & !leaves;
    if leaves.count_ones() >= 2 && others.count_ones() == 1 {
        return Some(ReductionStep { rule: Rule::R1, stem: x, removed: VertexSet(leaves) });
    }
    if deg(t, alive, x) == 2 && leaves.count_ones() == 1 {
        return Some(ReductionStep { rule: Rule::R2, stem: x, removed: VertexSet(leaves | 1 << x) });
    }
    None
}

/// Every applicable R1 and R2 step of the subtree on `alive`.
pub(crate) fn applicable_steps(t: &Graph, alive: u64) -> Vec<ReductionStep> {
    Members(alive).filter_map(|x| step_at(t, alive, x)).collect()
}

/// Every applicable R1 and R2 step of a tree.
pub fn reduction_sites(t: &Graph) -> Result<Vec<ReductionStep>, SolveError> {
    require_tree(t)?;
    Ok(applicable_steps(t, t.vertices().bits()))
}

fn bfs_depths(t: &Graph, root: usize) -> Vec<usize> {
    let mut depth = vec![usize::MAX; t.n()];
    depth[root] = 0;
    let mut frontier = 1u64 << root;
    let mut seen = frontier;
    let mut d = 0;
    while frontier != 0 {
        d += 1;
        let next = t.open_of(frontier) & !seen;
        for v in Members(next) {
            depth[v] = d;
        }
        seen |= next;
        frontier = next;
    }
    depth
}

/// m-eternal domination number of a tree by repeated reduction.
///
/// Policy: root the tree at the smallest vertex of maximum eccentricity and
/// always reduce at the deepest stem (smallest index on ties). Such a stem
/// has only leaf children, so R1 applies when it has two or more leaves and
/// R2 otherwise.
pub fn reduce_tree(t: &Graph) -> Result<(usize, ReductionTrace), SolveError> {
    require_tree(t)?;
    let depths: Vec<Vec<usize>> = (0..t.n()).map(|v| bfs_depths(t, v)).collect();
    let ecc = |v: usize| *depths[v].iter().max().unwrap();
    let root = (0..t.n()).max_by_key(|&v| (ecc(v), std::cmp::Reverse(v))).unwrap();
    let depth = &depths[root];
    let mut alive = t.vertices().bits();
    let mut steps = Vec::new();
    while !is_star(t, alive) {
        let stem = Members(alive)
            .filter(|&v| leaves_of(t, alive, v) != 0)
            .max_by_key(|&v| (depth[v], std::cmp::Reverse(v)))
            .expect("a tree with three or more vertices has a stem");
        let step = step_at(t, alive, stem).expect("the deepest stem admits R1 or R2");
        alive &= !step.removed.bits();
        steps.push(step);
    }
    let terminal = Terminal::of_order(alive.count_ones() as usize);
    let value = steps.len() + terminal.value();
    Ok((value, ReductionTrace { steps, terminal, terminal_vertices: VertexSet(alive), value }))
}

/// Whether R2 alone can reduce the tree to K2 or K1,2, searching over all
/// R2 sites with memoisation on the shapes already shown to fail.
pub fn r2_reduces_to_small_star(t: &Graph) -> Result<(bool, Option<ReductionTrace>), SolveError> {
    require_tree(t)?;
    if t.n() < 2 {
        return Err(SolveError::hypothesis("tree needs at least two vertices"));
    }
    fn go(t: &Graph, alive: u64, failed: &mut HashSet<TreeCode>, steps: &mut Vec<ReductionStep>) -> bool {
        let n = alive.count_ones();
        if n == 2 || (n == 3 && is_star(t, alive)) {
            return true;
        }
        let code = tree_code_within(t, alive);
        if failed.contains(&code) {
            return false;
        }
        for x in Members(alive) {
            let Some(step) = step_at(t, alive, x).filter(|s| s.rule == Rule::R2) else {
                continue;
            };
            let next = alive & !step.removed.bits();
            steps.push(step);
            if go(t, next, failed, steps) {
                return true;
            }
            steps.pop();
        }
        failed.insert(code);
        false
    }
    let mut steps = Vec::new();
    let all = t.vertices().bits();
    if !go(t, all, &mut HashSet::new(), &mut steps) {
        return Ok((false, None));
    }
    let alive = steps.iter().fold(all, |a, s| a & !s.removed.bits());
    let terminal = Terminal::of_order(alive.count_ones() as usize);
    let value = steps.len() + terminal.value();
    Ok((true, Some(ReductionTrace { steps, terminal, terminal_vertices: VertexSet(alive), value })))
}

/// Starting tree for [`build_by_k2_attachment`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Seed {
    K2,
    P3,
}

/// Grows a tree from the seed: each entry of `attachments` adds a new edge
/// `ab` and joins `a` to the given existing vertex.
pub fn build_by_k2_attachment(seed: Seed, attachments: &[usize]) -> Result<Graph, GraphError> {
    let mut edges = match seed {
        Seed::K2 => vec![(0, 1)],
        Seed::P3 => vec![(0, 1), (1, 2)],
    };
    let mut n = edges.len() + 1;
    for &v in attachments {
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n });
        }
        edges.push((v, n));
        edges.push((n, n + 1));
        n += 2;
    }
    Graph::from_edge_list(n, &edges)
}

/// θ of a tree, as n minus the matching number.
pub fn tree_clique_cover(t: &Graph) -> Result<usize, SolveError> {
    require_tree(t)?;
    let (left, _) = t.bipartition().expect("trees are bipartite");
    let mate = bipartite_matching(t, left.bits());
    let nu = mate.iter().filter(|m| m.is_some()).count() / 2;
    Ok(t.n() - nu)
}

/// Every tree on at most `n_max` vertices (up to isomorphism) reachable by
/// K2 attachments from K2 or P3, as tree codes.
pub fn k2_attachment_closure(n_max: usize) -> BTreeSet<TreeCode> {
    let mut out = BTreeSet::new();
    let mut level: BTreeSet<TreeCode> = BTreeSet::new();
    for seed in [Seed::K2, Seed::P3] {
        let g = build_by_k2_attachment(seed, &[]).expect("seed");
        if g.n() <= n_max {
            level.insert(tree_code_within(&g, g.vertices().bits()));
        }
    }
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for code in &level {
            let t = code.to_graph();
            if t.n() + 2 > n_max {
                continue;
            }
            for v in 0..t.n() {
                let mut edges = t.edges();
                edges.push((v, t.n()));
                edges.push((t.n(), t.n() + 1));
                let grown = Graph::from_edge_list(t.n() + 2, &edges).expect("valid tree");
                next.insert(tree_code_within(&grown, grown.vertices().bits()));
            }
        }
        out.extend(level);
        level = next;
    }
    out
}
