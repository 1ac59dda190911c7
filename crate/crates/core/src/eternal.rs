//! Eternal domination: safe families of guard configurations, the two
//! eternal domination numbers, defence strategies and the structural checks
//! on eternal dominating sets.
//!
//! A configuration is a set of occupied vertices. The safe family at size
//! `k` is the greatest set of dominating `k`-sets that is closed under
//! defence: from every member, every attack at an unoccupied vertex can be
//! answered by a move to another member.

use std::collections::HashMap;
use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, SolveError};
use crate::graph::{binomial, k_subsets, lex_cmp_masks, Graph, Members, VertexSet};
use crate::params::{
    clique_cover_number, domination_number, independence_number, private_masks,
};

/// How guards may move in response to an attack.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Model {
    /// One guard moves along an edge to the attacked vertex.
    OneGuard,
    /// Every guard may move to a neighbour or stay; one must reach the attack.
    AllGuards,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::OneGuard => "one-guard",
            Model::AllGuards => "all-guards",
        })
    }
}

impl std::str::FromStr for Model {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "one-guard" | "one" | "eternal" => Ok(Model::OneGuard),
            "all-guards" | "all" | "m-eternal" => Ok(Model::AllGuards),
            _ => Err(format!("unknown model {s:?} (expected one-guard or all-guards)")),
        }
    }
}

/// Resource limits for the fixed-point solvers.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Largest number of candidate `k`-subsets a single family may start from.
    pub max_configurations: u128,
    /// Checked between sweeps. Leave unset on targets without a clock.
    pub deadline: Option<Instant>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_configurations: 2_000_000, deadline: None }
    }
}

impl Limits {
    pub fn with_budget(budget: Duration) -> Self {
        Limits { deadline: Some(Instant::now() + budget), ..Limits::default() }
    }

    fn check_time(&self, what: &str) -> Result<(), SolveError> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(SolveError::OutOfTime(what.to_string())),
            _ => Ok(()),
        }
    }
}

/// The greatest defence-closed family of dominating `k`-sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SafeFamily {
    pub k: usize,
    pub model: Model,
    /// members as bit masks, ascending
    members: Vec<u64>,
    /// dominating `k`-sets the fixed point started from
    pub initial: usize,
    /// number of sweeps until nothing was removed
    pub sweeps: usize,
    /// first configuration removed and an attack it could not answer
    pub first_removal: Option<(VertexSet, usize)>,
}

impl SafeFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, d: VertexSet) -> bool {
        self.members.binary_search(&d.bits()).is_ok()
    }

    pub fn members(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.members.iter().map(|&m| VertexSet(m))
    }

    pub(crate) fn masks(&self) -> &[u64] {
        &self.members
    }

    /// Lexicographically smallest member.
    pub fn first(&self) -> Option<VertexSet> {
        self.members.iter().copied().min_by(|&a, &b| lex_cmp_masks(a, b)).map(VertexSet)
    }

    /// Members as hex bit masks, the compact form used in JSON reports.
    pub fn hex_members(&self) -> Vec<String> {
        self.members.iter().map(|m| format!("{m:#x}")).collect()
    }
}

/// Whether every guard on `from` can move to a neighbour or stay so that
/// the guards end up exactly on `to`.
pub fn transition_feasible(g: &Graph, from: VertexSet, to: VertexSet) -> Result<bool, SolveError> {
    if from.len() != to.len() {
        return Err(GraphError::InvalidParameter(format!(
            "configurations of different sizes: {} and {}",
            from.len(),
            to.len()
        ))
        .into());
    }
    Ok(feasible_masks(g, from.bits(), to.bits()))
}

pub(crate) fn feasible_masks(g: &Graph, from: u64, to: u64) -> bool {
    if g.closed_of(from) & to != to || g.closed_of(to) & from != from {
        return false;
    }
    let mut owner = [u8::MAX; 64];
    fn augment(g: &Graph, u: usize, to: u64, seen: &mut u64, owner: &mut [u8; 64]) -> bool {
        for w in Members(g.closed(u) & to & !*seen) {
            *seen |= 1 << w;
            if owner[w] == u8::MAX || augment(g, owner[w] as usize, to, seen, owner) {
                owner[w] = u as u8;
                return true;
            }
        }
        false
    }
    Members(from).all(|u| {
        let mut seen = 0u64;
        augment(g, u, to, &mut seen, &mut owner)
    })
}

fn dominating_k_sets(g: &Graph, k: usize, limits: &Limits) -> Result<Vec<u64>, SolveError> {
    let n = g.n();
    if k > n {
        return Err(GraphError::InvalidParameter(format!("{k} guards on {n} vertices")).into());
    }
    let count = binomial(n, k);
    if count > limits.max_configurations {
        return Err(SolveError::TooManyConfigurations { n, k, limit: limits.max_configurations });
    }
    let all = g.vertices().bits();
    Ok(k_subsets(n, k).filter(|&d| g.closed_of(d) == all).collect())
}

/// Safe family with default limits.
pub fn safe_family(g: &Graph, k: usize, model: Model) -> Result<SafeFamily, SolveError> {
    safe_family_with(g, k, model, &Limits::default())
}

/// Greatest fixed point: start from all dominating `k`-sets and remove, in
/// batched sweeps, every configuration with an attack it cannot answer
/// inside the current family.
pub fn safe_family_with(g: &Graph, k: usize, model: Model, limits: &Limits) -> Result<SafeFamily, SolveError> {
    let cands = dominating_k_sets(g, k, limits)?;
    let initial = cands.len();
    let (alive, sweeps, first_removal) = match model {
        Model::OneGuard => fixed_point_one(g, &cands, limits)?,
        Model::AllGuards => fixed_point_all(g, &cands, limits)?,
    };
    let members = cands.iter().zip(&alive).filter(|(_, &a)| a).map(|(&d, _)| d).collect();
    Ok(SafeFamily {
        k,
        model,
        members,
        initial,
        sweeps,
        first_removal: first_removal.map(|(d, r)| (VertexSet(d), r)),
    })
}

type FixedPoint = (Vec<bool>, usize, Option<(u64, usize)>);

fn fixed_point_one(g: &Graph, cands: &[u64], limits: &Limits) -> Result<FixedPoint, SolveError> {
    let index: HashMap<u64, usize> = cands.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let all = g.vertices().bits();
    let mut alive = vec![true; cands.len()];
    let mut sweeps = 0;
    let mut first = None;
    loop {
        limits.check_time("eternal domination fixed point")?;
        sweeps += 1;
        let mut doomed = Vec::new();
        for (i, &d) in cands.iter().enumerate() {
            if !alive[i] {
                continue;
            }
            let failing = Members(all & !d).find(|&r| {
                !Members(d & g.adj(r)).any(|v| index.get(&(d & !(1 << v) | 1 << r)).is_some_and(|&j| alive[j]))
            });
            if let Some(r) = failing {
                first.get_or_insert((d, r));
                doomed.push(i);
            }
        }
        if doomed.is_empty() {
            return Ok((alive, sweeps, first));
        }
        for i in doomed {
            alive[i] = false;
        }
    }
}

fn fixed_point_all(g: &Graph, cands: &[u64], limits: &Limits) -> Result<FixedPoint, SolveError> {
    let n = g.n();
    let all = g.vertices().bits();
    let mut by_vertex: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (i, &d) in cands.iter().enumerate() {
        for v in Members(d) {
            by_vertex[v].push(i as u32);
        }
    }
    // last successor found for each (configuration, attack)
    let mut witness = vec![u32::MAX; cands.len() * n];
    let mut alive = vec![true; cands.len()];
    let mut sweeps = 0;
    let mut first = None;
    loop {
        limits.check_time("m-eternal domination fixed point")?;
        sweeps += 1;
        let mut doomed = Vec::new();
        for (i, &d) in cands.iter().enumerate() {
            if !alive[i] {
                continue;
            }
            let reach = g.closed_of(d);
            let failing = Members(all & !d).find(|&r| {
                let slot = &mut witness[i * n + r];
                if *slot != u32::MAX && alive[*slot as usize] {
                    return false;
                }
                let found = by_vertex[r].iter().copied().find(|&j| {
                    let e = cands[j as usize];
                    alive[j as usize] && e & !reach == 0 && feasible_masks(g, d, e)
                });
                match found {
                    Some(j) => {
                        *slot = j;
                        false
                    }
                    None => true,
                }
            });
            if let Some(r) = failing {
                first.get_or_insert((d, r));
                doomed.push(i);
            }
        }
        if doomed.is_empty() {
            return Ok((alive, sweeps, first));
        }
        for i in doomed {
            alive[i] = false;
        }
    }
}

/// Spreads the bits of `mask` (over `0..|within|`) onto the members of
/// `within`, undoing the relabelling of an induced subgraph.
fn spread(mask: u64, within: u64) -> u64 {
    Members(within).enumerate().filter(|&(i, _)| mask >> i & 1 == 1).fold(0, |acc, (_, v)| acc | 1 << v)
}

/// Smallest `k` in `lo..=hi` with a nonempty safe family, per component,
/// and the family of the whole graph as the product of the component
/// families (guards never cross components).
fn smallest_safe(
    g: &Graph,
    model: Model,
    bounds: impl Fn(&Graph) -> (usize, usize),
    limits: &Limits,
) -> Result<(usize, SafeFamily), SolveError> {
    let mut parts: Vec<(u64, SafeFamily)> = Vec::new();
    for comp in g.components() {
        let sub = g.induced_subgraph(comp);
        let (lo, hi) = bounds(&sub);
        let mut found = None;
        for k in lo..=hi {
            let fam = safe_family_with(&sub, k, model, limits)?;
            if !fam.is_empty() {
                found = Some(fam);
                break;
            }
        }
        let fam = found.expect("the upper bound always admits a safe family");
        parts.push((comp.bits(), fam));
    }
    let k = parts.iter().map(|(_, f)| f.k).sum();
    let size: u128 = parts.iter().map(|(_, f)| f.len() as u128).product();
    if size > limits.max_configurations {
        return Err(SolveError::TooManyConfigurations { n: g.n(), k, limit: limits.max_configurations });
    }
    let mut members = vec![0u64];
    for (comp, fam) in &parts {
        let local: Vec<u64> = fam.masks().iter().map(|&m| spread(m, *comp)).collect();
        members = members.iter().flat_map(|&a| local.iter().map(move |&b| a | b)).collect();
    }
    members.sort_unstable();
    let initial = parts.iter().map(|(_, f)| f.initial as u128).product::<u128>().min(usize::MAX as u128) as usize;
    let sweeps = parts.iter().map(|(_, f)| f.sweeps).max().unwrap_or(0);
    Ok((k, SafeFamily { k, model, members, initial, sweeps, first_removal: None }))
}

/// γ∞(G) and its safe family. Scans `k` from α up to θ on each component.
pub fn eternal_domination_number(g: &Graph) -> Result<(usize, SafeFamily), SolveError> {
    eternal_domination_number_with(g, &Limits::default())
}

pub fn eternal_domination_number_with(g: &Graph, limits: &Limits) -> Result<(usize, SafeFamily), SolveError> {
    smallest_safe(g, Model::OneGuard, |h| (independence_number(h).0, clique_cover_number(h).0), limits)
}

/// γm∞(G) and its safe family. Scans `k` from γ up to α on each component.
pub fn m_eternal_domination_number(g: &Graph) -> Result<(usize, SafeFamily), SolveError> {
    m_eternal_domination_number_with(g, &Limits::default())
}

pub fn m_eternal_domination_number_with(g: &Graph, limits: &Limits) -> Result<(usize, SafeFamily), SolveError> {
    smallest_safe(g, Model::AllGuards, |h| (domination_number(h).0, independence_number(h).0), limits)
}

/// The value for a model.
pub fn eternal_number(g: &Graph, model: Model, limits: &Limits) -> Result<(usize, SafeFamily), SolveError> {
    match model {
        Model::OneGuard => eternal_domination_number_with(g, limits),
        Model::AllGuards => m_eternal_domination_number_with(g, limits),
    }
}

/// Lexicographically smallest answer to an attack at `r` from `d` within
/// the family, if any.
pub fn defend(g: &Graph, family: &SafeFamily, d: VertexSet, r: usize) -> Option<VertexSet> {
    let (d, fam) = (d.bits(), family.masks());
    let lex_min = |it: &mut dyn Iterator<Item = u64>| it.min_by(|&a, &b| lex_cmp_masks(a, b)).map(VertexSet);
    match family.model {
        Model::OneGuard => lex_min(
            &mut Members(d & g.adj(r))
                .map(|v| d & !(1 << v) | 1 << r)
                .filter(|e| fam.binary_search(e).is_ok()),
        ),
        Model::AllGuards => lex_min(
            &mut fam.iter().copied().filter(|&e| e >> r & 1 == 1 && feasible_masks(g, d, e)),
        ),
    }
}

/// A complete answer table over a safe family.
#[derive(Clone, Debug, Serialize)]
pub struct DefenseStrategy {
    pub k: usize,
    pub model: Model,
    /// lexicographically smallest member, a natural starting position
    pub start: VertexSet,
    moves: HashMap<(u64, u8), u64>,
}

impl DefenseStrategy {
    /// Successor after an attack at `r`; `None` if `d` is not a member or
    /// `r` is occupied.
    pub fn respond(&self, d: VertexSet, r: usize) -> Option<VertexSet> {
        if r >= 64 {
            return None;
        }
        self.moves.get(&(d.bits(), r as u8)).copied().map(VertexSet)
    }

    /// Number of (configuration, attack) pairs covered.
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

/// Tabulates the lexicographically smallest defence for every member and
/// every unoccupied vertex.
pub fn extract_strategy(g: &Graph, family: &SafeFamily) -> Result<DefenseStrategy, SolveError> {
    let start = family.first().ok_or_else(|| SolveError::hypothesis("the safe family is empty"))?;
    let all = g.vertices().bits();
    let mut moves = HashMap::new();
    for d in family.members() {
        for r in Members(all & !d.bits()) {
            let next = defend(g, family, d, r)
                .unwrap_or_else(|| panic!("safe family not closed at {d} against {r}"));
            moves.insert((d.bits(), r as u8), next.bits());
        }
    }
    Ok(DefenseStrategy { k: family.k, model: family.model, start, moves })
}

/// Checks the clique conditions on private neighbourhoods for every member
/// of a one-guard safe family: `{v} ∪ epn(v,D)` is a clique, and when `v`
/// can answer an attack at `u`, so is `{u,v} ∪ epn(v,D)`.
pub fn verify_fact_eds(g: &Graph, family: &SafeFamily) -> Vec<String> {
    let mut out = Vec::new();
    let all = g.vertices().bits();
    for d in family.members() {
        for v in d {
            let (_, epn) = private_masks(g, d.bits(), v);
            let base = VertexSet(epn | 1 << v);
            if !g.is_clique(base) {
                out.push(format!("D={d}: {{v}}+epn(v) = {base} is not a clique (v={v})"));
            }
            for u in Members(g.adj(v) & all & !d.bits()) {
                if family.contains(d.without(v).with(u)) && !g.is_clique(base.with(u)) {
                    out.push(format!("D={d}: v={v} defends u={u} but {} is not a clique", base.with(u)));
                }
            }
        }
    }
    out
}

/// A minimum eternal dominating set whose members all have a nonempty
/// external private neighbourhood, if one exists.
pub fn exists_epn_full_minimum_eds(g: &Graph) -> Result<Option<VertexSet>, SolveError> {
    if g.has_isolated_vertex() {
        return Err(SolveError::hypothesis("graph has an isolated vertex"));
    }
    let (_, family) = eternal_domination_number(g)?;
    Ok(epn_full_member(g, &family))
}

pub(crate) fn epn_full_member(g: &Graph, family: &SafeFamily) -> Option<VertexSet> {
    family
        .members()
        .filter(|d| d.iter().all(|v| private_masks(g, d.bits(), v).1 != 0))
        .min_by(|a, b| a.lex_cmp(*b))
}
