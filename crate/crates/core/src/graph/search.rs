//! Exact clique, independence and domination numbers.
//!
//! All three are deterministic branch-and-bound searches with a node budget.
//! Running out of budget is an error, never an approximate answer.

use fixedbitset::FixedBitSet;

use super::SimpleGraph;
use crate::error::{Error, Result};

/// An optimum value together with one optimal vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub value: usize,
    pub witness: Vec<usize>,
}

struct Budget {
    what: &'static str,
    used: u64,
    max: u64,
}

impl Budget {
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.max {
            return Err(Error::SearchAborted {
                what: self.what,
                nodes: self.max,
            });
        }
        Ok(())
    }
}

/// Maximum clique size, with greedy-colouring bounds.
pub fn clique_number(g: &SimpleGraph, max_nodes: u64) -> Result<SearchResult> {
    let n = g.vertex_count();
    let mut budget = Budget {
        what: "clique",
        used: 0,
        max: max_nodes,
    };
    let mut best = Vec::new();
    let mut current = Vec::new();
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    expand_clique(g, &mut current, all, &mut best, &mut budget)?;
    best.sort_unstable();
    Ok(SearchResult {
        value: best.len(),
        witness: best,
    })
}

/// Greedy colouring of `cand` in ascending vertex order. Returns vertices
/// sorted by colour together with their colour numbers (1-based).
fn colour_order(g: &SimpleGraph, cand: &FixedBitSet) -> Vec<(usize, usize)> {
    let mut uncoloured = cand.clone();
    let mut out = Vec::with_capacity(cand.count_ones(..));
    let mut colour = 0;
    while !uncoloured.is_clear() {
        colour += 1;
        let mut available = uncoloured.clone();
        while let Some(v) = available.ones().next() {
            out.push((v, colour));
            uncoloured.set(v, false);
            available.set(v, false);
            available.difference_with(g.row(v));
        }
    }
    out
}

fn expand_clique(
    g: &SimpleGraph,
    current: &mut Vec<usize>,
    mut cand: FixedBitSet,
    best: &mut Vec<usize>,
    budget: &mut Budget,
) -> Result<()> {
    budget.tick()?;
    let ordered = colour_order(g, &cand);
    for &(v, colour) in ordered.iter().rev() {
        if current.len() + colour <= best.len() {
            return Ok(());
        }
        current.push(v);
        let mut next = cand.clone();
        next.intersect_with(g.row(v));
        if next.is_clear() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand_clique(g, current, next, best, budget)?;
        }
        current.pop();
        cand.set(v, false);
    }
    Ok(())
}

/// Maximum independent set size: the clique number of the complement.
pub fn independence_number(g: &SimpleGraph, max_nodes: u64) -> Result<SearchResult> {
    clique_number(&g.complement(), max_nodes).map_err(|e| match e {
        Error::SearchAborted { nodes, .. } => Error::SearchAborted {
            what: "independent set",
            nodes,
        },
        other => other,
    })
}

/// Minimum dominating set size. Branches on the ways to dominate the
/// undominated vertex with the fewest options.
pub fn domination_number(g: &SimpleGraph, max_nodes: u64) -> Result<SearchResult> {
    let n = g.vertex_count();
    let closed: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut r = g.row(v).clone();
            r.insert(v);
            r
        })
        .collect();
    let mut budget = Budget {
        what: "dominating set",
        used: 0,
        max: max_nodes,
    };
    // Every vertex on its own is a valid (if poor) starting solution.
    let mut best: Vec<usize> = (0..n).collect();
    let mut chosen = Vec::new();
    let dominated = FixedBitSet::with_capacity(n);
    dominate(&closed, &dominated, &mut chosen, &mut best, &mut budget)?;
    best.sort_unstable();
    Ok(SearchResult {
        value: best.len(),
        witness: best,
    })
}

fn dominate(
    closed: &[FixedBitSet],
    dominated: &FixedBitSet,
    chosen: &mut Vec<usize>,
    best: &mut Vec<usize>,
    budget: &mut Budget,
) -> Result<()> {
    budget.tick()?;
    let n = closed.len();
    let undominated = n - dominated.count_ones(..);
    if undominated == 0 {
        if chosen.len() < best.len() {
            *best = chosen.clone();
        }
        return Ok(());
    }
    let cover = |v: usize| closed[v].difference(dominated).count();
    let max_cover = (0..n).map(cover).max().unwrap_or(0);
    let lower = undominated.div_ceil(max_cover.max(1));
    if chosen.len() + lower >= best.len() {
        return Ok(());
    }
    let target = (0..n)
        .filter(|&v| !dominated.contains(v))
        .min_by_key(|&v| (closed[v].count_ones(..), v))
        .expect("an undominated vertex exists");
    let mut options: Vec<(usize, usize)> = closed[target].ones().map(|w| (cover(w), w)).collect();
    options.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for (_, w) in options {
        let mut next = dominated.clone();
        next.union_with(&closed[w]);
        chosen.push(w);
        dominate(closed, &next, chosen, best, budget)?;
        chosen.pop();
    }
    Ok(())
}
