use std::collections::VecDeque;

use serde::Serialize;

use super::search::{clique_number, domination_number, independence_number};
use super::{Extent, SimpleGraph};
use crate::error::Result;

/// Connected components, each sorted, ordered by their smallest vertex.
pub fn components(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn bfs_distances(g: &SimpleGraph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for w in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Largest pairwise distance; infinite when disconnected, 0 for one
/// vertex, `None` for the null graph.
pub fn diameter(g: &SimpleGraph) -> Option<Extent> {
    if g.is_null() {
        return None;
    }
    let mut best = 0;
    for s in 0..g.vertex_count() {
        for d in bfs_distances(g, s) {
            match d {
                Some(d) => best = best.max(d),
                None => return Some(Extent::Infinite),
            }
        }
    }
    Some(Extent::Finite(best))
}

/// Length of a shortest cycle, infinite for forests.
///
/// A BFS from every root; a non-tree edge `(u, w)` closes a cycle of length
/// at most `d(u) + d(w) + 1`, and the minimum over all roots is exact.
pub fn girth(g: &SimpleGraph) -> Extent {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    best = best.min(dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Extent::Infinite
    } else {
        Extent::Finite(best)
    }
}

/// Articulation points (Hopcroft–Tarjan low-link), ascending.
pub fn cut_vertices(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // Explicit stack of (vertex, parent, remaining neighbours).
        let mut stack: Vec<(usize, usize, Vec<usize>)> = Vec::new();
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, g.neighbors(root).collect()));
        let mut root_children = 0;
        while let Some((v, parent, rest)) = stack.last_mut() {
            let (v, parent) = (*v, *parent);
            if let Some(w) = rest.pop() {
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, g.neighbors(w).collect()));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some((p, _, _)) = stack.last() {
                    let p = *p;
                    low[p] = low[p].min(low[v]);
                    if p != root && low[v] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

pub fn degrees(g: &SimpleGraph) -> Vec<usize> {
    (0..g.vertex_count()).map(|v| g.degree(v)).collect()
}

pub fn pendant_vertices(g: &SimpleGraph) -> Vec<usize> {
    (0..g.vertex_count())
        .filter(|&v| g.degree(v) == 1)
        .collect()
}

/// `Some(r)` when every vertex has degree `r`; `None` otherwise or when null.
pub fn regular_degree(g: &SimpleGraph) -> Option<usize> {
    let d = degrees(g);
    let first = *d.first()?;
    d.iter().all(|&x| x == first).then_some(first)
}

pub fn is_complete(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    g.edge_count() == n * n.saturating_sub(1) / 2
}

/// Vertices adjacent to every other vertex.
pub fn universal_vertices(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    (0..n).filter(|&v| g.degree(v) + 1 == n).collect()
}

/// The parts when `g` is complete multipartite (its complement is a disjoint
/// union of cliques), else `None`. Complete graphs give singleton parts and
/// edgeless graphs give one part.
pub fn complete_multipartite_parts(g: &SimpleGraph) -> Option<Vec<Vec<usize>>> {
    if g.is_null() {
        return None;
    }
    let comp = g.complement();
    let parts = components(&comp);
    let cliques = parts.iter().all(|p| {
        p.iter()
            .enumerate()
            .all(|(i, &a)| p[i + 1..].iter().all(|&b| comp.has_edge(a, b)))
    });
    cliques.then_some(parts)
}

/// `K_{1,m}` with `m >= 1`.
pub fn is_star(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    if n < 2 || g.edge_count() != n - 1 {
        return false;
    }
    (0..n).any(|c| g.degree(c) == n - 1)
}

/// Every invariant the theorem checks consult. Exact searches that ran out
/// of budget leave their field `None` and are named in `aborted`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphInvariants {
    pub null_graph: bool,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub component_count: usize,
    pub component_vertex_sets: Vec<Vec<usize>>,
    pub connected: bool,
    pub diameter: Option<Extent>,
    pub girth: Option<Extent>,
    pub cut_vertices: Vec<usize>,
    pub degree_sequence: Vec<usize>,
    pub regular_degree: Option<usize>,
    pub pendant_vertices: Vec<usize>,
    pub is_complete: bool,
    pub universal_vertices: Vec<usize>,
    pub complete_multipartite_parts: Option<Vec<Vec<usize>>>,
    pub is_star: bool,
    pub clique_number: Option<usize>,
    pub max_clique: Option<Vec<usize>>,
    pub independence_number: Option<usize>,
    pub max_independent_set: Option<Vec<usize>>,
    pub domination_number: Option<usize>,
    pub min_dominating_set: Option<Vec<usize>>,
    pub aborted: Vec<String>,
}

impl GraphInvariants {
    pub fn compute(g: &SimpleGraph, max_search_nodes: u64) -> Self {
        let null = g.is_null();
        let comps = components(g);
        let mut aborted = Vec::new();
        let mut exact = |r: Result<super::SearchResult>, name: &str| match r {
            Ok(r) => (Some(r.value), Some(r.witness)),
            Err(_) => {
                aborted.push(name.to_string());
                (None, None)
            }
        };
        let (omega, clique) = exact(clique_number(g, max_search_nodes), "clique_number");
        let (alpha, indep) = exact(
            independence_number(g, max_search_nodes),
            "independence_number",
        );
        let (gamma, dom) = exact(domination_number(g, max_search_nodes), "domination_number");
        let gate = |x: Option<usize>| if null { None } else { x };
        GraphInvariants {
            null_graph: null,
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            component_count: comps.len(),
            connected: comps.len() == 1,
            component_vertex_sets: comps,
            diameter: diameter(g),
            girth: (!null).then(|| girth(g)),
            cut_vertices: cut_vertices(g),
            degree_sequence: degrees(g),
            regular_degree: regular_degree(g),
            pendant_vertices: pendant_vertices(g),
            is_complete: !null && is_complete(g),
            universal_vertices: universal_vertices(g),
            complete_multipartite_parts: complete_multipartite_parts(g),
            is_star: is_star(g),
            clique_number: gate(omega),
            max_clique: if null { None } else { clique },
            independence_number: gate(alpha),
            max_independent_set: if null { None } else { indep },
            domination_number: gate(gamma),
            min_dominating_set: if null { None } else { dom },
            aborted,
        }
    }
}
