//! One check per structural claim about large sum graphs.
//!
//! Every check first gates on the claim's hypotheses and then evaluates its
//! conclusion on the exact data in a [`ModuleAnalysis`]. The comultiplication
//! hypothesis can be switched off, which is how the counterexample catalog
//! shows that it cannot be dropped.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Extent, GraphInvariants, LargeSumGraph};
use crate::lattice::SubmoduleLattice;
use crate::module::{Caps, FiniteModule, ModuleSpec};
use crate::predicates::{is_second, is_uniform, PredicateReport, SubmoduleSummary};
use crate::submodule::{quotient_module, Submodule};

/// Identifiers of the checked claims. The first seventeen are the graph
/// theorems; the `L*` ids are the supporting lemmas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    T2_4,
    T2_5,
    T2_6,
    T2_7,
    T2_8,
    T2_9,
    T2_10,
    P2_11i,
    P2_11ii,
    T2_12i,
    T2_12ii,
    T2_13a,
    T2_13b,
    P3_1i,
    P3_1iii,
    T3_3,
    T3_4,
    L2_2a,
    L2_2b,
    L2_2c,
    L2_3,
    L2_51,
}

impl TheoremId {
    pub const THEOREMS: [TheoremId; 17] = [
        TheoremId::T2_4,
        TheoremId::T2_5,
        TheoremId::T2_6,
        TheoremId::T2_7,
        TheoremId::T2_8,
        TheoremId::T2_9,
        TheoremId::T2_10,
        TheoremId::P2_11i,
        TheoremId::P2_11ii,
        TheoremId::T2_12i,
        TheoremId::T2_12ii,
        TheoremId::T2_13a,
        TheoremId::T2_13b,
        TheoremId::P3_1i,
        TheoremId::P3_1iii,
        TheoremId::T3_3,
        TheoremId::T3_4,
    ];

    pub const LEMMAS: [TheoremId; 5] = [
        TheoremId::L2_2a,
        TheoremId::L2_2b,
        TheoremId::L2_2c,
        TheoremId::L2_3,
        TheoremId::L2_51,
    ];

    pub fn all() -> Vec<TheoremId> {
        Self::THEOREMS
            .iter()
            .chain(&Self::LEMMAS)
            .copied()
            .collect()
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::T2_4 => "T2.4",
            TheoremId::T2_5 => "T2.5",
            TheoremId::T2_6 => "T2.6",
            TheoremId::T2_7 => "T2.7",
            TheoremId::T2_8 => "T2.8",
            TheoremId::T2_9 => "T2.9",
            TheoremId::T2_10 => "T2.10",
            TheoremId::P2_11i => "P2.11i",
            TheoremId::P2_11ii => "P2.11ii",
            TheoremId::T2_12i => "T2.12i",
            TheoremId::T2_12ii => "T2.12ii",
            TheoremId::T2_13a => "T2.13a",
            TheoremId::T2_13b => "T2.13b",
            TheoremId::P3_1i => "P3.1i",
            TheoremId::P3_1iii => "P3.1iii",
            TheoremId::T3_3 => "T3.3",
            TheoremId::T3_4 => "T3.4",
            TheoremId::L2_2a => "L2.2a",
            TheoremId::L2_2b => "L2.2b",
            TheoremId::L2_2c => "L2.2c",
            TheoremId::L2_3 => "L2.3",
            TheoremId::L2_51 => "L2.51",
        }
    }

    /// One-line statement of the conclusion being checked.
    pub fn statement(&self) -> &'static str {
        match self {
            TheoremId::T2_4 => "graph is null iff M is cocyclic",
            TheoremId::T2_5 => {
                "graph is empty iff Min(M) = {S1, S2} with M/S1, M/S2 finitely cogenerated uniform"
            }
            TheoremId::T2_6 => "disconnected iff |Min(M)| = 2 iff two disjoint complete components",
            TheoremId::T2_7 => "connected graph has diameter at most 2",
            TheoremId::T2_8 => "graph with a cycle has girth 3",
            TheoremId::T2_9 => "connected graph has no cut vertex",
            TheoremId::T2_10 => "graph is not complete n-partite (n >= 2)",
            TheoremId::P2_11i => "no vertex is adjacent to every other vertex",
            TheoremId::P2_11ii => "graph is not complete",
            TheoremId::T2_12i => {
                "pendant vertex exists iff |Min(M)| = 2 and a complete component has 2 vertices"
            }
            TheoremId::T2_12ii => "graph is not a star",
            TheoremId::T2_13a => "N ⊆ K implies deg(N) <= deg(K)",
            TheoremId::T2_13b => "r-regular graph has |Min(M)| = 2 and 2r + 2 vertices",
            TheoremId::P3_1i => "non-empty graph has clique number >= |Min(M)|",
            TheoremId::P3_1iii => "clique number >= 2^(|Min(M)| - 1) - 1",
            TheoremId::T3_3 => "domination number is exactly 2",
            TheoremId::T3_4 => "independence number equals |Min(M)|",
            TheoremId::L2_2a => "every nonzero submodule contains a minimal submodule",
            TheoremId::L2_2b => "N is large iff Soc(M) ⊆ N",
            TheoremId::L2_2c => {
                "second S: N + K ⊆ S gives N ⊆ S or K ⊆ S, and S ⊆ N + K gives S ⊆ N or S ⊆ K"
            }
            TheoremId::L2_3 => "sums of proper nonempty subsets of Min(M) are non-large",
            TheoremId::L2_51 => "M is uniform iff M is cocyclic",
        }
    }

    pub fn is_lemma(&self) -> bool {
        Self::LEMMAS.contains(self)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::all()
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: "unknown theorem id".into(),
            })
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// A vertex named in a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexRef {
    pub id: usize,
    pub order: u64,
    pub generators: Vec<Vec<u64>>,
}

/// Structured evidence attached to a failed conclusion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub detail: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub vertices: Vec<VertexRef>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub submodules: Vec<SubmoduleSummary>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, String>,
}

impl Witness {
    fn new(detail: impl Into<String>) -> Self {
        Witness {
            detail: detail.into(),
            vertices: Vec::new(),
            submodules: Vec::new(),
            values: BTreeMap::new(),
        }
    }

    fn value(mut self, key: &str, v: impl ToString) -> Self {
        self.values.insert(key.to_string(), v.to_string());
        self
    }

    fn vertex(mut self, g: &LargeSumGraph, v: usize) -> Self {
        let s = g.vertex(v);
        self.vertices.push(VertexRef {
            id: v,
            order: s.order(),
            generators: s.generators().iter().map(|e| e.coords().to_vec()).collect(),
        });
        self
    }

    fn submodule(mut self, s: &Submodule) -> Self {
        self.submodules.push(s.into());
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Violated,
    NotApplicable,
    Inconclusive,
}

/// Result of evaluating one claim on one module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub status: Status,
    /// Why the claim was not applicable or was inconclusive.
    pub reason: Option<String>,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

impl Evaluation {
    fn not_applicable(reason: impl Into<String>) -> Self {
        Evaluation {
            status: Status::NotApplicable,
            reason: Some(reason.into()),
            witness: None,
            note: None,
        }
    }

    fn inconclusive(reason: impl Into<String>) -> Self {
        Evaluation {
            status: Status::Inconclusive,
            reason: Some(reason.into()),
            witness: None,
            note: None,
        }
    }

    fn holds() -> Self {
        Evaluation {
            status: Status::Holds,
            reason: None,
            witness: None,
            note: None,
        }
    }

    fn verdict(ok: bool, witness: impl FnOnce() -> Witness) -> Self {
        if ok {
            Evaluation::holds()
        } else {
            Evaluation {
                status: Status::Violated,
                reason: None,
                witness: Some(witness()),
                note: None,
            }
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Everything computed about one module: lattice, predicates, graph and
/// graph invariants.
#[derive(Debug, Clone)]
pub struct ModuleAnalysis {
    pub spec: ModuleSpec,
    pub module: FiniteModule,
    pub lattice: SubmoduleLattice,
    pub report: PredicateReport,
    pub graph: LargeSumGraph,
    pub invariants: GraphInvariants,
    pub caps: Caps,
}

impl ModuleAnalysis {
    pub fn new(spec: &ModuleSpec, caps: &Caps) -> Result<Self> {
        let module = spec.build(caps)?;
        let lattice = SubmoduleLattice::enumerate(&module, caps)?;
        let report = PredicateReport::compute(&lattice)?;
        let graph = LargeSumGraph::from_lattice(&lattice, &report);
        let invariants = GraphInvariants::compute(graph.graph(), caps.max_search_nodes);
        Ok(ModuleAnalysis {
            spec: spec.clone(),
            module,
            lattice,
            report,
            graph,
            invariants,
            caps: *caps,
        })
    }

    pub fn min_count(&self) -> usize {
        self.report.min_count()
    }

    /// Exactly two components, each inducing a complete subgraph.
    pub fn is_two_complete_components(&self) -> bool {
        let comps = &self.invariants.component_vertex_sets;
        comps.len() == 2
            && comps.iter().all(|c| {
                c.iter().enumerate().all(|(i, &a)| {
                    c[i + 1..]
                        .iter()
                        .all(|&b| self.graph.graph().has_edge(a, b))
                })
            })
    }

    /// The quotient-module side of the empty-graph characterization:
    /// `Some(flags)` with one `(finitely cogenerated, uniform)` pair per
    /// minimal submodule.
    pub fn quotient_conditions(&self) -> Result<Vec<(bool, bool)>> {
        self.report
            .minimal_submodules
            .iter()
            .map(|s| {
                let q = quotient_module(&self.module, s)?;
                let lattice = SubmoduleLattice::enumerate(&q.module, &self.caps)?;
                Ok((
                    crate::predicates::is_finitely_cogenerated(&q.module),
                    is_uniform(&lattice),
                ))
            })
            .collect()
    }

    /// Vertex ids of the sums `Σ_{S ∈ X} S` over nonempty `X ⊆ Min(M) \ {S_excluded}`,
    /// or `None` when some sum is not a vertex or `|Min(M)|` is too large to enumerate.
    pub fn subset_sum_family(&self, excluded: usize) -> Option<Vec<usize>> {
        let mins = &self.report.minimal_indices;
        if mins.len() > 16 || excluded >= mins.len() {
            return None;
        }
        let rest: Vec<usize> = mins
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != excluded)
            .map(|(_, &i)| i)
            .collect();
        let mut out = Vec::new();
        for mask in 1u32..(1 << rest.len()) {
            let mut acc = self.lattice.zero_index();
            for (bit, &i) in rest.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    acc = self.lattice.join(acc, i);
                }
            }
            out.push(self.graph.vertex_of_lattice_index(acc)?);
        }
        out.sort_unstable();
        out.dedup();
        Some(out)
    }

    /// Whether `vertices` are pairwise adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &a)| {
            vertices[i + 1..]
                .iter()
                .all(|&b| self.graph.graph().has_edge(a, b))
        })
    }
}

/// `2^(m-1) - 1`, saturating.
pub fn subset_clique_bound(min_count: usize) -> u128 {
    if min_count == 0 {
        return 0;
    }
    if min_count > 127 {
        return u128::MAX;
    }
    (1u128 << (min_count - 1)) - 1
}

/// Evaluates one claim. With `require_comultiplication = false` the
/// comultiplication hypothesis is skipped and only structural gates apply.
pub fn evaluate(id: TheoremId, a: &ModuleAnalysis, require_comultiplication: bool) -> Evaluation {
    if require_comultiplication && !a.report.is_comultiplication() {
        return Evaluation::not_applicable("not a comultiplication module");
    }
    if a.module.is_zero_module() {
        return Evaluation::not_applicable("zero module");
    }
    let inv = &a.invariants;
    if !id.is_lemma() && id != TheoremId::T2_4 && inv.null_graph {
        return Evaluation::not_applicable("null graph");
    }
    let g = &a.graph;
    let graph = g.graph();
    let min = a.min_count();

    match id {
        TheoremId::T2_4 => {
            let cocyclic = a.report.is_cocyclic;
            Evaluation::verdict(inv.null_graph == cocyclic, || {
                Witness::new("null graph and cocyclicity disagree")
                    .value("null_graph", inv.null_graph)
                    .value("cocyclic", cocyclic)
            })
        }
        TheoremId::T2_5 => {
            let empty = inv.edge_count == 0;
            let conditions = match a.quotient_conditions() {
                Ok(c) => c,
                Err(e) => return Evaluation::inconclusive(e.to_string()),
            };
            let quotients_ok = conditions.iter().all(|&(fcg, uni)| fcg && uni);
            let rhs = min == 2 && quotients_ok;
            let uniform: Vec<String> = conditions.iter().map(|c| c.1.to_string()).collect();
            Evaluation::verdict(empty == rhs, || {
                Witness::new("empty graph and the minimal-submodule condition disagree")
                    .value("empty_graph", empty)
                    .value("min_count", min)
                    .value("quotients_uniform", uniform.join(","))
            })
            .with_note(format!(
                "quotients M/S finitely cogenerated (always, finite module) and uniform: [{}]",
                uniform.join(",")
            ))
        }
        TheoremId::T2_6 => {
            let disconnected = inv.component_count != 1;
            let two_min = min == 2;
            let two_complete = a.is_two_complete_components();
            let ok = disconnected == two_min && two_min == two_complete;
            let mut eval = Evaluation::verdict(ok, || {
                Witness::new(
                    "disconnected, |Min(M)| = 2 and two complete components are not equivalent",
                )
                .value("disconnected", disconnected)
                .value("min_count", min)
                .value("two_complete_components", two_complete)
                .value(
                    "component_sizes",
                    inv.component_vertex_sets
                        .iter()
                        .map(|c| c.len().to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                )
            });
            if two_min {
                let by_containment: Vec<Vec<usize>> = a
                    .report
                    .minimal_submodules
                    .iter()
                    .map(|s| {
                        (0..g.vertex_count())
                            .filter(|&v| g.vertex(v).contains_submodule(s))
                            .collect()
                    })
                    .collect();
                let mut expected = by_containment.clone();
                expected.sort();
                let matches = expected == inv.component_vertex_sets;
                eval = eval.with_note(format!(
                    "components equal the vertex sets containing S1 and S2: {matches}"
                ));
            }
            eval
        }
        TheoremId::T2_7 => {
            if !inv.connected {
                return Evaluation::not_applicable("graph is not connected");
            }
            let diam = inv.diameter.unwrap_or(Extent::Infinite);
            Evaluation::verdict(diam <= Extent::Finite(2), || {
                let mut w =
                    Witness::new("vertex pair at distance greater than 2").value("diameter", diam);
                'outer: for s in 0..graph.vertex_count() {
                    for (t, d) in bfs_distances(graph, s).into_iter().enumerate() {
                        if d.is_none_or(|d| d > 2) {
                            w = w.vertex(g, s).vertex(g, t);
                            break 'outer;
                        }
                    }
                }
                w
            })
        }
        TheoremId::T2_8 => {
            let girth = inv.girth.unwrap_or(Extent::Infinite);
            if !girth.is_finite() {
                return Evaluation::not_applicable("graph has no cycle");
            }
            Evaluation::verdict(girth == Extent::Finite(3), || {
                Witness::new("shortest cycle is longer than 3").value("girth", girth)
            })
        }
        TheoremId::T2_9 => {
            if !inv.connected {
                return Evaluation::not_applicable("graph is not connected");
            }
            Evaluation::verdict(inv.cut_vertices.is_empty(), || {
                Witness::new("cut vertex").vertex(g, inv.cut_vertices[0])
            })
        }
        TheoremId::T2_10 => {
            let parts = inv
                .complete_multipartite_parts
                .as_ref()
                .filter(|p| p.len() >= 2);
            Evaluation::verdict(parts.is_none(), || {
                let p = parts.unwrap();
                Witness::new("graph is complete multipartite")
                    .value("parts", p.len())
                    .value(
                        "part_sizes",
                        p.iter()
                            .map(|x| x.len().to_string())
                            .collect::<Vec<_>>()
                            .join(","),
                    )
            })
        }
        TheoremId::P2_11i => Evaluation::verdict(inv.universal_vertices.is_empty(), || {
            Witness::new("vertex adjacent to every other vertex")
                .vertex(g, inv.universal_vertices[0])
        }),
        TheoremId::P2_11ii => Evaluation::verdict(!inv.is_complete, || {
            Witness::new("graph is complete").value("vertices", inv.vertex_count)
        }),
        TheoremId::T2_12i => {
            let has_pendant = !inv.pendant_vertices.is_empty();
            let rhs = min == 2
                && a.is_two_complete_components()
                && inv.component_vertex_sets.iter().any(|c| c.len() == 2);
            Evaluation::verdict(has_pendant == rhs, || {
                let w = Witness::new("pendant vertex and component condition disagree")
                    .value("has_pendant", has_pendant)
                    .value("min_count", min);
                match inv.pendant_vertices.first() {
                    Some(&v) => w.vertex(g, v),
                    None => w,
                }
            })
        }
        TheoremId::T2_12ii => Evaluation::verdict(!inv.is_star, || {
            Witness::new("graph is a star").value("vertices", inv.vertex_count)
        }),
        TheoremId::T2_13a => {
            let mut bad = Vec::new();
            for n in 0..g.vertex_count() {
                for k in 0..g.vertex_count() {
                    if n != k
                        && g.vertex(k).contains_submodule(g.vertex(n))
                        && graph.degree(n) > graph.degree(k)
                    {
                        bad.push((n, k));
                    }
                }
            }
            Evaluation::verdict(bad.is_empty(), || {
                let (n, k) = bad[0];
                Witness::new("N ⊆ K but deg(N) > deg(K)")
                    .vertex(g, n)
                    .vertex(g, k)
                    .value("deg_N", graph.degree(n))
                    .value("deg_K", graph.degree(k))
                    .value("violating_pairs", bad.len())
            })
        }
        TheoremId::T2_13b => {
            let Some(r) = inv.regular_degree else {
                return Evaluation::not_applicable("graph is not regular");
            };
            Evaluation::verdict(min == 2 && inv.vertex_count == 2 * r + 2, || {
                Witness::new("regular graph with |Min(M)| != 2 or |V| != 2r + 2")
                    .value("r", r)
                    .value("vertices", inv.vertex_count)
                    .value("min_count", min)
            })
        }
        TheoremId::P3_1i => {
            if inv.edge_count == 0 {
                return Evaluation::not_applicable("graph is empty");
            }
            let Some(omega) = inv.clique_number else {
                return Evaluation::inconclusive("clique search aborted");
            };
            Evaluation::verdict(omega >= min, || {
                Witness::new("clique number below |Min(M)|")
                    .value("omega", omega)
                    .value("min_count", min)
            })
        }
        TheoremId::P3_1iii => {
            let Some(omega) = inv.clique_number else {
                return Evaluation::inconclusive("clique search aborted");
            };
            let bound = subset_clique_bound(min);
            let family = a.subset_sum_family(0);
            let note = match &family {
                Some(f) => format!(
                    "sums over nonempty subsets of Min(M) minus one atom: {} distinct vertices, clique: {}",
                    f.len(),
                    a.is_clique(f)
                ),
                None => "subset-sum family not evaluated".to_string(),
            };
            Evaluation::verdict(omega as u128 >= bound, || {
                Witness::new("clique number below 2^(|Min(M)|-1) - 1")
                    .value("omega", omega)
                    .value("bound", bound)
            })
            .with_note(note)
        }
        TheoremId::T3_3 => {
            let Some(gamma) = inv.domination_number else {
                return Evaluation::inconclusive("domination search aborted");
            };
            Evaluation::verdict(gamma == 2, || {
                Witness::new("domination number is not 2").value("gamma", gamma)
            })
        }
        TheoremId::T3_4 => {
            let Some(alpha) = inv.independence_number else {
                return Evaluation::inconclusive("independent set search aborted");
            };
            Evaluation::verdict(alpha == min, || {
                Witness::new("independence number differs from |Min(M)|")
                    .value("alpha", alpha)
                    .value("min_count", min)
            })
        }
        TheoremId::L2_2a => {
            let mins = &a.report.minimal_submodules;
            let bad = a
                .lattice
                .submodules()
                .iter()
                .find(|n| !n.is_zero() && !mins.iter().any(|s| n.contains_submodule(s)));
            Evaluation::verdict(bad.is_none(), || {
                Witness::new("nonzero submodule without a minimal submodule")
                    .submodule(bad.unwrap())
            })
        }
        TheoremId::L2_2b => {
            let soc = &a.report.socle;
            let bad = a
                .lattice
                .submodules()
                .iter()
                .zip(&a.report.large)
                .find(|(n, &large)| large != n.contains_submodule(soc));
            Evaluation::verdict(bad.is_none(), || {
                let (n, &large) = bad.unwrap();
                Witness::new("largeness disagrees with socle containment")
                    .submodule(n)
                    .value("large", large)
            })
        }
        TheoremId::L2_2c => lemma_second_absorption(a),
        TheoremId::L2_3 => {
            if min <= 1 {
                return Evaluation::not_applicable("|Min(M)| <= 1");
            }
            if min > 20 {
                return Evaluation::inconclusive(
                    "too many minimal submodules to enumerate subsets",
                );
            }
            let mins = &a.report.minimal_indices;
            let full = (1u32 << min) - 1;
            let bad = (1..full).find_map(|mask| {
                let mut acc = a.lattice.zero_index();
                for (bit, &i) in mins.iter().enumerate() {
                    if mask & (1 << bit) != 0 {
                        acc = a.lattice.join(acc, i);
                    }
                }
                a.report.large[acc].then_some(acc)
            });
            Evaluation::verdict(bad.is_none(), || {
                Witness::new("sum of a proper subset of Min(M) is large")
                    .submodule(a.lattice.get(bad.unwrap()))
            })
        }
        TheoremId::L2_51 => {
            Evaluation::verdict(a.report.is_uniform == a.report.is_cocyclic, || {
                Witness::new("uniformity and cocyclicity disagree")
                    .value("uniform", a.report.is_uniform)
                    .value("cocyclic", a.report.is_cocyclic)
            })
        }
    }
}

/// Both readings of second-submodule absorption, over every second
/// submodule found by scanning the lattice.
fn lemma_second_absorption(a: &ModuleAnalysis) -> Evaluation {
    let subs = a.lattice.submodules();
    if subs.len() > 2_000 {
        return Evaluation::inconclusive("lattice too large for the pairwise scan");
    }
    let seconds: Vec<usize> = (0..subs.len())
        .filter(|&i| !subs[i].is_zero() && is_second(&a.module, &subs[i]).unwrap_or(false))
        .collect();
    for &si in &seconds {
        let s = &subs[si];
        for ni in 0..subs.len() {
            for ki in ni..subs.len() {
                let (n, k) = (&subs[ni], &subs[ki]);
                let sum = a.lattice.get(a.lattice.join(ni, ki));
                let literal = !s.contains_submodule(sum)
                    || s.contains_submodule(n)
                    || s.contains_submodule(k);
                let dual = !sum.contains_submodule(s)
                    || n.contains_submodule(s)
                    || k.contains_submodule(s);
                if !literal || !dual {
                    let form = if literal {
                        "S ⊆ N + K"
                    } else {
                        "N + K ⊆ S"
                    };
                    return Evaluation::verdict(false, || {
                        Witness::new(format!("second submodule absorption fails ({form})"))
                            .submodule(s)
                            .submodule(n)
                            .submodule(k)
                    });
                }
            }
        }
    }
    Evaluation::holds().with_note(format!("{} second submodules checked", seconds.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn analyse(s: &str) -> ModuleAnalysis {
        ModuleAnalysis::new(&s.parse().unwrap(), &Caps::default()).unwrap()
    }

    #[test]
    fn ids_round_trip() {
        for id in TheoremId::all() {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert_eq!(TheoremId::all().len(), 22);
        assert!("T9.9".parse::<TheoremId>().is_err());
    }

    #[test]
    fn t2_6_not_applicable_on_z2_z4_but_fails_ungated() {
        let a = analyse("Z:2,4");
        assert_eq!(
            evaluate(TheoremId::T2_6, &a, true).status,
            Status::NotApplicable
        );
        let e = evaluate(TheoremId::T2_6, &a, false);
        assert_eq!(e.status, Status::Violated);
        let w = e.witness.unwrap();
        assert_eq!(w.values["min_count"], "3");
        assert_eq!(w.values["disconnected"], "true");
    }

    #[test]
    fn t2_7_on_z30() {
        assert_eq!(
            evaluate(TheoremId::T2_7, &analyse("Z:30"), true).status,
            Status::Holds
        );
    }

    #[test]
    fn t2_4_on_z8() {
        let a = analyse("Z:8");
        assert!(a.invariants.null_graph);
        assert_eq!(evaluate(TheoremId::T2_4, &a, true).status, Status::Holds);
        assert_eq!(
            evaluate(TheoremId::T2_7, &a, true).status,
            Status::NotApplicable
        );
    }

    #[test]
    fn degree_monotonicity_as_stated_fails_on_z30() {
        let e = evaluate(TheoremId::T2_13a, &analyse("Z:30"), true);
        assert_eq!(e.status, Status::Violated);
        let w = e.witness.unwrap();
        assert_eq!(w.vertices[0].order, 2);
        assert_eq!(w.vertices[1].order, 6);
        assert_eq!(w.values["deg_N"], "4");
        assert_eq!(w.values["deg_K"], "2");
    }

    #[test]
    fn t2_6_note_on_components() {
        let e = evaluate(TheoremId::T2_6, &analyse("Z:12"), true);
        assert_eq!(e.status, Status::Holds);
        assert_eq!(
            e.note.unwrap(),
            "components equal the vertex sets containing S1 and S2: true"
        );
    }

    #[test]
    fn subset_family_for_z210() {
        let a = analyse("Z:210");
        let fam = a.subset_sum_family(0).unwrap();
        assert_eq!(fam.len(), 7);
        assert!(a.is_clique(&fam));
    }

    #[test]
    fn bound() {
        assert_eq!(subset_clique_bound(0), 0);
        assert_eq!(subset_clique_bound(1), 0);
        assert_eq!(subset_clique_bound(4), 7);
        assert_eq!(subset_clique_bound(500), u128::MAX);
    }

    #[test]
    fn zero_module_is_not_applicable() {
        let spec = ModuleSpec::over_z(&[]);
        let a = ModuleAnalysis::new(&spec, &Caps::default()).unwrap();
        for id in TheoremId::all() {
            assert_eq!(evaluate(id, &a, true).status, Status::NotApplicable, "{id}");
        }
    }
}
