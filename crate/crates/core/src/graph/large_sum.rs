use super::SimpleGraph;
use crate::error::Result;
use crate::lattice::SubmoduleLattice;
use crate::module::{Caps, FiniteModule, ModuleSpec};
use crate::predicates::PredicateReport;
use crate::submodule::Submodule;

/// The large sum graph of a module: nonzero non-large submodules, with
/// `N -- K` whenever `N + K` is non-large. Frozen after construction.
#[derive(Debug, Clone)]
pub struct LargeSumGraph {
    spec: ModuleSpec,
    vertices: Vec<Submodule>,
    lattice_indices: Vec<usize>,
    minimal: Vec<bool>,
    graph: SimpleGraph,
}

impl LargeSumGraph {
    /// Builds the graph from an enumerated lattice and its predicate report.
    pub fn from_lattice(lattice: &SubmoduleLattice, report: &PredicateReport) -> Self {
        let lattice_indices: Vec<usize> = (0..lattice.len())
            .filter(|&i| !lattice.get(i).is_zero() && !report.large[i])
            .collect();
        let n = lattice_indices.len();
        let mut graph = SimpleGraph::new(n);
        for a in 0..n {
            for b in a + 1..n {
                let join = lattice.join(lattice_indices[a], lattice_indices[b]);
                if !report.large[join] {
                    graph.add_edge(a, b);
                }
            }
        }
        LargeSumGraph {
            spec: lattice.module().spec(),
            vertices: lattice_indices
                .iter()
                .map(|&i| lattice.get(i).clone())
                .collect(),
            minimal: lattice_indices
                .iter()
                .map(|i| report.minimal_indices.binary_search(i).is_ok())
                .collect(),
            lattice_indices,
            graph,
        }
    }

    pub fn spec(&self) -> &ModuleSpec {
        &self.spec
    }

    pub fn vertices(&self) -> &[Submodule] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &Submodule {
        &self.vertices[v]
    }

    pub fn lattice_index(&self, v: usize) -> usize {
        self.lattice_indices[v]
    }

    /// Vertex position of a lattice index, if that submodule is a vertex.
    pub fn vertex_of_lattice_index(&self, i: usize) -> Option<usize> {
        self.lattice_indices.binary_search(&i).ok()
    }

    pub fn is_minimal(&self, v: usize) -> bool {
        self.minimal[v]
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_null(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Enumerates the lattice, decides largeness and builds the graph.
pub fn build_graph(module: &FiniteModule, caps: &Caps) -> Result<LargeSumGraph> {
    let lattice = SubmoduleLattice::enumerate(module, caps)?;
    let report = PredicateReport::compute(&lattice)?;
    Ok(LargeSumGraph::from_lattice(&lattice, &report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::Element;
    use crate::predicates::is_large_brute;
    use crate::ring::RingSpec;

    fn graph_of(orders: &[u64]) -> LargeSumGraph {
        let m = FiniteModule::new(RingSpec::Integers, orders).unwrap();
        build_graph(&m, &Caps::default()).unwrap()
    }

    fn orders(g: &LargeSumGraph) -> Vec<u64> {
        g.vertices().iter().map(|v| v.order()).collect()
    }

    #[test]
    fn z2_z4_graph() {
        let g = graph_of(&[2, 4]);
        assert_eq!(g.vertex_count(), 5);
        let gen = |v: usize| g.vertex(v).generators();
        let e = |c: &[u64]| vec![Element::new(c.to_vec())];
        // Canonical order: N2, N3, N5, N1, N4.
        assert_eq!(gen(0), e(&[0, 2]));
        assert_eq!(gen(1), e(&[1, 0]));
        assert_eq!(gen(2), e(&[1, 2]));
        assert_eq!(gen(3), e(&[0, 1]));
        assert_eq!(gen(4), e(&[1, 1]));
        // N1–N2 and N2–N4.
        assert_eq!(g.graph().edges(), vec![(0, 3), (0, 4)]);
        assert_eq!(
            (0..5).filter(|&v| g.is_minimal(v)).collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
    }

    #[test]
    fn simple_module_is_null() {
        assert!(graph_of(&[7]).is_null());
        assert!(graph_of(&[8]).is_null());
    }

    #[test]
    fn z30_graph() {
        let g = graph_of(&[30]);
        assert_eq!(orders(&g), vec![2, 3, 5, 6, 10, 15]);
        assert_eq!(g.graph().edge_count(), 9);
        // Adjacent iff lcm of the orders is not 30.
        for a in 0..6 {
            for b in a + 1..6 {
                let l = crate::arith::lcm(g.vertex(a).order(), g.vertex(b).order());
                assert_eq!(g.graph().has_edge(a, b), l != 30);
            }
        }
    }

    #[test]
    fn edges_follow_the_definition() {
        for ords in [&[2u64, 4][..], &[12], &[2, 2, 2], &[4, 6]] {
            let m = FiniteModule::new(RingSpec::Integers, ords).unwrap();
            let lattice = SubmoduleLattice::enumerate(&m, &Caps::default()).unwrap();
            let g = build_graph(&m, &Caps::default()).unwrap();
            for s in lattice.submodules() {
                let is_vertex = g.vertices().contains(s);
                assert_eq!(is_vertex, !s.is_zero() && !is_large_brute(&lattice, s));
            }
            for a in 0..g.vertex_count() {
                for b in a + 1..g.vertex_count() {
                    let sum = g.vertex(a).sum(g.vertex(b)).unwrap();
                    assert_eq!(g.graph().has_edge(a, b), !is_large_brute(&lattice, &sum));
                }
            }
        }
    }
}
