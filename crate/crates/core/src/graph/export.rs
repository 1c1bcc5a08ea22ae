//! DOT and JSON renderings of a [`LargeSumGraph`]. Both are byte-stable.

use std::fmt::Write;

use serde::Serialize;

use super::{GraphInvariants, LargeSumGraph};

/// Undirected DOT with vertex ids `v<k>` and labels `o=<order>;g=<generators>`.
pub fn to_dot(g: &LargeSumGraph) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", g.spec()).unwrap();
    for (k, v) in g.vertices().iter().enumerate() {
        writeln!(out, "  v{k} [label=\"{}\"];", v.label()).unwrap();
    }
    for (a, b) in g.graph().edges() {
        writeln!(out, "  v{a} -- v{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexRecord {
    pub id: usize,
    pub order: u64,
    pub generators: Vec<Vec<u64>>,
    pub minimal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphDocument {
    pub module: String,
    pub null_graph: bool,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<[usize; 2]>,
    pub invariants: GraphInvariants,
}

impl GraphDocument {
    pub fn new(g: &LargeSumGraph, invariants: GraphInvariants) -> Self {
        GraphDocument {
            module: g.spec().to_string(),
            null_graph: g.is_null(),
            vertices: g
                .vertices()
                .iter()
                .enumerate()
                .map(|(id, v)| VertexRecord {
                    id,
                    order: v.order(),
                    generators: v.generators().iter().map(|e| e.coords().to_vec()).collect(),
                    minimal: g.is_minimal(id),
                })
                .collect(),
            edges: g.graph().edges().into_iter().map(|(a, b)| [a, b]).collect(),
            invariants,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("graph document serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::module::{Caps, FiniteModule};
    use crate::ring::RingSpec;

    fn g(orders: &[u64]) -> LargeSumGraph {
        build_graph(
            &FiniteModule::new(RingSpec::Integers, orders).unwrap(),
            &Caps::default(),
        )
        .unwrap()
    }

    #[test]
    fn dot_z12() {
        assert_eq!(
            to_dot(&g(&[12])),
            "graph \"Z:12\" {\n  v0 [label=\"o=2;g=(6)\"];\n  v1 [label=\"o=3;g=(4)\"];\n  \
             v2 [label=\"o=4;g=(3)\"];\n  v0 -- v2;\n}\n"
        );
    }

    #[test]
    fn json_null_graph() {
        let graph = g(&[8]);
        let inv = GraphInvariants::compute(graph.graph(), 1000);
        let v: serde_json::Value =
            serde_json::from_str(&GraphDocument::new(&graph, inv).to_json()).unwrap();
        assert_eq!(v["null_graph"], true);
        assert_eq!(v["vertices"].as_array().unwrap().len(), 0);
        assert_eq!(v["module"], "Z:8");
    }
}
