use std::fmt::Write;

use lsg_core::harness::ModuleAnalysis;
use lsg_core::predicates::SubmoduleSummary;
use serde_json::json;

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref()
        .map_or_else(|| "aborted".to_string(), ToString::to_string)
}

pub fn text(a: &ModuleAnalysis) -> String {
    let r = &a.report;
    let mut out = String::new();
    writeln!(out, "module: {}", a.spec).unwrap();
    writeln!(out, "order: {}", a.module.order()).unwrap();
    writeln!(out, "exponent: {}", a.module.exponent()).unwrap();
    writeln!(out, "submodules: {}", a.lattice.len()).unwrap();
    writeln!(out, "minimal submodules: {}", r.min_count()).unwrap();
    for s in &r.minimal_submodules {
        writeln!(out, "  {}", s.label()).unwrap();
    }
    writeln!(out, "socle: {}", r.socle.label()).unwrap();
    writeln!(
        out,
        "socle is whole module: {}",
        r.socle.order() == a.module.order()
    )
    .unwrap();
    writeln!(out, "comultiplication: {}", r.is_comultiplication()).unwrap();
    if let (Some(n), Some(c)) = (
        &r.comultiplication.witness,
        &r.comultiplication.witness_closure,
    ) {
        writeln!(
            out,
            "  witness: {} has double annihilator {}",
            n.label(),
            c.label()
        )
        .unwrap();
    }
    writeln!(out, "cocyclic: {}", r.is_cocyclic).unwrap();
    writeln!(out, "uniform: {}", r.is_uniform).unwrap();
    writeln!(out, "simple: {}", r.is_simple).unwrap();
    writeln!(out, "finitely cogenerated: {}", r.is_finitely_cogenerated).unwrap();
    out
}

pub fn json(a: &ModuleAnalysis) -> String {
    let r = &a.report;
    let summary = |s| SubmoduleSummary::from(s);
    let doc = json!({
        "module": a.spec.to_string(),
        "order": a.module.order(),
        "exponent": a.module.exponent(),
        "submodule_count": a.lattice.len(),
        "min_count": r.min_count(),
        "minimal_submodules": r.minimal_submodules.iter().map(summary).collect::<Vec<_>>(),
        "socle": summary(&r.socle),
        "comultiplication": r.is_comultiplication(),
        "comultiplication_witness": r.comultiplication.witness.as_ref().map(summary),
        "double_annihilator": r.comultiplication.witness_closure.as_ref().map(summary),
        "cocyclic": r.is_cocyclic,
        "uniform": r.is_uniform,
        "simple": r.is_simple,
        "finitely_cogenerated": r.is_finitely_cogenerated,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("describe serializes");
    s.push('\n');
    s
}

pub fn invariants_text(a: &ModuleAnalysis) -> String {
    let i = &a.invariants;
    let mut out = String::new();
    writeln!(out, "module: {}", a.spec).unwrap();
    if i.null_graph {
        writeln!(out, "null graph").unwrap();
        return out;
    }
    writeln!(out, "vertices: {}", i.vertex_count).unwrap();
    for (v, s) in a.graph.vertices().iter().enumerate() {
        writeln!(out, "  v{v} {}", s.label()).unwrap();
    }
    writeln!(out, "edges: {}", i.edge_count).unwrap();
    writeln!(out, "components: {}", i.component_count).unwrap();
    writeln!(out, "diameter: {}", opt(&i.diameter)).unwrap();
    writeln!(out, "girth: {}", opt(&i.girth)).unwrap();
    writeln!(out, "cut vertices: {:?}", i.cut_vertices).unwrap();
    writeln!(out, "degrees: {:?}", i.degree_sequence).unwrap();
    writeln!(out, "clique number: {}", opt(&i.clique_number)).unwrap();
    writeln!(out, "independence number: {}", opt(&i.independence_number)).unwrap();
    writeln!(out, "domination number: {}", opt(&i.domination_number)).unwrap();
    out
}
