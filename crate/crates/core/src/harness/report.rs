use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::corpus::CorpusSpec;
use super::theorems::{evaluate, ModuleAnalysis, Status, TheoremId, Witness};
use crate::error::{Error, Result};
use crate::graph::Extent;
use crate::module::{Caps, ModuleSpec};
use crate::predicates::SubmoduleSummary;

/// Outcome of one claim on one module. `holds` is `None` when the claim is
/// not applicable or the check was inconclusive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub theorem_id: TheoremId,
    pub module_spec: String,
    pub applicable: bool,
    pub holds: Option<bool>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl TheoremVerdict {
    pub fn is_violation(&self) -> bool {
        self.status == Status::Violated
    }
}

/// Checks `id` on an analysed module with every hypothesis enforced.
pub fn check_theorem(id: TheoremId, analysis: &ModuleAnalysis) -> TheoremVerdict {
    verdict(id, analysis, true)
}

fn verdict(id: TheoremId, analysis: &ModuleAnalysis, gated: bool) -> TheoremVerdict {
    let e = evaluate(id, analysis, gated);
    TheoremVerdict {
        theorem_id: id,
        module_spec: analysis.spec.to_string(),
        applicable: e.status != Status::NotApplicable,
        holds: match e.status {
            Status::Holds => Some(true),
            Status::Violated => Some(false),
            _ => None,
        },
        status: e.status,
        reason: e.reason,
        witness: e.witness,
        note: e.note,
    }
}

/// A conclusion that fails once the comultiplication hypothesis is dropped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub module_spec: String,
    pub theorem_id: TheoremId,
    pub statement: &'static str,
    /// Submodule `N` with `N != Ann_M(Ann_R(N))`.
    pub comultiplication_witness: Option<SubmoduleSummary>,
    pub double_annihilator: Option<SubmoduleSummary>,
    pub witness: Option<Witness>,
}

/// For a non-comultiplication module, every claim whose conclusion fails
/// when checked without that hypothesis.
pub fn counterexample_catalog(analysis: &ModuleAnalysis, ids: &[TheoremId]) -> Vec<CatalogEntry> {
    if analysis.report.is_comultiplication() || analysis.module.is_zero_module() {
        return Vec::new();
    }
    let comult = &analysis.report.comultiplication;
    ids.iter()
        .map(|&id| (id, verdict(id, analysis, false)))
        .filter(|(_, v)| v.is_violation())
        .map(|(id, v)| CatalogEntry {
            module_spec: v.module_spec,
            theorem_id: id,
            statement: id.statement(),
            comultiplication_witness: comult.witness.as_ref().map(Into::into),
            double_annihilator: comult.witness_closure.as_ref().map(Into::into),
            witness: v.witness,
        })
        .collect()
}

/// One row of the per-module summary table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ModuleRecord {
    pub module: String,
    pub order: Option<u64>,
    pub comultiplication: Option<bool>,
    pub min_count: Option<usize>,
    pub vertex_count: Option<usize>,
    pub edge_count: Option<usize>,
    pub connected: Option<bool>,
    pub diameter: Option<Extent>,
    pub girth: Option<Extent>,
    pub omega: Option<usize>,
    pub alpha: Option<usize>,
    pub gamma: Option<usize>,
    pub violations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub applicable: usize,
    pub holds: usize,
    pub violated: usize,
    pub not_applicable: usize,
    pub inconclusive: usize,
}

impl Counts {
    fn add(&mut self, status: Status) {
        match status {
            Status::Holds => self.holds += 1,
            Status::Violated => self.violated += 1,
            Status::NotApplicable => self.not_applicable += 1,
            Status::Inconclusive => self.inconclusive += 1,
        }
        if status != Status::NotApplicable {
            self.applicable += 1;
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub modules: usize,
    pub module_errors: usize,
    pub cap_errors: usize,
    pub comultiplication_modules: usize,
    pub total: Counts,
    pub by_theorem: BTreeMap<String, Counts>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleError {
    pub module: String,
    pub error: String,
    pub cap_exceeded: bool,
}

/// Full output of a suite run. Serialization is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub corpus: CorpusSpec,
    pub theorems: Vec<TheoremId>,
    pub modules: Vec<ModuleRecord>,
    pub verdicts: Vec<TheoremVerdict>,
    pub summary: Summary,
    pub errors: Vec<ModuleError>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub catalog: Option<Vec<CatalogEntry>>,
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub theorems: Vec<TheoremId>,
    pub caps: Caps,
    pub catalog: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            theorems: TheoremId::THEOREMS.to_vec(),
            caps: Caps::default(),
            catalog: false,
        }
    }
}

struct ModuleOutcome {
    record: ModuleRecord,
    verdicts: Vec<TheoremVerdict>,
    catalog: Vec<CatalogEntry>,
    comultiplication: bool,
    error: Option<ModuleError>,
}

fn run_module(spec: &ModuleSpec, opts: &SuiteOptions) -> ModuleOutcome {
    let name = spec.to_string();
    let analysis = match ModuleAnalysis::new(spec, &opts.caps) {
        Ok(a) => a,
        Err(e) => {
            return ModuleOutcome {
                record: ModuleRecord {
                    module: name.clone(),
                    order: None,
                    comultiplication: None,
                    min_count: None,
                    vertex_count: None,
                    edge_count: None,
                    connected: None,
                    diameter: None,
                    girth: None,
                    omega: None,
                    alpha: None,
                    gamma: None,
                    violations: 0,
                    error: Some(e.to_string()),
                },
                verdicts: Vec::new(),
                catalog: Vec::new(),
                comultiplication: false,
                error: Some(ModuleError {
                    module: name,
                    error: e.to_string(),
                    cap_exceeded: e.is_cap(),
                }),
            }
        }
    };
    let verdicts: Vec<TheoremVerdict> = opts
        .theorems
        .iter()
        .map(|&id| check_theorem(id, &analysis))
        .collect();
    let catalog = if opts.catalog {
        counterexample_catalog(&analysis, &opts.theorems)
    } else {
        Vec::new()
    };
    let inv = &analysis.invariants;
    let record = ModuleRecord {
        module: name,
        order: Some(analysis.module.order()),
        comultiplication: Some(analysis.report.is_comultiplication()),
        min_count: Some(analysis.min_count()),
        vertex_count: Some(inv.vertex_count),
        edge_count: Some(inv.edge_count),
        connected: Some(inv.connected),
        diameter: inv.diameter,
        girth: inv.girth,
        omega: inv.clique_number,
        alpha: inv.independence_number,
        gamma: inv.domination_number,
        violations: verdicts.iter().filter(|v| v.is_violation()).count(),
        error: None,
    };
    ModuleOutcome {
        record,
        comultiplication: analysis.report.is_comultiplication(),
        verdicts,
        catalog,
        error: None,
    }
}

/// Runs every selected claim on every module of the corpus. Modules are
/// processed in parallel; results keep corpus order, and a failure on one
/// module is recorded without stopping the others.
pub fn run_suite(corpus: &CorpusSpec, opts: &SuiteOptions) -> SuiteReport {
    let specs = corpus.modules();
    let outcomes: Vec<ModuleOutcome> = specs.par_iter().map(|s| run_module(s, opts)).collect();

    let mut summary = Summary {
        modules: specs.len(),
        ..Summary::default()
    };
    for id in &opts.theorems {
        summary.by_theorem.insert(id.to_string(), Counts::default());
    }
    let mut report = SuiteReport {
        corpus: corpus.clone(),
        theorems: opts.theorems.clone(),
        modules: Vec::with_capacity(outcomes.len()),
        verdicts: Vec::new(),
        summary: Summary::default(),
        errors: Vec::new(),
        catalog: opts.catalog.then(Vec::new),
    };
    for o in outcomes {
        if o.comultiplication {
            summary.comultiplication_modules += 1;
        }
        if let Some(e) = o.error {
            summary.module_errors += 1;
            if e.cap_exceeded {
                summary.cap_errors += 1;
            }
            report.errors.push(e);
        }
        for v in &o.verdicts {
            summary.total.add(v.status);
            summary
                .by_theorem
                .get_mut(v.theorem_id.as_str())
                .expect("theorem registered")
                .add(v.status);
        }
        report.modules.push(o.record);
        report.verdicts.extend(o.verdicts);
        if let Some(c) = report.catalog.as_mut() {
            c.extend(o.catalog);
        }
    }
    report.summary = summary;
    report
}

impl SuiteReport {
    pub fn violations(&self) -> impl Iterator<Item = &TheoremVerdict> {
        self.verdicts.iter().filter(|v| v.is_violation())
    }

    pub fn has_inconclusive(&self) -> bool {
        self.summary.total.inconclusive > 0 || self.summary.cap_errors > 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Per-module summary table.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "module",
            "order",
            "comultiplication",
            "minCount",
            "vertexCount",
            "edgeCount",
            "connected",
            "diameter",
            "girth",
            "omega",
            "alpha",
            "gamma",
            "violations",
        ])
        .map_err(csv_err)?;
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map(ToString::to_string).unwrap_or_default()
        }
        for m in &self.modules {
            w.write_record([
                m.module.clone(),
                opt(&m.order),
                opt(&m.comultiplication),
                opt(&m.min_count),
                opt(&m.vertex_count),
                opt(&m.edge_count),
                opt(&m.connected),
                opt(&m.diameter),
                opt(&m.girth),
                opt(&m.omega),
                opt(&m.alpha),
                opt(&m.gamma),
                m.violations.to_string(),
            ])
            .map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
    }

    /// Short human-readable summary, one line per claim.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "corpus: {}\nmodules: {} ({} comultiplication, {} errors)\n",
            self.corpus,
            self.summary.modules,
            self.summary.comultiplication_modules,
            self.summary.module_errors
        );
        for id in &self.theorems {
            let c = &self.summary.by_theorem[id.as_str()];
            out.push_str(&format!(
                "{:<8} applicable {:>4}  holds {:>4}  violated {:>4}  inconclusive {:>4}\n",
                id.as_str(),
                c.applicable,
                c.holds,
                c.violated,
                c.inconclusive
            ));
        }
        for v in self.violations() {
            let detail = v.witness.as_ref().map(|w| w.detail.as_str()).unwrap_or("");
            out.push_str(&format!(
                "VIOLATION {} on {}: {}\n",
                v.theorem_id, v.module_spec, detail
            ));
        }
        if let Some(cat) = &self.catalog {
            for c in cat {
                out.push_str(&format!(
                    "CATALOG {} on {}: {}\n",
                    c.theorem_id, c.module_spec, c.statement
                ));
            }
        }
        out
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Internal(e.to_string())
}
