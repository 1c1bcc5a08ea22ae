//! Theorem checks over corpora of modules.

mod corpus;
mod report;
mod theorems;

pub use corpus::{CorpusFamily, CorpusSpec, RingPolicy};
pub use report::{
    check_theorem, counterexample_catalog, run_suite, CatalogEntry, Counts, ModuleError,
    ModuleRecord, SuiteOptions, SuiteReport, Summary, TheoremVerdict,
};
pub use theorems::{
    evaluate, subset_clique_bound, Evaluation, ModuleAnalysis, Status, TheoremId, VertexRef,
    Witness,
};
