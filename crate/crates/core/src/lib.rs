//! Large sum graphs of finite modules.
//!
//! For a finite module `M` over `Z` or `Z/n`, the large sum graph has the
//! nonzero non-large (non-essential) submodules as vertices, with `N -- K`
//! whenever `N + K` is non-large. This crate enumerates submodule lattices,
//! decides the module predicates involved, builds the graph, computes exact
//! graph invariants, and checks the known structural theorems about these
//! graphs over corpora of modules.

mod arith;
pub mod error;
pub mod graph;
pub mod harness;
pub mod lattice;
pub mod module;
pub mod predicates;
pub mod ring;
pub mod submodule;

pub use error::{Error, Result};
pub use graph::{build_graph, Extent, GraphInvariants, LargeSumGraph, SimpleGraph};
pub use lattice::{enumerate_submodules, SubmoduleLattice};
pub use module::{Caps, Element, FiniteModule, ModuleSpec};
pub use predicates::PredicateReport;
pub use ring::{Ideal, RingSpec};
pub use submodule::{
    annihilator_in_module, annihilator_in_ring, quotient_module, Quotient, Submodule,
};

pub mod arithmetic {
    //! Small integer helpers shared with tests and the harness.
    pub use crate::arith::{factorize, gcd, is_prime, lcm};
}
