//! Algebraic predicates on finite modules: minimal submodules, socle,
//! largeness, uniformity, cocyclicity, second submodules and the
//! comultiplication property.

use serde::Serialize;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::lattice::SubmoduleLattice;
use crate::module::FiniteModule;
use crate::submodule::{annihilator_in_module, Submodule};

/// Lattice indices of the minimal submodules (the atoms).
///
/// In a finite abelian group the atoms are exactly the subgroups of prime
/// order.
pub fn minimal_indices(lattice: &SubmoduleLattice) -> Vec<usize> {
    lattice
        .submodules()
        .iter()
        .enumerate()
        .filter(|(_, s)| is_prime(s.order()))
        .map(|(i, _)| i)
        .collect()
}

pub fn minimal_submodules(lattice: &SubmoduleLattice) -> Vec<Submodule> {
    minimal_indices(lattice)
        .into_iter()
        .map(|i| lattice.get(i).clone())
        .collect()
}

/// Sum of all minimal submodules; the zero submodule for the zero module.
pub fn socle(lattice: &SubmoduleLattice) -> Submodule {
    minimal_indices(lattice)
        .into_iter()
        .fold(lattice.get(lattice.zero_index()).clone(), |acc, i| {
            acc.sum(lattice.get(i)).expect("same parent")
        })
}

/// Definitional largeness: `N ∩ L ≠ 0` for every nonzero submodule `L`.
pub fn is_large_brute(lattice: &SubmoduleLattice, n: &Submodule) -> bool {
    lattice
        .submodules()
        .iter()
        .filter(|l| !l.is_zero())
        .all(|l| n.meets_nontrivially(l))
}

/// Socle criterion: `Soc(M) ⊆ N`.
pub fn is_large_by_socle(socle: &Submodule, n: &Submodule) -> bool {
    n.contains_submodule(socle)
}

/// Largeness computed both ways; disagreement is an internal error.
pub fn is_large(lattice: &SubmoduleLattice, n: &Submodule) -> Result<bool> {
    if n.module() != lattice.module() {
        return Err(Error::ParentMismatch);
    }
    let brute = is_large_brute(lattice, n);
    let fast = is_large_by_socle(&socle(lattice), n);
    if brute != fast {
        return Err(Error::Internal(format!(
            "largeness of {n:?}: definition says {brute}, socle criterion says {fast}"
        )));
    }
    Ok(brute)
}

/// Every pair of nonzero submodules meets nontrivially. Vacuously true for
/// the zero module.
pub fn is_uniform(lattice: &SubmoduleLattice) -> bool {
    let nonzero: Vec<&Submodule> = lattice
        .submodules()
        .iter()
        .filter(|s| !s.is_zero())
        .collect();
    nonzero
        .iter()
        .enumerate()
        .all(|(i, a)| nonzero[i + 1..].iter().all(|b| a.meets_nontrivially(b)))
}

/// Soc(M) is simple and large.
pub fn is_cocyclic(lattice: &SubmoduleLattice) -> bool {
    let soc = socle(lattice);
    is_prime(soc.order()) && is_large_brute(lattice, &soc)
}

pub fn is_simple(lattice: &SubmoduleLattice) -> bool {
    lattice.len() == 2
}

/// For every scalar `a`, `a·S = S` or `a·S = 0`.
pub fn is_second(module: &FiniteModule, s: &Submodule) -> Result<bool> {
    if s.module() != module {
        return Err(Error::ParentMismatch);
    }
    if s.is_zero() {
        return Err(Error::ZeroSubmodule("is_second"));
    }
    Ok((0..module.exponent()).all(|a| {
        let scaled = s.scaled(a);
        scaled.is_zero() || scaled.order() == s.order()
    }))
}

/// Always true: a finite module has finitely many submodules, so any family
/// with zero intersection has a finite subfamily with zero intersection.
pub fn is_finitely_cogenerated(_module: &FiniteModule) -> bool {
    true
}

/// Outcome of the double-annihilator test `N = (0 :_M Ann_R(N))`.
#[derive(Debug, Clone)]
pub struct ComultiplicationCheck {
    pub holds: bool,
    /// Number of submodules failing the identity.
    pub failures: usize,
    /// Among failures of smallest order, the last in canonical order.
    pub witness: Option<Submodule>,
    /// `(0 :_M Ann_R(witness))`, strictly larger than the witness.
    pub witness_closure: Option<Submodule>,
}

pub fn is_comultiplication(lattice: &SubmoduleLattice) -> ComultiplicationCheck {
    let module = lattice.module();
    let mut failing: Vec<(&Submodule, Submodule)> = Vec::new();
    for n in lattice.submodules() {
        let closed = annihilator_in_module(module, &n.annihilator());
        if closed != *n {
            failing.push((n, closed));
        }
    }
    let failures = failing.len();
    let witness = failing
        .first()
        .map(|(n, _)| n.order())
        .and_then(|min_order| {
            failing
                .iter()
                .rfind(|(n, _)| n.order() == min_order)
                .cloned()
        });
    ComultiplicationCheck {
        holds: failures == 0,
        failures,
        witness_closure: witness.as_ref().map(|(_, c)| c.clone()),
        witness: witness.map(|(n, _)| n.clone()),
    }
}

/// Everything the graph and the theorem checks need to know about a module.
#[derive(Debug, Clone)]
pub struct PredicateReport {
    pub minimal_indices: Vec<usize>,
    pub minimal_submodules: Vec<Submodule>,
    pub socle: Submodule,
    pub comultiplication: ComultiplicationCheck,
    pub is_cocyclic: bool,
    pub is_uniform: bool,
    pub is_simple: bool,
    pub is_finitely_cogenerated: bool,
    /// True for the zero module, where the predicates are vacuous.
    pub degenerate: bool,
    /// Largeness per lattice index, checked by both routes.
    pub large: Vec<bool>,
}

impl PredicateReport {
    pub fn compute(lattice: &SubmoduleLattice) -> Result<Self> {
        let minimal_indices = minimal_indices(lattice);
        let minimal_submodules: Vec<Submodule> = minimal_indices
            .iter()
            .map(|&i| lattice.get(i).clone())
            .collect();
        let socle = socle(lattice);
        let mut large = Vec::with_capacity(lattice.len());
        for n in lattice.submodules() {
            let brute = is_large_brute(lattice, n);
            let fast = is_large_by_socle(&socle, n);
            if brute != fast {
                return Err(Error::Internal(format!(
                    "largeness of {n:?}: definition says {brute}, socle criterion says {fast}"
                )));
            }
            large.push(brute);
        }
        Ok(PredicateReport {
            comultiplication: is_comultiplication(lattice),
            is_cocyclic: is_cocyclic(lattice),
            is_uniform: is_uniform(lattice),
            is_simple: is_simple(lattice),
            is_finitely_cogenerated: is_finitely_cogenerated(lattice.module()),
            degenerate: lattice.module().is_zero_module(),
            minimal_indices,
            minimal_submodules,
            socle,
            large,
        })
    }

    pub fn min_count(&self) -> usize {
        self.minimal_indices.len()
    }

    pub fn is_comultiplication(&self) -> bool {
        self.comultiplication.holds
    }
}

/// Serializable snapshot of a submodule: order plus canonical generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubmoduleSummary {
    pub order: u64,
    pub generators: Vec<Vec<u64>>,
}

impl From<&Submodule> for SubmoduleSummary {
    fn from(s: &Submodule) -> Self {
        SubmoduleSummary {
            order: s.order(),
            generators: s.generators().iter().map(|e| e.coords().to_vec()).collect(),
        }
    }
}
