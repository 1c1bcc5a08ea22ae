//! Exhaustive submodule enumeration.
//!
//! Every submodule is a join of cyclic submodules, so we collect all
//! `⟨m⟩` and then close the family under joins with cyclic members until
//! nothing new appears.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::module::{Caps, FiniteModule};
use crate::submodule::{closure, closure_over, Submodule};

/// All submodules of a module in canonical order (ascending order, then
/// lexicographic element list). Index 0 is the zero submodule and the last
/// index is the whole module.
#[derive(Debug, Clone)]
pub struct SubmoduleLattice {
    module: FiniteModule,
    subs: Vec<Submodule>,
    index: HashMap<FixedBitSet, usize>,
}

impl SubmoduleLattice {
    pub fn enumerate(module: &FiniteModule, caps: &Caps) -> Result<Self> {
        let cap = caps.max_submodules;
        let mut found: HashMap<FixedBitSet, Submodule> = HashMap::new();
        let mut cyclic: Vec<Submodule> = Vec::new();

        let n = module.size();
        let mut covered = FixedBitSet::with_capacity(n);
        for m in 0..n as u32 {
            if covered.contains(m as usize) {
                continue;
            }
            let (members, bits) = closure(module, &[m]);
            let order = members.len() as u64;
            // Every generator of ⟨m⟩ yields the same subgroup.
            for &x in &members {
                if module.element_order(x) == order {
                    covered.insert(x as usize);
                }
            }
            if let Entry::Vacant(slot) = found.entry(bits.clone()) {
                let s = Submodule::from_closed(module, members, bits);
                cyclic.push(s.clone());
                slot.insert(s);
                if found.len() > cap {
                    return Err(Error::SubmoduleCap { cap });
                }
            }
        }

        let mut queue: Vec<Submodule> = found.values().cloned().collect();
        queue.sort();
        while let Some(x) = queue.pop() {
            for c in &cyclic {
                if x.contains_submodule(c) {
                    continue;
                }
                let (members, bits) = closure_over(&x, c.generator_indices());
                if found.contains_key(&bits) {
                    continue;
                }
                let s = Submodule::from_closed(module, members, bits.clone());
                queue.push(s.clone());
                found.insert(bits, s);
                if found.len() > cap {
                    return Err(Error::SubmoduleCap { cap });
                }
            }
        }

        let mut subs: Vec<Submodule> = found.into_values().collect();
        subs.sort();
        let index = subs
            .iter()
            .enumerate()
            .map(|(i, s)| (s.bits().clone(), i))
            .collect();
        Ok(SubmoduleLattice {
            module: module.clone(),
            subs,
            index,
        })
    }

    pub fn module(&self) -> &FiniteModule {
        &self.module
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    pub fn submodules(&self) -> &[Submodule] {
        &self.subs
    }

    pub fn get(&self, i: usize) -> &Submodule {
        &self.subs[i]
    }

    pub fn zero_index(&self) -> usize {
        0
    }

    pub fn top_index(&self) -> usize {
        self.subs.len() - 1
    }

    pub fn index_of(&self, s: &Submodule) -> Option<usize> {
        if s.module() != &self.module {
            return None;
        }
        self.index.get(s.bits()).copied()
    }

    /// Lattice index of `subs[i] + subs[j]`.
    pub fn join(&self, i: usize, j: usize) -> usize {
        let a = &self.subs[i];
        let b = &self.subs[j];
        if a.contains_submodule(b) {
            return i;
        }
        if b.contains_submodule(a) {
            return j;
        }
        let (_, bits) = closure_over(a, b.generator_indices());
        self.index[&bits]
    }

    /// Lattice index of `subs[i] ∩ subs[j]`.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        let mut bits = self.subs[i].bits().clone();
        bits.intersect_with(self.subs[j].bits());
        self.index[&bits]
    }
}

/// Convenience wrapper returning the submodules as a list.
pub fn enumerate_submodules(module: &FiniteModule, caps: &Caps) -> Result<Vec<Submodule>> {
    Ok(SubmoduleLattice::enumerate(module, caps)?.subs)
}
