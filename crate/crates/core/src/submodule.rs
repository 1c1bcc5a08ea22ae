//! Submodules as canonical element sets.
//!
//! Over `Z` and `Z/n` scalars act as repeated addition, so the submodules of
//! a finite module are exactly its additive subgroups and closure only needs
//! addition.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::arith::{factorize, lcm};
use crate::error::{Error, Result};
use crate::module::{Element, FiniteModule};
use crate::ring::Ideal;

/// A submodule of a [`FiniteModule`]: a sorted, deduplicated element set.
#[derive(Clone)]
pub struct Submodule {
    module: FiniteModule,
    elements: Arc<[u32]>,
    bits: FixedBitSet,
    exponent: u64,
    generators: Vec<u32>,
}

/// Grows a closed subgroup (given as members + membership bits) by the
/// subgroup generated by `g`: appends the cosets `H + k·g` until `k·g ∈ H`.
fn absorb(module: &FiniteModule, members: &mut Vec<u32>, bits: &mut FixedBitSet, g: u32) {
    if bits.contains(g as usize) {
        return;
    }
    let base_len = members.len();
    let mut shift = g;
    while !bits.contains(shift as usize) {
        for i in 0..base_len {
            let x = module.add(members[i], shift);
            bits.insert(x as usize);
            members.push(x);
        }
        shift = module.add(shift, g);
    }
}

pub(crate) fn closure(module: &FiniteModule, seeds: &[u32]) -> (Vec<u32>, FixedBitSet) {
    let mut bits = FixedBitSet::with_capacity(module.size());
    bits.insert(0);
    let mut members = vec![0u32];
    for &g in seeds {
        absorb(module, &mut members, &mut bits, g);
    }
    (members, bits)
}

/// Extends an existing submodule by extra seeds.
pub(crate) fn closure_over(base: &Submodule, seeds: &[u32]) -> (Vec<u32>, FixedBitSet) {
    let mut members = base.elements.to_vec();
    let mut bits = base.bits.clone();
    for &g in seeds {
        absorb(&base.module, &mut members, &mut bits, g);
    }
    (members, bits)
}

impl Submodule {
    /// Builds a submodule from an already-closed element set.
    pub(crate) fn from_closed(
        module: &FiniteModule,
        mut members: Vec<u32>,
        bits: FixedBitSet,
    ) -> Self {
        members.sort_unstable();
        let generators = greedy_generators(module, &members);
        let exponent = generators
            .iter()
            .fold(1, |acc, &g| lcm(acc, module.element_order(g)));
        Submodule {
            module: module.clone(),
            elements: members.into(),
            bits,
            exponent,
            generators,
        }
    }

    /// The smallest submodule containing `gens`.
    pub fn generate(module: &FiniteModule, gens: &[Element]) -> Result<Self> {
        let seeds = gens
            .iter()
            .map(|g| module.index_of(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(Submodule::generate_indices(module, &seeds))
    }

    pub fn generate_indices(module: &FiniteModule, seeds: &[u32]) -> Self {
        let (members, bits) = closure(module, seeds);
        Submodule::from_closed(module, members, bits)
    }

    pub fn zero(module: &FiniteModule) -> Self {
        Submodule::generate_indices(module, &[])
    }

    pub fn whole(module: &FiniteModule) -> Self {
        let n = module.size();
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        Submodule::from_closed(module, (0..n as u32).collect(), bits)
    }

    pub fn module(&self) -> &FiniteModule {
        &self.module
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }

    /// Element indices in ascending order.
    pub fn element_indices(&self) -> &[u32] {
        &self.elements
    }

    pub fn elements(&self) -> Vec<Element> {
        self.elements
            .iter()
            .map(|&i| self.module.element(i))
            .collect()
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    pub fn contains_index(&self, i: u32) -> bool {
        self.bits.contains(i as usize)
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.module
            .index_of(e)
            .map(|i| self.contains_index(i))
            .unwrap_or(false)
    }

    /// `other ⊆ self`.
    pub fn contains_submodule(&self, other: &Submodule) -> bool {
        other.bits.is_subset(&self.bits)
    }

    /// `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Submodule) -> bool {
        other.contains_submodule(self)
    }

    /// Smallest `e > 0` with `e·x = 0` for every member.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn generator_indices(&self) -> &[u32] {
        &self.generators
    }

    pub fn generators(&self) -> Vec<Element> {
        self.generators
            .iter()
            .map(|&i| self.module.element(i))
            .collect()
    }

    /// `Ann_R(N)`, generated by the exponent of `N`.
    pub fn annihilator(&self) -> Ideal {
        Ideal::new(self.module.ring(), self.exponent)
    }

    fn check_parent(&self, other: &Submodule) -> Result<()> {
        if self.module == other.module {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// `N + K`.
    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        self.check_parent(other)?;
        if self.contains_submodule(other) {
            return Ok(self.clone());
        }
        if other.contains_submodule(self) {
            return Ok(other.clone());
        }
        let (members, bits) = closure_over(self, &other.generators);
        Ok(Submodule::from_closed(&self.module, members, bits))
    }

    /// `N ∩ K`.
    pub fn intersect(&self, other: &Submodule) -> Result<Submodule> {
        self.check_parent(other)?;
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        let members = bits.ones().map(|i| i as u32).collect();
        Ok(Submodule::from_closed(&self.module, members, bits))
    }

    /// True when `N ∩ K ≠ 0`, without materializing the intersection.
    pub fn meets_nontrivially(&self, other: &Submodule) -> bool {
        self.bits.intersection(&other.bits).any(|i| i != 0)
    }

    /// `a·N = {a·x : x ∈ N}`.
    pub fn scaled(&self, a: u64) -> Submodule {
        let seeds: Vec<u32> = self
            .generators
            .iter()
            .map(|&g| self.module.scale(a, g))
            .collect();
        Submodule::generate_indices(&self.module, &seeds)
    }

    /// Short display label `o=<order>;g=<generators>`.
    pub fn label(&self) -> String {
        let gens: Vec<String> = self.generators().iter().map(|g| g.to_string()).collect();
        format!("o={};g={}", self.order(), gens.join(","))
    }
}

/// Greedy generating set: repeatedly add the element whose cyclic span grows
/// the current subgroup the most, ties going to the smallest element. Each
/// step takes an element of maximal order modulo the current subgroup, which
/// splits off a cyclic summand, so the result has minimum cardinality.
fn greedy_generators(module: &FiniteModule, sorted: &[u32]) -> Vec<u32> {
    let target = sorted.len();
    let mut gens = Vec::new();
    let mut bits = FixedBitSet::with_capacity(module.size());
    bits.insert(0);
    let mut members = vec![0u32];
    while members.len() < target {
        let needed = (target / members.len()) as u64;
        let mut best = (0u64, 0u32);
        for &x in sorted {
            if bits.contains(x as usize) {
                continue;
            }
            // Order of x modulo the current subgroup.
            let mut k = 1u64;
            let mut cur = x;
            while !bits.contains(cur as usize) {
                cur = module.add(cur, x);
                k += 1;
            }
            if k > best.0 {
                best = (k, x);
                if k == needed {
                    break;
                }
            }
        }
        gens.push(best.1);
        absorb(module, &mut members, &mut bits, best.1);
    }
    gens
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.module == other.module && self.elements == other.elements
    }
}

impl Eq for Submodule {}

impl std::hash::Hash for Submodule {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl PartialOrd for Submodule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: ascending order, then lexicographic element list.
impl Ord for Submodule {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements
            .len()
            .cmp(&other.elements.len())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Submodule({} in {})", self.label(), self.module)
    }
}

/// `(0 :_M I) = {m ∈ M : g·m = 0}` where `g` generates `I`.
pub fn annihilator_in_module(module: &FiniteModule, ideal: &Ideal) -> Submodule {
    let g = ideal.generator();
    let n = module.size();
    let mut bits = FixedBitSet::with_capacity(n);
    let mut members = Vec::new();
    for i in 0..n as u32 {
        if module.scale(g, i) == 0 {
            bits.insert(i as usize);
            members.push(i);
        }
    }
    Submodule::from_closed(module, members, bits)
}

pub fn annihilator_in_ring(n: &Submodule) -> Ideal {
    n.annihilator()
}

/// `M/N` realized as a [`FiniteModule`] in invariant-factor form, with the
/// projection `M → M/N` stored per element.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub module: FiniteModule,
    kernel: Submodule,
    /// `projection[m]` is the quotient-element index of the coset `m + N`.
    projection: Vec<u32>,
}

impl Quotient {
    pub fn kernel(&self) -> &Submodule {
        &self.kernel
    }

    pub fn project(&self, m: u32) -> u32 {
        self.projection[m as usize]
    }

    /// Image of a submodule of `M` in `M/N`.
    pub fn image(&self, s: &Submodule) -> Submodule {
        let seeds: Vec<u32> = s
            .generator_indices()
            .iter()
            .map(|&g| self.project(g))
            .collect();
        Submodule::generate_indices(&self.module, &seeds)
    }

    /// Full preimage in `M` of a submodule of `M/N`.
    pub fn preimage(&self, q: &Submodule) -> Submodule {
        let parent = self.kernel.module();
        let n = parent.size();
        let mut bits = FixedBitSet::with_capacity(n);
        let mut members = Vec::new();
        for m in 0..n as u32 {
            if q.contains_index(self.project(m)) {
                bits.insert(m as usize);
                members.push(m);
            }
        }
        Submodule::from_closed(parent, members, bits)
    }
}

/// Builds `M/N`.
pub fn quotient_module(module: &FiniteModule, n: &Submodule) -> Result<Quotient> {
    if n.module() != module {
        return Err(Error::ParentMismatch);
    }
    // Canonical coset representative: the smallest element of m + N.
    let size = module.size();
    let mut rep = vec![u32::MAX; size];
    let mut reps = Vec::new();
    for m in 0..size as u32 {
        if rep[m as usize] != u32::MAX {
            continue;
        }
        reps.push(m);
        for &x in n.element_indices() {
            rep[module.add(m, x) as usize] = m;
        }
    }
    let q_add = |a: u32, b: u32| rep[module.add(a, b) as usize];
    let q_order = |a: u32| {
        let mut k = 1u64;
        let mut cur = a;
        while cur != 0 {
            cur = q_add(cur, a);
            k += 1;
        }
        k
    };
    let orders: HashMap<u32, u64> = reps.iter().map(|&r| (r, q_order(r))).collect();
    let factors = invariant_factors(reps.len() as u64, &orders);

    let basis = find_basis(&reps, &orders, &factors, &q_add)
        .ok_or_else(|| Error::Internal("no basis found for quotient module".into()))?;

    let qmod = FiniteModule::with_caps(
        module.ring(),
        &factors,
        &crate::module::Caps {
            max_elements: usize::MAX,
            ..Default::default()
        },
    )?;
    // Map each coset representative to its coordinates in the basis.
    let mut rep_to_q: HashMap<u32, u32> = HashMap::with_capacity(reps.len());
    for qi in 0..qmod.size() as u32 {
        let coords = qmod.coords(qi);
        let mut acc = 0u32;
        for (&c, &b) in coords.iter().zip(&basis) {
            for _ in 0..c {
                acc = q_add(acc, b);
            }
        }
        rep_to_q.insert(acc, qi);
    }
    if rep_to_q.len() != reps.len() {
        return Err(Error::Internal("quotient basis is not independent".into()));
    }
    let projection = (0..size).map(|m| rep_to_q[&rep[m]]).collect();
    Ok(Quotient {
        module: qmod,
        kernel: n.clone(),
        projection,
    })
}

/// Invariant factors `d1 | d2 | ...` (ascending) from element-order counts:
/// for each prime `p`, `|Q[p^k]| = p^{Σ min(k, a_i)}` recovers the partition.
fn invariant_factors(order: u64, orders: &HashMap<u32, u64>) -> Vec<u64> {
    let primary: Vec<(u64, Vec<u32>)> = factorize(order)
        .into_iter()
        .map(|(p, _)| {
            // at_least[k-1] = #{i : a_i >= k}
            let mut at_least = Vec::new();
            let mut prev_log = 0u32;
            let mut pk = 1u64;
            loop {
                pk *= p;
                let count = orders.values().filter(|&&o| pk.is_multiple_of(o)).count() as u64;
                let log = count.ilog(p);
                if log == prev_log {
                    break;
                }
                at_least.push(log - prev_log);
                prev_log = log;
            }
            let mut exps = vec![0u32; at_least[0] as usize];
            for &c in &at_least {
                for e in exps.iter_mut().take(c as usize) {
                    *e += 1;
                }
            }
            exps.sort_unstable();
            (p, exps)
        })
        .collect();
    let len = primary.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut factors = vec![1u64; len];
    for (p, exps) in &primary {
        // Right-align so the largest powers of every prime share the last factor.
        let offset = len - exps.len();
        for (j, &e) in exps.iter().enumerate() {
            factors[offset + j] *= p.pow(e);
        }
    }
    factors
}

/// Backtracking search for `g_1..g_k` with `ord(g_i) = d_i` that generate
/// a subgroup of order `d_1⋯d_k`, i.e. a basis matching the factors.
fn find_basis(
    reps: &[u32],
    orders: &HashMap<u32, u64>,
    factors: &[u64],
    q_add: &dyn Fn(u32, u32) -> u32,
) -> Option<Vec<u32>> {
    // Place largest factors first; that is where the choice is most constrained.
    let mut order_idx: Vec<usize> = (0..factors.len()).collect();
    order_idx.sort_by(|&a, &b| factors[b].cmp(&factors[a]));

    fn grow(members: &[u32], g: u32, q_add: &dyn Fn(u32, u32) -> u32) -> Vec<u32> {
        let mut set: std::collections::HashSet<u32> = members.iter().copied().collect();
        let mut out = members.to_vec();
        let base = members.len();
        let mut shift = g;
        while !set.contains(&shift) {
            for i in 0..base {
                let x = q_add(out[i], shift);
                set.insert(x);
                out.push(x);
            }
            shift = q_add(shift, g);
        }
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        depth: usize,
        order_idx: &[usize],
        factors: &[u64],
        reps: &[u32],
        orders: &HashMap<u32, u64>,
        members: &[u32],
        chosen: &mut Vec<(usize, u32)>,
        q_add: &dyn Fn(u32, u32) -> u32,
    ) -> bool {
        if depth == order_idx.len() {
            return true;
        }
        let d = factors[order_idx[depth]];
        for &r in reps {
            if orders[&r] != d {
                continue;
            }
            let grown = grow(members, r, q_add);
            if grown.len() as u64 != members.len() as u64 * d {
                continue;
            }
            chosen.push((order_idx[depth], r));
            if rec(
                depth + 1,
                order_idx,
                factors,
                reps,
                orders,
                &grown,
                chosen,
                q_add,
            ) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let mut chosen = Vec::new();
    if !rec(
        0,
        &order_idx,
        factors,
        reps,
        orders,
        &[0],
        &mut chosen,
        q_add,
    ) {
        return None;
    }
    let mut basis = vec![0u32; factors.len()];
    for (slot, g) in chosen {
        basis[slot] = g;
    }
    Some(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;

    fn m(orders: &[u64]) -> FiniteModule {
        FiniteModule::new(RingSpec::Integers, orders).unwrap()
    }

    fn el(c: &[u64]) -> Element {
        Element::new(c.to_vec())
    }

    /// Brute-force closure: keep adding pairwise sums until nothing changes.
    fn naive_closure(module: &FiniteModule, gens: &[Element]) -> Vec<Element> {
        let mut set: std::collections::BTreeSet<u32> = std::iter::once(0).collect();
        for g in gens {
            set.insert(module.index_of(g).unwrap());
        }
        loop {
            let cur: Vec<u32> = set.iter().copied().collect();
            let before = set.len();
            for &a in &cur {
                for &b in &cur {
                    set.insert(module.add(a, b));
                }
            }
            if set.len() == before {
                return set.into_iter().map(|i| module.element(i)).collect();
            }
        }
    }

    #[test]
    fn generate_in_z6() {
        let z6 = m(&[6]);
        let s = Submodule::generate(&z6, &[el(&[2])]).unwrap();
        assert_eq!(s.elements(), vec![el(&[0]), el(&[2]), el(&[4])]);
        assert_eq!(s.order(), 3);
    }

    #[test]
    fn generate_empty_is_zero() {
        let s = Submodule::generate(&m(&[2, 4]), &[]).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.order(), 1);
    }

    #[test]
    fn generate_diagonal_in_z2_z4() {
        let mm = m(&[2, 4]);
        let s = Submodule::generate(&mm, &[el(&[1, 1])]).unwrap();
        let expected = naive_closure(&mm, &[el(&[1, 1])]);
        assert_eq!(s.elements(), expected);
        assert_eq!(
            s.elements(),
            vec![el(&[0, 0]), el(&[0, 2]), el(&[1, 1]), el(&[1, 3])]
        );
    }

    #[test]
    fn generate_rejects_foreign_element() {
        assert!(Submodule::generate(&m(&[2, 4]), &[el(&[2, 0])]).is_err());
    }

    #[test]
    fn sum_examples() {
        let z30 = m(&[30]);
        let two = Submodule::generate(&z30, &[el(&[15])]).unwrap();
        let three = Submodule::generate(&z30, &[el(&[10])]).unwrap();
        assert_eq!(two.sum(&three).unwrap().order(), 6);
        assert_eq!(two.sum(&Submodule::zero(&z30)).unwrap(), two);

        let mm = m(&[2, 4]);
        let n2 = Submodule::generate(&mm, &[el(&[0, 2])]).unwrap();
        let n3 = Submodule::generate(&mm, &[el(&[1, 0])]).unwrap();
        let klein = n2.sum(&n3).unwrap();
        assert_eq!(
            klein.elements(),
            vec![el(&[0, 0]), el(&[0, 2]), el(&[1, 0]), el(&[1, 2])]
        );
    }

    #[test]
    fn intersect_examples() {
        let z12 = m(&[12]);
        let three = Submodule::generate(&z12, &[el(&[4])]).unwrap();
        let two = Submodule::generate(&z12, &[el(&[6])]).unwrap();
        assert!(three.intersect(&two).unwrap().is_zero());
        assert_eq!(three.intersect(&three).unwrap(), three);

        let mm = m(&[2, 4]);
        let n1 = Submodule::generate(&mm, &[el(&[0, 1])]).unwrap();
        let klein = Submodule::generate(&mm, &[el(&[0, 2]), el(&[1, 0])]).unwrap();
        assert_eq!(
            n1.intersect(&klein).unwrap().elements(),
            vec![el(&[0, 0]), el(&[0, 2])]
        );
    }

    #[test]
    fn parent_mismatch() {
        let a = Submodule::zero(&m(&[6]));
        let b = Submodule::zero(&m(&[4]));
        assert_eq!(a.sum(&b).unwrap_err(), Error::ParentMismatch);
        assert_eq!(a.intersect(&b).unwrap_err(), Error::ParentMismatch);
    }

    #[test]
    fn annihilators() {
        let z6 = m(&[6]);
        let zero = Submodule::zero(&z6);
        assert!(zero.annihilator().is_unit());
        let three = Submodule::generate(&z6, &[el(&[2])]).unwrap();
        assert_eq!(three.annihilator().generator(), 3);
        let mm = m(&[2, 4]);
        assert_eq!(Submodule::whole(&mm).annihilator().generator(), 4);

        let z = RingSpec::Integers;
        let killed_by_2 = annihilator_in_module(&mm, &Ideal::new(z, 2));
        assert_eq!(
            killed_by_2.elements(),
            vec![el(&[0, 0]), el(&[0, 2]), el(&[1, 0]), el(&[1, 2])]
        );
        assert!(annihilator_in_module(&mm, &Ideal::unit(z)).is_zero());
        assert_eq!(annihilator_in_module(&z6, &Ideal::new(z, 3)), three);
        assert_eq!(annihilator_in_module(&z6, &Ideal::zero(z)).order(), 6);
    }

    #[test]
    fn annihilator_over_zmod() {
        let mm = FiniteModule::new(RingSpec::IntegersMod(12), &[2, 4]).unwrap();
        let s = Submodule::generate(&mm, &[el(&[0, 2])]).unwrap();
        assert_eq!(s.annihilator().generator(), 2);
        assert!(Submodule::zero(&mm).annihilator().is_unit());
    }

    #[test]
    fn generators_are_greedy() {
        let mm = m(&[2, 4]);
        let whole = Submodule::whole(&mm);
        assert_eq!(whole.generators(), vec![el(&[0, 1]), el(&[1, 0])]);
        assert_eq!(whole.label(), "o=8;g=(0,1),(1,0)");
    }

    #[test]
    fn scaled() {
        let z8 = m(&[8]);
        let s = Submodule::generate(&z8, &[el(&[2])]).unwrap();
        assert_eq!(s.scaled(2).order(), 2);
        assert!(s.scaled(4).is_zero());
        assert_eq!(s.scaled(3), s);
    }

    #[test]
    fn quotients() {
        let z6 = m(&[6]);
        let n = Submodule::generate(&z6, &[el(&[3])]).unwrap();
        let q = quotient_module(&z6, &n).unwrap();
        assert_eq!(q.module.order(), 3);

        let mm = m(&[2, 4]);
        let q0 = quotient_module(&mm, &Submodule::zero(&mm)).unwrap();
        assert_eq!(q0.module.order(), 8);
        assert_eq!(q0.module.cyclic_orders(), &[2, 4]);
        let qm = quotient_module(&mm, &Submodule::whole(&mm)).unwrap();
        assert_eq!(qm.module.order(), 1);
        assert!(qm.module.is_zero_module());

        // (Z2 ⊕ Z4)/⟨(1,1)⟩ ≅ Z2, /⟨(0,2)⟩ ≅ Z2 ⊕ Z2, /⟨(1,0)⟩ ≅ Z4
        let diag = Submodule::generate(&mm, &[el(&[1, 1])]).unwrap();
        assert_eq!(
            quotient_module(&mm, &diag).unwrap().module.cyclic_orders(),
            &[2]
        );
        let n2 = Submodule::generate(&mm, &[el(&[0, 2])]).unwrap();
        assert_eq!(
            quotient_module(&mm, &n2).unwrap().module.cyclic_orders(),
            &[2, 2]
        );
        let n3 = Submodule::generate(&mm, &[el(&[1, 0])]).unwrap();
        assert_eq!(
            quotient_module(&mm, &n3).unwrap().module.cyclic_orders(),
            &[4]
        );
    }

    #[test]
    fn projection_is_a_homomorphism_with_kernel_n() {
        let mm = m(&[4, 6]);
        let n = Submodule::generate(&mm, &[el(&[2, 3])]).unwrap();
        let q = quotient_module(&mm, &n).unwrap();
        assert_eq!(q.module.order() * n.order(), mm.order());
        for a in 0..mm.size() as u32 {
            assert_eq!(q.project(a) == 0, n.contains_index(a));
            for b in 0..mm.size() as u32 {
                assert_eq!(
                    q.project(mm.add(a, b)),
                    q.module.add(q.project(a), q.project(b))
                );
            }
        }
    }
}
