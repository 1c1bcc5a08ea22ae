//! Finite modules `Z_{d1} ⊕ ... ⊕ Z_{dk}` over `Z` or `Z/n`.
//!
//! Elements are addressed by their mixed-radix index, first coordinate most
//! significant, so ascending index order is lexicographic order on
//! coordinates. Index 0 is always the zero element.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, lcm};
use crate::error::{Error, Result};
use crate::ring::RingSpec;

pub const DEFAULT_MAX_ELEMENTS: usize = 10_000;
pub const DEFAULT_MAX_SUBMODULES: usize = 100_000;
pub const DEFAULT_MAX_SEARCH_NODES: u64 = 50_000_000;

/// Size limits applied when building modules and running exact searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub max_elements: usize,
    pub max_submodules: usize,
    pub max_search_nodes: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_elements: DEFAULT_MAX_ELEMENTS,
            max_submodules: DEFAULT_MAX_SUBMODULES,
            max_search_nodes: DEFAULT_MAX_SEARCH_NODES,
        }
    }
}

impl Caps {
    /// Parses `<elements>,<submodules>` (the `LSG_LAB_CAPS` format).
    pub fn parse_pair(s: &str) -> Result<Caps> {
        let bad = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| bad("expected `<elements>,<submodules>`"))?;
        let max_elements = a.trim().parse().map_err(|_| bad("bad element cap"))?;
        let max_submodules = b.trim().parse().map_err(|_| bad("bad submodule cap"))?;
        Ok(Caps {
            max_elements,
            max_submodules,
            ..Caps::default()
        })
    }
}

/// The textual identity of a module: `RING ':' ORDERS`, e.g. `Z:2,4` or `Z/12:2,4`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub ring: RingSpec,
    pub cyclic_orders: Vec<u64>,
}

impl ModuleSpec {
    pub fn new(ring: RingSpec, cyclic_orders: Vec<u64>) -> Self {
        ModuleSpec {
            ring,
            cyclic_orders,
        }
    }

    pub fn over_z(cyclic_orders: &[u64]) -> Self {
        ModuleSpec::new(RingSpec::Integers, cyclic_orders.to_vec())
    }

    pub fn build(&self, caps: &Caps) -> Result<FiniteModule> {
        FiniteModule::with_caps(self.ring, &self.cyclic_orders, caps)
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.ring)?;
        for (i, d) in self.cyclic_orders.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for ModuleSpec {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let bad = |reason: String| Error::Parse {
            input: input.to_string(),
            reason,
        };
        let (ring_part, orders_part) = input
            .trim()
            .split_once(':')
            .ok_or_else(|| bad("missing `:` between ring and orders".into()))?;
        let ring = match ring_part.trim() {
            "Z" => RingSpec::Integers,
            r => {
                let n = r
                    .strip_prefix("Z/")
                    .ok_or_else(|| bad(format!("unknown ring `{r}`")))?
                    .parse::<u64>()
                    .map_err(|e| bad(format!("bad modulus: {e}")))?;
                if n < 2 {
                    return Err(bad(format!("modulus {n} must be at least 2")));
                }
                RingSpec::IntegersMod(n)
            }
        };
        let mut cyclic_orders = Vec::new();
        for tok in orders_part.split(',') {
            let d = tok
                .trim()
                .parse::<u64>()
                .map_err(|e| bad(format!("bad order `{}`: {e}", tok.trim())))?;
            if d < 2 {
                return Err(bad(format!("order {d} must be at least 2")));
            }
            cyclic_orders.push(d);
        }
        Ok(ModuleSpec::new(ring, cyclic_orders))
    }
}

/// An element of a finite module, as residues `0 <= a_i < d_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Element {
    coords: Vec<u64>,
}

impl Element {
    pub fn new(coords: Vec<u64>) -> Self {
        Element { coords }
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

impl From<Vec<u64>> for Element {
    fn from(coords: Vec<u64>) -> Self {
        Element::new(coords)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, PartialEq, Eq)]
struct ModuleData {
    ring: RingSpec,
    cyclic_orders: Vec<u64>,
    /// Mixed-radix place values; `strides[k-1] == 1`.
    strides: Vec<u64>,
    order: u64,
    exponent: u64,
}

/// A finite abelian group `⊕ Z_{d_i}` with its ring action. Cheap to clone.
#[derive(Debug, Clone)]
pub struct FiniteModule {
    data: Arc<ModuleData>,
}

impl PartialEq for FiniteModule {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data == other.data
    }
}

impl Eq for FiniteModule {}

impl FiniteModule {
    /// Builds a module with the default caps.
    pub fn new(ring: RingSpec, cyclic_orders: &[u64]) -> Result<Self> {
        FiniteModule::with_caps(ring, cyclic_orders, &Caps::default())
    }

    pub fn with_caps(ring: RingSpec, cyclic_orders: &[u64], caps: &Caps) -> Result<Self> {
        if let RingSpec::IntegersMod(n) = ring {
            if n < 2 {
                return Err(Error::InvalidModulus(n));
            }
        }
        let mut order: u64 = 1;
        let mut exponent: u64 = 1;
        for &d in cyclic_orders {
            if d < 2 {
                return Err(Error::InvalidCyclicOrder(d));
            }
            order = order.saturating_mul(d);
            exponent = lcm(exponent, d);
        }
        if order > caps.max_elements as u64 || order > u32::MAX as u64 {
            return Err(Error::ElementCap {
                order,
                cap: caps.max_elements,
            });
        }
        if let RingSpec::IntegersMod(n) = ring {
            if n % exponent != 0 {
                return Err(Error::IncompatibleRing {
                    exponent,
                    modulus: n,
                });
            }
        }
        let mut strides = vec![1u64; cyclic_orders.len()];
        for i in (0..cyclic_orders.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * cyclic_orders[i + 1];
        }
        Ok(FiniteModule {
            data: Arc::new(ModuleData {
                ring,
                cyclic_orders: cyclic_orders.to_vec(),
                strides,
                order,
                exponent,
            }),
        })
    }

    pub fn ring(&self) -> RingSpec {
        self.data.ring
    }

    pub fn cyclic_orders(&self) -> &[u64] {
        &self.data.cyclic_orders
    }

    pub fn order(&self) -> u64 {
        self.data.order
    }

    pub fn size(&self) -> usize {
        self.data.order as usize
    }

    pub fn exponent(&self) -> u64 {
        self.data.exponent
    }

    pub fn is_zero_module(&self) -> bool {
        self.data.order == 1
    }

    pub fn spec(&self) -> ModuleSpec {
        ModuleSpec::new(self.data.ring, self.data.cyclic_orders.clone())
    }

    pub fn rank(&self) -> usize {
        self.data.cyclic_orders.len()
    }

    /// All elements in ascending (lexicographic) order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.data.order as u32).map(move |i| self.element(i))
    }

    pub fn element(&self, index: u32) -> Element {
        Element::new(self.coords(index))
    }

    pub fn coords(&self, index: u32) -> Vec<u64> {
        let idx = index as u64;
        self.data
            .cyclic_orders
            .iter()
            .zip(&self.data.strides)
            .map(|(&d, &s)| (idx / s) % d)
            .collect()
    }

    pub fn index_of(&self, e: &Element) -> Result<u32> {
        let c = e.coords();
        if c.len() != self.rank() {
            return Err(Error::MalformedElement(c.to_vec()));
        }
        let mut idx = 0u64;
        for ((&a, &d), &s) in c
            .iter()
            .zip(&self.data.cyclic_orders)
            .zip(&self.data.strides)
        {
            if a >= d {
                return Err(Error::MalformedElement(c.to_vec()));
            }
            idx += a * s;
        }
        Ok(idx as u32)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let (mut a, mut b) = (a as u64, b as u64);
        let mut out = 0u64;
        for (&d, &s) in self.data.cyclic_orders.iter().zip(&self.data.strides) {
            let x = a / s;
            let y = b / s;
            a %= s;
            b %= s;
            out += ((x + y) % d) * s;
        }
        out as u32
    }

    /// Scalar action `k · a`.
    pub fn scale(&self, k: u64, a: u32) -> u32 {
        let mut a = a as u64;
        let mut out = 0u64;
        for (&d, &s) in self.data.cyclic_orders.iter().zip(&self.data.strides) {
            let x = a / s;
            a %= s;
            out += (((k % d) as u128 * x as u128) % d as u128) as u64 * s;
        }
        out as u32
    }

    /// Additive order of an element.
    pub fn element_order(&self, a: u32) -> u64 {
        self.coords(a)
            .iter()
            .zip(&self.data.cyclic_orders)
            .fold(1, |acc, (&x, &d)| lcm(acc, d / gcd(x, d)))
    }
}

impl fmt::Display for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.spec().fmt(f)
    }
}
