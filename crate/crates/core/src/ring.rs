//! Acting rings and their principal ideals.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::error::{Error, Result};

/// The ring acting on a finite module: the integers or the integers modulo `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RingSpec {
    Integers,
    IntegersMod(u64),
}

impl RingSpec {
    pub fn integers_mod(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidModulus(n));
        }
        Ok(RingSpec::IntegersMod(n))
    }

    pub fn modulus(&self) -> Option<u64> {
        match *self {
            RingSpec::Integers => None,
            RingSpec::IntegersMod(n) => Some(n),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::IntegersMod(n) => write!(f, "Z/{n}"),
        }
    }
}

/// A principal ideal of a [`RingSpec`], stored by a normalized generator.
///
/// Over `Z` the generator is the nonnegative generator (0 is the zero ideal).
/// Over `Z/n` the generator is a divisor of `n`; the zero ideal is `n` and the
/// unit ideal is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ideal {
    ring: RingSpec,
    generator: u64,
}

impl Ideal {
    /// The ideal generated by `g`, normalized for the ring.
    pub fn new(ring: RingSpec, g: u64) -> Self {
        let generator = match ring {
            RingSpec::Integers => g,
            RingSpec::IntegersMod(n) => gcd(g, n),
        };
        Ideal { ring, generator }
    }

    pub fn unit(ring: RingSpec) -> Self {
        Ideal::new(ring, 1)
    }

    pub fn zero(ring: RingSpec) -> Self {
        Ideal::new(ring, 0)
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn is_unit(&self) -> bool {
        self.generator == 1
    }

    pub fn is_zero(&self) -> bool {
        match self.ring {
            RingSpec::Integers => self.generator == 0,
            RingSpec::IntegersMod(n) => self.generator == n,
        }
    }

    /// Ideal containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Ideal) -> bool {
        if other.generator == 0 {
            return self.generator == 0;
        }
        self.generator.is_multiple_of(other.generator)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.generator, self.ring)
    }
}
