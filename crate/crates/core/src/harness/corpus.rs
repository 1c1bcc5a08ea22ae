use std::fmt;

use serde::Serialize;

use crate::arith::lcm;
use crate::error::{Error, Result};
use crate::module::ModuleSpec;
use crate::ring::RingSpec;

/// Which families of modules a suite runs over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusFamily {
    /// `Z_n` for `n` in `min..=max`.
    Cyclic {
        min: u64,
        max: u64,
    },
    /// `Z_a ⊕ Z_b` for `2 <= a <= b <= max`.
    TwoFactor {
        max: u64,
    },
    Explicit(Vec<ModuleSpec>),
}

/// Ring over which generated modules are taken. `ZModExponent` uses
/// `Z/exp(M)`, the smallest ring that acts faithfully.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RingPolicy {
    #[default]
    Integers,
    ZModExponent,
    Both,
}

impl std::str::FromStr for RingPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Z" | "z" => Ok(RingPolicy::Integers),
            "Zn" | "zmod" | "exponent" => Ok(RingPolicy::ZModExponent),
            "both" => Ok(RingPolicy::Both),
            _ => Err(Error::Parse {
                input: s.to_string(),
                reason: "ring policy must be Z, Zn or both".into(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub family: CorpusFamily,
    pub rings: RingPolicy,
}

impl CorpusSpec {
    pub fn cyclic(min: u64, max: u64) -> Self {
        CorpusSpec {
            family: CorpusFamily::Cyclic { min, max },
            rings: RingPolicy::Integers,
        }
    }

    pub fn two_factor(max: u64) -> Self {
        CorpusSpec {
            family: CorpusFamily::TwoFactor { max },
            rings: RingPolicy::Integers,
        }
    }

    pub fn explicit(specs: Vec<ModuleSpec>) -> Self {
        CorpusSpec {
            family: CorpusFamily::Explicit(specs),
            rings: RingPolicy::Integers,
        }
    }

    pub fn with_rings(mut self, rings: RingPolicy) -> Self {
        self.rings = rings;
        self
    }

    /// Parses a corpus file: one module spec per line, `#` starts a comment.
    pub fn from_file_contents(text: &str) -> Result<Self> {
        let specs = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<ModuleSpec>>>()?;
        Ok(CorpusSpec::explicit(specs))
    }

    /// The modules in deterministic order. Explicit lists keep their own
    /// rings; generated families follow the ring policy.
    pub fn modules(&self) -> Vec<ModuleSpec> {
        let shapes: Vec<Vec<u64>> = match &self.family {
            CorpusFamily::Cyclic { min, max } => (*min.max(&2)..=*max).map(|n| vec![n]).collect(),
            CorpusFamily::TwoFactor { max } => (2..=*max)
                .flat_map(|a| (a..=*max).map(move |b| vec![a, b]))
                .collect(),
            CorpusFamily::Explicit(specs) => return specs.clone(),
        };
        let mut out = Vec::new();
        for orders in shapes {
            let exp = orders.iter().fold(1, |acc, &d| lcm(acc, d));
            if self.rings != RingPolicy::ZModExponent {
                out.push(ModuleSpec::new(RingSpec::Integers, orders.clone()));
            }
            if self.rings != RingPolicy::Integers {
                out.push(ModuleSpec::new(RingSpec::IntegersMod(exp), orders));
            }
        }
        out
    }
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            CorpusFamily::Cyclic { min, max } => write!(f, "cyclic({min}..={max})")?,
            CorpusFamily::TwoFactor { max } => write!(f, "two_factor(<={max})")?,
            CorpusFamily::Explicit(specs) => return write!(f, "explicit({} modules)", specs.len()),
        }
        match self.rings {
            RingPolicy::Integers => write!(f, " over Z"),
            RingPolicy::ZModExponent => write!(f, " over Z/exp(M)"),
            RingPolicy::Both => write!(f, " over Z and Z/exp(M)"),
        }
    }
}

impl Serialize for CorpusSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(CorpusSpec::cyclic(2, 500).modules().len(), 499);
        let two = CorpusSpec::two_factor(4).modules();
        let names: Vec<String> = two.iter().map(|s| s.to_string()).collect();
        assert_eq!(
            names,
            ["Z:2,2", "Z:2,3", "Z:2,4", "Z:3,3", "Z:3,4", "Z:4,4"]
        );
        let both = CorpusSpec::cyclic(6, 6)
            .with_rings(RingPolicy::Both)
            .modules();
        let names: Vec<String> = both.iter().map(|s| s.to_string()).collect();
        assert_eq!(names, ["Z:6", "Z/6:6"]);
    }

    #[test]
    fn file_corpus() {
        let c = CorpusSpec::from_file_contents("# test\nZ:2,4\n\nZ/12:6  # comment\n").unwrap();
        assert_eq!(c.modules().len(), 2);
        assert!(CorpusSpec::from_file_contents("Z:1").is_err());
    }
}
