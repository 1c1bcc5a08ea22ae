//! Shared inputs for the criterion benches.

use lsg_core::{FiniteModule, RingSpec};

/// Modules the benches run over, smallest to largest lattice.
pub fn bench_modules() -> Vec<(&'static str, FiniteModule)> {
    [
        ("Z:2,4", &[2u64, 4][..]),
        ("Z:210", &[210]),
        ("Z:12,12", &[12, 12]),
        ("Z:2,2,2,2", &[2, 2, 2, 2]),
    ]
    .into_iter()
    .map(|(name, orders)| (name, FiniteModule::new(RingSpec::Integers, orders).unwrap()))
    .collect()
}
