use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid module spec `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("cyclic order {0} must be at least 2")]
    InvalidCyclicOrder(u64),

    #[error("ring modulus {0} must be at least 2")]
    InvalidModulus(u64),

    #[error("module exponent {exponent} does not divide ring modulus {modulus}")]
    IncompatibleRing { exponent: u64, modulus: u64 },

    #[error("module order {order} exceeds the element cap of {cap}")]
    ElementCap { order: u64, cap: usize },

    #[error("submodule lattice exceeds the cap of {cap} submodules")]
    SubmoduleCap { cap: usize },

    #[error("element {0:?} does not belong to the module")]
    MalformedElement(Vec<u64>),

    #[error("submodules belong to different parent modules")]
    ParentMismatch,

    #[error("{0} requires a nonzero submodule")]
    ZeroSubmodule(&'static str),

    #[error("exact {what} search aborted after {nodes} search nodes")]
    SearchAborted { what: &'static str, nodes: u64 },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// True for the errors a caller can fix by raising a configured cap.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::ElementCap { .. } | Error::SubmoduleCap { .. } | Error::SearchAborted { .. }
        )
    }
}
