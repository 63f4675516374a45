use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse group spec {spec:?}: {reason}")]
    GroupSpec { spec: String, reason: String },

    #[error("cannot parse prime set {spec:?}: {reason}")]
    PrimeSpec { spec: String, reason: String },

    #[error("group order exceeds the configured cap of {cap}")]
    OrderCap { cap: usize },

    #[error("permutation {0} is not an element of the ambient group")]
    NotAnElement(String),

    #[error("subgroup {inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },

    #[error("subgroup class {0} is not P-perfect")]
    NotPPerfect(String),

    #[error("element lives over subgroup {found}, expected {expected}")]
    LevelMismatch { expected: String, found: String },

    #[error("element is not an idempotent")]
    NotIdempotent,

    #[error("element is not P-local")]
    NotPLocal,

    #[error("the norm from {k} to {h} does not descend to the localization")]
    NormNotAdmissible { k: String, h: String },

    #[error("point map is not equivariant: {0}")]
    NotEquivariant(String),

    #[error("indexing systems over different groups cannot be combined")]
    MixedGroups,

    #[error("indexing system violates {property}: {detail}")]
    IndexingSystem { property: &'static str, detail: String },

    #[error("invalid G-set: {0}")]
    InvalidGSet(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
