use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    /// A group (or an automorphism group built along the way) would exceed
    /// the configured order bound.
    #[error("group order exceeds the configured bound of {bound}")]
    ResourceBound { bound: usize },

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("G-set has isotropy inside the family: {0}")]
    IsotropyInFamily(String),

    #[error("functors do not share a target groupoid")]
    MismatchedTargets,

    #[error("not a group homomorphism: {0}")]
    NotHomomorphism(String),
}

pub type Result<T> = std::result::Result<T, Error>;
