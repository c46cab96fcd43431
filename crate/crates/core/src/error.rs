use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::semialg::Endpoint;

/// Errors from the arithmetic and parsing layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("degree {degree} exceeds the factorization limit {limit}")]
    DegreeLimitExceeded { degree: usize, limit: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RefusalReason {
    UnsupportedEndpointDegree,
    NotFinitelyGenerated,
    NotNonnegative,
    DegreeLimitExceeded,
    EmptySet,
    LevelTooSmall,
    Inconclusive,
    InternalInconsistency,
}

impl RefusalReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            RefusalReason::UnsupportedEndpointDegree => "UnsupportedEndpointDegree",
            RefusalReason::NotFinitelyGenerated => "NotFinitelyGenerated",
            RefusalReason::NotNonnegative => "NotNonnegative",
            RefusalReason::DegreeLimitExceeded => "DegreeLimitExceeded",
            RefusalReason::EmptySet => "EmptySet",
            RefusalReason::LevelTooSmall => "LevelTooSmall",
            RefusalReason::Inconclusive => "Inconclusive",
            RefusalReason::InternalInconsistency => "InternalInconsistency",
        }
    }
}

/// A structured "no certificate" answer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}: {detail}", reason.as_str())]
pub struct Refusal {
    pub reason: RefusalReason,
    pub detail: String,
    /// Name of the statement that justifies the refusal, if any.
    pub citation: Option<String>,
    /// A point of the set where the target is negative.
    pub witness: Option<Endpoint>,
    /// Level needed for a level-indexed construction.
    pub required_level: Option<u32>,
}

impl Refusal {
    pub fn new(reason: RefusalReason, detail: impl Into<String>) -> Self {
        Refusal { reason, detail: detail.into(), citation: None, witness: None, required_level: None }
    }

    pub fn cite(mut self, citation: impl Into<String>) -> Self {
        self.citation = Some(citation.into());
        self
    }

    pub fn with_witness(mut self, w: Endpoint) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn internal(detail: impl Into<String>) -> Self {
        Refusal::new(RefusalReason::InternalInconsistency, detail)
    }
}

impl From<Error> for Refusal {
    fn from(e: Error) -> Self {
        match e {
            Error::DegreeLimitExceeded { .. } => Refusal::new(RefusalReason::DegreeLimitExceeded, e.to_string()),
            other => Refusal::internal(other.to_string()),
        }
    }
}
