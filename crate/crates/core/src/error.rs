use alloc::string::String;
use alloc::vec::Vec;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix of shape {rows}x{cols} exceeds the size guardrail")]
    MatrixTooLarge { rows: usize, cols: usize },
    #[error("chain space of dimension {dim} in degree {degree} exceeds the size guardrail")]
    ChainSpaceTooLarge { degree: usize, dim: usize },
    #[error("matrices do not form a complex: {0}")]
    ComplexNotExactlyComposable(String),
    #[error("p must be prime (got {0})")]
    InvalidPrime(u64),
    #[error("ring mismatch")]
    RingMismatch,
    #[error("invalid Cayley table: {0}")]
    InvalidCayleyTable(String),
    #[error("group of order {0} exceeds the size guardrail for this computation")]
    GroupTooLarge(usize),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("element is not in the idempotent subalgebra B")]
    NotInB,
    #[error("partial representation axioms fail: {}", .0.first().map(|v| v.as_str()).unwrap_or(""))]
    PartialRepAxiomViolation(Vec<String>),
    #[error("invalid set partial action: {0}")]
    InvalidSetAction(String),
    #[error("invalid partial action: {0}")]
    InvalidPartialAction(String),
    #[error("domain of {0} is not a direct summand over Z; use field coefficients")]
    NonSaturatedDomain(String),
    #[error("globalization over Z has torsion {0:?}; use field coefficients")]
    NonFreeGlobalization(Vec<String>),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// True for the resource guardrail family.
    pub fn is_guardrail(&self) -> bool {
        matches!(self, Error::MatrixTooLarge { .. } | Error::ChainSpaceTooLarge { .. } | Error::GroupTooLarge(_))
    }
}
