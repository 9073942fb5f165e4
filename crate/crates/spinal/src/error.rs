//! Error types shared across the crate.

use crate::network::ValidationReport;
use thiserror::Error;

/// Any failure produced by the library's fallible operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The network failed structural validation; the report lists every violation.
    #[error("invalid network: {0}")]
    InvalidNetwork(ValidationReport),
    /// The supplied spine is not a spine of the supplied network.
    #[error("spine does not belong to this network")]
    SpineMismatch,
    /// One network carries leaf labels and the other does not.
    #[error("cannot compare a labeled network with an unlabeled one")]
    LabelModeMismatch,
    /// The operation requires an unlabeled network; call `strip_labels` first.
    #[error("operation requires an unlabeled network")]
    LabeledInput,
    /// The operation requires a labeled network.
    #[error("operation requires a labeled network")]
    UnlabeledInput,
    /// The network is not spinal tree-child (no spine, or tree-child fails).
    #[error("network is not spinal tree-child: {0}")]
    NotSpinalTreeChild(String),
    /// The network is not in the caterpillar-extended spinal class.
    #[error("network is not spinal-caterpillar tree-child: {0}")]
    NotSpinalCaterpillar(String),
    /// A word failed membership in the requested class.
    #[error("word is not in {class}: {reason}")]
    NotInClass {
        /// Name of the violated class (C, C1 or C2).
        class: String,
        /// First violated condition.
        reason: String,
    },
    /// A pair partition violated its own invariants.
    #[error("malformed pair partition: {0}")]
    MalformedPartition(String),
    /// An {L,R,Q} word violated the token conditions.
    #[error("malformed LRQ word: {0}")]
    MalformedLrq(String),
    /// A marked tree violated its structural invariants.
    #[error("invalid marked tree: {0}")]
    InvalidMarkedTree(String),
    /// A leaf label collided with one already present.
    #[error("leaf label {0} already present")]
    LabelCollision(u32),
    /// The network does not end in a cherry.
    #[error("operation requires a cherry network")]
    CherryExpected,
    /// The network ends in a cherry but a non-cherry one was required.
    #[error("operation requires a non-cherry network")]
    NonCherryExpected,
    /// A choice index passed to a reconstruction was out of range.
    #[error("invalid choice: {0}")]
    InvalidChoice(String),
    /// Parameters outside the operation's domain.
    #[error("parameter out of range: {0}")]
    ParameterRange(String),
    /// An enumeration exceeded its budget.
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    /// Textual input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable code for this error, used by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidNetwork(_) => "invalid-network",
            Error::SpineMismatch => "spine-mismatch",
            Error::LabelModeMismatch => "label-mode-mismatch",
            Error::LabeledInput => "labeled-input",
            Error::UnlabeledInput => "unlabeled-input",
            Error::NotSpinalTreeChild(_) => "not-spinal-tree-child",
            Error::NotSpinalCaterpillar(_) => "not-spinal-caterpillar",
            Error::NotInClass { .. } => "class-membership",
            Error::MalformedPartition(_) => "malformed-partition",
            Error::MalformedLrq(_) => "malformed-lrq",
            Error::InvalidMarkedTree(_) => "invalid-marked-tree",
            Error::LabelCollision(_) => "label-collision",
            Error::CherryExpected => "cherry-expected",
            Error::NonCherryExpected => "non-cherry-expected",
            Error::InvalidChoice(_) => "invalid-choice",
            Error::ParameterRange(_) => "parameter-range",
            Error::BudgetExceeded(_) => "budget-exceeded",
            Error::Parse(_) => "parse-error",
        }
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
