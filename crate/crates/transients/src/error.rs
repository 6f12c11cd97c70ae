use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid transient literal {literal:?}: {reason}")]
    InvalidTransient { literal: String, reason: String },

    #[error("invalid vector literal {literal:?}: {reason}")]
    InvalidVector { literal: String, reason: String },

    #[error("invalid function literal {literal:?}: {reason}")]
    InvalidFunction { literal: String, reason: String },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("argument index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },

    #[error("arity {arity} exceeds the supported maximum {max}")]
    ArityTooLarge { arity: usize, max: usize },

    #[error("operation requires a proper transient or vector (every component must have at least one change)")]
    NotProper,

    #[error("path enumeration refused: {paths} paths exceed the budget of {limit}")]
    PathBudgetExceeded { paths: u128, limit: u64 },

    #[error("state enumeration refused: {states} states exceed the budget of {limit}")]
    StateBudgetExceeded { states: u128, limit: u64 },

    #[error("walk is not a valid cube walk: {reason}")]
    InvalidWalk { reason: String },

    #[error("line {line}: syntax error: {reason}")]
    NetlistSyntax { line: usize, reason: String },

    #[error("line {line}: wire {wire:?} would form a cyclic dependency")]
    NetlistCycle { line: usize, wire: String },

    #[error("line {line}: unknown gate {name:?}")]
    NetlistUnknownGate { line: usize, name: String },

    #[error("line {line}: gate {gate} expects {expected} inputs, found {found}")]
    NetlistArity {
        line: usize,
        gate: String,
        expected: usize,
        found: usize,
    },

    #[error("line {line}: wire {wire:?} is not a primary input or an earlier-defined wire")]
    NetlistUndefinedWire { line: usize, wire: String },

    #[error("primary input {input:?} has no assigned transient")]
    MissingAssignment { input: String },

    #[error("internal inconsistency: {reason}")]
    Internal { reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 2 for bad input, 3 for exhausted
    /// budgets, 4 for internal inconsistencies that must never occur.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::PathBudgetExceeded { .. } | Error::StateBudgetExceeded { .. } => 3,
            Error::Internal { .. } => 4,
            Error::Io(_) => 1,
            _ => 2,
        }
    }
}
