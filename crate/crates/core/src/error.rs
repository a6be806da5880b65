use thiserror::Error;

use crate::frame::ValidationReport;

/// Errors raised while building or manipulating frames.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("state space must contain at least one state")]
    EmptyStateSpace,
    #[error("agent set must contain at least one agent")]
    EmptyAgentSet,
    #[error("{0} states exceed the supported maximum")]
    TooManyStates(usize),
    #[error("{0} agents exceed the supported maximum")]
    TooManyAgents(usize),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("invalid name `{0}`")]
    InvalidName(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("unknown agent `{0}`")]
    UnknownAgent(String),
    #[error("unknown action `{0}`")]
    UnknownAction(String),
    #[error("joint action has {found} components but the coalition has {expected} members")]
    ArityMismatch { expected: usize, found: usize },
    #[error("joint action does not belong to the expected coalition")]
    WrongCoalition,
    #[error("coalition is not a subset of the joint action's coalition")]
    CoalitionNotSubset,
    #[error("coalitions overlap")]
    OverlappingCoalitions,
    #[error("state index {0} is out of range")]
    StateOutOfRange(usize),
    #[error("duplicate outcome entry for `{0}`")]
    DuplicateEntry(String),
    #[error("family is not an antichain")]
    NotAnAntichain,
    #[error("frames are over different state spaces or agent sets")]
    SignatureMismatch,
    #[error("not a general concurrent game frame ({} violations)", .0.len())]
    NotAGcgf(Box<ValidationReport>),
}
