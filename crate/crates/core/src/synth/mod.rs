//! Two-agent game frames from representative neighborhood frames.

mod actual;
mod alpha;

pub use actual::{synthesize_actual, synthesize_actual_games, synthesize_local_actual};
pub use alpha::{restrict_local, restrict_to_core, synthesize_alpha, synthesize_alpha_with, BranchChoice};

use thiserror::Error;

use crate::checkers::ConditionReport;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SynthError {
    #[error("synthesis needs exactly two agents, found {0}")]
    NotTwoAgents(usize),
    #[error("the frame is not representative: {}", failing_names(.0))]
    NotRepresentative(Vec<ConditionReport>),
    #[error("the empty coalition has no powers at state {0}")]
    EmptyAtState(usize),
    #[error("the deterministic construction needs an alpha-deterministic frame")]
    NotDeterministic,
}

fn failing_names(reports: &[ConditionReport]) -> String {
    reports
        .iter()
        .filter(|r| !r.holds)
        .map(|r| r.condition)
        .collect::<Vec<_>>()
        .join(", ")
}

fn failing(reports: Vec<ConditionReport>) -> Option<SynthError> {
    if reports.iter().all(|r| r.holds) {
        None
    } else {
        Some(SynthError::NotRepresentative(
            reports.into_iter().filter(|r| !r.holds).collect(),
        ))
    }
}
