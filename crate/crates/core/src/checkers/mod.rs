//! Decision procedures for frame classes and representativeness conditions.
//!
//! Every condition is reported as a [`ConditionReport`] carrying the
//! counterexamples found. The `local_*` variants evaluate the conditions at a
//! single state given the neighborhoods of every coalition there, indexed by
//! coalition bit mask; they stop at the first counterexample and are meant for
//! exhaustive enumeration.

mod actual;
mod alpha;
mod facts;
mod gcgf;

pub use actual::{
    ac_class_reports, check_ac_class, check_ac_representative, check_stit_independent, local_ac_class,
    local_ac_representative, local_ac_representative_reports,
};
pub use alpha::{
    alpha_class_reports, check_alpha_class, check_alpha_representative, check_truly_playable, local_alpha_class,
    local_alpha_representative, local_alpha_representative_reports, local_truly_playable, minimal_transversals,
};
pub use facts::{check_actual_facts, check_alpha_facts};
pub use gcgf::{check_gcgf_class, gcgf_class_reports};

use thiserror::Error;

use crate::agents::{Coalition, JointAction};
use crate::space::StateSet;

/// A counterexample to a condition: the state, coalitions, sets and joint
/// actions involved, in the order the condition mentions them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witness {
    pub state: usize,
    pub coalitions: Vec<Coalition>,
    pub sets: Vec<StateSet>,
    pub actions: Vec<JointAction>,
}

impl Witness {
    pub fn new(state: usize, coalitions: impl Into<Vec<Coalition>>, sets: impl Into<Vec<StateSet>>) -> Self {
        Witness {
            state,
            coalitions: coalitions.into(),
            sets: sets.into(),
            actions: Vec::new(),
        }
    }
}

/// The verdict on one condition together with its counterexamples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub condition: &'static str,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
}

impl ConditionReport {
    pub fn new(condition: &'static str, witnesses: Vec<Witness>) -> Self {
        ConditionReport {
            condition,
            holds: witnesses.is_empty(),
            witnesses,
        }
    }
}

/// True iff every report holds.
pub fn all_hold(reports: &[ConditionReport]) -> bool {
    reports.iter().all(|r| r.holds)
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("the frame fails the {0} condition, so the derived facts carry no guarantee")]
    PreconditionNotChecked(&'static str),
}

/// Collects witnesses up to a limit.
pub(crate) struct Sink {
    limit: usize,
    items: Vec<Witness>,
}

impl Sink {
    pub(crate) fn all() -> Self {
        Sink {
            limit: usize::MAX,
            items: Vec::new(),
        }
    }

    pub(crate) fn first() -> Self {
        Sink {
            limit: 1,
            items: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, w: Witness) {
        if self.items.len() < self.limit {
            self.items.push(w);
        }
    }

    pub(crate) fn full(&self) -> bool {
        self.items.len() >= self.limit
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub(crate) fn into_report(self, condition: &'static str) -> ConditionReport {
        ConditionReport::new(condition, self.items)
    }
}

/// Coalitions indexed by bit mask for a local slice of length `2^n`.
pub(crate) fn coalitions_of(len: usize) -> impl Iterator<Item = Coalition> + Clone {
    (0..len as u32).map(Coalition::from_bits)
}

/// All pairs `(C, D)` with `C ⊆ D`.
pub(crate) fn nested_pairs(len: usize) -> impl Iterator<Item = (Coalition, Coalition)> {
    coalitions_of(len).flat_map(|d| d.subsets().map(move |c| (c, d)))
}

/// All ordered pairs of disjoint coalitions.
pub(crate) fn disjoint_pairs(len: usize) -> impl Iterator<Item = (Coalition, Coalition)> {
    let grand = Coalition::from_bits(len as u32 - 1);
    coalitions_of(len).flat_map(move |c| {
        let rest = Coalition::from_bits(grand.bits() & !c.bits());
        rest.subsets().map(move |d| (c, d))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_iterators() {
        assert_eq!(nested_pairs(4).count(), 9);
        assert_eq!(disjoint_pairs(4).count(), 9);
        assert!(disjoint_pairs(8).all(|(c, d)| c.is_disjoint(d)));
        assert!(nested_pairs(8).all(|(c, d)| c.is_subset(d)));
    }
}
