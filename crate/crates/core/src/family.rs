//! Families of state sets: explicit power families and antichain-encoded
//! upward-closed families.

use std::collections::BTreeSet;

use crate::space::StateSet;
use crate::ModelError;

/// A finite set of state sets. Actual neighborhoods and actual effectivity
/// are power families.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PowerFamily(BTreeSet<StateSet>);

impl PowerFamily {
    pub fn new() -> Self {
        PowerFamily(BTreeSet::new())
    }

    pub fn insert(&mut self, set: StateSet) -> bool {
        self.0.insert(set)
    }

    pub fn contains(&self, set: StateSet) -> bool {
        self.0.contains(&set)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Members in increasing [`StateSet`] order.
    pub fn iter(&self) -> impl Iterator<Item = StateSet> + '_ {
        self.0.iter().copied()
    }

    /// Union of all members.
    pub fn union_all(&self) -> StateSet {
        self.iter().fold(StateSet::EMPTY, StateSet::union)
    }

    /// The single member, if the family is a singleton.
    pub fn only(&self) -> Option<StateSet> {
        if self.len() == 1 {
            self.0.first().copied()
        } else {
            None
        }
    }

    /// Members that are subsets of `bound`.
    pub fn below(&self, bound: StateSet) -> impl Iterator<Item = StateSet> + '_ {
        self.iter().filter(move |m| m.is_subset(bound))
    }

    /// Least member (in [`StateSet`] order) satisfying `pred`.
    pub fn least_where(&self, mut pred: impl FnMut(StateSet) -> bool) -> Option<StateSet> {
        self.iter().find(|m| pred(*m))
    }
}

impl FromIterator<StateSet> for PowerFamily {
    fn from_iter<I: IntoIterator<Item = StateSet>>(iter: I) -> Self {
        PowerFamily(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a PowerFamily {
    type Item = &'a StateSet;
    type IntoIter = std::collections::btree_set::Iter<'a, StateSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// An upward-closed family of state sets, represented by its antichain of
/// ⊆-minimal members.
///
/// The empty antichain denotes the empty family; the antichain `{∅}` denotes
/// the full powerset.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UpsetFamily {
    minimals: Vec<StateSet>,
}

impl UpsetFamily {
    /// The empty family.
    pub fn empty() -> Self {
        UpsetFamily::default()
    }

    /// Wraps an antichain. Fails if one member contains another.
    pub fn from_minimals<I: IntoIterator<Item = StateSet>>(sets: I) -> Result<Self, ModelError> {
        let mut minimals: Vec<StateSet> = sets.into_iter().collect();
        minimals.sort_unstable();
        minimals.dedup();
        for (i, a) in minimals.iter().enumerate() {
            for b in &minimals[i + 1..] {
                if a.is_subset(*b) || b.is_subset(*a) {
                    return Err(ModelError::NotAnAntichain);
                }
            }
        }
        Ok(UpsetFamily { minimals })
    }

    /// The upset generated by arbitrary sets, stored as its ⊆-minimal
    /// members. This is also the conversion path for explicit upsets.
    pub fn generated_by<I: IntoIterator<Item = StateSet>>(sets: I) -> Self {
        let mut all: Vec<StateSet> = sets.into_iter().collect();
        // Sorting by cardinality lets each candidate be tested only against
        // already-accepted (no larger) minimals.
        all.sort_unstable_by_key(|s| (s.len(), *s));
        all.dedup();
        let mut minimals: Vec<StateSet> = Vec::new();
        for s in all {
            if !minimals.iter().any(|m| m.is_subset(s)) {
                minimals.push(s);
            }
        }
        minimals.sort_unstable();
        UpsetFamily { minimals }
    }

    pub fn minimals(&self) -> &[StateSet] {
        &self.minimals
    }

    pub fn is_empty(&self) -> bool {
        self.minimals.is_empty()
    }

    /// Membership in the denoted upset.
    pub fn contains(&self, x: StateSet) -> bool {
        self.minimals.iter().any(|m| m.is_subset(x))
    }

    /// Union of the minimals (the union of the nonmonotonic core).
    pub fn core_union(&self) -> StateSet {
        self.minimals.iter().fold(StateSet::EMPTY, |acc, m| acc.union(*m))
    }

    /// The unique minimal, if there is exactly one.
    pub fn only(&self) -> Option<StateSet> {
        match self.minimals.as_slice() {
            [m] => Some(*m),
            _ => None,
        }
    }

    /// All members of the denoted upset that are subsets of `bound`.
    pub fn members_within(&self, bound: StateSet) -> PowerFamily {
        bound.subsets().filter(|s| self.contains(*s)).collect()
    }

    /// The minimals as an explicit family.
    pub fn core_family(&self) -> PowerFamily {
        self.minimals.iter().copied().collect()
    }
}
