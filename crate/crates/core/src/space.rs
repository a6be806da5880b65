//! States and sets of states.
//!
//! A [`StateSet`] is a fixed-width bit vector indexed by the order of a
//! [`StateSpace`]: bit `i` is set iff the `i`-th state is a member. Frames are
//! limited to [`MAX_STATES`] states.

use std::collections::HashMap;
use std::fmt;

use crate::ModelError;

/// Largest number of states a frame may have.
pub const MAX_STATES: usize = 64;

/// An ordered, nonempty list of distinct state names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateSpace {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl StateSpace {
    pub fn new<I, S>(names: I) -> Result<Self, ModelError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(ModelError::EmptyStateSpace);
        }
        if names.len() > MAX_STATES {
            return Err(ModelError::TooManyStates(names.len()));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            check_name(name)?;
            if index.insert(name.clone(), i).is_some() {
                return Err(ModelError::DuplicateName(name.clone()));
            }
        }
        Ok(StateSpace { names, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, state: usize) -> &str {
        &self.names[state]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize, ModelError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| ModelError::UnknownState(name.to_string()))
    }

    /// The set of all states.
    pub fn full(&self) -> StateSet {
        StateSet::full(self.len())
    }

    pub fn states(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<StateSet, ModelError> {
        let mut set = StateSet::EMPTY;
        for name in names {
            set = set.with(self.index_of(name.as_ref())?);
        }
        Ok(set)
    }

    /// Member names in state order.
    pub fn names_of(&self, set: StateSet) -> Vec<&str> {
        set.iter().map(|i| self.name(i)).collect()
    }

    /// Renders a set as `{u,v}`.
    pub fn render(&self, set: StateSet) -> String {
        format!("{{{}}}", self.names_of(set).join(","))
    }

    /// Renders a family as `{{u},{u,v}}`.
    pub fn render_family<I>(&self, sets: I) -> String
    where
        I: IntoIterator<Item = StateSet>,
    {
        let parts: Vec<String> = sets.into_iter().map(|s| self.render(s)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// Names may not be empty and may not contain the separators used by the
/// frame file format (`,`) or by synthesized action identifiers (`/+{}`).
pub(crate) fn check_name(name: &str) -> Result<(), ModelError> {
    if name.is_empty() || name.contains([',', '/', '+', '{', '}']) || name.trim() != name {
        return Err(ModelError::InvalidName(name.to_string()));
    }
    Ok(())
}

/// A subset of a [`StateSpace`], stored as a bit vector.
///
/// The ordering is the numeric order of the bit vector with the first state
/// as the least significant bit, so `{u} < {v} < {u,v}` when `u` precedes `v`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateSet(u64);

impl StateSet {
    pub const EMPTY: StateSet = StateSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        StateSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_STATES);
        if n == MAX_STATES {
            StateSet(u64::MAX)
        } else {
            StateSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(state: usize) -> Self {
        StateSet(1u64 << state)
    }

    pub fn from_states<I: IntoIterator<Item = usize>>(states: I) -> Self {
        states.into_iter().fold(StateSet::EMPTY, StateSet::with)
    }

    #[must_use]
    pub fn with(self, state: usize) -> Self {
        StateSet(self.0 | (1u64 << state))
    }

    pub fn contains(self, state: usize) -> bool {
        state < MAX_STATES && self.0 & (1u64 << state) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_singleton(self) -> bool {
        self.0.is_power_of_two()
    }

    pub fn union(self, other: StateSet) -> StateSet {
        StateSet(self.0 | other.0)
    }

    pub fn intersection(self, other: StateSet) -> StateSet {
        StateSet(self.0 & other.0)
    }

    pub fn difference(self, other: StateSet) -> StateSet {
        StateSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: StateSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: StateSet) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn intersects(self, other: StateSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Least member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Member indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }

    /// Every subset of `self`, starting with the empty set and ending with
    /// `self`, in increasing numeric order.
    pub fn subsets(self) -> impl Iterator<Item = StateSet> {
        let set = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == set {
                None
            } else {
                Some(current.wrapping_sub(set) & set)
            };
            Some(StateSet(current))
        })
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for StateSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        StateSet::from_states(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_every_submask_once() {
        let set = StateSet::from_states([0, 2, 5]);
        let subs: Vec<StateSet> = set.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert_eq!(subs[0], StateSet::EMPTY);
        assert_eq!(*subs.last().unwrap(), set);
        assert!(subs.iter().all(|s| s.is_subset(set)));
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(StateSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn ordering_puts_first_state_lowest() {
        let u = StateSet::singleton(0);
        let v = StateSet::singleton(1);
        assert!(u < v);
        assert!(v < u.union(v));
    }

    #[test]
    fn rejects_bad_spaces() {
        assert_eq!(StateSpace::new(Vec::<String>::new()), Err(ModelError::EmptyStateSpace));
        assert_eq!(StateSpace::new(["u", "u"]), Err(ModelError::DuplicateName("u".into())));
        assert!(StateSpace::new(["a,b"]).is_err());
        assert!(StateSpace::new((0..65).map(|i| format!("s{i}"))).is_err());
        let full = StateSpace::new((0..64).map(|i| format!("s{i}"))).unwrap();
        assert_eq!(full.full().len(), 64);
    }

    #[test]
    fn renders_in_state_order() {
        let space = StateSpace::new(["w1", "w2"]).unwrap();
        let set = space.set_of(&["w2", "w1"]).unwrap();
        assert_eq!(space.render(set), "{w1,w2}");
        assert_eq!(space.render(StateSet::EMPTY), "{}");
    }
}
