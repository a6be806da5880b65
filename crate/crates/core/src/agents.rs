//! Agents, coalitions and joint actions.

use std::fmt;

use crate::space::check_name;
use crate::ModelError;

/// Largest number of agents a frame may have.
pub const MAX_AGENTS: usize = 16;

/// An ordered, nonempty list of distinct agent names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgentSet {
    names: Vec<String>,
}

impl AgentSet {
    pub fn new<I, S>(names: I) -> Result<Self, ModelError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(ModelError::EmptyAgentSet);
        }
        if names.len() > MAX_AGENTS {
            return Err(ModelError::TooManyAgents(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            check_name(name)?;
            if names[..i].contains(name) {
                return Err(ModelError::DuplicateName(name.clone()));
            }
        }
        Ok(AgentSet { names })
    }

    /// The two-agent set `{a, b}`.
    pub fn pair() -> Self {
        AgentSet::new(["a", "b"]).expect("valid names")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, agent: usize) -> &str {
        &self.names[agent]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize, ModelError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| ModelError::UnknownAgent(name.to_string()))
    }

    pub fn grand(&self) -> Coalition {
        Coalition::grand(self.len())
    }

    /// All `2^n` coalitions, ordered by their bit mask (so `∅` first and the
    /// grand coalition last).
    pub fn coalitions(&self) -> impl Iterator<Item = Coalition> {
        (0..1u32 << self.len()).map(Coalition)
    }

    pub fn single(&self, agent: usize) -> Coalition {
        assert!(agent < self.len());
        Coalition::single(agent)
    }

    /// Comma-joined member names in agent order; `""` for the empty coalition.
    pub fn render(&self, c: Coalition) -> String {
        c.members().map(|i| self.name(i)).collect::<Vec<_>>().join(",")
    }

    pub fn parse_coalition(&self, text: &str) -> Result<Coalition, ModelError> {
        let mut c = Coalition::EMPTY;
        if text.is_empty() {
            return Ok(c);
        }
        for part in text.split(',') {
            c = c.with(self.index_of(part)?);
        }
        Ok(c)
    }
}

/// A subset of an [`AgentSet`], stored as a bit mask over agent positions.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coalition(u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub const fn from_bits(bits: u32) -> Self {
        Coalition(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn grand(n_agents: usize) -> Self {
        Coalition((1u32 << n_agents) - 1)
    }

    pub fn single(agent: usize) -> Self {
        Coalition(1 << agent)
    }

    #[must_use]
    pub fn with(self, agent: usize) -> Self {
        Coalition(self.0 | (1 << agent))
    }

    pub fn contains(self, agent: usize) -> bool {
        self.0 & (1 << agent) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Coalition) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Coalition) -> Coalition {
        Coalition(self.0 | other.0)
    }

    /// Member agent positions in increasing order.
    pub fn members(self) -> impl Iterator<Item = usize> {
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

    /// All subsets of this coalition.
    pub fn subsets(self) -> impl Iterator<Item = Coalition> {
        let set = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == set {
                None
            } else {
                Some(current.wrapping_sub(set) & set)
            };
            Some(Coalition(current))
        })
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members()).finish()
    }
}

/// A total assignment of action identifiers to the members of one coalition.
///
/// Actions are stored in agent order, so `actions[k]` belongs to the `k`-th
/// member of `coalition`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JointAction {
    coalition: Coalition,
    actions: Vec<String>,
}

impl JointAction {
    /// The unique joint action of the empty coalition.
    pub fn empty() -> Self {
        JointAction {
            coalition: Coalition::EMPTY,
            actions: Vec::new(),
        }
    }

    pub fn new<I, S>(coalition: Coalition, actions: I) -> Result<Self, ModelError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let actions: Vec<String> = actions.into_iter().map(Into::into).collect();
        if actions.len() != coalition.len() {
            return Err(ModelError::ArityMismatch {
                expected: coalition.len(),
                found: actions.len(),
            });
        }
        Ok(JointAction { coalition, actions })
    }

    /// Builds a joint action from `(agent position, action)` pairs.
    pub fn from_pairs<I, S>(pairs: I) -> Result<Self, ModelError>
    where
        I: IntoIterator<Item = (usize, S)>,
        S: Into<String>,
    {
        let mut pairs: Vec<(usize, String)> = pairs.into_iter().map(|(a, s)| (a, s.into())).collect();
        pairs.sort_by_key(|(a, _)| *a);
        let mut coalition = Coalition::EMPTY;
        for (agent, _) in &pairs {
            if *agent >= MAX_AGENTS || coalition.contains(*agent) {
                return Err(ModelError::OverlappingCoalitions);
            }
            coalition = coalition.with(*agent);
        }
        Ok(JointAction {
            coalition,
            actions: pairs.into_iter().map(|(_, s)| s).collect(),
        })
    }

    pub fn coalition(&self) -> Coalition {
        self.coalition
    }

    pub fn actions(&self) -> &[String] {
        &self.actions
    }

    /// The action assigned to `agent`, if the agent is a member.
    pub fn get(&self, agent: usize) -> Option<&str> {
        self.coalition
            .members()
            .position(|m| m == agent)
            .map(|k| self.actions[k].as_str())
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, &str)> {
        self.coalition.members().zip(self.actions.iter().map(String::as_str))
    }

    /// Restriction to a sub-coalition.
    pub fn restrict(&self, c: Coalition) -> Result<JointAction, ModelError> {
        if !c.is_subset(self.coalition) {
            return Err(ModelError::CoalitionNotSubset);
        }
        let actions = self
            .pairs()
            .filter(|(agent, _)| c.contains(*agent))
            .map(|(_, a)| a.to_string())
            .collect();
        Ok(JointAction { coalition: c, actions })
    }

    /// Union with a joint action of a disjoint coalition.
    pub fn join(&self, other: &JointAction) -> Result<JointAction, ModelError> {
        if !self.coalition.is_disjoint(other.coalition) {
            return Err(ModelError::OverlappingCoalitions);
        }
        JointAction::from_pairs(self.pairs().chain(other.pairs()))
    }

    /// True iff `self` is the restriction of `other` to `self`'s coalition.
    pub fn is_restriction_of(&self, other: &JointAction) -> bool {
        self.coalition.is_subset(other.coalition) && self.pairs().all(|(agent, a)| other.get(agent) == Some(a))
    }

    /// Comma-joined actions in agent order.
    pub fn render(&self) -> String {
        self.actions.join(",")
    }

    pub fn parse(coalition: Coalition, text: &str) -> Result<Self, ModelError> {
        if coalition.is_empty() {
            if !text.is_empty() {
                return Err(ModelError::ArityMismatch {
                    expected: 0,
                    found: text.split(',').count(),
                });
            }
            return Ok(JointAction::empty());
        }
        JointAction::new(coalition, text.split(','))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(a: &str, b: &str) -> JointAction {
        JointAction::new(Coalition::from_bits(0b11), [a, b]).unwrap()
    }

    #[test]
    fn restrict_projects_onto_members() {
        let sigma = ab("alpha", "beta");
        let only_a = sigma.restrict(Coalition::single(0)).unwrap();
        assert_eq!(only_a.actions(), ["alpha"]);
        assert_eq!(only_a.coalition(), Coalition::single(0));
        assert_eq!(sigma.restrict(Coalition::EMPTY).unwrap(), JointAction::empty());
    }

    #[test]
    fn restrict_rejects_larger_coalition() {
        let sigma = JointAction::new(Coalition::single(0), ["alpha"]).unwrap();
        assert_eq!(
            sigma.restrict(Coalition::from_bits(0b11)),
            Err(ModelError::CoalitionNotSubset)
        );
    }

    #[test]
    fn join_of_disjoint_actions() {
        let a = JointAction::new(Coalition::single(0), ["alpha"]).unwrap();
        let b = JointAction::new(Coalition::single(1), ["beta"]).unwrap();
        assert_eq!(a.join(&b).unwrap(), ab("alpha", "beta"));
        assert_eq!(b.join(&a).unwrap(), ab("alpha", "beta"));
        assert_eq!(a.join(&JointAction::empty()).unwrap(), a);
        let a2 = JointAction::new(Coalition::single(0), ["alpha2"]).unwrap();
        assert_eq!(a.join(&a2), Err(ModelError::OverlappingCoalitions));
    }

    #[test]
    fn coalition_strings() {
        let agents = AgentSet::new(["a", "b", "c"]).unwrap();
        let c = agents.parse_coalition("c,a").unwrap();
        assert_eq!(agents.render(c), "a,c");
        assert_eq!(agents.parse_coalition("").unwrap(), Coalition::EMPTY);
        assert!(agents.parse_coalition("d").is_err());
        assert_eq!(agents.coalitions().count(), 8);
    }

    #[test]
    fn subsets_of_coalition() {
        let c = Coalition::from_bits(0b101);
        let subs: Vec<u32> = c.subsets().map(Coalition::bits).collect();
        assert_eq!(subs, [0, 1, 4, 5]);
    }
}
