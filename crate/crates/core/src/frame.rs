//! Action frames, general concurrent game frames, and neighborhood frames.
//!
//! A [`RawActionFrame`] lists availability and outcomes for every coalition
//! and may violate the GCI/ODA conditions; [`validate_gcgf`] reports every
//! violation. A [`CanonicalGcgf`] stores only the grand-coalition outcome
//! function: all coalition-level availability and outcomes are derived from
//! it by [`CanonicalGcgf::expand`], so they satisfy GCI and ODA by
//! construction.

use std::borrow::Cow;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use smallvec::SmallVec;

use crate::agents::{AgentSet, Coalition, JointAction};
use crate::family::{PowerFamily, UpsetFamily};
use crate::space::{StateSet, StateSpace};
use crate::ModelError;

/// Action indices of a joint action, one per coalition member in agent order.
pub type ActionTuple = SmallVec<[u32; 4]>;

/// Seriality, independence and determinism flags.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassFlags {
    pub serial: bool,
    pub independent: bool,
    pub deterministic: bool,
}

impl ClassFlags {
    pub const NONE: ClassFlags = ClassFlags::new(false, false, false);
    pub const SID: ClassFlags = ClassFlags::new(true, true, true);

    pub const fn new(serial: bool, independent: bool, deterministic: bool) -> Self {
        ClassFlags {
            serial,
            independent,
            deterministic,
        }
    }

    /// The eight combinations, ordered ε, S, I, D, SI, SD, ID, SID.
    pub fn all() -> [ClassFlags; 8] {
        [
            ClassFlags::new(false, false, false),
            ClassFlags::new(true, false, false),
            ClassFlags::new(false, true, false),
            ClassFlags::new(false, false, true),
            ClassFlags::new(true, true, false),
            ClassFlags::new(true, false, true),
            ClassFlags::new(false, true, true),
            ClassFlags::new(true, true, true),
        ]
    }

    /// `"S"`, `"ID"`, `"SID"`, ...; `"ε"` when no flag is set.
    pub fn label(self) -> String {
        let mut s = String::new();
        if self.serial {
            s.push('S');
        }
        if self.independent {
            s.push('I');
        }
        if self.deterministic {
            s.push('D');
        }
        if s.is_empty() {
            s.push('ε');
        }
        s
    }

    /// Parses a label produced by [`ClassFlags::label`]; `""`, `"e"` and
    /// `"eps"` are accepted for the empty combination.
    pub fn parse(label: &str) -> Option<ClassFlags> {
        if matches!(label, "" | "ε" | "e" | "eps" | "epsilon") {
            return Some(ClassFlags::NONE);
        }
        let mut flags = ClassFlags::NONE;
        let mut last = 0;
        for ch in label.chars() {
            let rank = match ch {
                'S' | 's' => 1,
                'I' | 'i' => 2,
                'D' | 'd' => 3,
                _ => return None,
            };
            if rank <= last {
                return None;
            }
            last = rank;
            match rank {
                1 => flags.serial = true,
                2 => flags.independent = true,
                _ => flags.deterministic = true,
            }
        }
        Some(flags)
    }

    /// True iff every flag set in `other` is also set in `self`.
    pub fn covers(self, other: ClassFlags) -> bool {
        (self.serial || !other.serial)
            && (self.independent || !other.independent)
            && (self.deterministic || !other.deterministic)
    }
}

impl fmt::Display for ClassFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

// ---------------------------------------------------------------------------
// Raw action frames
// ---------------------------------------------------------------------------

/// An action frame with explicitly listed availability and outcome
/// functions for every coalition. Unlisted outcomes are `∅`; unlisted
/// availability is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawActionFrame {
    space: StateSpace,
    agents: AgentSet,
    actions: BTreeSet<String>,
    av: BTreeMap<(Coalition, usize), BTreeSet<JointAction>>,
    out: BTreeMap<(usize, JointAction), StateSet>,
}

impl RawActionFrame {
    pub fn new<I, S>(space: StateSpace, agents: AgentSet, actions: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        RawActionFrame {
            space,
            agents,
            actions: actions.into_iter().map(Into::into).collect(),
            av: BTreeMap::new(),
            out: BTreeMap::new(),
        }
    }

    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    pub fn agents(&self) -> &AgentSet {
        &self.agents
    }

    pub fn actions(&self) -> &BTreeSet<String> {
        &self.actions
    }

    fn check_action(&self, sigma: &JointAction) -> Result<(), ModelError> {
        if !sigma.coalition().is_subset(self.agents.grand()) {
            return Err(ModelError::WrongCoalition);
        }
        for a in sigma.actions() {
            if !self.actions.contains(a) {
                return Err(ModelError::UnknownAction(a.clone()));
            }
        }
        Ok(())
    }

    fn check_state(&self, s: usize) -> Result<(), ModelError> {
        if s >= self.space.len() {
            return Err(ModelError::StateOutOfRange(s));
        }
        Ok(())
    }

    /// Replaces `av_C(s)`.
    pub fn set_available<I>(&mut self, c: Coalition, s: usize, actions: I) -> Result<(), ModelError>
    where
        I: IntoIterator<Item = JointAction>,
    {
        self.check_state(s)?;
        let mut set = BTreeSet::new();
        for sigma in actions {
            if sigma.coalition() != c {
                return Err(ModelError::WrongCoalition);
            }
            self.check_action(&sigma)?;
            set.insert(sigma);
        }
        if set.is_empty() {
            self.av.remove(&(c, s));
        } else {
            self.av.insert((c, s), set);
        }
        Ok(())
    }

    /// Sets `out_C(s, σ_C)` where `C` is the coalition of `sigma`.
    pub fn set_outcome(&mut self, s: usize, sigma: JointAction, outcome: StateSet) -> Result<(), ModelError> {
        self.check_state(s)?;
        self.check_action(&sigma)?;
        if !outcome.is_subset(self.space.full()) {
            return Err(ModelError::StateOutOfRange(outcome.iter().last().unwrap_or(0)));
        }
        if outcome.is_empty() {
            self.out.remove(&(s, sigma));
        } else {
            self.out.insert((s, sigma), outcome);
        }
        Ok(())
    }

    pub fn available(&self, c: Coalition, s: usize) -> BTreeSet<JointAction> {
        self.av.get(&(c, s)).cloned().unwrap_or_default()
    }

    pub fn outcome(&self, s: usize, sigma: &JointAction) -> StateSet {
        // BTreeMap lookup needs an owned key tuple.
        self.out.get(&(s, sigma.clone())).copied().unwrap_or(StateSet::EMPTY)
    }

    /// Listed nonempty outcomes of coalition `c` at `s`.
    pub fn listed_outcomes(&self, c: Coalition, s: usize) -> impl Iterator<Item = (&JointAction, StateSet)> + '_ {
        self.out
            .iter()
            .filter(move |((st, sigma), _)| *st == s && sigma.coalition() == c)
            .map(|((_, sigma), out)| (sigma, *out))
    }

    /// Coalition/state pairs with a listed availability entry.
    pub fn availability_entries(&self) -> impl Iterator<Item = (Coalition, usize, &BTreeSet<JointAction>)> + '_ {
        self.av.iter().map(|((c, s), set)| (*c, *s, set))
    }

    /// All listed outcome entries.
    pub fn outcome_entries(&self) -> impl Iterator<Item = (usize, &JointAction, StateSet)> + '_ {
        self.out.iter().map(|((s, sigma), out)| (*s, sigma, *out))
    }
}

/// A `(C, s, σ_C)` triple whose outcome differs from the union of the
/// grand-coalition outcomes extending it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GciViolation {
    pub coalition: Coalition,
    pub state: usize,
    pub action: JointAction,
    pub listed: StateSet,
    pub expected: StateSet,
}

/// A `(C, s)` pair whose availability differs from the joint actions with
/// nonempty outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OdaViolation {
    pub coalition: Coalition,
    pub state: usize,
    pub listed: BTreeSet<JointAction>,
    pub expected: BTreeSet<JointAction>,
}

/// Every GCI and ODA violation of a raw frame. Empty iff the frame is a GCGF.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub gci: Vec<GciViolation>,
    pub oda: Vec<OdaViolation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.gci.is_empty() && self.oda.is_empty()
    }

    pub fn len(&self) -> usize {
        self.gci.len() + self.oda.len()
    }
}

/// Checks the GCI and ODA conditions of a raw frame.
///
/// Only joint actions that are listed for the coalition or that are
/// restrictions of a listed grand-coalition outcome are examined; every other
/// joint action has `∅` on both sides of the GCI equation.
pub fn validate_gcgf(frame: &RawActionFrame) -> ValidationReport {
    let grand = frame.agents.grand();
    let mut report = ValidationReport::default();
    for s in frame.space.states() {
        let grand_entries: Vec<(&JointAction, StateSet)> = frame.listed_outcomes(grand, s).collect();
        for c in frame.agents.coalitions() {
            let mut expected: BTreeMap<JointAction, StateSet> = BTreeMap::new();
            for (sigma, out) in &grand_entries {
                let key = sigma.restrict(c).expect("subset of grand coalition");
                let slot = expected.entry(key).or_default();
                *slot = slot.union(*out);
            }
            let mut candidates: BTreeSet<JointAction> = expected.keys().cloned().collect();
            let listed: BTreeMap<JointAction, StateSet> = frame
                .listed_outcomes(c, s)
                .map(|(sigma, out)| (sigma.clone(), out))
                .collect();
            candidates.extend(listed.keys().cloned());
            for sigma in candidates {
                let have = listed.get(&sigma).copied().unwrap_or_default();
                let want = expected.get(&sigma).copied().unwrap_or_default();
                if have != want {
                    report.gci.push(GciViolation {
                        coalition: c,
                        state: s,
                        action: sigma,
                        listed: have,
                        expected: want,
                    });
                }
            }
            let available = frame.available(c, s);
            let nonempty: BTreeSet<JointAction> = listed.into_keys().collect();
            if available != nonempty {
                report.oda.push(OdaViolation {
                    coalition: c,
                    state: s,
                    listed: available,
                    expected: nonempty,
                });
            }
        }
    }
    report
}

/// Keeps only the grand-coalition outcome function of a valid GCGF.
pub fn derive_canonical(frame: &RawActionFrame) -> Result<CanonicalGcgf, ModelError> {
    let report = validate_gcgf(frame);
    if !report.is_empty() {
        return Err(ModelError::NotAGcgf(Box::new(report)));
    }
    let grand = frame.agents.grand();
    let entries = frame
        .outcome_entries()
        .filter(|(_, sigma, _)| sigma.coalition() == grand)
        .map(|(s, sigma, out)| (s, sigma.clone(), out));
    CanonicalGcgf::new(
        frame.space.clone(),
        frame.agents.clone(),
        frame.actions.iter().cloned(),
        entries,
    )
}

// ---------------------------------------------------------------------------
// Canonical GCGFs
// ---------------------------------------------------------------------------

/// A finite general concurrent game frame, stored by its grand-coalition
/// outcome function. Absent entries are unavailable joint actions with
/// outcome `∅`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalGcgf {
    space: StateSpace,
    agents: AgentSet,
    /// Sorted and deduplicated.
    actions: Vec<String>,
    grand_out: Vec<BTreeMap<ActionTuple, StateSet>>,
}

/// Availability and outcomes of one coalition at one state.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expansion {
    pub outcomes: BTreeMap<JointAction, StateSet>,
}

impl Expansion {
    /// Joint actions with nonempty outcome.
    pub fn available(&self) -> impl Iterator<Item = &JointAction> {
        self.outcomes.keys()
    }

    /// Outcome of `sigma`; `∅` when unavailable.
    pub fn outcome(&self, sigma: &JointAction) -> StateSet {
        self.outcomes.get(sigma).copied().unwrap_or_default()
    }
}

/// Action names are nonempty, contain no comma and carry no surrounding
/// whitespace, so that joint actions render unambiguously.
pub fn valid_action_name(name: &str) -> bool {
    !name.is_empty() && !name.contains(',') && name.trim() == name
}

impl CanonicalGcgf {
    /// Builds a frame from `(state, grand joint action, outcome)` entries.
    /// Empty outcomes are dropped.
    pub fn new<A, S, E>(space: StateSpace, agents: AgentSet, actions: A, entries: E) -> Result<Self, ModelError>
    where
        A: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (usize, JointAction, StateSet)>,
    {
        let mut actions: Vec<String> = actions.into_iter().map(Into::into).collect();
        actions.sort_unstable();
        actions.dedup();
        if let Some(bad) = actions.iter().find(|a| !valid_action_name(a)) {
            return Err(ModelError::InvalidName(bad.clone()));
        }
        let lookup: HashMap<&str, u32> = actions
            .iter()
            .enumerate()
            .map(|(i, a)| (a.as_str(), i as u32))
            .collect();
        let grand = agents.grand();
        let full = space.full();
        let mut grand_out = vec![BTreeMap::new(); space.len()];
        for (s, sigma, out) in entries {
            if s >= space.len() {
                return Err(ModelError::StateOutOfRange(s));
            }
            if sigma.coalition() != grand {
                return Err(ModelError::WrongCoalition);
            }
            if !out.is_subset(full) {
                return Err(ModelError::StateOutOfRange(out.iter().last().unwrap_or(0)));
            }
            let mut key = ActionTuple::new();
            for a in sigma.actions() {
                key.push(
                    *lookup
                        .get(a.as_str())
                        .ok_or_else(|| ModelError::UnknownAction(a.clone()))?,
                );
            }
            if out.is_empty() {
                continue;
            }
            if grand_out[s].insert(key, out).is_some() {
                return Err(ModelError::DuplicateEntry(sigma.render()));
            }
        }
        drop(lookup);
        Ok(CanonicalGcgf {
            space,
            agents,
            actions,
            grand_out,
        })
    }

    /// Builds a frame from entries already keyed by indices into the sorted,
    /// deduplicated `actions`. Empty outcomes are dropped.
    pub(crate) fn from_indexed(
        space: StateSpace,
        agents: AgentSet,
        actions: Vec<String>,
        mut grand_out: Vec<BTreeMap<ActionTuple, StateSet>>,
    ) -> Result<Self, ModelError> {
        let full = space.full();
        for entries in &mut grand_out {
            entries.retain(|_, out| !out.is_empty());
            if let Some(out) = entries.values().find(|out| !out.is_subset(full)) {
                return Err(ModelError::StateOutOfRange(out.iter().last().unwrap_or(0)));
            }
        }
        Ok(CanonicalGcgf {
            space,
            agents,
            actions,
            grand_out,
        })
    }

    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    pub fn agents(&self) -> &AgentSet {
        &self.agents
    }

    pub fn actions(&self) -> &[String] {
        &self.actions
    }

    pub fn action_name(&self, index: u32) -> &str {
        &self.actions[index as usize]
    }

    /// Stored grand-coalition entries at `s`, keyed by action indices.
    pub fn grand_entries(&self, s: usize) -> &BTreeMap<ActionTuple, StateSet> {
        &self.grand_out[s]
    }

    /// Number of stored grand-coalition entries over all states.
    pub fn grand_entry_count(&self) -> usize {
        self.grand_out.iter().map(BTreeMap::len).sum()
    }

    fn tuple_to_action(&self, c: Coalition, key: &[u32]) -> JointAction {
        JointAction::new(c, key.iter().map(|i| self.action_name(*i).to_string())).expect("arity matches coalition")
    }

    /// Grand-coalition entries at `s` as named joint actions.
    pub fn grand_outcomes(&self, s: usize) -> impl Iterator<Item = (JointAction, StateSet)> + '_ {
        let grand = self.agents.grand();
        self.grand_out[s]
            .iter()
            .map(move |(k, out)| (self.tuple_to_action(grand, k), *out))
    }

    /// Outcomes of coalition `c` at `s`, keyed by projected action tuples.
    /// Only available joint actions (nonempty outcome) appear.
    pub fn expand_indexed(&self, c: Coalition, s: usize) -> BTreeMap<ActionTuple, StateSet> {
        self.expand_borrowed(c, s).into_owned()
    }

    /// [`CanonicalGcgf::expand_indexed`], borrowing the stored entries for
    /// the grand coalition.
    pub(crate) fn expand_borrowed(&self, c: Coalition, s: usize) -> Cow<'_, BTreeMap<ActionTuple, StateSet>> {
        let entries = &self.grand_out[s];
        if c == self.agents.grand() {
            return Cow::Borrowed(entries);
        }
        let members: SmallVec<[usize; 8]> = c.members().collect();
        // Projected tuples are accumulated in a dense table indexed by the
        // ranks of the action ids each member actually uses.
        let mut ranks: Vec<Vec<u32>> = vec![vec![u32::MAX; self.actions.len()]; members.len()];
        for key in entries.keys() {
            for (r, &m) in ranks.iter_mut().zip(&members) {
                r[key[m] as usize] = 0;
            }
        }
        let mut used: Vec<Vec<u32>> = Vec::with_capacity(members.len());
        for r in &mut ranks {
            let mut ids = Vec::new();
            for (id, slot) in r.iter_mut().enumerate() {
                if *slot == 0 {
                    *slot = ids.len() as u32;
                    ids.push(id as u32);
                }
            }
            used.push(ids);
        }
        let cells = used.iter().try_fold(1usize, |acc, v| acc.checked_mul(v.len()));
        let map = match cells {
            Some(cells) if cells <= 4 * entries.len() + 64 => {
                let mut table = vec![StateSet::EMPTY; cells];
                for (key, out) in entries {
                    let cell = members
                        .iter()
                        .zip(&ranks)
                        .zip(&used)
                        .fold(0, |acc, ((&m, r), v)| acc * v.len() + r[key[m] as usize] as usize);
                    table[cell] = table[cell].union(*out);
                }
                table
                    .into_iter()
                    .enumerate()
                    .filter(|(_, out)| !out.is_empty())
                    .map(|(mut cell, out)| {
                        let mut key = ActionTuple::from_elem(0, used.len());
                        for (slot, v) in key.iter_mut().zip(&used).rev() {
                            *slot = v[cell % v.len()];
                            cell /= v.len();
                        }
                        (key, out)
                    })
                    .collect()
            }
            _ => {
                let mut map: BTreeMap<ActionTuple, StateSet> = BTreeMap::new();
                for (key, out) in entries {
                    let proj: ActionTuple = members.iter().map(|m| key[*m]).collect();
                    let slot = map.entry(proj).or_default();
                    *slot = slot.union(*out);
                }
                map
            }
        };
        Cow::Owned(map)
    }

    /// Derived availability and outcomes of `c` at `s`: each joint action's
    /// outcome is the union of the grand outcomes extending it, and exactly
    /// the joint actions with nonempty outcome are available.
    pub fn expand(&self, c: Coalition, s: usize) -> Expansion {
        let outcomes = self
            .expand_indexed(c, s)
            .into_iter()
            .map(|(k, out)| (self.tuple_to_action(c, &k), out))
            .collect();
        Expansion { outcomes }
    }

    /// The union of every grand outcome at `s` (the successors of `s`).
    pub fn successors(&self, s: usize) -> StateSet {
        self.grand_out[s].values().fold(StateSet::EMPTY, |acc, o| acc.union(*o))
    }

    /// Lists availability and outcomes of every coalition explicitly.
    pub fn to_raw(&self) -> RawActionFrame {
        let mut raw = RawActionFrame::new(self.space.clone(), self.agents.clone(), self.actions.iter().cloned());
        for s in self.space.states() {
            for c in self.agents.coalitions() {
                let exp = self.expand(c, s);
                raw.set_available(c, s, exp.available().cloned())
                    .expect("derived actions are well formed");
                for (sigma, out) in exp.outcomes {
                    raw.set_outcome(s, sigma, out)
                        .expect("derived outcomes are well formed");
                }
            }
        }
        raw
    }
}

// ---------------------------------------------------------------------------
// Neighborhood frames
// ---------------------------------------------------------------------------

/// An actual neighborhood frame: a power family for every coalition and state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActualNF {
    space: StateSpace,
    agents: AgentSet,
    /// `nbhd[s][c.bits()]`
    nbhd: Vec<Vec<PowerFamily>>,
}

impl ActualNF {
    /// All neighborhoods empty.
    pub fn new(space: StateSpace, agents: AgentSet) -> Self {
        let per_state = vec![PowerFamily::new(); 1 << agents.len()];
        let nbhd = vec![per_state; space.len()];
        ActualNF { space, agents, nbhd }
    }

    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    pub fn agents(&self) -> &AgentSet {
        &self.agents
    }

    pub fn get(&self, c: Coalition, s: usize) -> &PowerFamily {
        &self.nbhd[s][c.bits() as usize]
    }

    pub fn set(&mut self, c: Coalition, s: usize, family: PowerFamily) -> Result<(), ModelError> {
        if s >= self.space.len() {
            return Err(ModelError::StateOutOfRange(s));
        }
        if !c.is_subset(self.agents.grand()) {
            return Err(ModelError::WrongCoalition);
        }
        let full = self.space.full();
        if let Some(bad) = family.iter().find(|x| !x.is_subset(full)) {
            return Err(ModelError::StateOutOfRange(bad.iter().last().unwrap_or(0)));
        }
        self.nbhd[s][c.bits() as usize] = family;
        Ok(())
    }

    /// Neighborhoods of every coalition at `s`, indexed by coalition bits.
    pub fn local(&self, s: usize) -> &[PowerFamily] {
        &self.nbhd[s]
    }
}

/// An alpha neighborhood frame, each neighborhood stored as the antichain of
/// its minimal members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaNF {
    space: StateSpace,
    agents: AgentSet,
    nbhd: Vec<Vec<UpsetFamily>>,
}

impl AlphaNF {
    /// All neighborhoods empty.
    pub fn new(space: StateSpace, agents: AgentSet) -> Self {
        let per_state = vec![UpsetFamily::empty(); 1 << agents.len()];
        let nbhd = vec![per_state; space.len()];
        AlphaNF { space, agents, nbhd }
    }

    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    pub fn agents(&self) -> &AgentSet {
        &self.agents
    }

    pub fn get(&self, c: Coalition, s: usize) -> &UpsetFamily {
        &self.nbhd[s][c.bits() as usize]
    }

    pub fn set(&mut self, c: Coalition, s: usize, family: UpsetFamily) -> Result<(), ModelError> {
        if s >= self.space.len() {
            return Err(ModelError::StateOutOfRange(s));
        }
        if !c.is_subset(self.agents.grand()) {
            return Err(ModelError::WrongCoalition);
        }
        let full = self.space.full();
        if let Some(bad) = family.minimals().iter().find(|x| !x.is_subset(full)) {
            return Err(ModelError::StateOutOfRange(bad.iter().last().unwrap_or(0)));
        }
        self.nbhd[s][c.bits() as usize] = family;
        Ok(())
    }

    pub fn local(&self, s: usize) -> &[UpsetFamily] {
        &self.nbhd[s]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenarios;

    #[test]
    fn class_labels_round_trip() {
        let labels: Vec<String> = ClassFlags::all().iter().map(|f| f.label()).collect();
        assert_eq!(labels, ["ε", "S", "I", "D", "SI", "SD", "ID", "SID"]);
        for f in ClassFlags::all() {
            assert_eq!(ClassFlags::parse(&f.label()), Some(f));
        }
        assert_eq!(ClassFlags::parse("DS"), None);
        assert!(ClassFlags::SID.covers(ClassFlags::new(true, false, true)));
        assert!(!ClassFlags::new(true, false, true).covers(ClassFlags::SID));
    }

    #[test]
    fn heavy_door_raw_frame_is_a_gcgf() {
        let raw = scenarios::heavy_door_raw();
        assert!(validate_gcgf(&raw).is_empty());
        let g = derive_canonical(&raw).unwrap();
        let w1 = g.space().index_of("w1").unwrap();
        assert_eq!(g.grand_entries(w1).len(), 4);
    }

    #[test]
    fn gci_violation_is_reported() {
        let mut raw = scenarios::heavy_door_raw();
        let space = raw.space().clone();
        let w1 = space.index_of("w1").unwrap();
        let push_a = JointAction::new(Coalition::single(0), ["push"]).unwrap();
        raw.set_outcome(w1, push_a.clone(), space.set_of(&["w2"]).unwrap())
            .unwrap();
        let report = validate_gcgf(&raw);
        assert_eq!(report.oda, []);
        assert_eq!(report.gci.len(), 1);
        let v = &report.gci[0];
        assert_eq!((v.coalition, v.state, &v.action), (Coalition::single(0), w1, &push_a));
        assert_eq!(v.expected, space.set_of(&["w1", "w2"]).unwrap());
        assert!(matches!(derive_canonical(&raw), Err(ModelError::NotAGcgf(_))));
    }

    #[test]
    fn oda_violation_is_reported() {
        let mut raw = scenarios::heavy_door_raw();
        let w1 = raw.space().index_of("w1").unwrap();
        raw.set_available(Coalition::single(0), w1, []).unwrap();
        let report = validate_gcgf(&raw);
        assert!(report.gci.is_empty());
        assert_eq!(report.oda.len(), 1);
        assert_eq!(
            (report.oda[0].coalition, report.oda[0].state),
            (Coalition::single(0), w1)
        );
    }

    #[test]
    fn heavy_door_expansion_for_a() {
        let g = scenarios::heavy_door();
        let space = g.space();
        let w1 = space.index_of("w1").unwrap();
        let exp = g.expand(Coalition::single(0), w1);
        let rest = JointAction::new(Coalition::single(0), ["rest"]).unwrap();
        let push = JointAction::new(Coalition::single(0), ["push"]).unwrap();
        assert_eq!(
            exp.available().cloned().collect::<Vec<_>>(),
            [push.clone(), rest.clone()]
        );
        assert_eq!(exp.outcome(&rest), space.set_of(&["w1"]).unwrap());
        assert_eq!(exp.outcome(&push), space.set_of(&["w1", "w2"]).unwrap());
    }

    #[test]
    fn empty_coalition_expansion_is_successor_set() {
        let g = scenarios::heavy_door();
        for s in g.space().states() {
            let exp = g.expand(Coalition::EMPTY, s);
            let succ = g.successors(s);
            if succ.is_empty() {
                assert!(exp.outcomes.is_empty());
            } else {
                assert_eq!(exp.outcome(&JointAction::empty()), succ);
                assert_eq!(exp.outcomes.len(), 1);
            }
        }
    }

    #[test]
    fn state_without_entries_has_nothing_available() {
        let space = StateSpace::new(["s"]).unwrap();
        let g = CanonicalGcgf::new(space, AgentSet::pair(), ["x"], []).unwrap();
        for c in g.agents().coalitions() {
            assert!(g.expand(c, 0).outcomes.is_empty());
        }
    }

    #[test]
    fn raw_round_trip_preserves_grand_out() {
        let g = scenarios::heavy_door();
        let raw = g.to_raw();
        assert!(validate_gcgf(&raw).is_empty());
        assert_eq!(derive_canonical(&raw).unwrap(), g);
    }

    #[test]
    fn rejects_duplicate_grand_entries() {
        let space = StateSpace::new(["s"]).unwrap();
        let sigma = JointAction::new(Coalition::grand(2), ["x", "x"]).unwrap();
        let out = StateSet::singleton(0);
        let err = CanonicalGcgf::new(
            space,
            AgentSet::pair(),
            ["x"],
            [(0, sigma.clone(), out), (0, sigma, out)],
        );
        assert!(matches!(err, Err(ModelError::DuplicateEntry(_))));
    }
}
