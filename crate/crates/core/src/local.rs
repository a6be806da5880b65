//! Per-state slices of two-agent frames.

use std::collections::BTreeMap;

use crate::agents::{AgentSet, Coalition, JointAction};
use crate::family::{PowerFamily, UpsetFamily};
use crate::frame::{ActionTuple, ActualNF, AlphaNF, CanonicalGcgf};
use crate::space::{StateSet, StateSpace};
use crate::ModelError;

/// The neighborhoods of `∅`, `{a}`, `{b}` and `{a,b}` at one state, indexed
/// by coalition bit mask.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LocalFamilies(pub [PowerFamily; 4]);

impl LocalFamilies {
    pub fn new(empty: PowerFamily, a: PowerFamily, b: PowerFamily, grand: PowerFamily) -> Self {
        LocalFamilies([empty, a, b, grand])
    }

    /// The families of `nf` at `s`. `nf` must have two agents.
    pub fn of(nf: &ActualNF, s: usize) -> Self {
        let local = nf.local(s);
        LocalFamilies([local[0].clone(), local[1].clone(), local[2].clone(), local[3].clone()])
    }

    pub fn empty(&self) -> &PowerFamily {
        &self.0[0]
    }

    pub fn a(&self) -> &PowerFamily {
        &self.0[1]
    }

    pub fn b(&self) -> &PowerFamily {
        &self.0[2]
    }

    pub fn grand(&self) -> &PowerFamily {
        &self.0[3]
    }

    pub fn as_slice(&self) -> &[PowerFamily] {
        &self.0
    }
}

/// The antichains of `∅`, `{a}`, `{b}` and `{a,b}` at one state.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LocalAntichains(pub [UpsetFamily; 4]);

impl LocalAntichains {
    pub fn of(nf: &AlphaNF, s: usize) -> Self {
        let local = nf.local(s);
        LocalAntichains([local[0].clone(), local[1].clone(), local[2].clone(), local[3].clone()])
    }

    pub fn as_slice(&self) -> &[UpsetFamily] {
        &self.0
    }
}

/// How a synthesized action names an individual power: the group, the power
/// itself, and the grand-coalition power it was introduced for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NameTag {
    pub group: u8,
    pub power: StateSet,
    pub witness: StateSet,
}

/// The slice of a two-agent GCGF at one state: the individual actions with
/// their outcomes and the outcomes of the available action pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalGame {
    state: usize,
    a_actions: Vec<String>,
    b_actions: Vec<String>,
    out_a: Vec<StateSet>,
    out_b: Vec<StateSet>,
    grand: BTreeMap<(usize, usize), StateSet>,
    a_tags: Vec<NameTag>,
    b_tags: Vec<NameTag>,
}

impl LocalGame {
    /// The game with no actions.
    pub fn empty(state: usize) -> Self {
        LocalGame {
            state,
            a_actions: Vec::new(),
            b_actions: Vec::new(),
            out_a: Vec::new(),
            out_b: Vec::new(),
            grand: BTreeMap::new(),
            a_tags: Vec::new(),
            b_tags: Vec::new(),
        }
    }

    /// A game whose individual outcomes are derived from the pair outcomes.
    /// Actions that occur in no pair get outcome `∅`.
    pub fn from_pairs(
        state: usize,
        a_actions: Vec<String>,
        b_actions: Vec<String>,
        grand: BTreeMap<(usize, usize), StateSet>,
    ) -> Self {
        let mut out_a = vec![StateSet::EMPTY; a_actions.len()];
        let mut out_b = vec![StateSet::EMPTY; b_actions.len()];
        for (&(i, j), z) in &grand {
            out_a[i] = out_a[i].union(*z);
            out_b[j] = out_b[j].union(*z);
        }
        LocalGame {
            state,
            a_actions,
            b_actions,
            out_a,
            out_b,
            grand: grand.into_iter().filter(|(_, z)| !z.is_empty()).collect(),
            a_tags: Vec::new(),
            b_tags: Vec::new(),
        }
    }

    pub(crate) fn tagged(
        state: usize,
        a: Vec<(String, NameTag)>,
        b: Vec<(String, NameTag)>,
        grand: BTreeMap<(usize, usize), StateSet>,
    ) -> Self {
        let (a_actions, a_tags): (Vec<String>, Vec<NameTag>) = a.into_iter().unzip();
        let (b_actions, b_tags): (Vec<String>, Vec<NameTag>) = b.into_iter().unzip();
        LocalGame {
            state,
            out_a: a_tags.iter().map(|t| t.power).collect(),
            out_b: b_tags.iter().map(|t| t.power).collect(),
            a_actions,
            b_actions,
            grand,
            a_tags,
            b_tags,
        }
    }

    pub fn state(&self) -> usize {
        self.state
    }

    pub fn a_actions(&self) -> &[String] {
        &self.a_actions
    }

    pub fn b_actions(&self) -> &[String] {
        &self.b_actions
    }

    pub fn out_a(&self) -> &[StateSet] {
        &self.out_a
    }

    pub fn out_b(&self) -> &[StateSet] {
        &self.out_b
    }

    /// Outcomes of the available pairs, keyed by `(a-action, b-action)`
    /// positions.
    pub fn grand(&self) -> &BTreeMap<(usize, usize), StateSet> {
        &self.grand
    }

    /// Name tags of synthesized actions; empty for other games.
    pub fn a_tags(&self) -> &[NameTag] {
        &self.a_tags
    }

    pub fn b_tags(&self) -> &[NameTag] {
        &self.b_tags
    }

    pub fn is_empty(&self) -> bool {
        self.a_actions.is_empty() && self.b_actions.is_empty() && self.grand.is_empty()
    }

    /// Local ODA and GCI: every individual action has a nonempty outcome
    /// equal to the union of the outcomes of the pairs it takes part in.
    pub fn satisfies_gci(&self) -> bool {
        let mut union_a = vec![StateSet::EMPTY; self.a_actions.len()];
        let mut union_b = vec![StateSet::EMPTY; self.b_actions.len()];
        for (&(i, j), z) in &self.grand {
            if z.is_empty() {
                return false;
            }
            union_a[i] = union_a[i].union(*z);
            union_b[j] = union_b[j].union(*z);
        }
        union_a == self.out_a && union_b == self.out_b && self.out_a.iter().chain(&self.out_b).all(|o| !o.is_empty())
    }

    /// The actual effectivity of the four coalitions.
    pub fn families(&self) -> LocalFamilies {
        let grand: PowerFamily = self.grand.values().copied().collect();
        let succ = grand.union_all();
        let empty: PowerFamily = if succ.is_empty() {
            PowerFamily::new()
        } else {
            [succ].into_iter().collect()
        };
        let a = self.out_a.iter().copied().filter(|o| !o.is_empty()).collect();
        let b = self.out_b.iter().copied().filter(|o| !o.is_empty()).collect();
        LocalFamilies::new(empty, a, b, grand)
    }

    /// True iff every pair is available.
    pub fn is_complete(&self) -> bool {
        self.grand.len() == self.a_actions.len() * self.b_actions.len()
    }

    /// True iff every pair outcome is a singleton.
    pub fn is_deterministic(&self) -> bool {
        self.grand.values().all(|z| z.is_singleton())
    }

    /// Grand-coalition entries `(state, (α, β), outcome)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, JointAction, StateSet)> + '_ {
        self.grand.iter().map(move |(&(i, j), z)| {
            let sigma = JointAction::new(
                Coalition::from_bits(0b11),
                [self.a_actions[i].clone(), self.b_actions[j].clone()],
            )
            .expect("two actions for two agents");
            (self.state, sigma, *z)
        })
    }
}

/// Assembles per-state local games into one frame. Action identifiers are
/// global, so games at different states may share them.
pub fn assemble(space: StateSpace, agents: AgentSet, games: &[LocalGame]) -> Result<CanonicalGcgf, ModelError> {
    if agents.len() != 2 {
        return Err(ModelError::ArityMismatch {
            expected: 2,
            found: agents.len(),
        });
    }
    let mut actions: Vec<String> = games
        .iter()
        .flat_map(|g| g.a_actions.iter().chain(&g.b_actions).cloned())
        .collect();
    actions.sort_unstable();
    actions.dedup();
    let index = |name: &String| actions.binary_search(name).expect("collected above") as u32;
    let mut per_state: Vec<Vec<(ActionTuple, StateSet)>> = vec![Vec::new(); space.len()];
    for g in games {
        let slot = per_state.get_mut(g.state).ok_or(ModelError::StateOutOfRange(g.state))?;
        let a: Vec<u32> = g.a_actions.iter().map(index).collect();
        let b: Vec<u32> = g.b_actions.iter().map(index).collect();
        slot.extend(
            g.grand
                .iter()
                .map(|(&(i, j), z)| ([a[i], b[j]].into_iter().collect(), *z)),
        );
    }
    let mut grand_out = Vec::with_capacity(per_state.len());
    for mut entries in per_state {
        entries.sort_unstable_by_key(|(k, _)| (k[0], k[1]));
        if let Some(w) = entries.windows(2).find(|w| w[0].0 == w[1].0) {
            let names: Vec<&str> = w[0].0.iter().map(|i| actions[*i as usize].as_str()).collect();
            return Err(ModelError::DuplicateEntry(names.join(",")));
        }
        grand_out.push(entries.into_iter().collect());
    }
    CanonicalGcgf::from_indexed(space, agents, actions, grand_out)
}

/// The local game of a two-agent frame at `s`, with the actions that occur
/// in some available pair.
pub fn local_game_of(g: &CanonicalGcgf, s: usize) -> LocalGame {
    let entries = g.grand_entries(s);
    let mut a_ids: Vec<u32> = entries.keys().map(|k| k[0]).collect();
    let mut b_ids: Vec<u32> = entries.keys().map(|k| k[1]).collect();
    a_ids.sort_unstable();
    a_ids.dedup();
    b_ids.sort_unstable();
    b_ids.dedup();
    let grand = entries
        .iter()
        .map(|(k, z)| {
            let i = a_ids.binary_search(&k[0]).expect("listed");
            let j = b_ids.binary_search(&k[1]).expect("listed");
            ((i, j), *z)
        })
        .collect();
    let names = |ids: &[u32]| ids.iter().map(|i| g.action_name(*i).to_string()).collect();
    LocalGame::from_pairs(s, names(&a_ids), names(&b_ids), grand)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::effectivity::induce_actual;
    use crate::scenarios;

    #[test]
    fn heavy_door_local_game() {
        let g = scenarios::heavy_door();
        let w1 = g.space().index_of("w1").unwrap();
        let local = local_game_of(&g, w1);
        assert_eq!(local.a_actions(), ["push", "rest"]);
        assert!(local.satisfies_gci());
        assert!(local.is_complete() && local.is_deterministic());
        assert_eq!(local.families(), LocalFamilies::of(&induce_actual(&g), w1));
        let rebuilt = assemble(
            g.space().clone(),
            g.agents().clone(),
            &g.space().states().map(|s| local_game_of(&g, s)).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(rebuilt, g);
    }
}
