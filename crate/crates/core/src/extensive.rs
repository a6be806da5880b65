//! Two-step games: agent `a` moves, then agent `b` moves without observing
//! `a`'s choice. Their basic powers coincide with the actual powers of the
//! corresponding deterministic local concurrent game.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::checkers::{ConditionReport, Witness};
use crate::family::PowerFamily;
use crate::local::LocalGame;
use crate::space::StateSet;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExtensiveError {
    #[error("the local game is not {0}")]
    NotSid(&'static str),
    #[error("a two-step game needs at least one action per stage")]
    EmptyStage,
    #[error("the terminal table must have one row per stage-1 action and one column per stage-2 action")]
    RaggedTable,
}

/// Which of the two agents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Player {
    A,
    B,
}

/// A two-step game with terminal states given by `terminal[α][β]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoStepGame {
    state: usize,
    stage1: Vec<String>,
    stage2: Vec<String>,
    terminal: Vec<Vec<usize>>,
}

impl TwoStepGame {
    /// `state` is the state of the concurrent frame the game unfolds.
    pub fn new(
        state: usize,
        stage1: Vec<String>,
        stage2: Vec<String>,
        terminal: Vec<Vec<usize>>,
    ) -> Result<Self, ExtensiveError> {
        if stage1.is_empty() || stage2.is_empty() {
            return Err(ExtensiveError::EmptyStage);
        }
        if terminal.len() != stage1.len() || terminal.iter().any(|row| row.len() != stage2.len()) {
            return Err(ExtensiveError::RaggedTable);
        }
        Ok(TwoStepGame {
            state,
            stage1,
            stage2,
            terminal,
        })
    }

    pub fn stage1_actions(&self) -> &[String] {
        &self.stage1
    }

    pub fn stage2_actions(&self) -> &[String] {
        &self.stage2
    }

    pub fn terminal(&self, alpha: usize, beta: usize) -> usize {
        self.terminal[alpha][beta]
    }
}

/// The two-step game of a serial, independent, deterministic local game.
pub fn unfold(component: &LocalGame) -> Result<TwoStepGame, ExtensiveError> {
    if component.a_actions().is_empty() || component.b_actions().is_empty() {
        return Err(ExtensiveError::NotSid("serial"));
    }
    if !component.is_complete() {
        return Err(ExtensiveError::NotSid("independent"));
    }
    if !component.is_deterministic() {
        return Err(ExtensiveError::NotSid("deterministic"));
    }
    let mut terminal = vec![vec![0; component.b_actions().len()]; component.a_actions().len()];
    for (&(i, j), z) in component.grand() {
        terminal[i][j] = z.first().expect("singleton outcome");
    }
    TwoStepGame::new(
        component.state(),
        component.a_actions().to_vec(),
        component.b_actions().to_vec(),
        terminal,
    )
}

/// The local game whose pair outcomes are the terminal states.
pub fn fold(game: &TwoStepGame) -> LocalGame {
    let mut grand = BTreeMap::new();
    for (i, row) in game.terminal.iter().enumerate() {
        for (j, t) in row.iter().enumerate() {
            grand.insert((i, j), StateSet::singleton(*t));
        }
    }
    LocalGame::from_pairs(game.state, game.stage1.clone(), game.stage2.clone(), grand)
}

/// Basic powers: for `a`, the terminals reachable after each stage-1 action;
/// for `b`, whose uniform strategies are single stage-2 actions, the
/// terminals reachable with each stage-2 action.
pub fn basic_powers(game: &TwoStepGame, player: Player) -> PowerFamily {
    match player {
        Player::A => game
            .terminal
            .iter()
            .map(|row| row.iter().copied().collect::<StateSet>())
            .collect(),
        Player::B => (0..game.stage2.len())
            .map(|j| game.terminal.iter().map(|row| row[j]).collect::<StateSet>())
            .collect(),
    }
}

/// Non-emptiness, consistency and exhaustiveness of a pair of power
/// families for `a` and `b`.
pub fn check_bbe_conditions(xa: &PowerFamily, yb: &PowerFamily) -> [ConditionReport; 3] {
    let mut nonempty = Vec::new();
    if xa.is_empty() {
        nonempty.push(Witness::new(0, [crate::agents::Coalition::single(0)], []));
    }
    if yb.is_empty() {
        nonempty.push(Witness::new(0, [crate::agents::Coalition::single(1)], []));
    }
    let mut consistency = Vec::new();
    for x in xa.iter() {
        for y in yb.iter() {
            if !x.intersects(y) {
                consistency.push(Witness::new(0, [], [x, y]));
            }
        }
    }
    let mut exhaustive = Vec::new();
    if xa.union_all() != yb.union_all() {
        exhaustive.push(Witness::new(0, [], [xa.union_all(), yb.union_all()]));
    }
    [
        ConditionReport::new("non_emptiness", nonempty),
        ConditionReport::new("consistency", consistency),
        ConditionReport::new("exhaustiveness", exhaustive),
    ]
}
