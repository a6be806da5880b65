//! Seeded random frames and exhaustive enumeration of small local
//! neighborhoods.
//!
//! Random frames are biased by their construction; they are not uniform over
//! any class.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::agents::{AgentSet, Coalition, JointAction};
use crate::checkers::{local_ac_representative, local_alpha_representative};
use crate::family::{PowerFamily, UpsetFamily};
use crate::frame::{ActualNF, AlphaNF, CanonicalGcgf, ClassFlags};
use crate::local::{LocalAntichains, LocalFamilies};
use crate::space::{StateSet, StateSpace};

const MAX_ATTEMPTS: usize = 1000;
const LOCAL_NAMES: [&str; 4] = ["s", "u", "v", "w"];

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("no frame found for state {state} after {attempts} attempts")]
    GenerationFailed { state: usize, attempts: usize },
}

fn state_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("q{i}")).collect()
}

fn random_nonempty(rng: &mut ChaCha8Rng, n_states: usize) -> StateSet {
    StateSet::from_bits(rng.gen_range(1..(1u64 << n_states)))
}

fn random_singleton(rng: &mut ChaCha8Rng, within: StateSet) -> StateSet {
    let members: Vec<usize> = within.iter().collect();
    StateSet::singleton(*members.choose(rng).expect("nonempty set"))
}

fn check_states(n_states: usize) -> Result<(), GenError> {
    if n_states == 0 || n_states > 63 {
        return Err(GenError::InvalidParams(format!(
            "n_states must be in 1..=63, got {n_states}"
        )));
    }
    Ok(())
}

/// A random two-agent GCGF over states `q0`, `q1`, … and actions `x0`, `x1`,
/// … whose class covers `flags`.
///
/// Each action pair gets a random nonempty outcome with probability one
/// half. The sample is then repaired: a state without entries gets one, a
/// missing combination of available actions gets a random singleton, and
/// every outcome is truncated to its least state when determinism is asked
/// for.
pub fn gen_random_gcgf(
    n_states: usize,
    n_actions: usize,
    flags: ClassFlags,
    seed: u64,
) -> Result<CanonicalGcgf, GenError> {
    check_states(n_states)?;
    if n_actions == 0 {
        return Err(GenError::InvalidParams("n_actions must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let actions: Vec<String> = (0..n_actions).map(|i| format!("x{i}")).collect();
    let mut entries = Vec::new();
    for s in 0..n_states {
        let mut table: Vec<Vec<Option<StateSet>>> = vec![vec![None; n_actions]; n_actions];
        for row in table.iter_mut() {
            for cell in row.iter_mut() {
                if rng.gen_bool(0.5) {
                    *cell = Some(random_nonempty(&mut rng, n_states));
                }
            }
        }
        if flags.serial && table.iter().flatten().all(Option::is_none) {
            let (i, j) = (rng.gen_range(0..n_actions), rng.gen_range(0..n_actions));
            table[i][j] = Some(random_nonempty(&mut rng, n_states));
        }
        if flags.independent {
            let rows: Vec<usize> = (0..n_actions)
                .filter(|&i| table[i].iter().any(Option::is_some))
                .collect();
            let cols: Vec<usize> = (0..n_actions)
                .filter(|&j| table.iter().any(|row| row[j].is_some()))
                .collect();
            for &i in &rows {
                for &j in &cols {
                    if table[i][j].is_none() {
                        table[i][j] = Some(StateSet::singleton(rng.gen_range(0..n_states)));
                    }
                }
            }
        }
        for (i, row) in table.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                if let Some(mut out) = *cell {
                    if flags.deterministic {
                        out = StateSet::singleton(out.first().expect("nonempty outcome"));
                    }
                    let sigma = JointAction::new(Coalition::grand(2), [&actions[i], &actions[j]])
                        .expect("two actions for two agents");
                    entries.push((s, sigma, out));
                }
            }
        }
    }
    let space = StateSpace::new(state_names(n_states)).expect("generated names are valid");
    Ok(CanonicalGcgf::new(space, AgentSet::pair(), actions, entries).expect("generated entries are unique"))
}

fn random_local_actual(
    rng: &mut ChaCha8Rng,
    n_states: usize,
    max_family: usize,
    flags: ClassFlags,
) -> Option<LocalFamilies> {
    let k = rng.gen_range(1..=max_family);
    let mut grand: Vec<StateSet> = (0..k)
        .map(|_| {
            let z = random_nonempty(rng, n_states);
            if flags.deterministic {
                random_singleton(rng, z)
            } else {
                z
            }
        })
        .collect();
    grand.sort_unstable();
    grand.dedup();
    let individual = |rng: &mut ChaCha8Rng| -> Vec<StateSet> {
        let m = rng.gen_range(1..=max_family);
        let mut members: Vec<StateSet> = (0..m)
            .map(|_| {
                let picked: StateSet = grand
                    .iter()
                    .filter(|_| rng.gen_bool(0.5))
                    .fold(StateSet::EMPTY, |acc, z| acc.union(*z));
                if picked.is_empty() {
                    *grand.choose(rng).expect("nonempty grand family")
                } else {
                    picked
                }
            })
            .collect();
        for z in &grand {
            if !members.iter().any(|x| z.is_subset(*x)) {
                let i = rng.gen_range(0..members.len());
                members[i] = members[i].union(*z);
            }
        }
        members
    };
    let fa = individual(rng);
    let fb = individual(rng);
    if flags.independent {
        for x in &fa {
            for y in &fb {
                let meet = x.intersection(*y);
                if meet.is_empty() {
                    return None;
                }
                if !grand.iter().any(|z| z.is_subset(meet)) {
                    grand.push(random_singleton(rng, meet));
                }
            }
        }
    }
    let grand: PowerFamily = grand.into_iter().collect();
    let empty: PowerFamily = [grand.union_all()].into_iter().collect();
    Some(LocalFamilies::new(
        empty,
        fa.into_iter().collect(),
        fb.into_iter().collect(),
        grand,
    ))
}

/// A random two-agent actual neighborhood frame over states `q0`, `q1`, …
/// that is AC-representative and whose class covers `flags`.
///
/// Each state independently gets either nothing (one time in eight, never
/// when seriality is asked for) or a random grand family of at most
/// `max_family` sets with individual powers built as unions of grand powers.
pub fn gen_random_actual_nf(
    n_states: usize,
    max_family: usize,
    flags: ClassFlags,
    seed: u64,
) -> Result<ActualNF, GenError> {
    check_states(n_states)?;
    if max_family == 0 {
        return Err(GenError::InvalidParams("max_family must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let space = StateSpace::new(state_names(n_states)).expect("generated names are valid");
    let mut nf = ActualNF::new(space, AgentSet::pair());
    for s in 0..n_states {
        if !flags.serial && rng.gen_ratio(1, 8) {
            continue;
        }
        let families = (0..MAX_ATTEMPTS)
            .find_map(|_| random_local_actual(&mut rng, n_states, max_family, flags))
            .ok_or(GenError::GenerationFailed {
                state: s,
                attempts: MAX_ATTEMPTS,
            })?;
        for (bits, f) in families.0.into_iter().enumerate() {
            nf.set(Coalition::from_bits(bits as u32), s, f).expect("state in range");
        }
    }
    Ok(nf)
}

fn check_successors(n: usize) -> Result<(), GenError> {
    if !(1..=3).contains(&n) {
        return Err(GenError::InvalidParams(format!(
            "n_successors must be in 1..=3, got {n}"
        )));
    }
    Ok(())
}

/// The state space used for local enumeration: `s` followed by `n`
/// successors `u`, `v`, `w`.
pub fn local_space(n_successors: usize) -> StateSpace {
    StateSpace::new(LOCAL_NAMES[..=n_successors].iter().copied()).expect("fixed names")
}

/// The successors of `s` in [`local_space`].
pub fn successor_set(n_successors: usize) -> StateSet {
    StateSet::from_bits(((1u64 << n_successors) - 1) << 1)
}

/// Every family of nonempty subsets of `within`, as bit masks over the
/// subsets listed by `StateSet::subsets`.
fn families_of_nonempty(within: StateSet) -> Vec<PowerFamily> {
    let sets: Vec<StateSet> = within.subsets().filter(|x| !x.is_empty()).collect();
    (0u64..1 << sets.len())
        .map(|mask| {
            (0..sets.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| sets[i])
                .collect()
        })
        .collect()
}

/// Number of quadruples scanned by [`enumerate_local_actual`].
pub fn actual_candidate_count(n_successors: usize) -> u64 {
    let families = 1u64 << ((1u64 << n_successors) - 1);
    2 * families * families * families
}

/// Every AC-representative quadruple `(∅, a, b, AG)` over the successors of
/// `s` in [`local_space`], where the grand and individual families range
/// over all families of nonempty subsets and the empty coalition has either
/// nothing or the union of the grand family.
///
/// Quadruples come out in a fixed order: by grand family, then `a`, then
/// `b`, then the empty coalition's family.
pub fn enumerate_local_actual(n_successors: usize) -> Result<impl Iterator<Item = LocalFamilies>, GenError> {
    check_successors(n_successors)?;
    let families = families_of_nonempty(successor_set(n_successors));
    let by_union = families.clone();
    let iter = families.into_iter().flat_map(move |grand| {
        let target = grand.union_all();
        let candidates: Vec<PowerFamily> = by_union.iter().filter(|f| f.union_all() == target).cloned().collect();
        let empties: Vec<PowerFamily> = if grand.is_empty() {
            vec![PowerFamily::new()]
        } else {
            vec![[target].into_iter().collect()]
        };
        let mut out = Vec::new();
        for a in &candidates {
            for b in &candidates {
                for e in &empties {
                    let q = LocalFamilies::new(e.clone(), a.clone(), b.clone(), grand.clone());
                    if local_ac_representative(q.as_slice()) {
                        out.push(q);
                    }
                }
            }
        }
        out
    });
    Ok(iter)
}

/// Every antichain of subsets of `within`, ordered by the bit mask of its
/// members over `StateSet::subsets`.
pub fn antichains(within: StateSet) -> Vec<UpsetFamily> {
    let sets: Vec<StateSet> = within.subsets().collect();
    (0u64..1 << sets.len())
        .filter_map(|mask| {
            UpsetFamily::from_minimals((0..sets.len()).filter(|i| mask >> i & 1 == 1).map(|i| sets[i])).ok()
        })
        .collect()
}

/// Number of quadruples scanned by [`enumerate_local_alpha`].
pub fn alpha_candidate_count(n_successors: usize) -> u64 {
    (antichains(successor_set(n_successors)).len() as u64).pow(4)
}

/// Every α-representative assignment of antichains over the successors of
/// `s` in [`local_space`] to `(∅, a, b, AG)`, in lexicographic order of the
/// antichain indices.
pub fn enumerate_local_alpha(n_successors: usize) -> Result<impl Iterator<Item = LocalAntichains>, GenError> {
    check_successors(n_successors)?;
    let all = antichains(successor_set(n_successors));
    let n = all.len();
    let iter = (0..n.pow(4)).filter_map(move |code| {
        let pick = |k: u32| all[code / n.pow(3 - k) % n].clone();
        let q = LocalAntichains([pick(0), pick(1), pick(2), pick(3)]);
        local_alpha_representative(q.as_slice()).then_some(q)
    });
    Ok(iter)
}

/// Places a local quadruple at state `s` of [`local_space`]. With
/// `serial_successors` every successor `t` gets `{{t}}` for every coalition,
/// otherwise the successors get nothing.
pub fn embed_local_actual(n_successors: usize, families: &LocalFamilies, serial_successors: bool) -> ActualNF {
    let mut nf = ActualNF::new(local_space(n_successors), AgentSet::pair());
    for (bits, f) in families.0.iter().enumerate() {
        let c = Coalition::from_bits(bits as u32);
        nf.set(c, 0, f.clone()).expect("state in range");
        if serial_successors {
            for t in 1..=n_successors {
                nf.set(c, t, [StateSet::singleton(t)].into_iter().collect())
                    .expect("state in range");
            }
        }
    }
    nf
}

/// The α counterpart of [`embed_local_actual`].
pub fn embed_local_alpha(n_successors: usize, antichains: &LocalAntichains, serial_successors: bool) -> AlphaNF {
    let mut nf = AlphaNF::new(local_space(n_successors), AgentSet::pair());
    for (bits, u) in antichains.0.iter().enumerate() {
        let c = Coalition::from_bits(bits as u32);
        nf.set(c, 0, u.clone()).expect("state in range");
        if serial_successors {
            for t in 1..=n_successors {
                let own = UpsetFamily::from_minimals([StateSet::singleton(t)]).expect("one member");
                nf.set(c, t, own).expect("state in range");
            }
        }
    }
    nf
}
