//! Round-trips of every enumerated local neighborhood through synthesis.
//!
//! Each enumerated quadruple is placed at `s` twice, once with serial
//! successors and once with empty ones, so that all eight class
//! combinations occur.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::checkers::{
    all_hold, check_ac_class, check_actual_facts, check_alpha_class, check_alpha_facts, check_alpha_representative,
    check_gcgf_class, check_truly_playable,
};
use crate::effectivity::{induce_actual, induce_alpha};
use crate::frame::{CanonicalGcgf, ClassFlags};
use crate::genenum::{
    actual_candidate_count, alpha_candidate_count, antichains, embed_local_actual, embed_local_alpha,
    enumerate_local_actual, enumerate_local_alpha, successor_set, GenError,
};
use crate::local::LocalAntichains;
use crate::synth::{synthesize_actual, synthesize_alpha};

const CHUNK: usize = 2048;

/// Counts from one exhaustive run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExhaustSummary {
    /// Quadruples scanned.
    pub candidates: u64,
    /// Quadruples passing the representativeness conditions.
    pub representative: u64,
    /// Representative quadruples whose every embedding round-trips with its
    /// class preserved.
    pub passes: u64,
    /// Embedded frames on which some derived fact failed.
    pub fact_failures: u64,
    /// Class labels of the embedded frames.
    pub classes: BTreeSet<String>,
    /// A description of the first failing quadruple.
    pub first_failure: Option<String>,
}

impl ExhaustSummary {
    pub fn all_pass(&self) -> bool {
        self.passes == self.representative && self.fact_failures == 0
    }
}

struct Outcome {
    pass: bool,
    fact_failures: u64,
    classes: Vec<ClassFlags>,
    frames: Vec<CanonicalGcgf>,
    failure: Option<String>,
}

fn absorb(summary: &mut ExhaustSummary, outcome: Outcome, on_frame: &mut dyn FnMut(&CanonicalGcgf)) {
    summary.representative += 1;
    summary.passes += outcome.pass as u64;
    summary.fact_failures += outcome.fact_failures;
    summary.classes.extend(outcome.classes.iter().map(|c| c.label()));
    if summary.first_failure.is_none() {
        summary.first_failure = outcome.failure;
    }
    for g in &outcome.frames {
        on_frame(g);
    }
}

fn run_chunks<T, I, F>(items: I, check: F, summary: &mut ExhaustSummary, on_frame: &mut dyn FnMut(&CanonicalGcgf))
where
    T: Send,
    I: Iterator<Item = T>,
    F: Fn(T) -> Outcome + Sync,
{
    let mut items = items.peekable();
    while items.peek().is_some() {
        let chunk: Vec<T> = items.by_ref().take(CHUNK).collect();
        let outcomes: Vec<Outcome> = chunk.into_par_iter().map(&check).collect();
        for outcome in outcomes {
            absorb(summary, outcome, on_frame);
        }
    }
}

/// Synthesizes every AC-representative local quadruple on `n` successors,
/// re-induces it, and compares families and class flags. `on_frame` sees
/// every synthesized frame in enumeration order.
pub fn exhaust_actual(n: usize, on_frame: &mut dyn FnMut(&CanonicalGcgf)) -> Result<ExhaustSummary, GenError> {
    let items = enumerate_local_actual(n)?;
    let mut summary = ExhaustSummary {
        candidates: actual_candidate_count(n),
        ..Default::default()
    };
    let check = |q| {
        let mut outcome = Outcome {
            pass: true,
            fact_failures: 0,
            classes: Vec::new(),
            frames: Vec::new(),
            failure: None,
        };
        for serial in [true, false] {
            let nf = embed_local_actual(n, &q, serial);
            let flags = check_ac_class(&nf);
            outcome.classes.push(flags);
            if !check_actual_facts(&nf).map(|r| all_hold(&r)).unwrap_or(false) {
                outcome.fact_failures += 1;
            }
            let ok = match synthesize_actual(&nf) {
                Ok(g) => {
                    let ok = induce_actual(&g) == nf && check_gcgf_class(&g) == flags;
                    outcome.frames.push(g);
                    ok
                }
                Err(_) => false,
            };
            if !ok && outcome.pass {
                outcome.pass = false;
                outcome.failure = Some(format!("{q:?} (serial successors: {serial})"));
            }
        }
        outcome
    };
    run_chunks(items, check, &mut summary, on_frame);
    Ok(summary)
}

/// The α counterpart of [`exhaust_actual`], comparing antichains.
pub fn exhaust_alpha(n: usize, on_frame: &mut dyn FnMut(&CanonicalGcgf)) -> Result<ExhaustSummary, GenError> {
    let items = enumerate_local_alpha(n)?;
    let mut summary = ExhaustSummary {
        candidates: alpha_candidate_count(n),
        ..Default::default()
    };
    let check = |q| {
        let mut outcome = Outcome {
            pass: true,
            fact_failures: 0,
            classes: Vec::new(),
            frames: Vec::new(),
            failure: None,
        };
        for serial in [true, false] {
            let nf = embed_local_alpha(n, &q, serial);
            let flags = check_alpha_class(&nf);
            outcome.classes.push(flags);
            if !check_alpha_facts(&nf).map(|r| all_hold(&r)).unwrap_or(false) {
                outcome.fact_failures += 1;
            }
            let ok = match synthesize_alpha(&nf) {
                Ok(g) => {
                    let ok = induce_alpha(&g) == nf && check_gcgf_class(&g) == flags;
                    outcome.frames.push(g);
                    ok
                }
                Err(_) => false,
            };
            if !ok && outcome.pass {
                outcome.pass = false;
                outcome.failure = Some(format!("{q:?} (serial successors: {serial})"));
            }
        }
        outcome
    };
    run_chunks(items, check, &mut summary, on_frame);
    Ok(summary)
}

/// Counts from comparing true playability with α-representativeness plus
/// the full class.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlayabilitySummary {
    pub candidates: u64,
    pub truly_playable: u64,
    pub representative_sid: u64,
    pub discrepancies: u64,
    pub first_discrepancy: Option<String>,
}

/// Over every assignment of antichains on `n` successors (placed at `s` with
/// serial successors), compares true playability with α-representativeness
/// together with seriality, independence and determinism.
pub fn compare_truly_playable(n: usize) -> Result<PlayabilitySummary, GenError> {
    if !(1..=3).contains(&n) {
        return Err(GenError::InvalidParams(format!(
            "n_successors must be in 1..=3, got {n}"
        )));
    }
    let all = antichains(successor_set(n));
    let k = all.len();
    let verdicts: Vec<(bool, bool)> = (0..k.pow(4))
        .into_par_iter()
        .map(|code| {
            let pick = |i: u32| all[code / k.pow(3 - i) % k].clone();
            let nf = embed_local_alpha(n, &LocalAntichains([pick(0), pick(1), pick(2), pick(3)]), true);
            let playable = all_hold(&check_truly_playable(&nf));
            let rep_sid = all_hold(&check_alpha_representative(&nf)) && check_alpha_class(&nf) == ClassFlags::SID;
            (playable, rep_sid)
        })
        .collect();
    let mut summary = PlayabilitySummary {
        candidates: verdicts.len() as u64,
        ..Default::default()
    };
    for (code, (playable, rep_sid)) in verdicts.into_iter().enumerate() {
        summary.truly_playable += playable as u64;
        summary.representative_sid += rep_sid as u64;
        if playable != rep_sid {
            summary.discrepancies += 1;
            if summary.first_discrepancy.is_none() {
                let picks: Vec<_> = (0..4u32)
                    .map(|i| all[code / k.pow(3 - i) % k].minimals().to_vec())
                    .collect();
                summary.first_discrepancy = Some(format!("{picks:?}"));
            }
        }
    }
    Ok(summary)
}
