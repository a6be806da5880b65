use rayon::prelude::*;

use crate::checkers::{check_alpha_class, check_alpha_representative, local_alpha_class};
use crate::family::{PowerFamily, UpsetFamily};
use crate::frame::{AlphaNF, CanonicalGcgf};
use crate::local::{assemble, LocalFamilies, LocalGame};
use crate::synth::actual::PARALLEL_STATES;
use crate::synth::{failing, synthesize_local_actual, SynthError};

/// Which reduction to use for states where the empty coalition has powers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BranchChoice {
    /// The deterministic reduction when the frame is α-deterministic, the
    /// other one otherwise.
    #[default]
    Auto,
    Deterministic,
    NonDeterministic,
}

/// The actual families the alpha construction hands to the actual one at a
/// single state: every member of each upset that lies inside the successor
/// set `T`, except that the deterministic branch uses only the minimals for
/// the grand coalition.
pub fn restrict_local(
    s: usize,
    local: &[UpsetFamily],
    deterministic_branch: bool,
) -> Result<LocalFamilies, SynthError> {
    let t = local[0].only().ok_or(SynthError::EmptyAtState(s))?;
    if deterministic_branch && !local_alpha_class(local).deterministic {
        return Err(SynthError::NotDeterministic);
    }
    let within = |u: &UpsetFamily| -> PowerFamily { u.members_within(t) };
    let grand = if deterministic_branch {
        local[3].core_family()
    } else {
        within(&local[3])
    };
    Ok(LocalFamilies::new(
        within(&local[0]),
        within(&local[1]),
        within(&local[2]),
        grand,
    ))
}

/// [`restrict_local`] applied to the neighborhoods of `nf` at `s`.
pub fn restrict_to_core(nf: &AlphaNF, s: usize, deterministic_branch: bool) -> Result<LocalFamilies, SynthError> {
    if nf.agents().len() != 2 {
        return Err(SynthError::NotTwoAgents(nf.agents().len()));
    }
    if nf.get(crate::agents::Coalition::EMPTY, s).is_empty() {
        return Err(SynthError::EmptyAtState(s));
    }
    if deterministic_branch && !check_alpha_class(nf).deterministic {
        return Err(SynthError::NotDeterministic);
    }
    restrict_local(s, nf.local(s), deterministic_branch)
}

/// A two-agent GCGF whose alpha effectivity is `nf`.
pub fn synthesize_alpha(nf: &AlphaNF) -> Result<CanonicalGcgf, SynthError> {
    synthesize_alpha_with(nf, BranchChoice::Auto)
}

/// [`synthesize_alpha`] with an explicit choice of reduction.
pub fn synthesize_alpha_with(nf: &AlphaNF, branch: BranchChoice) -> Result<CanonicalGcgf, SynthError> {
    if nf.agents().len() != 2 {
        return Err(SynthError::NotTwoAgents(nf.agents().len()));
    }
    if let Some(err) = failing(check_alpha_representative(nf)) {
        return Err(err);
    }
    let detected = check_alpha_class(nf).deterministic;
    let deterministic_branch = match branch {
        BranchChoice::Auto => detected,
        BranchChoice::Deterministic if !detected => return Err(SynthError::NotDeterministic),
        BranchChoice::Deterministic => true,
        BranchChoice::NonDeterministic => false,
    };
    let local = |s: usize| {
        let local = nf.local(s);
        if local[0].is_empty() {
            return Ok(LocalGame::empty(s));
        }
        let families = restrict_local(s, local, deterministic_branch)?;
        synthesize_local_actual(nf.space(), s, &families)
    };
    let games: Vec<LocalGame> = if nf.space().len() < PARALLEL_STATES {
        nf.space().states().map(local).collect::<Result<_, _>>()?
    } else {
        nf.space()
            .states()
            .into_par_iter()
            .map(local)
            .collect::<Result<_, _>>()?
    };
    Ok(assemble(nf.space().clone(), nf.agents().clone(), &games).expect("local games are well formed"))
}
