use crate::agents::Coalition;
use crate::checkers::{
    alpha::check_alpha_class, check_ac_representative, check_alpha_representative, coalitions_of, nested_pairs,
    CheckError, ConditionReport, Sink, Witness,
};
use crate::frame::{ActualNF, AlphaNF};

fn first_failure(reports: &[ConditionReport]) -> Option<&'static str> {
    reports.iter().find(|r| !r.holds).map(|r| r.condition)
}

/// Consequences of AC-representativeness: every coalition enables the same
/// successors as the empty coalition, emptiness is coalition-independent,
/// the empty coalition's power is the union of the grand coalition's, and
/// every power is the union of the larger coalition's powers below it.
pub fn check_actual_facts(nf: &ActualNF) -> Result<Vec<ConditionReport>, CheckError> {
    if let Some(failed) = first_failure(&check_ac_representative(nf)) {
        return Err(CheckError::PreconditionNotChecked(failed));
    }
    let mut same_successors = Sink::all();
    let mut empty_iff = Sink::all();
    let mut empty_is_grand_union = Sink::all();
    let mut union_below = Sink::all();
    for s in nf.space().states() {
        let local = nf.local(s);
        let len = local.len();
        let grand = Coalition::from_bits(len as u32 - 1);
        let succ = local[0].union_all();
        for c in coalitions_of(len) {
            let fam = &local[c.bits() as usize];
            if fam.union_all() != succ {
                same_successors.push(Witness::new(s, [c, Coalition::EMPTY], [fam.union_all(), succ]));
            }
            if fam.is_empty() != local[0].is_empty() {
                empty_iff.push(Witness::new(s, [c, Coalition::EMPTY], []));
            }
        }
        if !local[0].is_empty() {
            let top = local[grand.bits() as usize].union_all();
            if local[0].only() != Some(top) {
                empty_is_grand_union.push(Witness::new(s, [Coalition::EMPTY, grand], [top]));
            }
        }
        for (c, d) in nested_pairs(len) {
            for x in local[c.bits() as usize].iter() {
                let covered = local[d.bits() as usize]
                    .below(x)
                    .fold(crate::space::StateSet::EMPTY, |a, z| a.union(z));
                if covered != x {
                    union_below.push(Witness::new(s, [c, d], [x, covered]));
                }
            }
        }
    }
    Ok(vec![
        same_successors.into_report("same_successors"),
        empty_iff.into_report("empty_iff_empty_coalition_empty"),
        empty_is_grand_union.into_report("empty_coalition_is_grand_union"),
        union_below.into_report("union_of_larger_powers_below"),
    ])
}

/// Consequences of α-representativeness: emptiness is coalition-independent,
/// alpha power inclusion, core unions lie inside the empty coalition's core
/// union, and under α-determinism the grand coalition's core union equals it.
pub fn check_alpha_facts(nf: &AlphaNF) -> Result<Vec<ConditionReport>, CheckError> {
    if let Some(failed) = first_failure(&check_alpha_representative(nf)) {
        return Err(CheckError::PreconditionNotChecked(failed));
    }
    let deterministic = check_alpha_class(nf).deterministic;
    let full = nf.space().full();
    let mut empty_iff = Sink::all();
    let mut inclusion = Sink::all();
    let mut core_union = Sink::all();
    let mut det_union = Sink::all();
    for s in nf.space().states() {
        let local = nf.local(s);
        let len = local.len();
        let grand = Coalition::from_bits(len as u32 - 1);
        let t = local[0].core_union();
        for c in coalitions_of(len) {
            let fam = &local[c.bits() as usize];
            if fam.is_empty() != local[0].is_empty() {
                empty_iff.push(Witness::new(s, [c, Coalition::EMPTY], []));
            }
            if !fam.core_union().is_subset(t) {
                core_union.push(Witness::new(s, [c, Coalition::EMPTY], [fam.core_union(), t]));
            }
        }
        // Every member of an upset lies below the full set, which is the
        // largest candidate superset in the smaller coalition's upset.
        for (c, d) in nested_pairs(len) {
            for x in local[d.bits() as usize].minimals() {
                if !local[c.bits() as usize].contains(full) {
                    inclusion.push(Witness::new(s, [c, d], [*x]));
                }
            }
        }
        if deterministic && local[grand.bits() as usize].core_union() != t {
            det_union.push(Witness::new(
                s,
                [grand, Coalition::EMPTY],
                [local[grand.bits() as usize].core_union(), t],
            ));
        }
    }
    Ok(vec![
        empty_iff.into_report("empty_iff_empty_coalition_empty"),
        inclusion.into_report("alpha_power_inclusion"),
        core_union.into_report("core_union_within_empty_core_union"),
        det_union.into_report("deterministic_core_union_equality"),
    ])
}
