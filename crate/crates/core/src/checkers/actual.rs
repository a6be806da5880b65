use crate::checkers::{coalitions_of, disjoint_pairs, nested_pairs, ConditionReport, Sink, Witness};
use crate::family::PowerFamily;
use crate::frame::{ActualNF, ClassFlags};
use crate::space::StateSet;

fn triviality(s: usize, local: &[PowerFamily], sink: &mut Sink) {
    let empty = &local[0];
    if empty.len() > 1 {
        sink.push(Witness::new(
            s,
            [crate::agents::Coalition::EMPTY],
            empty.iter().collect::<Vec<_>>(),
        ));
    }
}

fn liveness(s: usize, local: &[PowerFamily], sink: &mut Sink) {
    for c in coalitions_of(local.len()) {
        if local[c.bits() as usize].contains(StateSet::EMPTY) {
            sink.push(Witness::new(s, [c], [StateSet::EMPTY]));
            if sink.full() {
                return;
            }
        }
    }
}

fn inclusion(s: usize, local: &[PowerFamily], sink: &mut Sink) {
    for (c, d) in nested_pairs(local.len()) {
        let small = &local[c.bits() as usize];
        for x in local[d.bits() as usize].iter() {
            if !small.iter().any(|y| x.is_subset(y)) {
                sink.push(Witness::new(s, [c, d], [x]));
                if sink.full() {
                    return;
                }
            }
        }
    }
}

fn decomposition(s: usize, local: &[PowerFamily], sink: &mut Sink) {
    for (c, d) in nested_pairs(local.len()) {
        let large = &local[d.bits() as usize];
        for x in local[c.bits() as usize].iter() {
            let covered = large.below(x).fold(StateSet::EMPTY, StateSet::union);
            if covered != x {
                sink.push(Witness::new(s, [c, d], [x, covered]));
                if sink.full() {
                    return;
                }
            }
        }
    }
}

fn serial(s: usize, local: &[PowerFamily], sink: &mut Sink) {
    for c in coalitions_of(local.len()) {
        if local[c.bits() as usize].is_empty() {
            sink.push(Witness::new(s, [c], []));
            if sink.full() {
                return;
            }
        }
    }
}

fn independent(s: usize, local: &[PowerFamily], sink: &mut Sink) {
    for (c, d) in disjoint_pairs(local.len()) {
        let joint = &local[c.union(d).bits() as usize];
        for x in local[c.bits() as usize].iter() {
            for y in local[d.bits() as usize].iter() {
                let meet = x.intersection(y);
                if !joint.iter().any(|z| z.is_subset(meet)) {
                    sink.push(Witness::new(s, [c, d], [x, y]));
                    if sink.full() {
                        return;
                    }
                }
            }
        }
    }
}

fn deterministic(s: usize, local: &[PowerFamily], sink: &mut Sink) {
    let grand = crate::agents::Coalition::from_bits(local.len() as u32 - 1);
    for z in local[grand.bits() as usize].iter() {
        if !z.is_singleton() {
            sink.push(Witness::new(s, [grand], [z]));
            if sink.full() {
                return;
            }
        }
    }
}

fn stit(s: usize, local: &[PowerFamily], sink: &mut Sink) {
    for (c, d) in disjoint_pairs(local.len()) {
        for x in local[c.bits() as usize].iter() {
            for y in local[d.bits() as usize].iter() {
                if !x.intersects(y) {
                    sink.push(Witness::new(s, [c, d], [x, y]));
                    if sink.full() {
                        return;
                    }
                }
            }
        }
    }
}

type LocalCheck = fn(usize, &[PowerFamily], &mut Sink);

const REPRESENTATIVE: [(&str, LocalCheck); 4] = [
    ("actual_triviality", triviality),
    ("liveness", liveness),
    ("actual_power_inclusion", inclusion),
    ("actual_power_decomposition", decomposition),
];

const CLASS: [(&str, LocalCheck); 3] = [
    ("serial", serial),
    ("independent", independent),
    ("deterministic", deterministic),
];

fn run_all(nf: &ActualNF, name: &'static str, check: LocalCheck) -> ConditionReport {
    let mut sink = Sink::all();
    for s in nf.space().states() {
        check(s, nf.local(s), &mut sink);
    }
    sink.into_report(name)
}

fn holds_locally(local: &[PowerFamily], check: LocalCheck) -> bool {
    let mut sink = Sink::first();
    check(0, local, &mut sink);
    sink.is_empty()
}

/// The four AC-representativeness conditions: actual triviality of the
/// empty coalition, liveness, actual power inclusion and actual power
/// decomposition.
pub fn check_ac_representative(nf: &ActualNF) -> Vec<ConditionReport> {
    REPRESENTATIVE.iter().map(|(name, f)| run_all(nf, name, *f)).collect()
}

/// AC-seriality, AC-independence and AC-determinism, with witnesses.
pub fn ac_class_reports(nf: &ActualNF) -> [ConditionReport; 3] {
    CLASS.map(|(name, f)| run_all(nf, name, f))
}

pub fn check_ac_class(nf: &ActualNF) -> ClassFlags {
    let [s, i, d] = ac_class_reports(nf);
    ClassFlags::new(s.holds, i.holds, d.holds)
}

/// Pairwise nonempty intersection of the powers of disjoint coalitions.
pub fn check_stit_independent(nf: &ActualNF) -> ConditionReport {
    run_all(nf, "stit_independent", stit)
}

/// The four representativeness conditions at state `s`, with all witnesses.
pub fn local_ac_representative_reports(s: usize, local: &[PowerFamily]) -> Vec<ConditionReport> {
    REPRESENTATIVE
        .iter()
        .map(|(name, f)| {
            let mut sink = Sink::all();
            f(s, local, &mut sink);
            sink.into_report(name)
        })
        .collect()
}

/// The four representativeness conditions at one state.
pub fn local_ac_representative(local: &[PowerFamily]) -> bool {
    REPRESENTATIVE.iter().all(|(_, f)| holds_locally(local, *f))
}

/// The class flags at one state.
pub fn local_ac_class(local: &[PowerFamily]) -> ClassFlags {
    let [s, i, d] = CLASS.map(|(_, f)| holds_locally(local, f));
    ClassFlags::new(s, i, d)
}
