use crate::agents::Coalition;
use crate::checkers::{coalitions_of, disjoint_pairs, nested_pairs, ConditionReport, Sink, Witness};
use crate::family::UpsetFamily;
use crate::frame::{AlphaNF, ClassFlags};
use crate::space::StateSet;

/// Local checks see the state, the full state set and the neighborhoods.
type LocalCheck = fn(usize, StateSet, &[UpsetFamily], &mut Sink);

fn grand_of(local: &[UpsetFamily]) -> Coalition {
    Coalition::from_bits(local.len() as u32 - 1)
}

fn triviality(s: usize, _: StateSet, local: &[UpsetFamily], sink: &mut Sink) {
    if local[0].minimals().len() > 1 {
        sink.push(Witness::new(s, [Coalition::EMPTY], local[0].minimals()));
    }
}

fn liveness(s: usize, _: StateSet, local: &[UpsetFamily], sink: &mut Sink) {
    for c in coalitions_of(local.len()) {
        if local[c.bits() as usize].contains(StateSet::EMPTY) {
            sink.push(Witness::new(s, [c], [StateSet::EMPTY]));
            if sink.full() {
                return;
            }
        }
    }
}

fn groundedness(s: usize, _: StateSet, local: &[UpsetFamily], sink: &mut Sink) {
    let t = local[0].core_union();
    for c in coalitions_of(local.len()) {
        let mins = local[c.bits() as usize].minimals();
        for x in mins {
            if !mins.iter().any(|y| y.is_subset(t) && y.is_subset(*x)) {
                sink.push(Witness::new(s, [c], [*x, t]));
                if sink.full() {
                    return;
                }
            }
        }
    }
}

fn monotonicity(s: usize, _: StateSet, local: &[UpsetFamily], sink: &mut Sink) {
    for (c, d) in nested_pairs(local.len()) {
        let large = &local[d.bits() as usize];
        for x in local[c.bits() as usize].minimals() {
            if !large.contains(*x) {
                sink.push(Witness::new(s, [c, d], [*x]));
                if sink.full() {
                    return;
                }
            }
        }
    }
}

fn serial(s: usize, _: StateSet, local: &[UpsetFamily], sink: &mut Sink) {
    for c in coalitions_of(local.len()) {
        if local[c.bits() as usize].is_empty() {
            sink.push(Witness::new(s, [c], []));
            if sink.full() {
                return;
            }
        }
    }
}

/// Checking minimal pairs suffices: a minimal of `C ∪ D` below `mX ∩ mY`
/// also lies below the intersection of any supersets.
fn independent(s: usize, _: StateSet, local: &[UpsetFamily], sink: &mut Sink) {
    for (c, d) in disjoint_pairs(local.len()) {
        let joint = &local[c.union(d).bits() as usize];
        for x in local[c.bits() as usize].minimals() {
            for y in local[d.bits() as usize].minimals() {
                if !joint.contains(x.intersection(*y)) {
                    sink.push(Witness::new(s, [c, d], [*x, *y]));
                    if sink.full() {
                        return;
                    }
                }
            }
        }
    }
}

/// Both clauses are skipped where the empty coalition has no powers.
fn deterministic(s: usize, _: StateSet, local: &[UpsetFamily], sink: &mut Sink) {
    if local[0].is_empty() {
        return;
    }
    let grand = grand_of(local);
    let core = &local[grand.bits() as usize];
    for z in core.minimals() {
        if !z.is_singleton() {
            sink.push(Witness::new(s, [grand], [*z]));
            if sink.full() {
                return;
            }
        }
    }
    let t = local[0].core_union();
    let reach = core.core_union();
    if !t.is_subset(reach) {
        sink.push(Witness::new(s, [Coalition::EMPTY, grand], [t, reach]));
    }
}

fn safety(s: usize, full: StateSet, local: &[UpsetFamily], sink: &mut Sink) {
    for c in coalitions_of(local.len()) {
        if !local[c.bits() as usize].contains(full) {
            sink.push(Witness::new(s, [c], [full]));
            if sink.full() {
                return;
            }
        }
    }
}

/// `X̄ ∉ N_∅` holds exactly for the sets `X` meeting every minimal of `N_∅`,
/// so it suffices to test the minimal transversals.
fn ag_maximality(s: usize, full: StateSet, local: &[UpsetFamily], sink: &mut Sink) {
    let grand = grand_of(local);
    let top = &local[grand.bits() as usize];
    for x in minimal_transversals(local[0].minimals()) {
        if !top.contains(x) {
            sink.push(Witness::new(s, [Coalition::EMPTY, grand], [x, full.difference(x)]));
            if sink.full() {
                return;
            }
        }
    }
}

fn crown(s: usize, _: StateSet, local: &[UpsetFamily], sink: &mut Sink) {
    let grand = grand_of(local);
    let top = &local[grand.bits() as usize];
    for m in top.minimals() {
        if !m.iter().any(|x| top.contains(StateSet::singleton(x))) {
            sink.push(Witness::new(s, [grand], [*m]));
            if sink.full() {
                return;
            }
        }
    }
}

/// The ⊆-minimal sets meeting every member of `sets`. An empty input yields
/// `[∅]`; an input containing `∅` yields nothing.
pub fn minimal_transversals(sets: &[StateSet]) -> Vec<StateSet> {
    let mut current = vec![StateSet::EMPTY];
    for edge in sets {
        let mut next: Vec<StateSet> = Vec::new();
        for h in &current {
            if h.intersects(*edge) {
                next.push(*h);
            } else {
                next.extend(edge.iter().map(|x| h.with(x)));
            }
        }
        current = UpsetFamily::generated_by(next).minimals().to_vec();
    }
    current
}

const REPRESENTATIVE: [(&str, LocalCheck); 4] = [
    ("alpha_triviality", triviality),
    ("liveness", liveness),
    ("groundedness", groundedness),
    ("monotonicity", monotonicity),
];

const CLASS: [(&str, LocalCheck); 3] = [
    ("serial", serial),
    ("independent", independent),
    ("deterministic", deterministic),
];

const TRULY_PLAYABLE: [(&str, LocalCheck); 5] = [
    ("liveness", liveness),
    ("safety", safety),
    ("superadditivity", independent),
    ("ag_maximality", ag_maximality),
    ("crown", crown),
];

fn run_all(nf: &AlphaNF, name: &'static str, check: LocalCheck) -> ConditionReport {
    let mut sink = Sink::all();
    let full = nf.space().full();
    for s in nf.space().states() {
        check(s, full, nf.local(s), &mut sink);
    }
    sink.into_report(name)
}

fn holds_locally(full: StateSet, local: &[UpsetFamily], check: LocalCheck) -> bool {
    let mut sink = Sink::first();
    check(0, full, local, &mut sink);
    sink.is_empty()
}

/// The four α-representativeness conditions: alpha triviality of the empty
/// coalition, liveness, groundedness and monotonicity.
pub fn check_alpha_representative(nf: &AlphaNF) -> Vec<ConditionReport> {
    REPRESENTATIVE.iter().map(|(name, f)| run_all(nf, name, *f)).collect()
}

/// α-seriality, α-independence and α-determinism, with witnesses.
pub fn alpha_class_reports(nf: &AlphaNF) -> [ConditionReport; 3] {
    CLASS.map(|(name, f)| run_all(nf, name, f))
}

pub fn check_alpha_class(nf: &AlphaNF) -> ClassFlags {
    let [s, i, d] = alpha_class_reports(nf);
    ClassFlags::new(s.holds, i.holds, d.holds)
}

/// Liveness, safety, superadditivity, AG-maximality and crown.
pub fn check_truly_playable(nf: &AlphaNF) -> Vec<ConditionReport> {
    TRULY_PLAYABLE.iter().map(|(name, f)| run_all(nf, name, *f)).collect()
}

/// The four representativeness conditions at state `s`, with all witnesses.
pub fn local_alpha_representative_reports(s: usize, local: &[UpsetFamily]) -> Vec<ConditionReport> {
    REPRESENTATIVE
        .iter()
        .map(|(name, f)| {
            let mut sink = Sink::all();
            f(s, StateSet::EMPTY, local, &mut sink);
            sink.into_report(name)
        })
        .collect()
}

/// The four representativeness conditions at one state.
pub fn local_alpha_representative(local: &[UpsetFamily]) -> bool {
    REPRESENTATIVE
        .iter()
        .all(|(_, f)| holds_locally(StateSet::EMPTY, local, *f))
}

/// The class flags at one state.
pub fn local_alpha_class(local: &[UpsetFamily]) -> ClassFlags {
    let [s, i, d] = CLASS.map(|(_, f)| holds_locally(StateSet::EMPTY, local, f));
    ClassFlags::new(s, i, d)
}

/// True playability at one state, where `full` is the whole state set.
pub fn local_truly_playable(full: StateSet, local: &[UpsetFamily]) -> bool {
    TRULY_PLAYABLE.iter().all(|(_, f)| holds_locally(full, local, *f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::agents::AgentSet;
    use crate::effectivity::induce_alpha;
    use crate::scenarios;
    use crate::space::StateSpace;

    fn one_state(families: [&[&[&str]]; 4]) -> AlphaNF {
        let space = StateSpace::new(["s", "u", "v"]).unwrap();
        let mut nf = AlphaNF::new(space.clone(), AgentSet::pair());
        for (bits, fam) in families.iter().enumerate() {
            let mins = fam.iter().map(|x| space.set_of(x).unwrap());
            nf.set(
                Coalition::from_bits(bits as u32),
                0,
                UpsetFamily::from_minimals(mins).unwrap(),
            )
            .unwrap();
        }
        nf
    }

    #[test]
    fn heavy_door_alpha_frame() {
        let nf = induce_alpha(&scenarios::heavy_door());
        assert!(check_alpha_representative(&nf).iter().all(|r| r.holds));
        assert_eq!(check_alpha_class(&nf), ClassFlags::SID);
        assert!(check_truly_playable(&nf).iter().all(|r| r.holds));
    }

    #[test]
    fn two_minimals_for_empty_coalition() {
        let nf = one_state([&[&["u"], &["v"]], &[], &[], &[]]);
        assert!(!check_alpha_representative(&nf)[0].holds);
    }

    #[test]
    fn monotonicity_failure() {
        let nf = one_state([&[], &[&["u"]], &[], &[&["v"]]]);
        let report = &check_alpha_representative(&nf)[3];
        assert!(!report.holds);
        assert!(report.witnesses.contains(&Witness::new(
            0,
            [Coalition::single(0), Coalition::grand(2)],
            [StateSet::singleton(1)]
        )));
    }

    #[test]
    fn nonsingleton_core_is_not_deterministic() {
        let nf = one_state([&[&["u", "v"]], &[&["u", "v"]], &[&["u", "v"]], &[&["u", "v"]]]);
        assert!(!check_alpha_class(&nf).deterministic);
        let tp = check_truly_playable(&nf);
        assert!(!tp[4].holds);
        assert_eq!(tp[4].condition, "crown");
    }

    #[test]
    fn empty_antichain_breaks_seriality_and_safety() {
        let nf = one_state([&[], &[], &[], &[]]);
        assert!(!check_alpha_class(&nf).serial);
        assert!(!check_truly_playable(&nf)[1].holds);
    }

    #[test]
    fn transversals() {
        let s = StateSet::from_bits;
        assert_eq!(minimal_transversals(&[]), [StateSet::EMPTY]);
        assert!(minimal_transversals(&[StateSet::EMPTY]).is_empty());
        assert_eq!(minimal_transversals(&[s(0b011), s(0b110)]), [s(0b010), s(0b101)]);
    }
}
