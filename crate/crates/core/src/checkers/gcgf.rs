use std::borrow::Cow;
use std::collections::BTreeMap;

use crate::agents::{Coalition, JointAction};
use crate::checkers::{disjoint_pairs, ConditionReport, Sink, Witness};
use crate::frame::{ActionTuple, CanonicalGcgf, ClassFlags};
use crate::space::StateSet;

fn named(g: &CanonicalGcgf, c: Coalition, key: &[u32]) -> JointAction {
    JointAction::new(c, key.iter().map(|i| g.action_name(*i).to_string())).expect("arity matches")
}

/// Seriality, independence and determinism of a GCGF, with witnesses.
pub fn gcgf_class_reports(g: &CanonicalGcgf) -> [ConditionReport; 3] {
    class_reports(g, Sink::all)
}

fn class_reports(g: &CanonicalGcgf, sink: fn() -> Sink) -> [ConditionReport; 3] {
    let n = g.agents().len();
    let len = 1usize << n;
    let mut serial = sink();
    let mut independent = sink();
    let mut deterministic = sink();
    for s in g.space().states() {
        // Any grand entry makes every coalition's restriction available.
        if g.grand_entries(s).is_empty() {
            for c in g.agents().coalitions() {
                serial.push(Witness::new(s, [c], []));
            }
            continue;
        }
        for (key, out) in g.grand_entries(s) {
            if !out.is_singleton() && !deterministic.full() {
                let mut w = Witness::new(s, [g.agents().grand()], [*out]);
                w.actions.push(named(g, g.agents().grand(), key));
                deterministic.push(w);
            }
        }
        let expanded: Vec<Cow<'_, BTreeMap<ActionTuple, StateSet>>> = (0..len as u32)
            .map(|c| g.expand_borrowed(Coalition::from_bits(c), s))
            .collect();
        // Joining with the empty joint action changes nothing, so only pairs
        // of nonempty coalitions can fail. Every joint action of `c ∪ d`
        // splits into available actions of `c` and `d`, so the pair is
        // independent exactly when the counts multiply.
        for (c, d) in disjoint_pairs(len).filter(|(c, d)| !c.is_empty() && !d.is_empty()) {
            let cd = c.union(d);
            let (ec, ed) = (&expanded[c.bits() as usize], &expanded[d.bits() as usize]);
            let joint = &expanded[cd.bits() as usize];
            if joint.len() == ec.len() * ed.len() {
                continue;
            }
            let source: Vec<(bool, usize)> = cd
                .members()
                .map(|m| {
                    if c.contains(m) {
                        (true, c.members().position(|x| x == m).unwrap())
                    } else {
                        (false, d.members().position(|x| x == m).unwrap())
                    }
                })
                .collect();
            for kc in ec.keys() {
                for kd in ed.keys() {
                    if independent.full() {
                        break;
                    }
                    let joined: ActionTuple = source
                        .iter()
                        .map(|&(from_c, i)| if from_c { kc[i] } else { kd[i] })
                        .collect();
                    if !joint.contains_key(&joined) {
                        let mut w = Witness::new(s, [c, d], []);
                        w.actions.push(named(g, c, kc));
                        w.actions.push(named(g, d, kd));
                        independent.push(w);
                    }
                }
            }
        }
    }
    [
        serial.into_report("serial"),
        independent.into_report("independent"),
        deterministic.into_report("deterministic"),
    ]
}

/// The class of a GCGF.
pub fn check_gcgf_class(g: &CanonicalGcgf) -> ClassFlags {
    let [s, i, d] = class_reports(g, Sink::first);
    ClassFlags::new(s.holds, i.holds, d.holds)
}
