//! Small frames used throughout the examples and tests.
//!
//! In both door scenarios the open state `w2` loops back to itself under
//! every action pair, so the frames are serial.

use crate::agents::{AgentSet, Coalition, JointAction};
use crate::family::{PowerFamily, UpsetFamily};
use crate::frame::{ActualNF, AlphaNF, CanonicalGcgf, RawActionFrame};
use crate::local::LocalFamilies;
use crate::space::{StateSet, StateSpace};

const DOOR_ACTIONS: [&str; 2] = ["rest", "push"];

fn door_space() -> StateSpace {
    StateSpace::new(["w1", "w2"]).expect("valid names")
}

fn door(opens: bool) -> CanonicalGcgf {
    let space = door_space();
    let w1 = StateSet::singleton(0);
    let w2 = StateSet::singleton(1);
    let mut entries = Vec::new();
    for a in DOOR_ACTIONS {
        for b in DOOR_ACTIONS {
            let sigma = JointAction::new(Coalition::grand(2), [a, b]).expect("two actions");
            let pushed = a == "push" && b == "push";
            entries.push((0, sigma.clone(), if opens && pushed { w2 } else { w1 }));
            entries.push((1, sigma, w2));
        }
    }
    CanonicalGcgf::new(space, AgentSet::pair(), DOOR_ACTIONS, entries).expect("well-formed frame")
}

/// The door opens exactly when both agents push.
pub fn heavy_door() -> CanonicalGcgf {
    door(true)
}

/// The door never opens.
pub fn jammed_door() -> CanonicalGcgf {
    door(false)
}

/// The heavy door with every coalition's availability and outcomes listed
/// by hand.
pub fn heavy_door_raw() -> RawActionFrame {
    let space = door_space();
    let w1 = StateSet::singleton(0);
    let w2 = StateSet::singleton(1);
    let both = w1.union(w2);
    let mut raw = RawActionFrame::new(space, AgentSet::pair(), DOOR_ACTIONS);
    let a = Coalition::single(0);
    let b = Coalition::single(1);
    let ab = Coalition::grand(2);
    let single = |c: Coalition, x: &str| JointAction::new(c, [x]).expect("one action");
    let pair = |x: &str, y: &str| JointAction::new(ab, [x, y]).expect("two actions");
    let all_pairs: Vec<JointAction> = DOOR_ACTIONS
        .iter()
        .flat_map(|x| DOOR_ACTIONS.iter().map(move |y| pair(x, y)))
        .collect();
    for s in 0..2 {
        raw.set_available(Coalition::EMPTY, s, [JointAction::empty()]).unwrap();
        raw.set_available(a, s, DOOR_ACTIONS.map(|x| single(a, x))).unwrap();
        raw.set_available(b, s, DOOR_ACTIONS.map(|x| single(b, x))).unwrap();
        raw.set_available(ab, s, all_pairs.clone()).unwrap();
    }
    raw.set_outcome(0, JointAction::empty(), both).unwrap();
    raw.set_outcome(0, single(a, "rest"), w1).unwrap();
    raw.set_outcome(0, single(a, "push"), both).unwrap();
    raw.set_outcome(0, single(b, "rest"), w1).unwrap();
    raw.set_outcome(0, single(b, "push"), both).unwrap();
    for sigma in &all_pairs {
        let pushed = sigma.actions() == ["push", "push"];
        raw.set_outcome(0, sigma.clone(), if pushed { w2 } else { w1 }).unwrap();
    }
    raw.set_outcome(1, JointAction::empty(), w2).unwrap();
    for x in DOOR_ACTIONS {
        raw.set_outcome(1, single(a, x), w2).unwrap();
        raw.set_outcome(1, single(b, x), w2).unwrap();
    }
    for sigma in all_pairs {
        raw.set_outcome(1, sigma, w2).unwrap();
    }
    raw
}

fn family(space: &StateSpace, sets: &[&[&str]]) -> PowerFamily {
    sets.iter().map(|x| space.set_of(x).expect("known states")).collect()
}

/// A representative, STIT-independent frame that represents no independent
/// game frame: at `s` both agents and the grand coalition have the powers
/// `{t1,t2}` and `{t2,t3}`; every other state only has the full set.
pub fn appendix_a() -> ActualNF {
    let space = StateSpace::new(["s", "t1", "t2", "t3"]).expect("valid names");
    let agents = AgentSet::pair();
    let mut nf = ActualNF::new(space.clone(), agents.clone());
    let split = family(&space, &[&["t1", "t2"], &["t2", "t3"]]);
    let full: PowerFamily = [space.full()].into_iter().collect();
    for c in agents.coalitions() {
        let at_s = if c.is_empty() {
            family(&space, &[&["t1", "t2", "t3"]])
        } else {
            split.clone()
        };
        nf.set(c, 0, at_s).unwrap();
        for t in 1..4 {
            nf.set(c, t, full.clone()).unwrap();
        }
    }
    nf
}

/// The local input of the worked synthesis example over states `s`, `u`,
/// `v`: everyone but the grand coalition has the single power `{u,v}`, the
/// grand coalition has `{u}` and `{v}`.
pub fn appendix_c_families(space: &StateSpace) -> LocalFamilies {
    let w = family(space, &[&["u", "v"]]);
    LocalFamilies::new(w.clone(), w.clone(), w, family(space, &[&["u"], &["v"]]))
}

/// The worked example as a frame: the input families at `s`, nothing at `u`
/// and `v`.
pub fn appendix_c() -> ActualNF {
    let space = StateSpace::new(["s", "u", "v"]).expect("valid names");
    let families = appendix_c_families(&space);
    let mut nf = ActualNF::new(space, AgentSet::pair());
    for (bits, f) in families.0.into_iter().enumerate() {
        nf.set(Coalition::from_bits(bits as u32), 0, f).unwrap();
    }
    nf
}

/// An α-representative frame where agent `a`'s minimal powers cover only
/// part of the successors: at `s` the empty coalition and `b` have minimal
/// `{u,v}`, while `a` and the grand coalition have minimal `{u}`.
pub fn strict_core_union() -> AlphaNF {
    let space = StateSpace::new(["s", "u", "v"]).expect("valid names");
    let uv = space.set_of(&["u", "v"]).unwrap();
    let u = space.set_of(&["u"]).unwrap();
    let mut nf = AlphaNF::new(space, AgentSet::pair());
    for (bits, m) in [(0, uv), (1, u), (2, uv), (3, u)] {
        nf.set(Coalition::from_bits(bits), 0, UpsetFamily::from_minimals([m]).unwrap())
            .unwrap();
    }
    nf
}
