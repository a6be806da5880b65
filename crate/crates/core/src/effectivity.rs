//! Alpha and actual effectivity of game frames and the neighborhood frames
//! they induce.

use crate::agents::Coalition;
use crate::family::{PowerFamily, UpsetFamily};
use crate::frame::{ActualNF, AlphaNF, CanonicalGcgf};
use crate::space::StateSet;

/// `EF^ac_C(s)`: the outcome sets of the available joint actions of `c`.
pub fn actual_effectivity(gcgf: &CanonicalGcgf, c: Coalition, s: usize) -> PowerFamily {
    gcgf.expand_borrowed(c, s).values().copied().collect()
}

/// `EF^α_C(s)` as the antichain of its minimal members.
pub fn alpha_effectivity(gcgf: &CanonicalGcgf, c: Coalition, s: usize) -> UpsetFamily {
    UpsetFamily::generated_by(gcgf.expand_borrowed(c, s).values().copied())
}

/// The actual neighborhood frame of `gcgf`.
pub fn induce_actual(gcgf: &CanonicalGcgf) -> ActualNF {
    let mut nf = ActualNF::new(gcgf.space().clone(), gcgf.agents().clone());
    for s in gcgf.space().states() {
        for c in gcgf.agents().coalitions() {
            nf.set(c, s, actual_effectivity(gcgf, c, s))
                .expect("effectivity stays inside the frame");
        }
    }
    nf
}

/// The alpha neighborhood frame of `gcgf`.
pub fn induce_alpha(gcgf: &CanonicalGcgf) -> AlphaNF {
    let mut nf = AlphaNF::new(gcgf.space().clone(), gcgf.agents().clone());
    for s in gcgf.space().states() {
        for c in gcgf.agents().coalitions() {
            nf.set(c, s, alpha_effectivity(gcgf, c, s))
                .expect("effectivity stays inside the frame");
        }
    }
    nf
}

/// The nonmonotonic core of an explicit family.
pub fn core<I: IntoIterator<Item = StateSet>>(family: I) -> UpsetFamily {
    UpsetFamily::generated_by(family)
}

/// True iff `x` belongs to the upset denoted by `u`.
pub fn upset_membership(u: &UpsetFamily, x: StateSet) -> bool {
    u.contains(x)
}

/// The alpha frame whose neighborhoods are the upsets generated by the
/// actual neighborhoods of `nf`.
pub fn upward_closure(nf: &ActualNF) -> AlphaNF {
    let mut alpha = AlphaNF::new(nf.space().clone(), nf.agents().clone());
    for s in nf.space().states() {
        for c in nf.agents().coalitions() {
            alpha
                .set(c, s, UpsetFamily::generated_by(nf.get(c, s).iter()))
                .expect("same signature");
        }
    }
    alpha
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenarios;

    #[test]
    fn heavy_door_powers_at_w1() {
        let g = scenarios::heavy_door();
        let sp = g.space();
        let w1 = sp.index_of("w1").unwrap();
        let fam = |names: &[&[&str]]| -> PowerFamily { names.iter().map(|n| sp.set_of(n).unwrap()).collect() };
        for agent in 0..2 {
            let c = Coalition::single(agent);
            assert_eq!(actual_effectivity(&g, c, w1), fam(&[&["w1"], &["w1", "w2"]]));
            assert_eq!(alpha_effectivity(&g, c, w1).minimals(), [sp.set_of(&["w1"]).unwrap()]);
        }
        assert_eq!(
            actual_effectivity(&g, Coalition::grand(2), w1),
            fam(&[&["w1"], &["w2"]])
        );
        assert_eq!(actual_effectivity(&g, Coalition::EMPTY, w1), fam(&[&["w1", "w2"]]));
    }

    #[test]
    fn jammed_door_powers_at_w1() {
        let g = scenarios::jammed_door();
        let sp = g.space();
        let w1 = sp.index_of("w1").unwrap();
        let only_w1: PowerFamily = [sp.set_of(&["w1"]).unwrap()].into_iter().collect();
        for c in g.agents().coalitions() {
            assert_eq!(actual_effectivity(&g, c, w1), only_w1);
            assert_eq!(alpha_effectivity(&g, c, w1).core_family(), only_w1);
        }
    }

    #[test]
    fn empty_state_has_no_powers() {
        let space = crate::space::StateSpace::new(["s"]).unwrap();
        let g = CanonicalGcgf::new(space, crate::agents::AgentSet::pair(), ["x"], []).unwrap();
        for c in g.agents().coalitions() {
            assert!(actual_effectivity(&g, c, 0).is_empty());
            assert!(alpha_effectivity(&g, c, 0).is_empty());
        }
    }

    #[test]
    fn core_examples() {
        let s = StateSet::from_bits;
        assert_eq!(core([s(0b01), s(0b11)]).minimals(), [s(0b01)]);
        assert!(core([]).is_empty());
        assert_eq!(core([s(0b01), s(0b10), s(0b11)]).minimals(), [s(0b01), s(0b10)]);
        assert!(upset_membership(&core([StateSet::EMPTY]), StateSet::EMPTY));
        assert!(!upset_membership(&UpsetFamily::empty(), s(0b11)));
    }
}
