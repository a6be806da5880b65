use std::collections::BTreeSet;

use coalition_frames::checkers::{
    all_hold, check_ac_class, check_ac_representative, check_actual_facts, check_alpha_class, check_alpha_facts,
    check_alpha_representative, check_gcgf_class,
};
use coalition_frames::effectivity::{induce_actual, induce_alpha};
use coalition_frames::format::{frame_to_json, gcgf_to_json, parse_frame, FrameFile};
use coalition_frames::frame::{derive_canonical, validate_gcgf, ClassFlags};
use coalition_frames::genenum::{gen_random_actual_nf, gen_random_gcgf};
use coalition_frames::synth::{synthesize_actual, synthesize_alpha};
use coalition_frames::{StateSet, UpsetFamily};
use proptest::prelude::*;

fn flags() -> impl Strategy<Value = ClassFlags> {
    (0..8usize).prop_map(|i| ClassFlags::all()[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn frames_survive_serialization(states in 1..6usize, actions in 1..4usize, flags in flags(), seed in any::<u64>()) {
        let g = gen_random_gcgf(states, actions, flags, seed).unwrap();
        let files = [
            FrameFile::Actual(induce_actual(&g)),
            FrameFile::Alpha(induce_alpha(&g)),
            FrameFile::Raw(g.to_raw()),
            FrameFile::Gcgf(g),
        ];
        for file in files {
            let text = frame_to_json(&file);
            prop_assert_eq!(&parse_frame(&text).unwrap(), &file);
            prop_assert_eq!(frame_to_json(&parse_frame(&text).unwrap()), text);
        }
    }

    #[test]
    fn generation_is_deterministic(states in 1..6usize, actions in 1..4usize, flags in flags(), seed in any::<u64>()) {
        let first = gcgf_to_json(&gen_random_gcgf(states, actions, flags, seed).unwrap());
        let second = gcgf_to_json(&gen_random_gcgf(states, actions, flags, seed).unwrap());
        prop_assert_eq!(first, second);
        let a = frame_to_json(&FrameFile::Actual(gen_random_actual_nf(states, actions, flags, seed).unwrap()));
        let b = frame_to_json(&FrameFile::Actual(gen_random_actual_nf(states, actions, flags, seed).unwrap()));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn induced_frames_are_representative(states in 1..5usize, actions in 1..4usize, flags in flags(), seed in any::<u64>()) {
        let g = gen_random_gcgf(states, actions, flags, seed).unwrap();
        prop_assert!(validate_gcgf(&g.to_raw()).is_empty());
        prop_assert_eq!(derive_canonical(&g.to_raw()).unwrap(), g.clone());
        let actual = induce_actual(&g);
        let alpha = induce_alpha(&g);
        prop_assert!(all_hold(&check_ac_representative(&actual)));
        prop_assert!(all_hold(&check_alpha_representative(&alpha)));
        let class = check_gcgf_class(&g);
        prop_assert!(class.covers(flags));
        prop_assert!(check_ac_class(&actual).covers(class));
        prop_assert!(check_alpha_class(&alpha).covers(class));
        prop_assert!(all_hold(&check_actual_facts(&actual).unwrap()));
        prop_assert!(all_hold(&check_alpha_facts(&alpha).unwrap()));
    }

    #[test]
    fn synthesis_round_trips(states in 1..5usize, size in 1..4usize, flags in flags(), seed in any::<u64>()) {
        let nf = gen_random_actual_nf(states, size, flags, seed).unwrap();
        let g = synthesize_actual(&nf).unwrap();
        prop_assert_eq!(induce_actual(&g), nf.clone());
        prop_assert_eq!(check_gcgf_class(&g), check_ac_class(&nf));
        let alpha = induce_alpha(&gen_random_gcgf(states, size, flags, seed).unwrap());
        let h = synthesize_alpha(&alpha).unwrap();
        prop_assert_eq!(induce_alpha(&h), alpha.clone());
        prop_assert_eq!(check_gcgf_class(&h), check_alpha_class(&alpha));
    }

    #[test]
    fn state_sets_behave_like_sets(x in 0u64..1 << 12, y in 0u64..1 << 12) {
        let (a, b) = (StateSet::from_bits(x), StateSet::from_bits(y));
        let model = |s: StateSet| s.iter().collect::<BTreeSet<usize>>();
        let (ma, mb) = (model(a), model(b));
        prop_assert_eq!(model(a.union(b)), ma.union(&mb).copied().collect::<BTreeSet<_>>());
        prop_assert_eq!(model(a.intersection(b)), ma.intersection(&mb).copied().collect::<BTreeSet<_>>());
        prop_assert_eq!(model(a.difference(b)), ma.difference(&mb).copied().collect::<BTreeSet<_>>());
        prop_assert_eq!(a.is_subset(b), ma.is_subset(&mb));
        prop_assert_eq!(a.len(), ma.len());
    }

    #[test]
    fn upsets_are_generated_by_their_minimals(gens in prop::collection::vec(0u64..16, 0..6), probe in 0u64..16) {
        let sets: Vec<StateSet> = gens.iter().map(|&g| StateSet::from_bits(g)).collect();
        let upset = UpsetFamily::generated_by(sets.iter().copied());
        let x = StateSet::from_bits(probe);
        prop_assert_eq!(upset.contains(x), sets.iter().any(|g| g.is_subset(x)));
        for m in upset.minimals() {
            prop_assert!(upset.minimals().iter().all(|n| n == m || !n.is_subset(*m)));
        }
    }
}

#[test]
fn class_labels_round_trip() {
    for flags in ClassFlags::all() {
        assert_eq!(ClassFlags::parse(&flags.label()), Some(flags));
    }
    assert_eq!(ClassFlags::parse("DS"), None);
}
