use coalition_frames::checkers::{all_hold, check_ac_class, check_alpha_class, check_gcgf_class};
use coalition_frames::effectivity::{induce_actual, induce_alpha};
use coalition_frames::extensive::{basic_powers, unfold, Player};
use coalition_frames::frame::{ActualNF, AlphaNF, ClassFlags};
use coalition_frames::genenum::{gen_random_actual_nf, gen_random_gcgf};
use coalition_frames::scenarios;
use coalition_frames::synth::{
    synthesize_actual, synthesize_actual_games, synthesize_alpha, synthesize_alpha_with, BranchChoice, SynthError,
};
use coalition_frames::{AgentSet, StateSpace};

#[test]
fn appendix_c_round_trip() {
    let nf = scenarios::appendix_c();
    let g = synthesize_actual(&nf).unwrap();
    assert_eq!(induce_actual(&g), nf);
    let games = synthesize_actual_games(&nf).unwrap();
    let at_s = &games[0];
    assert_eq!((at_s.a_actions().len(), at_s.b_actions().len()), (6, 6));
    assert_eq!(at_s.grand().len(), 36);
    assert!(at_s.satisfies_gci());
    assert!(games[1..].iter().all(|game| game.is_empty()));
}

#[test]
fn door_frames_round_trip() {
    for g in [scenarios::heavy_door(), scenarios::jammed_door()] {
        let actual = induce_actual(&g);
        assert_eq!(induce_actual(&synthesize_actual(&actual).unwrap()), actual);
        let alpha = induce_alpha(&g);
        let back = synthesize_alpha(&alpha).unwrap();
        assert_eq!(induce_alpha(&back), alpha);
        assert_eq!(check_gcgf_class(&back), ClassFlags::SID);
    }
}

#[test]
fn random_actual_frames_round_trip_with_their_class() {
    for flags in ClassFlags::all() {
        for seed in 0..60 {
            let nf = gen_random_actual_nf(1 + (seed % 4) as usize, 1 + (seed % 3) as usize, flags, seed).unwrap();
            let g = synthesize_actual(&nf).unwrap();
            assert_eq!(induce_actual(&g), nf, "{} seed {seed}", flags.label());
            assert_eq!(
                check_gcgf_class(&g),
                check_ac_class(&nf),
                "{} seed {seed}",
                flags.label()
            );
            assert!(check_ac_class(&nf).covers(flags));
        }
    }
}

#[test]
fn random_alpha_frames_round_trip_on_both_branches() {
    for flags in ClassFlags::all() {
        for seed in 0..40 {
            let g = gen_random_gcgf(1 + (seed % 4) as usize, 1 + (seed % 3) as usize, flags, seed).unwrap();
            let nf = induce_alpha(&g);
            let auto = synthesize_alpha(&nf).unwrap();
            assert_eq!(induce_alpha(&auto), nf, "{} seed {seed}", flags.label());
            assert_eq!(check_gcgf_class(&auto), check_alpha_class(&nf));
            let nondet = synthesize_alpha_with(&nf, BranchChoice::NonDeterministic).unwrap();
            assert_eq!(induce_alpha(&nondet), nf);
            match synthesize_alpha_with(&nf, BranchChoice::Deterministic) {
                Ok(det) => {
                    assert!(check_alpha_class(&nf).deterministic);
                    assert_eq!(induce_alpha(&det), nf);
                }
                Err(e) => assert_eq!(e, SynthError::NotDeterministic),
            }
        }
    }
}

#[test]
fn strict_core_union_round_trips() {
    let nf = scenarios::strict_core_union();
    let g = synthesize_alpha(&nf).unwrap();
    assert_eq!(induce_alpha(&g), nf);
}

#[test]
fn sid_components_unfold_to_matching_basic_powers() {
    for seed in 0..30 {
        let nf = gen_random_actual_nf(3, 3, ClassFlags::SID, seed).unwrap();
        for game in synthesize_actual_games(&nf).unwrap() {
            let two_step = unfold(&game).unwrap();
            let families = game.families();
            assert_eq!(basic_powers(&two_step, Player::A), families.0[1]);
            assert_eq!(basic_powers(&two_step, Player::B), families.0[2]);
        }
    }
}

#[test]
fn synthesis_needs_two_agents() {
    let space = StateSpace::new(["s"]).unwrap();
    let three = AgentSet::new(["a", "b", "c"]).unwrap();
    assert_eq!(
        synthesize_actual(&ActualNF::new(space.clone(), three.clone())),
        Err(SynthError::NotTwoAgents(3))
    );
    assert_eq!(
        synthesize_alpha(&AlphaNF::new(space, three)),
        Err(SynthError::NotTwoAgents(3))
    );
}

#[test]
fn appendix_a_is_representative_but_not_independent() {
    let nf = scenarios::appendix_a();
    assert!(all_hold(&coalition_frames::checkers::check_ac_representative(&nf)));
    assert!(!check_ac_class(&nf).independent);
    let g = synthesize_actual(&nf).unwrap();
    assert_eq!(induce_actual(&g), nf);
    assert!(!check_gcgf_class(&g).independent);
}
