//! Alpha synthesis on both branches for a few seeded frames.

use coalition_frames::checkers::{check_alpha_class, check_gcgf_class};
use coalition_frames::effectivity::induce_alpha;
use coalition_frames::frame::ClassFlags;
use coalition_frames::genenum::gen_random_gcgf;
use coalition_frames::synth::{synthesize_alpha_with, BranchChoice};

fn main() {
    for (flags, seed) in [
        (ClassFlags::SID, 1),
        (ClassFlags::new(true, true, false), 2),
        (ClassFlags::NONE, 3),
    ] {
        let nf = induce_alpha(&gen_random_gcgf(3, 2, flags, seed).expect("valid parameters"));
        println!("input class {}", check_alpha_class(&nf).label());
        for branch in [
            BranchChoice::Auto,
            BranchChoice::Deterministic,
            BranchChoice::NonDeterministic,
        ] {
            match synthesize_alpha_with(&nf, branch) {
                Ok(g) => println!(
                    "  {branch:?}: {} grand entries, class {}, round trip {}",
                    g.grand_entry_count(),
                    check_gcgf_class(&g).label(),
                    induce_alpha(&g) == nf
                ),
                Err(e) => println!("  {branch:?}: {e}"),
            }
        }
    }
}
