//! Seeded random frames for each class, with the class their induced
//! neighborhoods carry.
//!
//! Usage: `cargo run --example random_frames -- [seed]`

use coalition_frames::checkers::{check_ac_class, check_alpha_class, check_gcgf_class};
use coalition_frames::effectivity::{induce_actual, induce_alpha};
use coalition_frames::frame::ClassFlags;
use coalition_frames::genenum::gen_random_gcgf;

fn main() {
    let seed: u64 = std::env::args().nth(1).map(|s| s.parse().expect("seed")).unwrap_or(0);
    for flags in ClassFlags::all() {
        let g = gen_random_gcgf(3, 2, flags, seed).expect("valid parameters");
        println!(
            "asked {:>3}: frame {:>3}, actual {:>3}, alpha {:>3}, {} grand entries",
            flags.label(),
            check_gcgf_class(&g).label(),
            check_ac_class(&induce_actual(&g)).label(),
            check_alpha_class(&induce_alpha(&g)).label(),
            g.grand_entry_count()
        );
    }
}
