//! Compares true playability with α-representativeness plus SID over every
//! antichain assignment on `n` successors.
//!
//! Usage: `cargo run --example truly_playable -- [n]`

use coalition_frames::exhaust::compare_truly_playable;

fn main() {
    let n: usize = std::env::args().nth(1).map(|s| s.parse().expect("n")).unwrap_or(2);
    let summary = compare_truly_playable(n).expect("n in 1..=3");
    println!("assignments: {}", summary.candidates);
    println!("truly playable: {}", summary.truly_playable);
    println!("representative and SID: {}", summary.representative_sid);
    println!("discrepancies: {}", summary.discrepancies);
}
