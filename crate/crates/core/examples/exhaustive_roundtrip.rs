//! Round-trips every representative local neighborhood on `n` successors.
//!
//! Usage: `cargo run --example exhaustive_roundtrip -- [actual|alpha] [n]`

use std::time::Instant;

use coalition_frames::exhaust::{exhaust_actual, exhaust_alpha};

fn main() {
    let mut args = std::env::args().skip(1);
    let power = args.next().unwrap_or_else(|| "actual".into());
    let n: usize = args.next().map(|s| s.parse().expect("n must be a number")).unwrap_or(2);
    let start = Instant::now();
    let mut frames = 0u64;
    let summary = match power.as_str() {
        "actual" => exhaust_actual(n, &mut |_| frames += 1),
        "alpha" => exhaust_alpha(n, &mut |_| frames += 1),
        other => panic!("unknown power `{other}`"),
    }
    .expect("n in 1..=3");
    println!("{power} n={n}: {} candidates", summary.candidates);
    println!("  representative: {}", summary.representative);
    println!("  round-trips passed: {}", summary.passes);
    println!("  synthesized frames: {frames}");
    println!("  classes seen: {:?}", summary.classes);
    println!("  elapsed: {:.2?}", start.elapsed());
    if let Some(failure) = summary.first_failure {
        println!("  first failure: {failure}");
    }
}
