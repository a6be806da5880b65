//! Builds a game frame from actual neighborhoods and checks that it induces
//! them again.

use coalition_frames::effectivity::induce_actual;
use coalition_frames::format::gcgf_to_json;
use coalition_frames::scenarios;
use coalition_frames::synth::{synthesize_actual, synthesize_actual_games};

fn main() {
    let nf = scenarios::appendix_c();
    let games = synthesize_actual_games(&nf).expect("representative input");
    let at_s = &games[0];
    println!("a actions: {:?}", at_s.a_actions());
    println!("b actions: {:?}", at_s.b_actions());
    println!("available pairs at s: {}", at_s.grand().len());
    let g = synthesize_actual(&nf).expect("representative input");
    println!("re-induced frame equals input: {}", induce_actual(&g) == nf);
    if std::env::args().any(|a| a == "--json") {
        print!("{}", gcgf_to_json(&g));
    }
}
