//! Actual and alpha powers in the heavy-door and jammed-door frames.

use coalition_frames::effectivity::{actual_effectivity, alpha_effectivity};
use coalition_frames::scenarios;

fn main() {
    for (name, g) in [
        ("heavy door", scenarios::heavy_door()),
        ("jammed door", scenarios::jammed_door()),
    ] {
        let space = g.space();
        let w1 = space.index_of("w1").unwrap();
        println!("{name}:");
        for c in g.agents().coalitions() {
            let label = match g.agents().render(c) {
                empty if empty.is_empty() => "∅".to_string(),
                other => other,
            };
            let actual = actual_effectivity(&g, c, w1);
            let alpha = alpha_effectivity(&g, c, w1);
            println!(
                "  {label:>4} at w1: actual {}  alpha minimals {}",
                space.render_family(actual.iter()),
                space.render_family(alpha.minimals().iter().copied())
            );
        }
    }
}
