//! Unfolds the heavy door into a two-step game and compares basic powers with
//! actual powers.

use coalition_frames::extensive::{basic_powers, check_bbe_conditions, unfold, Player};
use coalition_frames::local::local_game_of;
use coalition_frames::scenarios;

fn main() {
    let g = scenarios::heavy_door();
    let space = g.space();
    let w1 = space.index_of("w1").unwrap();
    let component = local_game_of(&g, w1);
    let game = unfold(&component).expect("the door is SID");
    for (i, x) in game.stage1_actions().iter().enumerate() {
        for (j, y) in game.stage2_actions().iter().enumerate() {
            println!("a {x}, then b {y}: {}", space.name(game.terminal(i, j)));
        }
    }
    let families = component.families();
    let xa = basic_powers(&game, Player::A);
    let yb = basic_powers(&game, Player::B);
    println!("basic powers of a: {}", space.render_family(xa.iter()));
    println!("basic powers of b: {}", space.render_family(yb.iter()));
    println!("match actual powers: {}", xa == families.0[1] && yb == families.0[2]);
    for r in check_bbe_conditions(&xa, &yb) {
        println!("{}: {}", r.condition, r.holds);
    }
}
