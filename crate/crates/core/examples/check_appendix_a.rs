//! Runs the actual-frame checkers on a representative frame whose
//! STIT-independence does not give AC-independence.

use coalition_frames::checkers::{ac_class_reports, check_ac_representative, check_stit_independent};
use coalition_frames::scenarios;

fn main() {
    let nf = scenarios::appendix_a();
    let space = nf.space();
    let reports = check_ac_representative(&nf)
        .into_iter()
        .chain([check_stit_independent(&nf)])
        .chain(ac_class_reports(&nf));
    for report in reports {
        println!(
            "{:<28} {}",
            report.condition,
            if report.holds { "holds" } else { "fails" }
        );
        for w in &report.witnesses {
            println!(
                "    at {}: {}",
                space.name(w.state),
                space.render_family(w.sets.iter().copied())
            );
        }
    }
}
