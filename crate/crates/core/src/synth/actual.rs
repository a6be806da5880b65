use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::checkers::{check_ac_representative, local_ac_representative_reports};
use crate::family::PowerFamily;
use crate::frame::{ActualNF, CanonicalGcgf};
use crate::local::{assemble, LocalFamilies, LocalGame, NameTag};
use crate::space::{StateSet, StateSpace};
use crate::synth::{failing, SynthError};

/// Frames with fewer states are synthesized on the calling thread.
pub(crate) const PARALLEL_STATES: usize = 32;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    A,
    B,
}

/// The Step-2 sub-steps: whose names are processed, their group, and the
/// partner group they are paired with.
const SUBSTEPS: [(Side, u8, u8); 6] = [
    (Side::A, 1, 2),
    (Side::B, 1, 2),
    (Side::A, 2, 3),
    (Side::B, 2, 3),
    (Side::A, 3, 1),
    (Side::B, 3, 1),
];

fn render(space: &StateSpace, set: StateSet) -> String {
    format!("{{{}}}", space.names_of(set).join("+"))
}

/// Index of `tag` in a name list built by [`names_for`]: groups come one
/// after another and each group lists the same `(power, witness)` pairs in
/// ascending order.
fn position(tags: &[NameTag], tag: &NameTag) -> usize {
    let per_group = tags.len() / 3;
    let within = tags[..per_group]
        .binary_search_by(|t| (t.power, t.witness).cmp(&(tag.power, tag.witness)))
        .expect("every pair of a power and a grand power below it is named");
    (tag.group as usize - 1) * per_group + within
}

fn names_for(family: &PowerFamily, grand: &PowerFamily) -> Vec<NameTag> {
    let mut tags = Vec::new();
    for group in 1..=3 {
        for power in family.iter() {
            for witness in grand.below(power) {
                tags.push(NameTag { group, power, witness });
            }
        }
    }
    tags
}

/// The local game of the actual enoughness construction at state `s`.
///
/// Step 1 introduces three groups of names for every pair of an individual
/// power and a grand power below it. Step 2 pairs the names of each group with
/// names of the next group so that every name meets the GCI condition. Step 3
/// pairs every remaining couple whose powers share a grand power below their
/// intersection. Wherever a choice is left open the least candidate in
/// [`StateSet`] order is taken.
pub fn synthesize_local_actual(
    space: &StateSpace,
    s: usize,
    families: &LocalFamilies,
) -> Result<LocalGame, SynthError> {
    if let Some(err) = failing(local_ac_representative_reports(s, families.as_slice())) {
        return Err(err);
    }
    if families.empty().is_empty() {
        return Ok(LocalGame::empty(s));
    }
    let grand_family = families.grand();
    let tags_a = names_for(families.a(), grand_family);
    let tags_b = names_for(families.b(), grand_family);

    let nb = tags_b.len();
    let mut table: Vec<Option<StateSet>> = vec![None; tags_a.len() * nb];
    for (side, own_group, partner_group) in SUBSTEPS {
        let (own, partner_family, partner_tags) = match side {
            Side::A => (&tags_a, families.b(), &tags_b),
            Side::B => (&tags_b, families.a(), &tags_a),
        };
        for (i, tag) in own.iter().enumerate().filter(|(_, t)| t.group == own_group) {
            for z in grand_family.below(tag.power) {
                let y = partner_family
                    .least_where(|y| z.is_subset(y))
                    .expect("power inclusion provides a partner power");
                let partner = NameTag {
                    group: partner_group,
                    power: y,
                    witness: z,
                };
                let j = position(partner_tags, &partner);
                let cell = match side {
                    Side::A => i * nb + j,
                    Side::B => j * nb + i,
                };
                debug_assert!(table[cell].is_none(), "sub-steps pair disjoint group combinations");
                table[cell] = Some(z);
            }
        }
    }
    for (i, ta) in tags_a.iter().enumerate() {
        for (j, tb) in tags_b.iter().enumerate() {
            let cell = &mut table[i * nb + j];
            if cell.is_none() {
                let meet = ta.power.intersection(tb.power);
                *cell = grand_family.least_where(|z| z.is_subset(meet));
            }
        }
    }
    let grand: BTreeMap<(usize, usize), StateSet> = table
        .into_iter()
        .enumerate()
        .filter_map(|(cell, z)| z.map(|z| ((cell / nb, cell % nb), z)))
        .collect();

    let state = space.name(s);
    let mut rendered: BTreeMap<StateSet, String> = BTreeMap::new();
    for t in tags_a.iter().chain(&tags_b) {
        for set in [t.power, t.witness] {
            rendered.entry(set).or_insert_with(|| render(space, set));
        }
    }
    let label = |agent: &str, t: &NameTag| {
        format!(
            "{state}/{agent}/{}-{}-{}",
            t.group, rendered[&t.power], rendered[&t.witness]
        )
    };
    let a = tags_a.iter().map(|t| (label("a", t), *t)).collect();
    let b = tags_b.iter().map(|t| (label("b", t), *t)).collect();
    Ok(LocalGame::tagged(s, a, b, grand))
}

/// The local games of the construction at every state of `nf`.
pub fn synthesize_actual_games(nf: &ActualNF) -> Result<Vec<LocalGame>, SynthError> {
    if nf.agents().len() != 2 {
        return Err(SynthError::NotTwoAgents(nf.agents().len()));
    }
    if let Some(err) = failing(check_ac_representative(nf)) {
        return Err(err);
    }
    let local = |s| synthesize_local_actual(nf.space(), s, &LocalFamilies::of(nf, s));
    if nf.space().len() < PARALLEL_STATES {
        nf.space().states().map(local).collect()
    } else {
        nf.space().states().into_par_iter().map(local).collect()
    }
}

/// A two-agent GCGF whose actual effectivity is `nf`.
pub fn synthesize_actual(nf: &ActualNF) -> Result<CanonicalGcgf, SynthError> {
    let games = synthesize_actual_games(nf)?;
    Ok(assemble(nf.space().clone(), nf.agents().clone(), &games).expect("local games are well formed"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checkers::{check_ac_class, check_gcgf_class};
    use crate::effectivity::induce_actual;
    use crate::frame::ClassFlags;
    use crate::scenarios;

    fn fam(space: &StateSpace, sets: &[&[&str]]) -> PowerFamily {
        sets.iter().map(|x| space.set_of(x).unwrap()).collect()
    }

    #[test]
    fn appendix_c_counts() {
        let space = StateSpace::new(["s", "u", "v"]).unwrap();
        let w = &["u", "v"][..];
        let families = LocalFamilies::new(
            fam(&space, &[w]),
            fam(&space, &[w]),
            fam(&space, &[w]),
            fam(&space, &[&["u"], &["v"]]),
        );
        let game = synthesize_local_actual(&space, 0, &families).unwrap();
        assert_eq!(game.a_actions().len(), 6);
        assert_eq!(game.b_actions().len(), 6);
        assert_eq!(game.grand().len(), 36);
        assert!(game.satisfies_gci());
        assert_eq!(game.families(), families);
        assert_eq!(game.a_actions()[0], "s/a/1-{u+v}-{u}");
    }

    #[test]
    fn trivial_case() {
        let space = StateSpace::new(["s"]).unwrap();
        let game = synthesize_local_actual(&space, 0, &LocalFamilies::default()).unwrap();
        assert!(game.is_empty());
    }

    #[test]
    fn single_successor() {
        let space = StateSpace::new(["s", "u"]).unwrap();
        let u = fam(&space, &[&["u"]]);
        let families = LocalFamilies::new(u.clone(), u.clone(), u.clone(), u);
        let game = synthesize_local_actual(&space, 0, &families).unwrap();
        assert_eq!((game.a_actions().len(), game.b_actions().len()), (3, 3));
        assert_eq!(game.grand().len(), 9);
        assert!(game.grand().values().all(|z| *z == space.set_of(&["u"]).unwrap()));
        assert_eq!(game.families(), families);
    }

    #[test]
    fn appendix_a_round_trips_without_independence() {
        let nf = scenarios::appendix_a();
        let g = synthesize_actual(&nf).unwrap();
        assert_eq!(induce_actual(&g), nf);
        let flags = check_gcgf_class(&g);
        assert!(flags.serial && !flags.independent);
        assert_eq!(check_ac_class(&nf), ClassFlags::new(true, false, false));
    }

    #[test]
    fn heavy_door_round_trip() {
        let nf = induce_actual(&scenarios::heavy_door());
        let g = synthesize_actual(&nf).unwrap();
        assert_eq!(induce_actual(&g), nf);
        assert_eq!(check_gcgf_class(&g), ClassFlags::SID);
    }

    #[test]
    fn rejects_non_representative() {
        let space = StateSpace::new(["s", "u", "v"]).unwrap();
        let families = LocalFamilies::new(
            fam(&space, &[&["u"], &["v"]]),
            PowerFamily::new(),
            PowerFamily::new(),
            PowerFamily::new(),
        );
        assert!(matches!(
            synthesize_local_actual(&space, 0, &families),
            Err(SynthError::NotRepresentative(_))
        ));
    }
}
