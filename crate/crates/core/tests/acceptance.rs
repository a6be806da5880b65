//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use coalition_frames::checkers::{
    ac_class_reports, all_hold, check_ac_class, check_ac_representative, check_actual_facts, check_alpha_class,
    check_alpha_facts, check_alpha_representative, check_gcgf_class, check_stit_independent,
};
use coalition_frames::cli;
use coalition_frames::effectivity::{induce_actual, induce_alpha};
use coalition_frames::exhaust::{compare_truly_playable, exhaust_actual, exhaust_alpha, ExhaustSummary};
use coalition_frames::extensive::{basic_powers, check_bbe_conditions, fold, unfold, Player, TwoStepGame};
use coalition_frames::format::write_gcgf_json;
use coalition_frames::frame::{CanonicalGcgf, ClassFlags};
use coalition_frames::genenum::{
    embed_local_actual, embed_local_alpha, enumerate_local_actual, enumerate_local_alpha, gen_random_gcgf,
};
use coalition_frames::scenarios;
use coalition_frames::synth::{synthesize_actual, synthesize_alpha};
use coalition_frames::Coalition;
use rayon::prelude::*;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn within(elapsed: Duration, limit: Duration) -> bool {
    elapsed < limit
}

/// Running digest over the pretty JSON encoding of a stream of frames.
#[derive(Default)]
struct FrameDigest {
    hasher: Sha256,
    buffer: Vec<u8>,
    frames: u64,
}

impl FrameDigest {
    fn add(&mut self, g: &CanonicalGcgf) {
        let mut buffer = std::mem::take(&mut self.buffer);
        buffer.clear();
        write_gcgf_json(g, &mut buffer).expect("writing to memory");
        self.add_bytes(&buffer);
        self.buffer = buffer;
    }

    fn add_bytes(&mut self, bytes: &[u8]) {
        self.hasher.update((bytes.len() as u64).to_le_bytes());
        self.hasher.update(bytes);
        self.frames += 1;
    }

    fn finish(self) -> (String, u64) {
        (hex::encode(self.hasher.finalize()), self.frames)
    }
}

fn encode(g: &CanonicalGcgf) -> Vec<u8> {
    let mut bytes = Vec::new();
    write_gcgf_json(g, &mut bytes).expect("writing to memory");
    bytes
}

fn demo_records(name: &str) -> (i32, Vec<Value>) {
    let mut out = Vec::new();
    let code = cli::run(["coalition-frames", "demo", name], &mut out, &mut std::io::sink());
    let records = String::from_utf8(out)
        .expect("utf-8")
        .lines()
        .map(|l| serde_json::from_str(l).expect("JSON record"))
        .collect();
    (code, records)
}

fn computed(records: &[Value], quantity: &str) -> Value {
    records
        .iter()
        .find(|r| r["quantity"] == quantity)
        .map(|r| r["computed"].clone())
        .unwrap_or(Value::Null)
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let (heavy_code, heavy) = demo_records("heavy-door");
    let (jammed_code, jammed) = demo_records("jammed-door");
    let elapsed = start.elapsed();
    let mut ok = heavy_code == 0 && jammed_code == 0;
    for agent in ["a", "b"] {
        let actual = format!("actual powers of {agent} at w1");
        let alpha = format!("alpha minimals of {agent} at w1");
        ok &= computed(&heavy, &actual) == json!([["w1"], ["w1", "w2"]]);
        ok &= computed(&jammed, &actual) == json!([["w1"]]);
        ok &= computed(&heavy, &alpha) == json!([["w1"]]);
        ok &= computed(&jammed, &alpha) == json!([["w1"]]);
    }
    ok &= within(elapsed, Duration::from_secs(1));
    verdict(ok, format!("heavy and jammed door powers at w1 in {elapsed:.2?}"))
}

fn criterion_2(digest: &mut FrameDigest) -> Verdict {
    let start = Instant::now();
    let nf = scenarios::appendix_c();
    let Ok(g) = synthesize_actual(&nf) else {
        return verdict(false, "synthesis failed");
    };
    let s = nf.space().index_of("s").expect("state s");
    let a = g.expand_indexed(Coalition::single(0), s).len();
    let b = g.expand_indexed(Coalition::single(1), s).len();
    let pairs = g.grand_entries(s).len();
    let round_trip = induce_actual(&g) == nf;
    digest.add(&g);
    let elapsed = start.elapsed();
    let ok = (a, b, pairs) == (6, 6, 36) && round_trip && within(elapsed, Duration::from_secs(1));
    verdict(
        ok,
        format!("{a} a-actions, {b} b-actions, {pairs} pairs, re-induced equal: {round_trip}, {elapsed:.2?}"),
    )
}

fn criterion_3() -> Verdict {
    let start = Instant::now();
    let nf = scenarios::appendix_a();
    let representative = check_ac_representative(&nf);
    let stit = check_stit_independent(&nf);
    let [_, independent, _] = ac_class_reports(&nf);
    let space = nf.space();
    let x = space.set_of(&["t1", "t2"]).unwrap();
    let y = space.set_of(&["t2", "t3"]).unwrap();
    let witnessed = independent.witnesses.iter().any(|w| w.sets.starts_with(&[x, y]));
    let elapsed = start.elapsed();
    let ok = representative.len() == 4
        && all_hold(&representative)
        && stit.holds
        && !independent.holds
        && witnessed
        && within(elapsed, Duration::from_secs(1));
    verdict(
        ok,
        format!(
            "representative: {}, stit_independent: {}, ac_independent: {}, witness (t1t2, t2t3): {witnessed}, {elapsed:.2?}",
            all_hold(&representative),
            stit.holds,
            independent.holds
        ),
    )
}

fn describe(summaries: &[(usize, ExhaustSummary)]) -> String {
    summaries
        .iter()
        .map(|(n, s)| {
            format!(
                "n={n}: {}/{} representative of {} passing",
                s.passes, s.representative, s.candidates
            )
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn exhaustive_verdict(summaries: &[(usize, ExhaustSummary)], elapsed: Duration) -> Verdict {
    let classes: BTreeSet<&String> = summaries.iter().flat_map(|(_, s)| &s.classes).collect();
    let ok = summaries.iter().all(|(_, s)| s.passes == s.representative)
        && classes.len() == 8
        && within(elapsed, Duration::from_secs(600));
    let mut detail = format!("{}; {} class labels; {elapsed:.1?}", describe(summaries), classes.len());
    if let Some(failure) = summaries.iter().find_map(|(_, s)| s.first_failure.clone()) {
        detail.push_str(&format!("; first failure {failure}"));
    }
    verdict(ok, detail)
}

fn criterion_4(digest: &mut FrameDigest, facts: &mut u64) -> Verdict {
    let start = Instant::now();
    let mut summaries = Vec::new();
    for n in 1..=3 {
        match exhaust_actual(n, &mut |g| digest.add(g)) {
            Ok(s) => summaries.push((n, s)),
            Err(e) => return verdict(false, e.to_string()),
        }
    }
    *facts += summaries.iter().map(|(_, s)| s.fact_failures).sum::<u64>();
    exhaustive_verdict(&summaries, start.elapsed())
}

fn criterion_5(digest: &mut FrameDigest, facts: &mut u64) -> Verdict {
    let start = Instant::now();
    let mut summaries = Vec::new();
    for n in 1..=3 {
        match exhaust_alpha(n, &mut |g| digest.add(g)) {
            Ok(s) => summaries.push((n, s)),
            Err(e) => return verdict(false, e.to_string()),
        }
    }
    *facts += summaries.iter().map(|(_, s)| s.fact_failures).sum::<u64>();
    let scanned_ok = summaries.iter().all(|(_, s)| s.candidates <= 160_000);
    let mut v = exhaustive_verdict(&summaries, start.elapsed());
    v.pass &= scanned_ok;
    v
}

fn criterion_6(facts: &mut u64) -> Verdict {
    let start = Instant::now();
    let cases: Vec<(ClassFlags, u64)> = ClassFlags::all()
        .into_iter()
        .flat_map(|flags| (0..1000).map(move |seed| (flags, seed)))
        .collect();
    let results: Vec<Result<(bool, u64), String>> = cases
        .par_iter()
        .map(|&(flags, seed)| {
            let n_states = 1 + (seed % 4) as usize;
            let n_actions = 1 + (seed / 4 % 3) as usize;
            let g = gen_random_gcgf(n_states, n_actions, flags, seed)
                .map_err(|e| format!("{} seed {seed}: {e}", flags.label()))?;
            let actual = induce_actual(&g);
            let alpha = induce_alpha(&g);
            let ok = all_hold(&check_ac_representative(&actual))
                && all_hold(&check_alpha_representative(&alpha))
                && check_gcgf_class(&g).covers(flags)
                && check_ac_class(&actual).covers(flags)
                && check_alpha_class(&alpha).covers(flags);
            let fact_failures = [
                check_actual_facts(&actual).map(|r| all_hold(&r)).unwrap_or(false),
                check_alpha_facts(&alpha).map(|r| all_hold(&r)).unwrap_or(false),
            ]
            .iter()
            .filter(|holds| !**holds)
            .count() as u64;
            if ok {
                Ok((true, fact_failures))
            } else {
                Err(format!("{} seed {seed}", flags.label()))
            }
        })
        .collect();
    let elapsed = start.elapsed();
    let passed = results.iter().filter(|r| r.is_ok()).count();
    *facts += results
        .iter()
        .filter_map(|r| r.as_ref().ok())
        .map(|(_, f)| f)
        .sum::<u64>();
    let mut detail = format!("{passed}/{} random frames pass, {elapsed:.1?}", results.len());
    if let Some(Err(first)) = results.iter().find(|r| r.is_err()) {
        detail.push_str(&format!("; first failure {first}"));
    }
    verdict(
        passed == results.len() && within(elapsed, Duration::from_secs(300)),
        detail,
    )
}

fn criterion_7() -> Verdict {
    let start = Instant::now();
    match compare_truly_playable(3) {
        Ok(s) => verdict(
            s.discrepancies == 0,
            format!(
                "{} assignments, {} truly playable, {} representative SID, {} discrepancies, {:.1?}",
                s.candidates,
                s.truly_playable,
                s.representative_sid,
                s.discrepancies,
                start.elapsed()
            ),
        ),
        Err(e) => verdict(false, e.to_string()),
    }
}

fn tables(rows: usize, cols: usize, terminals: usize) -> impl Iterator<Item = Vec<Vec<usize>>> {
    let cells = rows * cols;
    (0..terminals.pow(cells as u32)).map(move |mut code| {
        let mut table = vec![vec![0; cols]; rows];
        for cell in 0..cells {
            table[cell / cols][cell % cols] = 1 + code % terminals;
            code /= terminals;
        }
        table
    })
}

fn criterion_8() -> Verdict {
    let start = Instant::now();
    let names = |prefix: &str, n: usize| (0..n).map(|i| format!("{prefix}{i}")).collect::<Vec<_>>();
    let mut checked = 0u64;
    let mut failures = 0u64;
    for rows in 1..=3 {
        for cols in 1..=3 {
            for table in tables(rows, cols, 4) {
                checked += 1;
                let Ok(game) = TwoStepGame::new(0, names("x", rows), names("y", cols), table) else {
                    failures += 1;
                    continue;
                };
                let component = fold(&game);
                let unfolded = match unfold(&component) {
                    Ok(u) if u == game => u,
                    _ => {
                        failures += 1;
                        continue;
                    }
                };
                let families = component.families();
                let xa = basic_powers(&unfolded, Player::A);
                let yb = basic_powers(&unfolded, Player::B);
                let ok = xa == families.0[1]
                    && yb == families.0[2]
                    && check_bbe_conditions(&xa, &yb).iter().all(|r| r.holds);
                failures += !ok as u64;
            }
        }
    }
    let elapsed = start.elapsed();
    verdict(
        failures == 0 && within(elapsed, Duration::from_secs(120)),
        format!("{checked} terminal tables, {failures} failures, {elapsed:.1?}"),
    )
}

fn criterion_9(fact_failures: u64) -> Verdict {
    let nf = scenarios::strict_core_union();
    let s = nf.space().index_of("s").expect("state s");
    let empty = nf.get(Coalition::EMPTY, s).core_union();
    let a = nf.get(Coalition::single(0), s).core_union();
    let representative = all_hold(&check_alpha_representative(&nf));
    let strict = a.is_proper_subset(empty);
    verdict(
        fact_failures == 0 && representative && strict,
        format!(
            "{fact_failures} frames with a failing fact; hand-built frame representative: {representative}, core union of a {} strictly inside {}: {strict}",
            nf.space().render(a),
            nf.space().render(empty)
        ),
    )
}

/// Synthesizes the same frames as criteria 4 and 5 again, without checks.
fn resynthesize() -> (FrameDigest, FrameDigest) {
    let mut actual = FrameDigest::default();
    let mut alpha = FrameDigest::default();
    let nf = scenarios::appendix_c();
    actual.add(&synthesize_actual(&nf).expect("appendix C synthesizes"));
    for n in 1..=3 {
        let items: Vec<_> = enumerate_local_actual(n).expect("valid n").collect();
        for chunk in items.chunks(2048) {
            let encoded: Vec<Vec<u8>> = chunk
                .par_iter()
                .flat_map_iter(|q| {
                    [true, false].map(|serial| synthesize_actual(&embed_local_actual(n, q, serial)).map(|g| encode(&g)))
                })
                .filter_map(Result::ok)
                .collect();
            encoded.iter().for_each(|bytes| actual.add_bytes(bytes));
        }
    }
    for n in 1..=3 {
        let items: Vec<_> = enumerate_local_alpha(n).expect("valid n").collect();
        let encoded: Vec<Vec<u8>> = items
            .par_iter()
            .flat_map_iter(|q| {
                [true, false].map(|serial| synthesize_alpha(&embed_local_alpha(n, q, serial)).map(|g| encode(&g)))
            })
            .filter_map(Result::ok)
            .collect();
        encoded.iter().for_each(|bytes| alpha.add_bytes(bytes));
    }
    (actual, alpha)
}

fn criterion_10(first_actual: FrameDigest, first_alpha: FrameDigest) -> Verdict {
    let start = Instant::now();
    let (second_actual, second_alpha) = resynthesize();
    let first = (first_actual.finish(), first_alpha.finish());
    let second = (second_actual.finish(), second_alpha.finish());
    verdict(
        first == second,
        format!(
            "actual {} frames sha256 {} vs {}; alpha {} frames sha256 {} vs {}; {:.1?}",
            first.0 .1,
            &first.0 .0[..16],
            &second.0 .0[..16],
            first.1 .1,
            &first.1 .0[..16],
            &second.1 .0[..16],
            start.elapsed()
        ),
    )
}

fn main() -> ExitCode {
    cli::configure_threads();
    let mut actual_digest = FrameDigest::default();
    let mut alpha_digest = FrameDigest::default();
    let mut fact_failures = 0;
    let mut verdicts = Vec::new();
    let mut report = |n: usize, v: Verdict| {
        println!("{} criterion {n}: {}", if v.pass { "PASS" } else { "FAIL" }, v.detail);
        verdicts.push(v.pass);
    };
    report(1, criterion_1());
    report(2, criterion_2(&mut actual_digest));
    report(3, criterion_3());
    report(4, criterion_4(&mut actual_digest, &mut fact_failures));
    report(5, criterion_5(&mut alpha_digest, &mut fact_failures));
    report(6, criterion_6(&mut fact_failures));
    report(7, criterion_7());
    report(8, criterion_8());
    report(9, criterion_9(fact_failures));
    report(10, criterion_10(actual_digest, alpha_digest));
    if verdicts.iter().all(|p| *p) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
