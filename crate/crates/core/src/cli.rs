//! The `coalition-frames` command line.
//!
//! Every command writes line-delimited JSON records to its output stream.
//! Each record starts with a `"record"` field naming its type, and the field
//! order is fixed. Exit codes: 0 when the command succeeds or the checked
//! property holds, 1 on a semantic failure, 2 on an input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::agents::{AgentSet, Coalition};
use crate::checkers::{
    ac_class_reports, all_hold, alpha_class_reports, check_ac_class, check_ac_representative, check_actual_facts,
    check_alpha_class, check_alpha_facts, check_alpha_representative, check_gcgf_class, check_stit_independent,
    check_truly_playable, gcgf_class_reports, ConditionReport, Witness,
};
use crate::effectivity::{actual_effectivity, alpha_effectivity, induce_actual, induce_alpha};
use crate::exhaust::{compare_truly_playable, exhaust_actual, exhaust_alpha, ExhaustSummary};
use crate::format::{frame_to_json, parse_frame, FormatError, FrameFile};
use crate::frame::{derive_canonical, validate_gcgf, ActualNF, AlphaNF, CanonicalGcgf, ClassFlags};
use crate::genenum::{gen_random_actual_nf, gen_random_gcgf, GenError};
use crate::scenarios;
use crate::space::{StateSet, StateSpace};
use crate::synth::{synthesize_actual, synthesize_alpha_with, BranchChoice, SynthError};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "COALITION_FRAMES_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "coalition-frames",
    version,
    about = "Game frames, neighborhood frames and their synthesis"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the GCI and ODA conditions of an action frame.
    Validate { path: PathBuf },
    /// Run every checker applicable to a frame of the given kind.
    Check {
        path: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Build a two-agent game frame from a representative neighborhood frame.
    Synthesize {
        path: PathBuf,
        #[arg(long, value_enum)]
        power: Power,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum)]
        force_branch: Option<Branch>,
    },
    /// Synthesize, re-induce and compare with the input.
    Roundtrip {
        path: PathBuf,
        #[arg(long, value_enum)]
        power: Power,
        /// Compare against this game frame instead of synthesizing one.
        #[arg(long)]
        game: Option<PathBuf>,
        #[arg(long, value_enum)]
        force_branch: Option<Branch>,
    },
    /// Round-trip every representative local neighborhood on `n` successors.
    Exhaust {
        #[arg(long, value_enum)]
        power: Power,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        n: u8,
        /// Also compare true playability with α-representativeness plus SID.
        #[arg(long)]
        sid: bool,
    },
    /// Walk through a built-in scenario and compare with the known values.
    Demo {
        #[arg(value_enum)]
        name: DemoName,
    },
    /// Write a seeded random frame.
    Generate {
        #[arg(long, value_enum, default_value_t = GenKind::Gcgf)]
        kind: GenKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        states: usize,
        /// Actions per agent for game frames, maximum grand family size for
        /// actual frames.
        #[arg(long, default_value_t = 2)]
        actions: usize,
        /// Class label such as `SID`, `I` or `eps`.
        #[arg(long, default_value = "eps", value_parser = parse_flags)]
        flags: ClassFlags,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Gcgf,
    Actual,
    Alpha,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Power {
    Actual,
    Alpha,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Branch {
    D,
    Nond,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DemoName {
    HeavyDoor,
    JammedDoor,
    AppendixA,
    AppendixC,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Gcgf,
    Actual,
    Alpha,
}

fn parse_flags(label: &str) -> Result<ClassFlags, String> {
    ClassFlags::parse(label).ok_or_else(|| format!("unknown class label `{label}`"))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: FormatError },
    #[error("{path}: expected a {expected} frame, found a {found} frame")]
    KindMismatch {
        path: String,
        expected: &'static str,
        found: &'static str,
    },
    #[error(transparent)]
    Synth(#[from] SynthError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Synth(SynthError::NotRepresentative(_) | SynthError::NotDeterministic) => 1,
            _ => 2,
        }
    }
}

/// Caps the global worker pool at the value of [`THREADS_ENV`], if set.
pub fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
    {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            if let CliError::Synth(SynthError::NotRepresentative(reports)) = &e {
                let _ = emit_reports(out, None, "representative", "", reports);
            }
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Runs a parsed command.
pub fn execute(command: &Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Validate { path } => cmd_validate(path, out),
        Command::Check { path, kind } => cmd_check(path, *kind, out),
        Command::Synthesize {
            path,
            power,
            out: target,
            force_branch,
        } => cmd_synthesize(path, *power, target, *force_branch, out),
        Command::Roundtrip {
            path,
            power,
            game,
            force_branch,
        } => cmd_roundtrip(path, *power, game.as_deref(), *force_branch, out),
        Command::Exhaust { power, n, sid } => cmd_exhaust(*power, *n as usize, *sid, out),
        Command::Demo { name } => cmd_demo(*name, out),
        Command::Generate {
            kind,
            seed,
            states,
            actions,
            flags,
            out: target,
        } => cmd_generate(*kind, *seed, *states, *actions, *flags, target.as_deref(), out),
    }
}

fn emit(out: &mut dyn Write, record: Value) -> Result<(), CliError> {
    writeln!(out, "{record}")?;
    Ok(())
}

/// Reads and parses a frame file.
pub fn load(path: &Path) -> Result<FrameFile, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    parse_frame(&text).map_err(|source| CliError::Parse { path: shown, source })
}

fn mismatch(path: &Path, expected: &'static str, found: &FrameFile) -> CliError {
    CliError::KindMismatch {
        path: path.display().to_string(),
        expected,
        found: found.kind(),
    }
}

fn load_gcgf(path: &Path) -> Result<CanonicalGcgf, CliError> {
    match load(path)? {
        FrameFile::Gcgf(g) => Ok(g),
        FrameFile::Raw(raw) => derive_canonical(&raw).map_err(|e| CliError::Parse {
            path: path.display().to_string(),
            source: e.into(),
        }),
        other => Err(mismatch(path, "gcgf", &other)),
    }
}

fn load_actual(path: &Path) -> Result<ActualNF, CliError> {
    match load(path)? {
        FrameFile::Actual(nf) => Ok(nf),
        other => Err(mismatch(path, "actual", &other)),
    }
}

fn load_alpha(path: &Path) -> Result<AlphaNF, CliError> {
    match load(path)? {
        FrameFile::Alpha(nf) => Ok(nf),
        other => Err(mismatch(path, "alpha", &other)),
    }
}

fn set_json(space: &StateSpace, set: StateSet) -> Value {
    json!(space.names_of(set))
}

fn family_json<I: IntoIterator<Item = StateSet>>(space: &StateSpace, sets: I) -> Value {
    Value::Array(sets.into_iter().map(|x| set_json(space, x)).collect())
}

fn witness_json(space: &StateSpace, agents: &AgentSet, w: &Witness) -> Value {
    json!({
        "state": space.name(w.state),
        "coalitions": w.coalitions.iter().map(|c| agents.render(*c)).collect::<Vec<_>>(),
        "sets": family_json(space, w.sets.iter().copied()),
        "actions": w.actions.iter().map(|a| a.render()).collect::<Vec<_>>(),
    })
}

type Context<'a> = Option<(&'a StateSpace, &'a AgentSet)>;

fn emit_reports(
    out: &mut dyn Write,
    context: Context,
    group: &str,
    prefix: &str,
    reports: &[ConditionReport],
) -> Result<(), CliError> {
    for r in reports {
        let witnesses: Vec<Value> = match context {
            Some((space, agents)) => r.witnesses.iter().map(|w| witness_json(space, agents, w)).collect(),
            None => Vec::new(),
        };
        emit(
            out,
            json!({
                "record": "condition",
                "group": group,
                "condition": format!("{prefix}{}", r.condition),
                "holds": r.holds,
                "witnesses": witnesses,
            }),
        )?;
    }
    Ok(())
}

fn flags_json(flags: ClassFlags) -> Value {
    json!({
        "serial": flags.serial,
        "independent": flags.independent,
        "deterministic": flags.deterministic,
        "label": flags.label(),
    })
}

fn cmd_validate(path: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let raw = match load(path)? {
        FrameFile::Raw(raw) => raw,
        FrameFile::Gcgf(g) => g.to_raw(),
        other => return Err(mismatch(path, "gcgf", &other)),
    };
    let space = raw.space();
    let agents = raw.agents();
    let report = validate_gcgf(&raw);
    for v in &report.gci {
        emit(
            out,
            json!({
                "record": "violation",
                "condition": "gci",
                "coalition": agents.render(v.coalition),
                "state": space.name(v.state),
                "action": v.action.render(),
                "listed": set_json(space, v.listed),
                "expected": set_json(space, v.expected),
            }),
        )?;
    }
    for v in &report.oda {
        emit(
            out,
            json!({
                "record": "violation",
                "condition": "oda",
                "coalition": agents.render(v.coalition),
                "state": space.name(v.state),
                "listed": v.listed.iter().map(|a| a.render()).collect::<Vec<_>>(),
                "expected": v.expected.iter().map(|a| a.render()).collect::<Vec<_>>(),
            }),
        )?;
    }
    emit(
        out,
        json!({"record": "validation", "valid": report.is_empty(), "violations": report.len()}),
    )?;
    Ok(if report.is_empty() { 0 } else { 1 })
}

fn cmd_check(path: &Path, kind: Kind, out: &mut dyn Write) -> Result<i32, CliError> {
    match kind {
        Kind::Gcgf => {
            let g = load_gcgf(path)?;
            let ctx = Some((g.space(), g.agents()));
            let class = gcgf_class_reports(&g);
            emit_reports(out, ctx, "class", "", &class)?;
            let flags = ClassFlags::new(class[0].holds, class[1].holds, class[2].holds);
            emit(
                out,
                json!({"record": "summary", "kind": "gcgf", "class": flags_json(flags)}),
            )?;
            Ok(0)
        }
        Kind::Actual => {
            let nf = load_actual(path)?;
            let ctx = Some((nf.space(), nf.agents()));
            let rep = check_ac_representative(&nf);
            let class = ac_class_reports(&nf);
            let stit = check_stit_independent(&nf);
            emit_reports(out, ctx, "representative", "", &rep)?;
            emit_reports(out, ctx, "class", "ac_", &class)?;
            emit_reports(out, ctx, "independence", "", std::slice::from_ref(&stit))?;
            if let Ok(facts) = check_actual_facts(&nf) {
                emit_reports(out, ctx, "facts", "", &facts)?;
            }
            let flags = ClassFlags::new(class[0].holds, class[1].holds, class[2].holds);
            let representative = all_hold(&rep);
            emit(
                out,
                json!({
                    "record": "summary",
                    "kind": "actual",
                    "representative": representative,
                    "class": flags_json(flags),
                    "stit_independent": stit.holds,
                }),
            )?;
            Ok(if representative { 0 } else { 1 })
        }
        Kind::Alpha => {
            let nf = load_alpha(path)?;
            let ctx = Some((nf.space(), nf.agents()));
            let rep = check_alpha_representative(&nf);
            let class = alpha_class_reports(&nf);
            let playable = check_truly_playable(&nf);
            emit_reports(out, ctx, "representative", "", &rep)?;
            emit_reports(out, ctx, "class", "alpha_", &class)?;
            emit_reports(out, ctx, "truly_playable", "", &playable)?;
            if let Ok(facts) = check_alpha_facts(&nf) {
                emit_reports(out, ctx, "facts", "", &facts)?;
            }
            let flags = ClassFlags::new(class[0].holds, class[1].holds, class[2].holds);
            let representative = all_hold(&rep);
            emit(
                out,
                json!({
                    "record": "summary",
                    "kind": "alpha",
                    "representative": representative,
                    "class": flags_json(flags),
                    "truly_playable": all_hold(&playable),
                }),
            )?;
            Ok(if representative { 0 } else { 1 })
        }
    }
}

fn branch_choice(branch: Option<Branch>) -> BranchChoice {
    match branch {
        None => BranchChoice::Auto,
        Some(Branch::D) => BranchChoice::Deterministic,
        Some(Branch::Nond) => BranchChoice::NonDeterministic,
    }
}

/// The input neighborhood frame of a synthesis command.
enum Input {
    Actual(ActualNF),
    Alpha(AlphaNF),
}

impl Input {
    fn load(path: &Path, power: Power) -> Result<Input, CliError> {
        Ok(match power {
            Power::Actual => Input::Actual(load_actual(path)?),
            Power::Alpha => Input::Alpha(load_alpha(path)?),
        })
    }

    fn synthesize(&self, branch: Option<Branch>) -> Result<CanonicalGcgf, CliError> {
        Ok(match self {
            Input::Actual(nf) => synthesize_actual(nf)?,
            Input::Alpha(nf) => synthesize_alpha_with(nf, branch_choice(branch))?,
        })
    }

    fn class(&self) -> ClassFlags {
        match self {
            Input::Actual(nf) => check_ac_class(nf),
            Input::Alpha(nf) => check_alpha_class(nf),
        }
    }
}

/// One record per state with the number of actions of each agent and of
/// available grand joint actions.
fn emit_action_counts(out: &mut dyn Write, g: &CanonicalGcgf) -> Result<(), CliError> {
    for s in g.space().states() {
        let counts: Vec<usize> = (0..g.agents().len())
            .map(|i| g.expand_indexed(Coalition::single(i), s).len())
            .collect();
        emit(
            out,
            json!({
                "record": "state",
                "state": g.space().name(s),
                "actions": g.agents().names().iter().cloned().zip(counts.into_iter().map(Value::from)).collect::<serde_json::Map<String, Value>>(),
                "grand_pairs": g.grand_entries(s).len(),
            }),
        )?;
    }
    Ok(())
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn cmd_synthesize(
    path: &Path,
    power: Power,
    target: &Path,
    branch: Option<Branch>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let input = Input::load(path, power)?;
    let g = input.synthesize(branch)?;
    write_file(target, &frame_to_json(&FrameFile::Gcgf(g.clone())))?;
    emit_action_counts(out, &g)?;
    emit(
        out,
        json!({
            "record": "synthesized",
            "out": target.display().to_string(),
            "states": g.space().len(),
            "grand_entries": g.grand_entry_count(),
            "class": flags_json(check_gcgf_class(&g)),
        }),
    )?;
    Ok(0)
}

/// Records a differing family per `(coalition, state)` and returns how many
/// differ.
fn compare_families<F>(
    out: &mut dyn Write,
    space: &StateSpace,
    agents: &AgentSet,
    mut pair: F,
) -> Result<usize, CliError>
where
    F: FnMut(Coalition, usize) -> (Vec<StateSet>, Vec<StateSet>),
{
    let mut differing = 0;
    for c in agents.coalitions() {
        for s in space.states() {
            let (expected, found) = pair(c, s);
            if expected != found {
                differing += 1;
                emit(
                    out,
                    json!({
                        "record": "mismatch",
                        "coalition": agents.render(c),
                        "state": space.name(s),
                        "expected": family_json(space, expected),
                        "found": family_json(space, found),
                    }),
                )?;
            }
        }
    }
    Ok(differing)
}

fn cmd_roundtrip(
    path: &Path,
    power: Power,
    game: Option<&Path>,
    branch: Option<Branch>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let input = Input::load(path, power)?;
    let g = match game {
        Some(p) => load_gcgf(p)?,
        None => input.synthesize(branch)?,
    };
    let differing = match &input {
        Input::Actual(nf) => {
            if g.space() != nf.space() || g.agents() != nf.agents() {
                usize::MAX
            } else {
                compare_families(out, nf.space(), nf.agents(), |c, s| {
                    (
                        nf.get(c, s).iter().collect(),
                        actual_effectivity(&g, c, s).iter().collect(),
                    )
                })?
            }
        }
        Input::Alpha(nf) => {
            if g.space() != nf.space() || g.agents() != nf.agents() {
                usize::MAX
            } else {
                compare_families(out, nf.space(), nf.agents(), |c, s| {
                    (
                        nf.get(c, s).minimals().to_vec(),
                        alpha_effectivity(&g, c, s).minimals().to_vec(),
                    )
                })?
            }
        }
    };
    let equal = differing == 0;
    let input_class = input.class();
    let output_class = check_gcgf_class(&g);
    emit(
        out,
        json!({
            "record": "roundtrip",
            "power": match power { Power::Actual => "actual", Power::Alpha => "alpha" },
            "equal": equal,
            "same_signature": differing != usize::MAX,
            "input_class": flags_json(input_class),
            "output_class": flags_json(output_class),
            "class_preserved": input_class == output_class,
        }),
    )?;
    Ok(if equal { 0 } else { 1 })
}

fn summary_json(power: &str, n: usize, summary: &ExhaustSummary, frames: u64) -> Value {
    json!({
        "record": "exhaust",
        "power": power,
        "n": n,
        "candidates": summary.candidates,
        "representative": summary.representative,
        "passes": summary.passes,
        "fact_failures": summary.fact_failures,
        "frames": frames,
        "classes": summary.classes.iter().collect::<Vec<_>>(),
        "first_failure": summary.first_failure,
    })
}

fn cmd_exhaust(power: Power, n: usize, sid: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut frames = 0u64;
    let mut count = |_: &CanonicalGcgf| frames += 1;
    let (name, summary) = match power {
        Power::Actual => ("actual", exhaust_actual(n, &mut count)?),
        Power::Alpha => ("alpha", exhaust_alpha(n, &mut count)?),
    };
    emit(out, summary_json(name, n, &summary, frames))?;
    let mut ok = summary.all_pass();
    if sid {
        let playable = compare_truly_playable(n)?;
        emit(
            out,
            json!({
                "record": "truly_playable",
                "n": n,
                "candidates": playable.candidates,
                "truly_playable": playable.truly_playable,
                "representative_sid": playable.representative_sid,
                "discrepancies": playable.discrepancies,
                "first_discrepancy": playable.first_discrepancy,
            }),
        )?;
        ok &= playable.discrepancies == 0;
    }
    Ok(if ok { 0 } else { 1 })
}

/// Compares a computed value with the expected one and records both.
struct Demo<'a> {
    out: &'a mut dyn Write,
    all_match: bool,
}

impl Demo<'_> {
    fn frame(&mut self, frame: FrameFile) -> Result<(), CliError> {
        let value: Value = serde_json::from_str(&frame_to_json(&frame)).expect("frames encode as JSON");
        emit(
            self.out,
            json!({"record": "frame", "kind": frame.kind(), "frame": value}),
        )
    }

    fn compare(&mut self, quantity: &str, expected: Value, computed: Value) -> Result<(), CliError> {
        let matches = expected == computed;
        self.all_match &= matches;
        emit(
            self.out,
            json!({
                "record": "compare",
                "quantity": quantity,
                "expected": expected,
                "computed": computed,
                "match": matches,
            }),
        )
    }
}

fn names(sets: &[&[&str]]) -> Value {
    json!(sets)
}

fn cmd_demo(name: DemoName, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut demo = Demo { out, all_match: true };
    match name {
        DemoName::HeavyDoor | DemoName::JammedDoor => {
            let heavy = name == DemoName::HeavyDoor;
            let g = if heavy {
                scenarios::heavy_door()
            } else {
                scenarios::jammed_door()
            };
            demo.frame(FrameFile::Gcgf(g.clone()))?;
            let space = g.space();
            let w1 = space.index_of("w1").expect("door state");
            let actual: &[&[&str]] = if heavy { &[&["w1"], &["w1", "w2"]] } else { &[&["w1"]] };
            for (i, agent) in g.agents().names().iter().enumerate() {
                let c = Coalition::single(i);
                demo.compare(
                    &format!("actual powers of {agent} at w1"),
                    names(actual),
                    family_json(space, actual_effectivity(&g, c, w1).iter()),
                )?;
                demo.compare(
                    &format!("alpha minimals of {agent} at w1"),
                    names(&[&["w1"]]),
                    family_json(space, alpha_effectivity(&g, c, w1).minimals().iter().copied()),
                )?;
            }
            let grand: &[&[&str]] = if heavy { &[&["w1"], &["w2"]] } else { &[&["w1"]] };
            demo.compare(
                "actual powers of a,b at w1",
                names(grand),
                family_json(space, actual_effectivity(&g, g.agents().grand(), w1).iter()),
            )?;
            let other = if heavy {
                scenarios::jammed_door()
            } else {
                scenarios::heavy_door()
            };
            let single_alpha = |g: &CanonicalGcgf| -> Vec<Vec<StateSet>> {
                (0..2)
                    .map(|i| alpha_effectivity(g, Coalition::single(i), w1).minimals().to_vec())
                    .collect()
            };
            demo.compare(
                "individual alpha minimals agree between the two doors",
                json!(true),
                json!(single_alpha(&g) == single_alpha(&other)),
            )?;
        }
        DemoName::AppendixA => {
            let nf = scenarios::appendix_a();
            demo.frame(FrameFile::Actual(nf.clone()))?;
            for r in check_ac_representative(&nf) {
                demo.compare(r.condition, json!(true), json!(r.holds))?;
            }
            demo.compare(
                "stit_independent",
                json!(true),
                json!(check_stit_independent(&nf).holds),
            )?;
            let [_, independent, _] = ac_class_reports(&nf);
            demo.compare("ac_independent", json!(false), json!(independent.holds))?;
            let space = nf.space();
            let witness = independent
                .witnesses
                .first()
                .map(|w| family_json(space, w.sets.iter().copied()));
            demo.compare(
                "ac_independent witness sets",
                names(&[&["t1", "t2"], &["t2", "t3"]]),
                witness.unwrap_or(Value::Null),
            )?;
        }
        DemoName::AppendixC => {
            let nf = scenarios::appendix_c();
            demo.frame(FrameFile::Actual(nf.clone()))?;
            let g = synthesize_actual(&nf)?;
            let s = nf.space().index_of("s").expect("input state");
            demo.compare(
                "a-actions at s",
                json!(6),
                json!(g.expand_indexed(Coalition::single(0), s).len()),
            )?;
            demo.compare(
                "b-actions at s",
                json!(6),
                json!(g.expand_indexed(Coalition::single(1), s).len()),
            )?;
            demo.compare("grand pairs at s", json!(36), json!(g.grand_entries(s).len()))?;
            let induced = induce_actual(&g);
            demo.compare(
                "induced actual powers of a,b at s",
                names(&[&["u"], &["v"]]),
                family_json(nf.space(), induced.get(nf.agents().grand(), s).iter()),
            )?;
            demo.compare("re-induced frame equals input", json!(true), json!(induced == nf))?;
        }
    }
    let all_match = demo.all_match;
    emit(demo.out, json!({"record": "demo", "all_match": all_match}))?;
    Ok(if all_match { 0 } else { 1 })
}

fn cmd_generate(
    kind: GenKind,
    seed: u64,
    states: usize,
    actions: usize,
    flags: ClassFlags,
    target: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let frame = match kind {
        GenKind::Gcgf => FrameFile::Gcgf(gen_random_gcgf(states, actions, flags, seed)?),
        GenKind::Actual => FrameFile::Actual(gen_random_actual_nf(states, actions, flags, seed)?),
        GenKind::Alpha => FrameFile::Alpha(induce_alpha(&gen_random_gcgf(states, actions, flags, seed)?)),
    };
    let text = frame_to_json(&frame);
    match target {
        Some(p) => {
            write_file(p, &text)?;
            emit(
                out,
                json!({"record": "generated", "kind": frame.kind(), "seed": seed, "out": p.display().to_string()}),
            )?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(0)
}
