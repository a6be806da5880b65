//! JSON encoding of frames.
//!
//! Every document has `"agents"` and `"states"` and exactly one body:
//!
//! - `"grand_out"`: `{state: {action-tuple: [states]}}`, a canonical GCGF,
//!   optionally with `"actions"` listing every action identifier;
//! - `"actual_nbhd"`: `{coalition: {state: [[states]]}}`;
//! - `"alpha_minimals"`: `{coalition: {state: [[states]]}}`, the minimal
//!   members of each neighborhood;
//! - `"av"` and `"out"` together, an action frame listed for every coalition:
//!   `"av"` is `{coalition: {state: [action-tuple]}}` and `"out"` is
//!   `{coalition: {state: {action-tuple: [states]}}}`.
//!
//! Coalitions are comma-joined agent names (`""` for the empty coalition);
//! action tuples are comma-joined actions in agent order.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::agents::{AgentSet, Coalition, JointAction};
use crate::family::{PowerFamily, UpsetFamily};
use crate::frame::{valid_action_name, ActualNF, AlphaNF, CanonicalGcgf, RawActionFrame};
use crate::space::{StateSet, StateSpace};
use crate::ModelError;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("{0}")]
    Schema(String),
}

/// Any frame a document can hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrameFile {
    Gcgf(CanonicalGcgf),
    Raw(RawActionFrame),
    Actual(ActualNF),
    Alpha(AlphaNF),
}

impl FrameFile {
    /// `gcgf`, `raw`, `actual` or `alpha`.
    pub fn kind(&self) -> &'static str {
        match self {
            FrameFile::Gcgf(_) => "gcgf",
            FrameFile::Raw(_) => "raw",
            FrameFile::Actual(_) => "actual",
            FrameFile::Alpha(_) => "alpha",
        }
    }
}

type Sets = Vec<Vec<String>>;
type ByState<T> = IndexMap<String, T>;
type ByCoalition<T> = IndexMap<String, ByState<T>>;

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    agents: Vec<String>,
    states: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    actions: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    grand_out: Option<ByState<IndexMap<String, Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    actual_nbhd: Option<ByCoalition<Sets>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alpha_minimals: Option<ByCoalition<Sets>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    av: Option<ByCoalition<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    out: Option<ByCoalition<IndexMap<String, Vec<String>>>>,
}

fn set_of(space: &StateSpace, names: &[String]) -> Result<StateSet, FormatError> {
    Ok(space.set_of(names)?)
}

fn names(space: &StateSpace, set: StateSet) -> Vec<String> {
    space.names_of(set).into_iter().map(str::to_string).collect()
}

fn state_of(space: &StateSpace, name: &str) -> Result<usize, FormatError> {
    Ok(space.index_of(name)?)
}

fn actions_of_tuple(text: &str) -> impl Iterator<Item = &str> {
    text.split(',').filter(|a| !a.is_empty())
}

/// Parses a frame document.
pub fn parse_frame(text: &str) -> Result<FrameFile, FormatError> {
    let doc: Document = serde_json::from_str(text)?;
    let space = StateSpace::new(doc.states.iter().cloned())?;
    let agents = AgentSet::new(doc.agents.iter().cloned())?;
    let bodies = [
        doc.grand_out.is_some(),
        doc.actual_nbhd.is_some(),
        doc.alpha_minimals.is_some(),
        doc.av.is_some() || doc.out.is_some(),
    ];
    if bodies.iter().filter(|b| **b).count() != 1 {
        return Err(FormatError::Schema(
            "expected exactly one of grand_out, actual_nbhd, alpha_minimals, or av with out".into(),
        ));
    }
    if doc.actions.is_some() && doc.grand_out.is_none() && doc.av.is_none() && doc.out.is_none() {
        return Err(FormatError::Schema("actions only accompany grand_out or av/out".into()));
    }
    if let Some(body) = doc.grand_out {
        let mut entries = Vec::new();
        let mut actions: Vec<String> = doc.actions.unwrap_or_default();
        for (state, outcomes) in &body {
            let s = state_of(&space, state)?;
            for (tuple, out) in outcomes {
                let sigma = JointAction::parse(agents.grand(), tuple)?;
                actions.extend(sigma.actions().iter().cloned());
                entries.push((s, sigma, set_of(&space, out)?));
            }
        }
        return Ok(FrameFile::Gcgf(CanonicalGcgf::new(space, agents, actions, entries)?));
    }
    if let Some(body) = doc.actual_nbhd {
        let mut nf = ActualNF::new(space.clone(), agents.clone());
        for (coalition, by_state) in &body {
            let c = agents.parse_coalition(coalition)?;
            for (state, sets) in by_state {
                let family = sets
                    .iter()
                    .map(|x| set_of(&space, x))
                    .collect::<Result<PowerFamily, _>>()?;
                nf.set(c, state_of(&space, state)?, family)?;
            }
        }
        return Ok(FrameFile::Actual(nf));
    }
    if let Some(body) = doc.alpha_minimals {
        let mut nf = AlphaNF::new(space.clone(), agents.clone());
        for (coalition, by_state) in &body {
            let c = agents.parse_coalition(coalition)?;
            for (state, sets) in by_state {
                let minimals = sets.iter().map(|x| set_of(&space, x)).collect::<Result<Vec<_>, _>>()?;
                nf.set(c, state_of(&space, state)?, UpsetFamily::from_minimals(minimals)?)?;
            }
        }
        return Ok(FrameFile::Alpha(nf));
    }
    let av = doc.av.unwrap_or_default();
    let out = doc.out.unwrap_or_default();
    let mut actions: Vec<String> = doc.actions.unwrap_or_default();
    for tuple in av.values().flat_map(|m| m.values().flatten()) {
        actions.extend(actions_of_tuple(tuple).map(str::to_string));
    }
    for tuple in out.values().flat_map(|m| m.values().flat_map(|o| o.keys())) {
        actions.extend(actions_of_tuple(tuple).map(str::to_string));
    }
    if let Some(bad) = actions.iter().find(|a| !valid_action_name(a)) {
        return Err(ModelError::InvalidName(bad.clone()).into());
    }
    let mut raw = RawActionFrame::new(space.clone(), agents.clone(), actions);
    for (coalition, by_state) in &av {
        let c = agents.parse_coalition(coalition)?;
        for (state, tuples) in by_state {
            let listed = tuples
                .iter()
                .map(|t| JointAction::parse(c, t))
                .collect::<Result<Vec<_>, _>>()?;
            raw.set_available(c, state_of(&space, state)?, listed)?;
        }
    }
    for (coalition, by_state) in &out {
        let c = agents.parse_coalition(coalition)?;
        for (state, outcomes) in by_state {
            let s = state_of(&space, state)?;
            for (tuple, o) in outcomes {
                raw.set_outcome(s, JointAction::parse(c, tuple)?, set_of(&space, o)?)?;
            }
        }
    }
    Ok(FrameFile::Raw(raw))
}

fn header(space: &StateSpace, agents: &AgentSet) -> Document {
    Document {
        agents: agents.names().to_vec(),
        states: space.names().to_vec(),
        ..Default::default()
    }
}

fn render(doc: &Document) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents always serialize");
    text.push('\n');
    text
}

/// Borrowed view serializing a GCGF in document layout without copying it.
struct GcgfDocument<'a>(&'a CanonicalGcgf);

struct GrandOut<'a>(&'a CanonicalGcgf);

struct Outcomes<'a>(&'a CanonicalGcgf, usize);

struct Names<'a>(&'a StateSpace, StateSet);

impl Serialize for GcgfDocument<'_> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let g = self.0;
        let mut doc = serializer.serialize_struct("Document", 4)?;
        doc.serialize_field("agents", g.agents().names())?;
        doc.serialize_field("states", g.space().names())?;
        doc.serialize_field("actions", g.actions())?;
        doc.serialize_field("grand_out", &GrandOut(g))?;
        doc.end()
    }
}

impl Serialize for GrandOut<'_> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let g = self.0;
        serializer.collect_map(g.space().states().map(|s| (g.space().name(s), Outcomes(g, s))))
    }
}

impl Serialize for Outcomes<'_> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let Outcomes(g, s) = *self;
        let mut key = String::new();
        let mut map = serializer.serialize_map(Some(g.grand_entries(s).len()))?;
        use serde::ser::SerializeMap;
        for (tuple, out) in g.grand_entries(s) {
            key.clear();
            for (k, &i) in tuple.iter().enumerate() {
                if k > 0 {
                    key.push(',');
                }
                key.push_str(g.action_name(i));
            }
            map.serialize_entry(&key, &Names(g.space(), *out))?;
        }
        map.end()
    }
}

impl Serialize for Names<'_> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.1.iter().map(|t| self.0.name(t)))
    }
}

/// Encodes a canonical GCGF, listing its actions.
pub fn gcgf_to_json(g: &CanonicalGcgf) -> String {
    let mut bytes = Vec::new();
    write_gcgf_json(g, &mut bytes).expect("writing to memory");
    String::from_utf8(bytes).expect("JSON is UTF-8")
}

/// Streams the encoding of [`gcgf_to_json`] into `w`.
pub fn write_gcgf_json<W: std::io::Write>(g: &CanonicalGcgf, mut w: W) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut w, &GcgfDocument(g))?;
    w.write_all(b"\n")
}

fn families<F>(space: &StateSpace, agents: &AgentSet, mut family: F) -> ByCoalition<Sets>
where
    F: FnMut(Coalition, usize) -> Vec<StateSet>,
{
    agents
        .coalitions()
        .map(|c| {
            let by_state = space
                .states()
                .map(|s| {
                    let sets = family(c, s).into_iter().map(|x| names(space, x)).collect();
                    (space.name(s).to_string(), sets)
                })
                .collect();
            (agents.render(c), by_state)
        })
        .collect()
}

/// Encodes an actual neighborhood frame.
pub fn actual_to_json(nf: &ActualNF) -> String {
    let mut doc = header(nf.space(), nf.agents());
    doc.actual_nbhd = Some(families(nf.space(), nf.agents(), |c, s| nf.get(c, s).iter().collect()));
    render(&doc)
}

/// Encodes an alpha neighborhood frame by its minimal members.
pub fn alpha_to_json(nf: &AlphaNF) -> String {
    let mut doc = header(nf.space(), nf.agents());
    doc.alpha_minimals = Some(families(nf.space(), nf.agents(), |c, s| {
        nf.get(c, s).minimals().to_vec()
    }));
    render(&doc)
}

/// Encodes an action frame with every listed entry.
pub fn raw_to_json(raw: &RawActionFrame) -> String {
    let space = raw.space();
    let agents = raw.agents();
    let mut doc = header(space, agents);
    doc.actions = Some(raw.actions().iter().cloned().collect());
    let mut av: ByCoalition<Vec<String>> = IndexMap::new();
    let mut out: ByCoalition<IndexMap<String, Vec<String>>> = IndexMap::new();
    for c in agents.coalitions() {
        let key = agents.render(c);
        let mut av_c = IndexMap::new();
        let mut out_c = IndexMap::new();
        for s in space.states() {
            let listed: Vec<String> = raw.available(c, s).iter().map(JointAction::render).collect();
            if !listed.is_empty() {
                av_c.insert(space.name(s).to_string(), listed);
            }
            let outcomes: IndexMap<String, Vec<String>> = raw
                .listed_outcomes(c, s)
                .map(|(sigma, o)| (sigma.render(), names(space, o)))
                .collect();
            if !outcomes.is_empty() {
                out_c.insert(space.name(s).to_string(), outcomes);
            }
        }
        av.insert(key.clone(), av_c);
        out.insert(key, out_c);
    }
    doc.av = Some(av);
    doc.out = Some(out);
    render(&doc)
}

/// Encodes any frame.
pub fn frame_to_json(frame: &FrameFile) -> String {
    match frame {
        FrameFile::Gcgf(g) => gcgf_to_json(g),
        FrameFile::Raw(raw) => raw_to_json(raw),
        FrameFile::Actual(nf) => actual_to_json(nf),
        FrameFile::Alpha(nf) => alpha_to_json(nf),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::effectivity::{induce_actual, induce_alpha};
    use crate::scenarios;

    fn round_trip(frame: FrameFile) {
        let text = frame_to_json(&frame);
        assert_eq!(parse_frame(&text).unwrap(), frame, "{text}");
    }

    #[test]
    fn frames_round_trip() {
        let g = scenarios::heavy_door();
        round_trip(FrameFile::Actual(induce_actual(&g)));
        round_trip(FrameFile::Alpha(induce_alpha(&g)));
        round_trip(FrameFile::Raw(scenarios::heavy_door_raw()));
        round_trip(FrameFile::Actual(scenarios::appendix_a()));
        round_trip(FrameFile::Gcgf(g));
    }

    #[test]
    fn heavy_door_document() {
        let text = r#"{
            "agents": ["a", "b"],
            "states": ["w1", "w2"],
            "grand_out": {
                "w1": {"push,push": ["w2"], "push,rest": ["w1"], "rest,push": ["w1"], "rest,rest": ["w1"]},
                "w2": {"push,push": ["w2"], "push,rest": ["w2"], "rest,push": ["w2"], "rest,rest": ["w2"]}
            }
        }"#;
        assert_eq!(parse_frame(text).unwrap(), FrameFile::Gcgf(scenarios::heavy_door()));
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!(parse_frame("{"), Err(FormatError::Json(_))));
        let both = r#"{"agents": ["a"], "states": ["s"], "grand_out": {}, "actual_nbhd": {}}"#;
        assert!(matches!(parse_frame(both), Err(FormatError::Schema(_))));
        let none = r#"{"agents": ["a"], "states": ["s"]}"#;
        assert!(matches!(parse_frame(none), Err(FormatError::Schema(_))));
        let unknown = r#"{"agents": ["a"], "states": ["s"], "actual_nbhd": {"z": {}}}"#;
        assert!(matches!(
            parse_frame(unknown),
            Err(FormatError::Model(ModelError::UnknownAgent(_)))
        ));
        let extra = r#"{"agents": ["a"], "states": ["s"], "actual_nbhd": {}, "colour": 1}"#;
        assert!(matches!(parse_frame(extra), Err(FormatError::Json(_))));
        let chain = r#"{"agents": ["a"], "states": ["s", "t"], "alpha_minimals": {"a": {"s": [["s"], ["s", "t"]]}}}"#;
        assert!(matches!(
            parse_frame(chain),
            Err(FormatError::Model(ModelError::NotAnAntichain))
        ));
    }

    #[test]
    fn unused_actions_survive() {
        let g = crate::genenum::gen_random_gcgf(2, 3, crate::frame::ClassFlags::NONE, 1).unwrap();
        round_trip(FrameFile::Gcgf(g));
    }
}
