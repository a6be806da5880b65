//! Finite general concurrent game frames with two kinds of coalitional
//! effectivity, the structural conditions on neighborhood frames, and the
//! constructions that realize representative frames as two-agent games.

pub mod agents;
pub mod checkers;
pub mod cli;
pub mod effectivity;
mod error;
pub mod exhaust;
pub mod extensive;
pub mod family;
pub mod format;
pub mod frame;
pub mod genenum;
pub mod local;
pub mod scenarios;
pub mod space;
pub mod synth;

pub use agents::{AgentSet, Coalition, JointAction};
pub use error::ModelError;
pub use family::{PowerFamily, UpsetFamily};
pub use frame::{ActualNF, AlphaNF, CanonicalGcgf, ClassFlags, RawActionFrame};
pub use space::{StateSet, StateSpace};
