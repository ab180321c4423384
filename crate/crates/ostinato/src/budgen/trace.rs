use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One iteration of the slot-by-slot generation mode: either a graft of a
/// named rule at a 1-based slot, or a consumed iteration that applied
/// nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartialStep {
    Skip,
    Apply { position: usize, rule: String },
}

/// One iteration of the simultaneous generation mode: a tuple with one
/// rule name per slot (possibly empty for an arity-0 state), or a skip
/// when some slot had no applicable rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FullStep {
    Skip,
    Apply { rules: Vec<String> },
}

/// The generation mode a trace was recorded under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Partial,
    Full,
    Colored,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Partial => "partial",
            Mode::Full => "full",
            Mode::Colored => "colored",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(text: &str) -> Result<Mode> {
        match text {
            "partial" => Ok(Mode::Partial),
            "full" => Ok(Mode::Full),
            "colored" => Ok(Mode::Colored),
            other => Err(Error::Parse(format!("unknown mode {other}"))),
        }
    }
}

/// The per-mode step sequences of a trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", content = "steps", rename_all = "lowercase")]
pub enum TraceSteps {
    Partial(Vec<PartialStep>),
    Full(Vec<FullStep>),
    Colored(Vec<String>),
}

/// A complete record of one generation run. Replaying the steps from the
/// system's starting unit reproduces the reported output exactly, so a
/// trace doubles as a machine-checkable derivation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationTrace {
    #[serde(flatten)]
    pub steps: TraceSteps,
    /// Seed of the random source, when the run was randomized; absent for
    /// forced-choice replays.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl GenerationTrace {
    pub fn mode(&self) -> Mode {
        match self.steps {
            TraceSteps::Partial(_) => Mode::Partial,
            TraceSteps::Full(_) => Mode::Full,
            TraceSteps::Colored(_) => Mode::Colored,
        }
    }

    /// Number of iterations the trace records, skips included.
    pub fn step_count(&self) -> usize {
        match &self.steps {
            TraceSteps::Partial(steps) => steps.len(),
            TraceSteps::Full(steps) => steps.len(),
            TraceSteps::Colored(steps) => steps.len(),
        }
    }

    /// Number of iterations that actually applied rules.
    pub fn applied_count(&self) -> usize {
        match &self.steps {
            TraceSteps::Partial(steps) => steps
                .iter()
                .filter(|s| matches!(s, PartialStep::Apply { .. }))
                .count(),
            TraceSteps::Full(steps) => steps
                .iter()
                .filter(|s| matches!(s, FullStep::Apply { .. }))
                .count(),
            TraceSteps::Colored(steps) => steps.len(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("serializable");
        text.push('\n');
        text
    }
}

// Wire form: an applied step is an object, a skip is the string "skip".

impl Serialize for PartialStep {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PartialStep::Skip => serializer.serialize_str("skip"),
            PartialStep::Apply { position, rule } => {
                use serde::ser::SerializeStruct;
                let mut state = serializer.serialize_struct("PartialStep", 2)?;
                state.serialize_field("position", position)?;
                state.serialize_field("rule", rule)?;
                state.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for PartialStep {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Apply { position: usize, rule: String },
            Word(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Apply { position, rule } => Ok(PartialStep::Apply { position, rule }),
            Repr::Word(word) if word == "skip" => Ok(PartialStep::Skip),
            Repr::Word(word) => Err(serde::de::Error::custom(format!(
                "expected \"skip\" or an applied step, found {word:?}"
            ))),
        }
    }
}

impl Serialize for FullStep {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FullStep::Skip => serializer.serialize_str("skip"),
            FullStep::Apply { rules } => {
                use serde::ser::SerializeStruct;
                let mut state = serializer.serialize_struct("FullStep", 1)?;
                state.serialize_field("rules", rules)?;
                state.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for FullStep {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Apply { rules: Vec<String> },
            Word(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Apply { rules } => Ok(FullStep::Apply { rules }),
            Repr::Word(word) if word == "skip" => Ok(FullStep::Skip),
            Repr::Word(word) => Err(serde::de::Error::custom(format!(
                "expected \"skip\" or an applied step, found {word:?}"
            ))),
        }
    }
}
