use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A composition slot outside `1..=arity`.
    #[error("slot {slot} out of range: operand has {arity} input(s)")]
    SlotOutOfRange { slot: usize, arity: usize },

    /// Two multi-patterns with different voice counts were combined.
    #[error("voice count mismatch: {left} vs {right}")]
    VoiceCountMismatch { left: usize, right: usize },

    /// A multi-pattern must have at least one voice.
    #[error("a multi-pattern needs at least one voice")]
    NoVoices,

    /// A pattern pairing a degree word and a rhythm word of different arities.
    #[error("pattern arity mismatch: {degrees} degree(s) vs {beats} beat(s)")]
    PatternArityMismatch { degrees: usize, beats: usize },

    /// Voices of a multi-pattern must share one arity and one length.
    #[error(
        "voice {voice} has arity {arity} and length {length}, \
         expected arity {expected_arity} and length {expected_length}"
    )]
    RaggedVoices {
        voice: usize,
        arity: usize,
        length: usize,
        expected_arity: usize,
        expected_length: usize,
    },

    /// Simultaneous grafting got the wrong number of operands.
    #[error("expected {expected} operand(s), found {found}")]
    OperandCount { expected: usize, found: usize },

    /// Degree arithmetic left the representable range.
    #[error("degree arithmetic overflow")]
    DegreeOverflow,

    /// A composition tree node whose child count disagrees with its label.
    #[error("malformed tree: node of arity {arity} has {children} child(ren)")]
    MalformedTree { arity: usize, children: usize },

    /// Input colors of a colored multi-pattern must match the body arity.
    #[error("{inputs} input color(s) for a body of arity {arity}")]
    InputColorCount { inputs: usize, arity: usize },

    /// A forbidden colored composition.
    #[error("color mismatch at slot {slot}: expected {expected}, found {found}")]
    ColorMismatch {
        slot: usize,
        expected: String,
        found: String,
    },

    /// A color that is not part of the system under consideration.
    #[error("unknown color {0}")]
    UnknownColor(String),

    /// An invalid generating system (bad initial color, duplicate rule, ...).
    #[error("invalid generating system: {0}")]
    InvalidSystem(String),

    /// A trace that does not replay against the system it is applied to.
    #[error("invalid trace at step {step}: {reason}")]
    InvalidTrace { step: usize, reason: String },

    /// A variation builder was given unusable parameters.
    #[error("invalid variation parameter: {0}")]
    InvalidParameter(String),

    /// A note step index outside `0..eta`.
    #[error("step {step} out of range for {eta}-tone temperament")]
    StepOutOfRange { step: i64, eta: u32 },

    /// A scale whose parts sum to zero, or with no parts at all.
    #[error("invalid scale: {0}")]
    InvalidScale(String),

    /// A rooted scale pairing a scale and a root of different temperaments.
    #[error("temperament mismatch: scale divides the octave in {scale_eta}, root in {root_eta}")]
    TemperamentMismatch { scale_eta: u32, root_eta: u32 },

    /// ABC output is only defined for the 12-tone temperament.
    #[error("unsupported temperament for ABC output: eta = {0} (only 12 is supported)")]
    UnsupportedTemperament(u32),

    /// A tempo of zero eighths per minute.
    #[error("tempo must be positive")]
    ZeroTempo,

    /// An unreadable token in a textual pattern.
    #[error("bad token {token:?} at row {row}, position {position}")]
    BadToken {
        row: usize,
        position: usize,
        token: String,
    },

    /// Rows of a textual multi-pattern that do not line up.
    #[error("row {row} has arity {arity} and length {length}, expected arity {expected_arity} and length {expected_length}")]
    RaggedRows {
        row: usize,
        arity: usize,
        length: usize,
        expected_arity: usize,
        expected_length: usize,
    },

    /// Any other malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}
