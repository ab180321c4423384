//! The pattern operads: degree patterns, rhythm patterns, monophonic
//! patterns, and `m`-voice multi-patterns.
//!
//! Each type carries a partial composition `compose(slot, other)` that
//! grafts `other` into the given input slot (slots are numbered from 1),
//! and the four of them satisfy the operad axioms: sequential and parallel
//! associativity plus a two-sided unit. Multi-pattern composition is the
//! voice-wise product of the monophonic one, restricted to stacks whose
//! voices share one length.

mod decompose;
mod degree;
mod multi;
mod pattern;
mod rhythm;
mod tree;

pub use decompose::generators;
pub use degree::{Degree, DegreePattern};
pub use multi::{Dilation, MultiPattern};
pub use pattern::{Pattern, Token};
pub use rhythm::{DurationSequence, RhythmPattern, RhythmSymbol};
pub use tree::CompositionTree;
