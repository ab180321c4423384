//! Algebra of composable musical patterns.
//!
//! The central object is the [`MultiPattern`]: a stack of `m` synchronized
//! voices, each a word over rests and scale degrees. Multi-patterns of a
//! fixed voice count form a nonsymmetric operad: a pattern with `n` degrees
//! is an operator with `n` input slots, and grafting a pattern into a slot
//! splices its music in place of that beat, transposed by the replaced
//! degree. On top of this sit:
//!
//! - [`colored`]: colored multi-patterns, whose input and output colors
//!   restrict which graftings are allowed (the bud construction);
//! - [`budgen`]: bud generating systems, grammar-like rule sets driving
//!   three seeded random generation algorithms with replayable traces;
//! - [`variations`]: ready-made systems that temporize, re-rhythm,
//!   harmonize, or arpeggiate a single input pattern;
//! - [`render`]: interpretation of multi-patterns as timed note events
//!   under a rooted scale, with ABC text and JSON event export.

pub mod budgen;
pub mod colored;
mod error;
pub mod patterns;
pub mod render;
pub mod text;
pub mod variations;

pub use error::{Error, Result};
pub use patterns::{
    CompositionTree, Degree, DegreePattern, Dilation, DurationSequence, MultiPattern, Pattern,
    RhythmPattern, RhythmSymbol, Token,
};
