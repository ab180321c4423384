//! Bud generating systems: grammars over colored multi-patterns, with
//! three seeded random generation algorithms and replayable traces.

mod generate;
mod rng;
mod system;
mod trace;

pub use generate::{
    generate, generate_colored, generate_full, generate_partial, replay, replay_colored,
    replay_full, replay_partial,
};
pub use rng::{RandomSource, ALGORITHM};
pub use system::{demo_system, BudGeneratingSystem, Rule};
pub use trace::{FullStep, GenerationTrace, Mode, PartialStep, TraceSteps};
