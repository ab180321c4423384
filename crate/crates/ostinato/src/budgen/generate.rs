//! The three random generation algorithms and their forced-choice
//! replays.
//!
//! All three start from the system's colored unit and run exactly `k`
//! iterations, applying at most one batch of rules per iteration:
//!
//! - slot-by-slot ([`generate_partial`]): draw a slot uniformly, then a
//!   rule among those matching the slot's color; an empty candidate set
//!   consumes the iteration as a skip;
//! - simultaneous ([`generate_full`]): when every slot has at least one
//!   matching rule, draw one per slot (left to right) and graft them all
//!   at once, keeping all derivation branches at equal depth;
//! - matching ([`generate_colored`]): draw any rule and graft copies of
//!   it onto every slot of matching color.
//!
//! Each run returns the pruned result together with a [`GenerationTrace`]
//! that replays to the same output through the `replay_*` functions.

use crate::budgen::{
    BudGeneratingSystem, FullStep, GenerationTrace, Mode, PartialStep, RandomSource, TraceSteps,
};
use crate::colored::ColoredMultiPattern;
use crate::error::{Error, Result};
use crate::patterns::MultiPattern;

/// Runs the slot-by-slot algorithm for `k` iterations.
pub fn generate_partial(
    system: &BudGeneratingSystem,
    k: usize,
    rng: &mut RandomSource,
) -> Result<(MultiPattern, GenerationTrace)> {
    let mut state = system.start();
    let mut steps = Vec::with_capacity(k);
    for _ in 0..k {
        if state.arity() == 0 {
            // No slot left to draw; the iteration is still consumed.
            steps.push(PartialStep::Skip);
            continue;
        }
        let slot = rng.pick(state.arity()) + 1;
        let candidates = system.rules_for(&state.inputs()[slot - 1])?;
        if candidates.is_empty() {
            steps.push(PartialStep::Skip);
            continue;
        }
        let rule = rng.choose(&candidates);
        state = state.compose(slot, &rule.pattern)?;
        steps.push(PartialStep::Apply {
            position: slot,
            rule: rule.name.clone(),
        });
    }
    Ok((
        state.prune(),
        GenerationTrace {
            steps: TraceSteps::Partial(steps),
            seed: Some(rng.seed()),
        },
    ))
}

/// Runs the simultaneous algorithm for `k` iterations.
pub fn generate_full(
    system: &BudGeneratingSystem,
    k: usize,
    rng: &mut RandomSource,
) -> Result<(MultiPattern, GenerationTrace)> {
    let mut state = system.start();
    let mut steps = Vec::with_capacity(k);
    for _ in 0..k {
        // The guard is decided before any draw: one iteration either
        // draws a full tuple or nothing at all.
        let mut candidates = Vec::with_capacity(state.arity());
        for input in state.inputs() {
            candidates.push(system.rules_for(input)?);
        }
        if candidates.iter().any(Vec::is_empty) {
            steps.push(FullStep::Skip);
            continue;
        }
        let chosen: Vec<_> = candidates.iter().map(|rules| *rng.choose(rules)).collect();
        let operands: Vec<_> = chosen.iter().map(|rule| rule.pattern.clone()).collect();
        state = state.compose_all(&operands)?;
        steps.push(FullStep::Apply {
            rules: chosen.iter().map(|rule| rule.name.clone()).collect(),
        });
    }
    Ok((
        state.prune(),
        GenerationTrace {
            steps: TraceSteps::Full(steps),
            seed: Some(rng.seed()),
        },
    ))
}

/// Runs the matching algorithm for `k` iterations.
pub fn generate_colored(
    system: &BudGeneratingSystem,
    k: usize,
    rng: &mut RandomSource,
) -> Result<(MultiPattern, GenerationTrace)> {
    let mut state = system.start();
    let mut steps = Vec::with_capacity(k);
    if !system.rules().is_empty() {
        for _ in 0..k {
            let rule = rng.choose(system.rules());
            state = state.graft_matching(&rule.pattern)?;
            steps.push(rule.name.clone());
        }
    }
    Ok((
        state.prune(),
        GenerationTrace {
            steps: TraceSteps::Colored(steps),
            seed: Some(rng.seed()),
        },
    ))
}

fn rule_pattern<'a>(
    system: &'a BudGeneratingSystem,
    name: &str,
    step: usize,
) -> Result<&'a ColoredMultiPattern> {
    system
        .rule_named(name)
        .map(|rule| &rule.pattern)
        .ok_or_else(|| Error::InvalidTrace {
            step,
            reason: format!("unknown rule {name}"),
        })
}

fn step_error(step: usize) -> impl FnOnce(Error) -> Error {
    move |error| Error::InvalidTrace {
        step,
        reason: error.to_string(),
    }
}

/// Replays slot-by-slot steps (forced choices) from the starting unit.
pub fn replay_partial(
    system: &BudGeneratingSystem,
    steps: &[PartialStep],
) -> Result<ColoredMultiPattern> {
    let mut state = system.start();
    for (index, step) in steps.iter().enumerate() {
        if let PartialStep::Apply { position, rule } = step {
            let pattern = rule_pattern(system, rule, index + 1)?;
            state = state
                .compose(*position, pattern)
                .map_err(step_error(index + 1))?;
        }
    }
    Ok(state)
}

/// Replays simultaneous steps (forced choices) from the starting unit.
pub fn replay_full(
    system: &BudGeneratingSystem,
    steps: &[FullStep],
) -> Result<ColoredMultiPattern> {
    let mut state = system.start();
    for (index, step) in steps.iter().enumerate() {
        if let FullStep::Apply { rules } = step {
            let operands = rules
                .iter()
                .map(|name| rule_pattern(system, name, index + 1).cloned())
                .collect::<Result<Vec<_>>>()?;
            state = state
                .compose_all(&operands)
                .map_err(step_error(index + 1))?;
        }
    }
    Ok(state)
}

/// Replays matching-mode steps (forced choices) from the starting unit.
pub fn replay_colored(
    system: &BudGeneratingSystem,
    rules: &[String],
) -> Result<ColoredMultiPattern> {
    let mut state = system.start();
    for (index, name) in rules.iter().enumerate() {
        let pattern = rule_pattern(system, name, index + 1)?;
        state = state
            .graft_matching(pattern)
            .map_err(step_error(index + 1))?;
    }
    Ok(state)
}

/// Replays a whole trace and returns the pruned result.
pub fn replay(system: &BudGeneratingSystem, trace: &GenerationTrace) -> Result<MultiPattern> {
    let state = match &trace.steps {
        TraceSteps::Partial(steps) => replay_partial(system, steps)?,
        TraceSteps::Full(steps) => replay_full(system, steps)?,
        TraceSteps::Colored(rules) => replay_colored(system, rules)?,
    };
    Ok(state.prune())
}

/// Convenience dispatch over the three generators.
pub fn generate(
    system: &BudGeneratingSystem,
    mode: Mode,
    k: usize,
    rng: &mut RandomSource,
) -> Result<(MultiPattern, GenerationTrace)> {
    match mode {
        Mode::Partial => generate_partial(system, k, rng),
        Mode::Full => generate_full(system, k, rng),
        Mode::Colored => generate_colored(system, k, rng),
    }
}
