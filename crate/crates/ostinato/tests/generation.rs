//! Integration tests for the generation pipeline: forced derivation
//! chains with every intermediate state pinned, trace soundness on random
//! runs, cross-mode equivalences, and reachability witnesses for the
//! variation builders.

use ostinato::budgen::{
    demo_system, generate, generate_colored, generate_full, generate_partial, replay,
    replay_colored, replay_full, replay_partial, FullStep, GenerationTrace, Mode, PartialStep,
    RandomSource, TraceSteps,
};
use ostinato::colored::{Color, ColoredMultiPattern};
use ostinato::text::{parse_colored, parse_degree_pattern, parse_pattern, parse_rhythm_pattern};
use ostinato::variations::{
    build_arpeggiator, build_harmonizator, build_rhythmic, build_temporizator,
};

fn cmp(text: &str) -> ColoredMultiPattern {
    parse_colored(text).unwrap()
}

fn partial_apply(position: usize, rule: &str) -> PartialStep {
    PartialStep::Apply {
        position,
        rule: rule.into(),
    }
}

fn full_apply(rules: &[&str]) -> FullStep {
    FullStep::Apply {
        rules: rules.iter().map(|r| r.to_string()).collect(),
    }
}

// --- forced derivation chains, every intermediate pinned -----------------

#[test]
fn slot_by_slot_chain_reproduces_every_intermediate() {
    let system = demo_system();
    let steps = [
        partial_apply(1, "c2"),
        partial_apply(2, "c1"),
        partial_apply(3, "c4"),
    ];
    let expected = [
        "b1 | 1 . 0 ; 0 . 1 | b1 b1",
        "b1 | 1 . 0 2 . 1 . 0 4 ; 0 . -4 . . 1 1 1 1 | b1 b3 b2 b1 b1 b3",
        "b1 | 1 . 0 2 2 . 1 . 0 4 ; 0 . -4 . . 1 1 1 1 1 | b1 b3 b1 b1 b1 b1 b3",
    ];
    for (count, want) in expected.iter().enumerate() {
        let state = replay_partial(&system, &steps[..=count]).unwrap();
        assert_eq!(state, cmp(want), "after {} step(s)", count + 1);
    }
}

#[test]
fn simultaneous_chain_reproduces_every_intermediate() {
    let system = demo_system();
    let steps = [
        full_apply(&["c1"]),
        full_apply(&["c5", "c3", "c2", "c1", "c5"]),
    ];
    let after_one = replay_full(&system, &steps[..1]).unwrap();
    assert_eq!(
        after_one,
        cmp("b1 | 0 2 . 1 . 0 4 ; -5 . . 0 0 0 0 | b3 b2 b1 b1 b3")
    );
    let after_two = replay_full(&system, &steps).unwrap();
    assert_eq!(
        after_two,
        cmp("b1 | 0 1 . 2 . 1 . 0 2 . 1 . 0 4 4 ; \
                  -5 . . -1 0 . 1 -5 . . 0 0 0 0 0 | \
             b3 b1 b1 b1 b3 b2 b1 b1 b3 b3")
    );
}

#[test]
fn matching_chain_reproduces_every_intermediate() {
    let system = demo_system();
    let rules: Vec<String> = ["c1", "c2", "c3"].map(String::from).to_vec();
    let expected = [
        "b1 | 0 2 . 1 . 0 4 ; -5 . . 0 0 0 0 | b3 b2 b1 b1 b3",
        "b1 | 0 2 . 2 . 1 . 1 . 0 4 ; -5 . . 0 0 . 1 0 . 1 0 | b3 b2 b1 b1 b1 b1 b3",
        "b1 | 0 1 . 2 . 1 . 1 . 0 4 ; -5 . . -1 0 . 1 0 . 1 0 | b3 b1 b1 b1 b1 b1 b3",
    ];
    for (count, want) in expected.iter().enumerate() {
        let state = replay_colored(&system, &rules[..=count]).unwrap();
        assert_eq!(state, cmp(want), "after {} rule(s)", count + 1);
    }
}

// --- trace soundness on random runs ---------------------------------------

/// Iteration budgets per mode; the simultaneous and matching modes grow
/// the state exponentially in the iteration count.
fn drawn_k(mode: Mode, rng: &mut RandomSource) -> usize {
    match mode {
        Mode::Partial => rng.pick(31),
        Mode::Full => rng.pick(5),
        Mode::Colored => rng.pick(7),
    }
}

#[test]
fn random_runs_replay_exactly_over_all_systems() {
    let base = parse_pattern("0 2 . 1 . 0 4").unwrap();
    let chord = parse_degree_pattern("0 5 -7").unwrap();
    let systems = [
        demo_system(),
        build_temporizator(&base, 2).unwrap(),
        build_rhythmic(&base, &parse_rhythm_pattern("xx.x.").unwrap()).unwrap(),
        build_harmonizator(&base, &chord).unwrap(),
        build_arpeggiator(&base, &chord).unwrap(),
    ];
    let mut meta = RandomSource::new(20260808);
    for run in 0..60 {
        let system = &systems[run % systems.len()];
        let mode = [Mode::Partial, Mode::Full, Mode::Colored][meta.pick(3)];
        let k = drawn_k(mode, &mut meta);
        let seed = meta.next_u64();

        let (result, trace) = generate(system, mode, k, &mut RandomSource::new(seed)).unwrap();
        assert_eq!(trace.seed, Some(seed));
        assert!(trace.step_count() <= k);
        assert!(trace.applied_count() <= k);
        assert_eq!(
            replay(system, &trace).unwrap(),
            result,
            "mode {mode:?} seed {seed}"
        );

        // The file form round-trips and replays identically.
        let reloaded = GenerationTrace::from_json(&trace.to_json()).unwrap();
        assert_eq!(replay(system, &reloaded).unwrap(), result);
    }
}

#[test]
fn intermediate_states_stay_within_the_color_set() {
    let system = demo_system();
    let colors: Vec<Color> = system.colors().cloned().collect();
    let (_, trace) = generate_partial(&system, 25, &mut RandomSource::new(7)).unwrap();
    let TraceSteps::Partial(steps) = &trace.steps else {
        panic!("partial trace expected");
    };
    for count in 0..=steps.len() {
        let state = replay_partial(&system, &steps[..count]).unwrap();
        assert!(colors.contains(state.output()));
        assert!(state.inputs().iter().all(|input| colors.contains(input)));
    }
}

// --- cross-mode equivalences ----------------------------------------------

#[test]
fn one_matching_step_expands_to_a_simultaneous_graft() {
    let system = demo_system();
    let mut rng = RandomSource::new(11);
    for _ in 0..40 {
        let rules: Vec<String> = (0..rng.pick(3))
            .map(|_| system.rules()[rng.pick(system.rules().len())].name.clone())
            .collect();
        let state = replay_colored(&system, &rules).unwrap();
        let rule = &system.rules()[rng.pick(system.rules().len())];

        let direct = state.graft_matching(&rule.pattern).unwrap();
        let operands: Vec<ColoredMultiPattern> = state
            .inputs()
            .iter()
            .map(|input| {
                if input == rule.pattern.output() {
                    rule.pattern.clone()
                } else {
                    ColoredMultiPattern::unit(input.clone(), state.voice_count()).unwrap()
                }
            })
            .collect();
        assert_eq!(state.compose_all(&operands).unwrap(), direct);
    }
}

#[test]
fn one_simultaneous_step_expands_to_right_to_left_slot_steps() {
    let system = demo_system();
    let (_, trace) = generate_full(&system, 3, &mut RandomSource::new(13)).unwrap();
    let TraceSteps::Full(steps) = &trace.steps else {
        panic!("full trace expected");
    };
    let mut state = system.start();
    for step in steps {
        match step {
            FullStep::Skip => {}
            FullStep::Apply { rules } => {
                for (index, name) in rules.iter().enumerate().rev() {
                    let rule = system.rule_named(name).unwrap();
                    state = state.compose(index + 1, &rule.pattern).unwrap();
                }
            }
        }
    }
    assert_eq!(state, replay_full(&system, steps).unwrap());
}

// --- reachability witnesses for the variation builders --------------------

#[test]
fn temporizator_witness_trace() {
    let system = build_temporizator(&parse_pattern("0 2 . 1 . 0 4").unwrap(), 2).unwrap();
    let steps = [
        partial_apply(1, "c1"),
        partial_apply(3, "c2"),
        partial_apply(2, "c4"),
        partial_apply(3, "c3"),
        partial_apply(4, "c4"),
        partial_apply(8, "c4"),
        partial_apply(9, "c3"),
    ];
    let state = replay_partial(&system, &steps).unwrap();
    assert_eq!(
        state.prune().to_string(),
        "0 2 . . . 1 . 3 . . . 2 . 1 5 . 0 . . 4 ."
    );
}

#[test]
fn harmonizator_witness_trace() {
    let system = build_harmonizator(
        &parse_pattern("2 1 0 2 . 1 . 0 .").unwrap(),
        &parse_degree_pattern("0 5 -7").unwrap(),
    )
    .unwrap();
    let steps = [
        partial_apply(1, "c1"),
        partial_apply(2, "c3"),
        partial_apply(3, "c3"),
    ];
    let state = replay_partial(&system, &steps).unwrap();
    assert_eq!(
        state.prune().to_string(),
        "2 1 0 2 . 1 . 0 . ; 2 6 5 2 . 1 . 0 . ; 2 -6 -7 2 . 1 . 0 ."
    );
}

#[test]
fn arpeggiator_witness_trace() {
    let system = build_arpeggiator(
        &parse_pattern("0 . 2 1 3 . 1").unwrap(),
        &parse_degree_pattern("0 2 4").unwrap(),
    )
    .unwrap();
    let steps = [
        partial_apply(1, "c1"),
        partial_apply(2, "c2"),
        partial_apply(1, "c2"),
        partial_apply(3, "c3"),
        partial_apply(10, "c3"),
        partial_apply(11, "c3"),
    ];
    let state = replay_partial(&system, &steps).unwrap();
    assert_eq!(
        state.prune().to_string(),
        "0 . 2 1 . . 3 . 1 . 2 . 4 3 5 . 3 . . 1 . . 3 . 1 ; \
         0 . 2 . 3 . 3 . 1 . 2 . 4 3 5 . . 5 . . 3 . 3 . 1 ; \
         0 . 2 . . 5 3 . 1 . 2 . 4 3 5 . . . 7 . . 5 3 . 1"
    );
}

/// Exhaustive enumeration of every derivation with up to three applied
/// rules: since the dead-end color blocks stretch stacking, no rest run
/// can ever exceed the stretch bound plus the base pattern's longest
/// run.
#[test]
fn temporizator_rest_runs_are_bounded_over_all_small_derivations() {
    let base = parse_pattern("0 2 . 1 . 0 4").unwrap();
    let max_stretch = 2;
    let system = build_temporizator(&base, max_stretch).unwrap();

    let longest_run = |pattern: &ostinato::MultiPattern| {
        let mut longest = 0;
        let mut current = 0;
        for letter in pattern.voices()[0].rhythm().letters() {
            match letter {
                ostinato::RhythmSymbol::Rest => {
                    current += 1;
                    longest = longest.max(current);
                }
                ostinato::RhythmSymbol::Beat => current = 0,
            }
        }
        longest
    };

    let mut frontier = vec![system.start()];
    let mut visited = 0usize;
    for _ in 0..3 {
        let mut next = Vec::new();
        for state in &frontier {
            for slot in 1..=state.arity() {
                for rule in system.rules_for(&state.inputs()[slot - 1]).unwrap() {
                    next.push(state.compose(slot, &rule.pattern).unwrap());
                }
            }
        }
        for state in &next {
            visited += 1;
            assert!(
                longest_run(state.body()) <= max_stretch + 1,
                "run too long in {}",
                state.body()
            );
        }
        frontier = next;
    }
    // 1 + 15 + 255 states at depths one through three.
    assert_eq!(visited, 271);
}

/// In the rhythmic system below, every rule body carries exactly two
/// rests, and grafting only ever adds the grafted body's rests. So the
/// rest count of anything it generates is even, which pins down which
/// words are reachable at all: a 40-letter, 23-degree word (17 rests) is
/// not one of them, whatever the choices.
#[test]
fn rhythmic_outputs_have_even_rest_counts() {
    let base = parse_pattern("1 . 0 1 1 . 2").unwrap();
    let rhythm = parse_rhythm_pattern("xx.x.").unwrap();
    let system = build_rhythmic(&base, &rhythm).unwrap();

    for rule in system.rules() {
        let body = rule.pattern.body();
        assert_eq!(body.len() - body.arity(), 2, "rule {}", rule.name);
    }

    let mut meta = RandomSource::new(404);
    for _ in 0..50 {
        let seed = meta.next_u64();
        let k = meta.pick(25);
        let (result, _) = generate_partial(&system, k, &mut RandomSource::new(seed)).unwrap();
        assert_eq!(result.rest_count(0) % 2, 0);
    }
}

// --- generator behavior around degenerate systems --------------------------

#[test]
fn simultaneous_mode_stalls_once_a_dead_end_color_appears() {
    // After c1, some slots are colored b3 and b3 has no rules: the guard
    // fails on every later iteration, so exactly one step ever applies.
    let system = build_temporizator(&parse_pattern("0 1").unwrap(), 1).unwrap();
    let (result, trace) = generate_full(&system, 6, &mut RandomSource::new(2)).unwrap();
    let applied = trace.applied_count();
    assert!(applied <= 2, "applied {applied}");
    assert!(result.arity() >= 1);
}

#[test]
fn generated_outputs_satisfy_the_voice_invariants() {
    let chord = parse_degree_pattern("0 5 -7").unwrap();
    let system = build_harmonizator(&parse_pattern("2 1 0 2 . 1 . 0 .").unwrap(), &chord).unwrap();
    for seed in 0..30 {
        let (result, _) = generate_partial(&system, 12, &mut RandomSource::new(seed)).unwrap();
        assert_eq!(result.voice_count(), 3);
        for voice in result.voices() {
            assert_eq!(voice.arity(), result.arity());
            assert_eq!(voice.len(), result.len());
        }
    }
}

#[test]
fn colored_generation_from_the_worked_example_seeds() {
    // k = 0 gives the bare unit for every mode.
    let system = demo_system();
    let (result, trace) = generate_colored(&system, 0, &mut RandomSource::new(0)).unwrap();
    assert_eq!(result.to_string(), "0 ; 0");
    assert_eq!(trace.step_count(), 0);
}
