//! Shared proptest strategies for the integration suites.

#![allow(dead_code)]

use proptest::prelude::*;

use ostinato::colored::{Color, ColoredMultiPattern};
use ostinato::patterns::{DegreePattern, MultiPattern, Pattern, RhythmPattern, Token};

/// A pattern as an arbitrary token word; `arity >= min_arity`.
pub fn arb_pattern(min_arity: usize) -> impl Strategy<Value = Pattern> {
    let beat = (-10i64..=10).prop_map(|d| Token::Beat(d.into()));
    let any_token = prop_oneof![Just(Token::Rest), beat.clone()];
    (
        proptest::collection::vec(beat, min_arity..=6),
        proptest::collection::vec(any_token, 0..=6),
    )
        .prop_map(|(mut beats, mut rest)| {
            beats.append(&mut rest);
            Pattern::from_tokens(beats)
        })
}

pub fn arb_dp(min_arity: usize) -> impl Strategy<Value = DegreePattern> {
    proptest::collection::vec(-10i64..=10, min_arity..=8)
        .prop_map(|values| values.into_iter().collect())
}

pub fn arb_rp(min_arity: usize) -> impl Strategy<Value = RhythmPattern> {
    arb_pattern(min_arity).prop_map(|p| p.rhythm().clone())
}

/// `m` voices sharing one arity and one length: each voice places the
/// common number of beats at its own positions.
pub fn arb_mp(m: usize, min_arity: usize) -> impl Strategy<Value = MultiPattern> {
    (min_arity..=4usize, 0..=4usize).prop_flat_map(move |(arity, extra_rests)| {
        let length = arity + extra_rests;
        let voice = (
            proptest::sample::subsequence((0..length).collect::<Vec<_>>(), arity),
            proptest::collection::vec(-10i64..=10, arity),
        )
            .prop_map(move |(positions, degrees)| {
                let mut tokens = vec![Token::Rest; length];
                for (position, degree) in positions.into_iter().zip(degrees) {
                    tokens[position] = Token::Beat(degree.into());
                }
                Pattern::from_tokens(tokens)
            });
        proptest::collection::vec(voice, m..=m)
            .prop_map(|voices| MultiPattern::new(voices).unwrap())
    })
}

/// A slot index for a pattern of the given arity (requires `arity >= 1`).
pub fn slot_in(arity: usize) -> impl Strategy<Value = usize> {
    1..=arity
}

pub fn arb_color() -> impl Strategy<Value = Color> {
    proptest::sample::select(vec!["a", "b", "c"]).prop_map(|name| Color::new(name).unwrap())
}

/// A colored multi-pattern over the colors `a`, `b`, `c`, with the given
/// output color (or a random one).
pub fn arb_colored(
    m: usize,
    min_arity: usize,
    output: Option<Color>,
) -> impl Strategy<Value = ColoredMultiPattern> {
    arb_mp(m, min_arity).prop_flat_map(move |body| {
        let arity = body.arity();
        let out = match &output {
            Some(color) => Just(color.clone()).boxed(),
            None => arb_color().boxed(),
        };
        (
            Just(body),
            out,
            proptest::collection::vec(arb_color(), arity),
        )
            .prop_map(|(body, out, inputs)| ColoredMultiPattern::new(out, body, inputs).unwrap())
    })
}
