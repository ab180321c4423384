//! Ready-made generating systems that vary a single monophonic pattern.
//!
//! All four builders share one skeleton over the colors `b1`, `b2`, `b3`:
//! a seed rule `c1` rewrites the initial color into the base pattern with
//! all slots colored `b2`, a copy rule `c2` lets the base pattern compose
//! into itself, and the remaining rule(s) perform the actual variation,
//! sending `b2` to the dead-end color `b3` so that two variations can
//! never stack on the same beat (`b3` has no rules).

use crate::budgen::{BudGeneratingSystem, Rule};
use crate::colored::{Color, ColoredMultiPattern};
use crate::error::{Error, Result};
use crate::patterns::{Degree, DegreePattern, MultiPattern, Pattern, RhythmPattern, Token};

fn b(name: &str) -> Color {
    Color::new(name).expect("static color name")
}

fn check_base(base: &Pattern) -> Result<()> {
    if base.arity() == 0 {
        return Err(Error::InvalidParameter(
            "the base pattern needs at least one degree for the system to grow".into(),
        ));
    }
    Ok(())
}

/// The `c1`/`c2` pair: the stacked base pattern on the initial color and
/// on the growth color, with every slot colored `b2`.
fn seed_rules(base: &Pattern, m: usize) -> Result<[Rule; 2]> {
    let body = MultiPattern::stack(base, m)?;
    let slots = vec![b("b2"); body.arity()];
    Ok([
        Rule::new(
            "c1",
            ColoredMultiPattern::new(b("b1"), body.clone(), slots.clone())?,
        ),
        Rule::new("c2", ColoredMultiPattern::new(b("b2"), body, slots)?),
    ])
}

fn assemble(rules: Vec<Rule>, m: usize) -> Result<BudGeneratingSystem> {
    BudGeneratingSystem::new([b("b1"), b("b2"), b("b3")], rules, b("b1"), m)
}

/// A system whose runs stretch some beats of `base` by up to
/// `max_stretch` extra rest units: one stretch rule per amount `1..=t`,
/// named `c3`, ..., `c{t+2}`.
pub fn build_temporizator(base: &Pattern, max_stretch: usize) -> Result<BudGeneratingSystem> {
    check_base(base)?;
    if max_stretch == 0 {
        return Err(Error::InvalidParameter(
            "the stretch bound must be at least 1".into(),
        ));
    }
    let [c1, c2] = seed_rules(base, 1)?;
    let mut rules = vec![c1, c2];
    for extra in 1..=max_stretch {
        let mut tokens = vec![Token::Beat(Degree(0))];
        tokens.extend(std::iter::repeat_n(Token::Rest, extra));
        let body = MultiPattern::from(Pattern::from_tokens(tokens));
        rules.push(Rule::new(
            format!("c{}", extra + 2),
            ColoredMultiPattern::new(b("b2"), body, vec![b("b3")])?,
        ));
    }
    assemble(rules, 1)
}

/// A system whose runs replace some beats of `base` by the rhythm word
/// `rhythm`, all sounded at the replaced degree. An empty `rhythm` makes
/// the variation rule delete a beat instead.
pub fn build_rhythmic(base: &Pattern, rhythm: &RhythmPattern) -> Result<BudGeneratingSystem> {
    check_base(base)?;
    let [c1, c2] = seed_rules(base, 1)?;
    let degrees: DegreePattern = std::iter::repeat_n(0i64, rhythm.arity()).collect();
    let body = MultiPattern::from(Pattern::new(degrees, rhythm.clone())?);
    let c3 = Rule::new(
        "c3",
        ColoredMultiPattern::new(b("b2"), body, vec![b("b3"); rhythm.arity()])?,
    );
    assemble(vec![c1, c2, c3], 1)
}

/// An `m`-voice system (`m` = arity of `chord`) whose runs thicken some
/// beats of `base` into the chord: voice `i` sounds `chord[i]` above the
/// replaced degree.
pub fn build_harmonizator(base: &Pattern, chord: &DegreePattern) -> Result<BudGeneratingSystem> {
    check_base(base)?;
    if chord.arity() == 0 {
        return Err(Error::InvalidParameter(
            "the chord needs at least one degree".into(),
        ));
    }
    let m = chord.arity();
    let [c1, c2] = seed_rules(base, m)?;
    let c3 = Rule::new(
        "c3",
        ColoredMultiPattern::new(
            b("b2"),
            MultiPattern::column(chord.entries())?,
            vec![b("b3")],
        )?,
    );
    assemble(vec![c1, c2, c3], m)
}

/// As [`build_harmonizator`], but the chord degrees are staggered along
/// the diagonal of an `m`-column block, arpeggiating instead of stacking.
pub fn build_arpeggiator(base: &Pattern, arpeggio: &DegreePattern) -> Result<BudGeneratingSystem> {
    check_base(base)?;
    if arpeggio.arity() == 0 {
        return Err(Error::InvalidParameter(
            "the arpeggio needs at least one degree".into(),
        ));
    }
    let m = arpeggio.arity();
    let [c1, c2] = seed_rules(base, m)?;
    let c3 = Rule::new(
        "c3",
        ColoredMultiPattern::new(
            b("b2"),
            MultiPattern::diagonal(arpeggio.entries())?,
            vec![b("b3")],
        )?,
    );
    assemble(vec![c1, c2, c3], m)
}

/// A variation request: which builder to run and with what data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VariationSpec {
    Temporize {
        base: Pattern,
        max_stretch: usize,
    },
    Rhythmize {
        base: Pattern,
        rhythm: RhythmPattern,
    },
    Harmonize {
        base: Pattern,
        chord: DegreePattern,
    },
    Arpeggiate {
        base: Pattern,
        arpeggio: DegreePattern,
    },
}

impl VariationSpec {
    pub fn build(&self) -> Result<BudGeneratingSystem> {
        match self {
            VariationSpec::Temporize { base, max_stretch } => {
                build_temporizator(base, *max_stretch)
            }
            VariationSpec::Rhythmize { base, rhythm } => build_rhythmic(base, rhythm),
            VariationSpec::Harmonize { base, chord } => build_harmonizator(base, chord),
            VariationSpec::Arpeggiate { base, arpeggio } => build_arpeggiator(base, arpeggio),
        }
    }
}
