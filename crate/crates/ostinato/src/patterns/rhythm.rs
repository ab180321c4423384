use std::fmt;

use crate::error::{Error, Result};

/// One letter of a rhythm word: either silence or an attack.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RhythmSymbol {
    Rest,
    Beat,
}

/// A finite word of rests and beats.
///
/// The arity is the number of beats, the length the number of letters.
/// Rhythm patterns form an operad: grafting replaces the `i`-th beat by a
/// whole rhythm word; the unit is the single beat. Arity-0 patterns are
/// the words made of rests only, including the empty word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RhythmPattern {
    letters: Vec<RhythmSymbol>,
}

impl RhythmPattern {
    pub fn new(letters: Vec<RhythmSymbol>) -> Self {
        RhythmPattern { letters }
    }

    /// The empty rhythm pattern.
    pub fn empty() -> Self {
        RhythmPattern::default()
    }

    /// The operad unit: a single beat.
    pub fn unit() -> Self {
        RhythmPattern::new(vec![RhythmSymbol::Beat])
    }

    /// A run of `count` rests.
    pub fn rests(count: usize) -> Self {
        RhythmPattern::new(vec![RhythmSymbol::Rest; count])
    }

    /// Number of beats.
    pub fn arity(&self) -> usize {
        self.letters
            .iter()
            .filter(|s| **s == RhythmSymbol::Beat)
            .count()
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[RhythmSymbol] {
        &self.letters
    }

    /// Word index (0-based) of the beat in the given slot (1-based).
    pub(crate) fn beat_index(&self, slot: usize) -> Result<usize> {
        if slot >= 1 {
            let mut seen = 0;
            for (index, letter) in self.letters.iter().enumerate() {
                if *letter == RhythmSymbol::Beat {
                    seen += 1;
                    if seen == slot {
                        return Ok(index);
                    }
                }
            }
        }
        Err(Error::SlotOutOfRange {
            slot,
            arity: self.arity(),
        })
    }

    /// Replaces the `slot`-th beat by the word `other`.
    pub fn compose(&self, slot: usize, other: &RhythmPattern) -> Result<RhythmPattern> {
        let at = self.beat_index(slot)?;
        let mut letters = Vec::with_capacity(self.len() + other.len() - 1);
        letters.extend_from_slice(&self.letters[..at]);
        letters.extend_from_slice(&other.letters);
        letters.extend_from_slice(&self.letters[at + 1..]);
        Ok(RhythmPattern::new(letters))
    }

    /// The rest-run lengths around the beats: `counts()[0]` rests come
    /// before the first beat, `counts()[i]` right after the `i`-th one.
    pub fn durations(&self) -> DurationSequence {
        let mut counts = vec![0usize];
        for letter in &self.letters {
            match letter {
                RhythmSymbol::Rest => *counts.last_mut().expect("nonempty") += 1,
                RhythmSymbol::Beat => counts.push(0),
            }
        }
        DurationSequence { counts }
    }
}

impl fmt::Display for RhythmPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for letter in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            match letter {
                RhythmSymbol::Rest => write!(f, ".")?,
                RhythmSymbol::Beat => write!(f, "x")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// The rest-run lengths of a rhythm pattern, in eighth-note units.
///
/// A pattern of arity `n` yields `n + 1` counts; the `i`-th beat is then
/// sustained `1 + counts()[i]` units.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DurationSequence {
    counts: Vec<usize>,
}

impl DurationSequence {
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Rebuilds the unique rhythm word with these rest runs.
    pub fn to_rhythm(&self) -> RhythmPattern {
        let mut letters = Vec::new();
        for (index, count) in self.counts.iter().enumerate() {
            if index > 0 {
                letters.push(RhythmSymbol::Beat);
            }
            letters.extend(std::iter::repeat_n(RhythmSymbol::Rest, *count));
        }
        RhythmPattern::new(letters)
    }
}
