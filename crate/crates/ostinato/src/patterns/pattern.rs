use std::fmt;

use crate::error::{Error, Result};
use crate::patterns::{Degree, DegreePattern, RhythmPattern, RhythmSymbol};

/// One letter of the concise pattern word: a rest or a sounded degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Token {
    Rest,
    Beat(Degree),
}

/// A monophonic pattern: a degree word and a rhythm word of equal arity.
///
/// Concisely, a pattern is a single word whose letters are rests and
/// degrees; the `i`-th degree is sounded on the `i`-th beat. Patterns form
/// the product operad of degree and rhythm patterns: composition acts on
/// both components at the same slot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Pattern {
    degrees: DegreePattern,
    rhythm: RhythmPattern,
}

impl Pattern {
    pub fn new(degrees: DegreePattern, rhythm: RhythmPattern) -> Result<Pattern> {
        if degrees.arity() != rhythm.arity() {
            return Err(Error::PatternArityMismatch {
                degrees: degrees.arity(),
                beats: rhythm.arity(),
            });
        }
        Ok(Pattern { degrees, rhythm })
    }

    /// Builds a pattern from its concise word; always consistent.
    pub fn from_tokens<I: IntoIterator<Item = Token>>(tokens: I) -> Pattern {
        let mut degrees = Vec::new();
        let mut letters = Vec::new();
        for token in tokens {
            match token {
                Token::Rest => letters.push(RhythmSymbol::Rest),
                Token::Beat(d) => {
                    degrees.push(d);
                    letters.push(RhythmSymbol::Beat);
                }
            }
        }
        Pattern {
            degrees: DegreePattern::new(degrees),
            rhythm: RhythmPattern::new(letters),
        }
    }

    /// The empty pattern.
    pub fn empty() -> Pattern {
        Pattern::default()
    }

    /// The operad unit: the single degree 0 on a single beat.
    pub fn unit() -> Pattern {
        Pattern {
            degrees: DegreePattern::unit(),
            rhythm: RhythmPattern::unit(),
        }
    }

    pub fn arity(&self) -> usize {
        self.degrees.arity()
    }

    pub fn len(&self) -> usize {
        self.rhythm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rhythm.is_empty()
    }

    pub fn degrees(&self) -> &DegreePattern {
        &self.degrees
    }

    pub fn rhythm(&self) -> &RhythmPattern {
        &self.rhythm
    }

    /// The concise word, one token per letter.
    pub fn tokens(&self) -> impl Iterator<Item = Token> + '_ {
        let mut next_degree = 0;
        self.rhythm
            .letters()
            .iter()
            .map(move |letter| match letter {
                RhythmSymbol::Rest => Token::Rest,
                RhythmSymbol::Beat => {
                    let d = self.degrees.entries()[next_degree];
                    next_degree += 1;
                    Token::Beat(d)
                }
            })
    }

    /// Grafts `other` into slot `slot`, acting on degrees and rhythm at once.
    pub fn compose(&self, slot: usize, other: &Pattern) -> Result<Pattern> {
        Ok(Pattern {
            degrees: self.degrees.compose(slot, &other.degrees)?,
            rhythm: self.rhythm.compose(slot, &other.rhythm)?,
        })
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for token in self.tokens() {
            if !first {
                write!(f, " ")?;
            }
            match token {
                Token::Rest => write!(f, ".")?,
                Token::Beat(d) => write!(f, "{d}")?,
            }
            first = false;
        }
        Ok(())
    }
}
