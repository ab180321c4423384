use std::fmt;

use crate::error::{Error, Result};
use crate::patterns::{Pattern, RhythmPattern, RhythmSymbol, Token};

/// A stack of `m ≥ 1` voices sharing one arity and one length.
///
/// Multi-patterns of a fixed voice count form an operad under voice-wise
/// composition: every voice of `other` is grafted into the same slot of
/// the matching voice of `self`. Because the voices of `other` share one
/// length, the voices of the result do too.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPattern {
    voices: Vec<Pattern>,
}

impl MultiPattern {
    pub fn new(voices: Vec<Pattern>) -> Result<MultiPattern> {
        let first = voices.first().ok_or(Error::NoVoices)?;
        let (arity, length) = (first.arity(), first.len());
        for (index, voice) in voices.iter().enumerate().skip(1) {
            if voice.arity() != arity || voice.len() != length {
                return Err(Error::RaggedVoices {
                    voice: index + 1,
                    arity: voice.arity(),
                    length: voice.len(),
                    expected_arity: arity,
                    expected_length: length,
                });
            }
        }
        Ok(MultiPattern { voices })
    }

    /// The operad unit: `m` unit voices.
    pub fn unit(m: usize) -> Result<MultiPattern> {
        MultiPattern::new(vec![Pattern::unit(); m])
    }

    pub fn voice_count(&self) -> usize {
        self.voices.len()
    }

    pub fn arity(&self) -> usize {
        self.voices[0].arity()
    }

    pub fn len(&self) -> usize {
        self.voices[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.voices[0].is_empty()
    }

    pub fn voices(&self) -> &[Pattern] {
        &self.voices
    }

    fn check_same_voice_count(&self, other: &MultiPattern) -> Result<()> {
        if self.voice_count() != other.voice_count() {
            return Err(Error::VoiceCountMismatch {
                left: self.voice_count(),
                right: other.voice_count(),
            });
        }
        Ok(())
    }

    /// Grafts `other` into slot `slot` of every voice.
    pub fn compose(&self, slot: usize, other: &MultiPattern) -> Result<MultiPattern> {
        self.check_same_voice_count(other)?;
        let voices = self
            .voices
            .iter()
            .zip(&other.voices)
            .map(|(mine, theirs)| mine.compose(slot, theirs))
            .collect::<Result<Vec<_>>>()?;
        MultiPattern::new(voices)
    }

    /// Grafts one operand into each slot at once, i.e. the right-to-left
    /// fold of [`compose`](Self::compose) over slots `arity, ..., 1`.
    pub fn compose_all(&self, operands: &[MultiPattern]) -> Result<MultiPattern> {
        if operands.len() != self.arity() {
            return Err(Error::OperandCount {
                expected: self.arity(),
                found: operands.len(),
            });
        }
        let mut result = self.clone();
        for (index, operand) in operands.iter().enumerate().rev() {
            result = result.compose(index + 1, operand)?;
        }
        Ok(result)
    }

    /// Scales every degree of voice `j` by `degree_factors[j]` and turns
    /// every rest into `rest_factor` rests. Keeps the arity; an operad
    /// endomorphism for any parameters.
    pub fn dilate(&self, dilation: &Dilation) -> Result<MultiPattern> {
        if dilation.degree_factors.len() != self.voice_count() {
            return Err(Error::VoiceCountMismatch {
                left: dilation.degree_factors.len(),
                right: self.voice_count(),
            });
        }
        let voices =
            self.voices
                .iter()
                .zip(&dilation.degree_factors)
                .map(|(voice, factor)| {
                    let mut tokens = Vec::new();
                    for token in voice.tokens() {
                        match token {
                            Token::Rest => tokens
                                .extend(std::iter::repeat_n(Token::Rest, dilation.rest_factor)),
                            Token::Beat(d) => tokens.push(Token::Beat(d.checked_mul(*factor)?)),
                        }
                    }
                    Ok(Pattern::from_tokens(tokens))
                })
                .collect::<Result<Vec<_>>>()?;
        MultiPattern::new(voices)
    }

    /// Reads every voice from right to left. An involution, and an operad
    /// anti-automorphism: `mirror(x ∘ᵢ y) = mirror(x) ∘₍ₙ₊₁₋ᵢ₎ mirror(y)`.
    pub fn mirror(&self) -> MultiPattern {
        let voices = self
            .voices
            .iter()
            .map(|voice| {
                let mut tokens: Vec<Token> = voice.tokens().collect();
                tokens.reverse();
                Pattern::from_tokens(tokens)
            })
            .collect();
        MultiPattern { voices }
    }

    /// Stacks `m` copies of one pattern.
    pub fn stack(pattern: &Pattern, m: usize) -> Result<MultiPattern> {
        MultiPattern::new(vec![pattern.clone(); m])
    }

    /// A one-column multi-pattern sounding `column[i]` on voice `i`.
    pub fn column(column: &[crate::patterns::Degree]) -> Result<MultiPattern> {
        MultiPattern::new(
            column
                .iter()
                .map(|d| Pattern::from_tokens([Token::Beat(*d)]))
                .collect(),
        )
    }

    /// An `m`-voice, `m`-column multi-pattern with `diagonal[i]` sounded by
    /// voice `i` at column `i` and rests elsewhere.
    pub fn diagonal(diagonal: &[crate::patterns::Degree]) -> Result<MultiPattern> {
        let m = diagonal.len();
        MultiPattern::new(
            diagonal
                .iter()
                .enumerate()
                .map(|(index, d)| {
                    let mut tokens = vec![Token::Rest; m];
                    tokens[index] = Token::Beat(*d);
                    Pattern::from_tokens(tokens)
                })
                .collect(),
        )
    }

    /// The underlying rhythm of voice `j` (0-based).
    pub fn rhythm_of(&self, voice: usize) -> &RhythmPattern {
        self.voices[voice].rhythm()
    }

    /// Total rest count across one voice; all voices agree on arity but
    /// not necessarily on where their rests sit.
    pub fn rest_count(&self, voice: usize) -> usize {
        self.rhythm_of(voice)
            .letters()
            .iter()
            .filter(|s| **s == RhythmSymbol::Rest)
            .count()
    }
}

impl From<Pattern> for MultiPattern {
    fn from(pattern: Pattern) -> Self {
        MultiPattern {
            voices: vec![pattern],
        }
    }
}

/// Parameters of [`MultiPattern::dilate`]: one degree factor per voice and
/// a common rest multiplier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dilation {
    pub degree_factors: Vec<i64>,
    pub rest_factor: usize,
}

impl Dilation {
    pub fn new(degree_factors: Vec<i64>, rest_factor: usize) -> Self {
        Dilation {
            degree_factors,
            rest_factor,
        }
    }

    /// The identity dilation on `m` voices.
    pub fn identity(m: usize) -> Self {
        Dilation::new(vec![1; m], 1)
    }
}

impl fmt::Display for MultiPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for voice in &self.voices {
            if !first {
                write!(f, " ; ")?;
            }
            write!(f, "{voice}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_multipattern;

    fn mp(text: &str) -> MultiPattern {
        parse_multipattern(text).unwrap()
    }

    #[test]
    fn two_voice_composition() {
        let x = mp(". -2 -1 . 0 ; 0 1 . . 1");
        let y = mp("1 . 0 0 ; -3 . 0 4");
        let result = x.compose(2, &y).unwrap();
        assert_eq!(result, mp(". -2 0 . -1 -1 . 0 ; 0 -2 . 1 5 . . 1"));
    }

    #[test]
    fn unit_is_neutral() {
        let x = mp("0 . 1 . 1 ; . -2 -3 . 0");
        let unit = MultiPattern::unit(2).unwrap();
        for slot in 1..=x.arity() {
            assert_eq!(x.compose(slot, &unit).unwrap(), x);
        }
        assert_eq!(unit.compose(1, &x).unwrap(), x);
    }

    #[test]
    fn voice_count_mismatch_is_rejected() {
        let x = mp("0 ; 0");
        let y = mp("0");
        assert_eq!(
            x.compose(1, &y),
            Err(Error::VoiceCountMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn ragged_voices_are_rejected() {
        let err = MultiPattern::new(vec![
            Pattern::from_tokens([Token::Beat(0.into()), Token::Rest]),
            Pattern::from_tokens([Token::Beat(0.into())]),
        ]);
        assert!(matches!(err, Err(Error::RaggedVoices { voice: 2, .. })));
    }

    #[test]
    fn compose_all_folds_right_to_left() {
        let x = mp("0 0");
        let result = x.compose_all(&[mp("1"), mp("-2")]).unwrap();
        assert_eq!(result, mp("1 -2"));

        let manual = x
            .compose(2, &mp("-2"))
            .unwrap()
            .compose(1, &mp("1"))
            .unwrap();
        assert_eq!(result, manual);
    }

    #[test]
    fn compose_all_with_units_is_identity() {
        let x = mp("0 . 1 . 1 ; . -2 -3 . 0");
        let unit = MultiPattern::unit(2).unwrap();
        assert_eq!(
            x.compose_all(&[unit.clone(), unit.clone(), unit]).unwrap(),
            x
        );

        let silent = mp(". . ; . .");
        assert_eq!(silent.compose_all(&[]).unwrap(), silent);
        assert_eq!(
            silent.compose_all(&[mp("0 ; 0")]),
            Err(Error::OperandCount {
                expected: 0,
                found: 1
            })
        );
    }

    #[test]
    fn compose_all_with_mixed_units_targets_the_non_unit_slots() {
        let x = mp("0 2 . 1 . 0 4 ; -5 . . 0 0 0 0");
        let y = mp("1 . 0 ; 0 . 1");
        let unit = MultiPattern::unit(2).unwrap();
        let result = x
            .compose_all(&[unit.clone(), unit.clone(), y.clone(), y, unit])
            .unwrap();
        assert_eq!(result, mp("0 2 . 2 . 1 . 1 . 0 4 ; -5 . . 0 0 . 1 0 . 1 0"));
    }

    #[test]
    fn dilate_scales_degrees_and_stretches_rests() {
        let x = mp("1 . . 2 ; . 1 . 3 ; 3 1 . .");
        let dilated = x.dilate(&Dilation::new(vec![2, 0, -1], 2)).unwrap();
        assert_eq!(dilated, mp("2 . . . . 4 ; . . 0 . . 0 ; -3 -1 . . . ."));
    }

    #[test]
    fn dilate_identity_and_rest_erasure() {
        let x = mp("1 . 2");
        assert_eq!(x.dilate(&Dilation::identity(1)).unwrap(), x);
        assert_eq!(x.dilate(&Dilation::new(vec![1], 0)).unwrap(), mp("1 2"));
    }

    #[test]
    fn dilate_checks_factor_count() {
        let x = mp("0 ; 0");
        assert_eq!(
            x.dilate(&Dilation::new(vec![1], 1)),
            Err(Error::VoiceCountMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn mirror_reverses_every_voice() {
        let x = mp("1 . . 2 ; . 1 . 3 ; 3 1 . .");
        assert_eq!(x.mirror(), mp("2 . . 1 ; 3 . 1 . ; . . 1 3"));
        assert_eq!(x.mirror().mirror(), x);
        assert_eq!(mp("0").mirror(), mp("0"));
    }

    #[test]
    fn column_and_diagonal_builders() {
        let column = MultiPattern::column(&[0.into(), 5.into(), (-7).into()]).unwrap();
        assert_eq!(column, mp("0 ; 5 ; -7"));
        let diagonal = MultiPattern::diagonal(&[0.into(), 2.into(), 4.into()]).unwrap();
        assert_eq!(diagonal, mp("0 . . ; . 2 . ; . . 4"));
    }
}
