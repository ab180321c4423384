//! Colored multi-patterns: the bud construction over the multi-pattern
//! operad.
//!
//! A colored multi-pattern wraps a body with one output color and one
//! input color per slot. Composition is only allowed when the slot's
//! input color equals the operand's output color, so a color set acts as
//! a set of composition permissions. [`ColoredMultiPattern::graft_matching`]
//! is the one color-tolerant operation: it grafts a copy of the operand
//! onto every matching slot and leaves the others alone.

use crate::error::{Error, Result};
use crate::patterns::MultiPattern;

/// An opaque composition guard. Equality is by name; there is no ordering
/// semantics.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Color(String);

impl Color {
    pub fn new(name: impl Into<String>) -> Result<Color> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::Parse("a color needs a nonempty name".into()));
        }
        Ok(Color(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for Color {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// A multi-pattern decorated with an output color and one input color per
/// slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredMultiPattern {
    output: Color,
    body: MultiPattern,
    inputs: Vec<Color>,
}

impl ColoredMultiPattern {
    pub fn new(output: Color, body: MultiPattern, inputs: Vec<Color>) -> Result<Self> {
        if inputs.len() != body.arity() {
            return Err(Error::InputColorCount {
                inputs: inputs.len(),
                arity: body.arity(),
            });
        }
        Ok(ColoredMultiPattern {
            output,
            body,
            inputs,
        })
    }

    /// The colored unit on `color`: a unit body with matching output and
    /// input colors.
    pub fn unit(color: Color, m: usize) -> Result<Self> {
        Ok(ColoredMultiPattern {
            output: color.clone(),
            body: MultiPattern::unit(m)?,
            inputs: vec![color],
        })
    }

    pub fn output(&self) -> &Color {
        &self.output
    }

    pub fn body(&self) -> &MultiPattern {
        &self.body
    }

    pub fn inputs(&self) -> &[Color] {
        &self.inputs
    }

    pub fn arity(&self) -> usize {
        self.inputs.len()
    }

    pub fn voice_count(&self) -> usize {
        self.body.voice_count()
    }

    /// Forgets the colors.
    pub fn prune(self) -> MultiPattern {
        self.body
    }

    /// Grafts `other` into slot `slot`, provided the slot's input color
    /// equals `other`'s output color. The slot's color is replaced by the
    /// whole input word of `other`.
    pub fn compose(&self, slot: usize, other: &ColoredMultiPattern) -> Result<Self> {
        let expected = self
            .inputs
            .get(slot.wrapping_sub(1))
            .filter(|_| slot >= 1)
            .ok_or(Error::SlotOutOfRange {
                slot,
                arity: self.arity(),
            })?;
        if *expected != other.output {
            return Err(Error::ColorMismatch {
                slot,
                expected: expected.name().to_string(),
                found: other.output.name().to_string(),
            });
        }
        let body = self.body.compose(slot, &other.body)?;
        let mut inputs = Vec::with_capacity(self.arity() + other.arity() - 1);
        inputs.extend_from_slice(&self.inputs[..slot - 1]);
        inputs.extend_from_slice(&other.inputs);
        inputs.extend_from_slice(&self.inputs[slot..]);
        Ok(ColoredMultiPattern {
            output: self.output.clone(),
            body,
            inputs,
        })
    }

    /// Grafts one operand into each slot at once; every operand's output
    /// color must match its slot.
    pub fn compose_all(&self, operands: &[ColoredMultiPattern]) -> Result<Self> {
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

    /// Grafts a copy of `other` onto every slot whose input color equals
    /// `other`'s output color; all other slots keep their colored unit.
    /// Never a color error: slots that do not match are simply untouched.
    pub fn graft_matching(&self, other: &ColoredMultiPattern) -> Result<Self> {
        if self.voice_count() != other.voice_count() {
            return Err(Error::VoiceCountMismatch {
                left: self.voice_count(),
                right: other.voice_count(),
            });
        }
        let operands = self
            .inputs
            .iter()
            .map(|input| {
                if input == &other.output {
                    Ok(other.clone())
                } else {
                    ColoredMultiPattern::unit(input.clone(), self.voice_count())
                }
            })
            .collect::<Result<Vec<_>>>()?;
        self.compose_all(&operands)
    }
}
