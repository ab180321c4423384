use std::fmt;

use crate::error::{Error, Result};

/// A scale degree: a signed number of scale steps away from the root.
///
/// Degree 0 is the root itself, positive degrees climb the scale and
/// negative ones descend it. Arithmetic is checked so that composing
/// pathological patterns reports an overflow instead of wrapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Degree(pub i64);

impl Degree {
    pub fn value(self) -> i64 {
        self.0
    }

    pub fn checked_add(self, other: Degree) -> Result<Degree> {
        self.0
            .checked_add(other.0)
            .map(Degree)
            .ok_or(Error::DegreeOverflow)
    }

    pub fn checked_mul(self, factor: i64) -> Result<Degree> {
        self.0
            .checked_mul(factor)
            .map(Degree)
            .ok_or(Error::DegreeOverflow)
    }
}

impl From<i64> for Degree {
    fn from(value: i64) -> Self {
        Degree(value)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite word of degrees. The empty word is allowed.
///
/// Degree patterns form an operad: grafting `other` into slot `i`
/// replaces the `i`-th entry by a copy of `other` transposed by that
/// entry. The unit is the single degree 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DegreePattern {
    entries: Vec<Degree>,
}

impl DegreePattern {
    pub fn new(entries: Vec<Degree>) -> Self {
        DegreePattern { entries }
    }

    /// The empty degree pattern.
    pub fn empty() -> Self {
        DegreePattern::default()
    }

    /// The operad unit: the single degree 0.
    pub fn unit() -> Self {
        DegreePattern::new(vec![Degree(0)])
    }

    pub fn arity(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Degree] {
        &self.entries
    }

    /// Grafts `other` into slot `slot` (numbered from 1): the chosen entry
    /// is replaced by `other` with every entry transposed by it.
    pub fn compose(&self, slot: usize, other: &DegreePattern) -> Result<DegreePattern> {
        let base = *self
            .entries
            .get(slot.wrapping_sub(1))
            .filter(|_| slot >= 1)
            .ok_or(Error::SlotOutOfRange {
                slot,
                arity: self.arity(),
            })?;
        let mut entries = Vec::with_capacity(self.arity() + other.arity() - 1);
        entries.extend_from_slice(&self.entries[..slot - 1]);
        for d in &other.entries {
            entries.push(base.checked_add(*d)?);
        }
        entries.extend_from_slice(&self.entries[slot..]);
        Ok(DegreePattern::new(entries))
    }
}

impl FromIterator<i64> for DegreePattern {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        DegreePattern::new(iter.into_iter().map(Degree).collect())
    }
}

impl fmt::Display for DegreePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for d in &self.entries {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{d}")?;
            first = false;
        }
        Ok(())
    }
}
