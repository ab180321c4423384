use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::colored::{Color, ColoredMultiPattern};
use crate::error::{Error, Result};
use crate::text::{parse_colored, parse_multipattern};

/// A named colored multi-pattern, usable as a rewriting rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub name: String,
    pub pattern: ColoredMultiPattern,
}

impl Rule {
    pub fn new(name: impl Into<String>, pattern: ColoredMultiPattern) -> Rule {
        Rule {
            name: name.into(),
            pattern,
        }
    }
}

/// A grammar over colored multi-patterns: a finite color set, a finite
/// rule sequence, an initial color, and a fixed voice count.
///
/// Every generation run starts from the colored unit on the initial color
/// and grows the current element by grafting rules whose output color
/// matches the slot being filled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudGeneratingSystem {
    colors: BTreeSet<Color>,
    rules: Vec<Rule>,
    initial: Color,
    voice_count: usize,
}

impl BudGeneratingSystem {
    pub fn new(
        colors: impl IntoIterator<Item = Color>,
        rules: Vec<Rule>,
        initial: Color,
        voice_count: usize,
    ) -> Result<Self> {
        let colors: BTreeSet<Color> = colors.into_iter().collect();
        if colors.is_empty() {
            return Err(Error::InvalidSystem("the color set is empty".into()));
        }
        if voice_count == 0 {
            return Err(Error::InvalidSystem("voice count must be positive".into()));
        }
        if !colors.contains(&initial) {
            return Err(Error::UnknownColor(initial.name().to_string()));
        }
        let mut names = BTreeSet::new();
        for rule in &rules {
            if !names.insert(rule.name.clone()) {
                return Err(Error::InvalidSystem(format!(
                    "duplicate rule name {}",
                    rule.name
                )));
            }
            if rule.pattern.voice_count() != voice_count {
                return Err(Error::InvalidSystem(format!(
                    "rule {} has {} voice(s), system has {}",
                    rule.name,
                    rule.pattern.voice_count(),
                    voice_count
                )));
            }
            if !colors.contains(rule.pattern.output()) {
                return Err(Error::UnknownColor(
                    rule.pattern.output().name().to_string(),
                ));
            }
            for input in rule.pattern.inputs() {
                if !colors.contains(input) {
                    return Err(Error::UnknownColor(input.name().to_string()));
                }
            }
        }
        Ok(BudGeneratingSystem {
            colors,
            rules,
            initial,
            voice_count,
        })
    }

    pub fn colors(&self) -> impl Iterator<Item = &Color> {
        self.colors.iter()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn initial(&self) -> &Color {
        &self.initial
    }

    pub fn voice_count(&self) -> usize {
        self.voice_count
    }

    pub fn rule_named(&self, name: &str) -> Option<&Rule> {
        self.rules.iter().find(|rule| rule.name == name)
    }

    /// All rules whose output color is `color`, in declaration order.
    pub fn rules_for(&self, color: &Color) -> Result<Vec<&Rule>> {
        if !self.colors.contains(color) {
            return Err(Error::UnknownColor(color.name().to_string()));
        }
        Ok(self
            .rules
            .iter()
            .filter(|rule| rule.pattern.output() == color)
            .collect())
    }

    /// The colored unit this system's runs start from.
    pub fn start(&self) -> ColoredMultiPattern {
        ColoredMultiPattern::unit(self.initial.clone(), self.voice_count)
            .expect("voice count validated at construction")
    }

    /// Reads the JSON file form.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: SystemFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        file.try_into()
    }

    /// Writes the JSON file form (pretty-printed, trailing newline).
    pub fn to_json(&self) -> String {
        let file = SystemFile::from(self);
        let mut text = serde_json::to_string_pretty(&file).expect("serializable");
        text.push('\n');
        text
    }
}

/// Serialized form of a generating system.
#[derive(Debug, Serialize, Deserialize)]
struct SystemFile {
    m: usize,
    colors: Vec<String>,
    initial: String,
    rules: Vec<RuleFile>,
}

#[derive(Debug, Serialize, Deserialize)]
struct RuleFile {
    name: String,
    out: String,
    ins: Vec<String>,
    pattern: String,
}

impl TryFrom<SystemFile> for BudGeneratingSystem {
    type Error = Error;

    fn try_from(file: SystemFile) -> Result<Self> {
        let colors = file
            .colors
            .iter()
            .map(Color::new)
            .collect::<Result<Vec<_>>>()?;
        let rules = file
            .rules
            .into_iter()
            .map(|rule| {
                let pattern = ColoredMultiPattern::new(
                    Color::new(rule.out)?,
                    parse_multipattern(&rule.pattern)?,
                    rule.ins
                        .into_iter()
                        .map(Color::new)
                        .collect::<Result<_>>()?,
                )?;
                Ok(Rule::new(rule.name, pattern))
            })
            .collect::<Result<Vec<_>>>()?;
        BudGeneratingSystem::new(colors, rules, Color::new(file.initial)?, file.m)
    }
}

impl From<&BudGeneratingSystem> for SystemFile {
    fn from(system: &BudGeneratingSystem) -> Self {
        SystemFile {
            m: system.voice_count,
            colors: system.colors.iter().map(|c| c.name().to_string()).collect(),
            initial: system.initial.name().to_string(),
            rules: system
                .rules
                .iter()
                .map(|rule| RuleFile {
                    name: rule.name.clone(),
                    out: rule.pattern.output().name().to_string(),
                    ins: rule
                        .pattern
                        .inputs()
                        .iter()
                        .map(|c| c.name().to_string())
                        .collect(),
                    pattern: rule.pattern.body().to_string(),
                })
                .collect(),
        }
    }
}

/// The five-rule, two-voice demonstration system used throughout the test
/// suites: two expansion rules on the initial color, two on the second
/// color, and a pass-through on the third.
pub fn demo_system() -> BudGeneratingSystem {
    let rule = |name: &str, text: &str| Rule::new(name, parse_colored(text).unwrap());
    BudGeneratingSystem::new(
        ["b1", "b2", "b3"].map(|c| Color::new(c).unwrap()),
        vec![
            rule("c1", "b1 | 0 2 . 1 . 0 4 ; -5 . . 0 0 0 0 | b3 b2 b1 b1 b3"),
            rule("c2", "b1 | 1 . 0 ; 0 . 1 | b1 b1"),
            rule("c3", "b2 | -1 ; -1 | b1"),
            rule("c4", "b2 | 0 0 ; 0 0 | b1 b1"),
            rule("c5", "b3 | 0 ; 0 | b3"),
        ],
        Color::new("b1").unwrap(),
        2,
    )
    .expect("demo system is well-formed")
}
