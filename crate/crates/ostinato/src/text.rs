//! Textual forms of the domain objects.
//!
//! A multi-pattern is written as voices separated by `;` or newlines, each
//! voice a whitespace-separated word of tokens: `.` for a rest, a decimal
//! integer for a degree, e.g. `0 . 1 . 1 ; . -2 -3 . 0`. A colored
//! multi-pattern reads `out | pattern | in1 in2 ...`. Composition trees
//! read as nested parentheses, `(name child ...)`, with `_` for a leaf.
//!
//! Printing through the `Display` impls always yields the canonical form,
//! and parse-then-print is idempotent on valid input.

use std::collections::HashMap;
use std::fmt;

use crate::colored::{Color, ColoredMultiPattern};
use crate::error::{Error, Result};
use crate::patterns::{
    generators, CompositionTree, Degree, DegreePattern, MultiPattern, Pattern, RhythmPattern,
    RhythmSymbol, Token,
};

fn parse_row(row: &str, index: usize) -> Result<Pattern> {
    let mut tokens = Vec::new();
    for (position, word) in row.split_whitespace().enumerate() {
        if word == "." {
            tokens.push(Token::Rest);
        } else {
            let value: i64 = word.parse().map_err(|_| Error::BadToken {
                row: index + 1,
                position: position + 1,
                token: word.to_string(),
            })?;
            tokens.push(Token::Beat(Degree(value)));
        }
    }
    Ok(Pattern::from_tokens(tokens))
}

/// Parses a single-voice pattern.
pub fn parse_pattern(text: &str) -> Result<Pattern> {
    if text.contains(';') || text.trim().contains('\n') {
        return Err(Error::Parse("expected a single voice".into()));
    }
    parse_row(text, 0)
}

/// Parses a multi-pattern; voices split on `;` or newlines and must share
/// one arity and one length. Surrounding whitespace is ignored, so a
/// trailing newline does not read as an extra empty voice.
pub fn parse_multipattern(text: &str) -> Result<MultiPattern> {
    let rows: Vec<Pattern> = text
        .trim()
        .split([';', '\n'])
        .enumerate()
        .map(|(index, row)| parse_row(row, index))
        .collect::<Result<_>>()?;
    let first = rows.first().ok_or(Error::NoVoices)?;
    let (arity, length) = (first.arity(), first.len());
    for (index, row) in rows.iter().enumerate().skip(1) {
        if row.arity() != arity || row.len() != length {
            return Err(Error::RaggedRows {
                row: index + 1,
                arity: row.arity(),
                length: row.len(),
                expected_arity: arity,
                expected_length: length,
            });
        }
    }
    MultiPattern::new(rows)
}

/// Parses a degree pattern: whitespace-separated integers, no rests.
pub fn parse_degree_pattern(text: &str) -> Result<DegreePattern> {
    let mut entries = Vec::new();
    for (position, word) in text.split_whitespace().enumerate() {
        let value: i64 = word.parse().map_err(|_| Error::BadToken {
            row: 1,
            position: position + 1,
            token: word.to_string(),
        })?;
        entries.push(Degree(value));
    }
    Ok(DegreePattern::new(entries))
}

/// Parses a rhythm pattern: `x` for a beat, `.` for a rest, whitespace
/// optional (`x x . x .` and `xx.x.` are the same word).
pub fn parse_rhythm_pattern(text: &str) -> Result<RhythmPattern> {
    let mut letters = Vec::new();
    for (position, c) in text.chars().filter(|c| !c.is_whitespace()).enumerate() {
        match c {
            'x' => letters.push(RhythmSymbol::Beat),
            '.' => letters.push(RhythmSymbol::Rest),
            other => {
                return Err(Error::BadToken {
                    row: 1,
                    position: position + 1,
                    token: other.to_string(),
                })
            }
        }
    }
    Ok(RhythmPattern::new(letters))
}

/// Parses `out | pattern | in1 in2 ...`; the input section may be empty
/// for an arity-0 body.
pub fn parse_colored(text: &str) -> Result<ColoredMultiPattern> {
    let sections: Vec<&str> = text.split('|').collect();
    if sections.len() != 3 {
        return Err(Error::Parse(
            "expected `out | pattern | inputs` with exactly two separators".into(),
        ));
    }
    let output = Color::new(sections[0].trim())?;
    let body = parse_multipattern(sections[1])?;
    let inputs = sections[2]
        .split_whitespace()
        .map(Color::new)
        .collect::<Result<Vec<_>>>()?;
    ColoredMultiPattern::new(output, body, inputs)
}

/// Tokens that parse but deserve a second look, e.g. `-0` (accepted as
/// plain 0). Returns one message per finding.
pub fn scan_token_warnings(text: &str) -> Vec<String> {
    let mut warnings = Vec::new();
    for (row, line) in text.split([';', '\n']).enumerate() {
        for word in line.split_whitespace() {
            if word == "-0" {
                warnings.push(format!("row {}: token `-0` read as degree 0", row + 1));
            }
        }
    }
    warnings
}

impl fmt::Display for ColoredMultiPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} |", self.output(), self.body())?;
        for input in self.inputs() {
            write!(f, " {input}")?;
        }
        Ok(())
    }
}

/// Resolves tree-node names to multi-pattern labels. The three generator
/// names `eps`, `rest` and `downup` are built in; a library of named
/// patterns may shadow-free extend them.
#[derive(Debug, Clone, Default)]
pub struct PatternLibrary {
    entries: HashMap<String, MultiPattern>,
}

impl PatternLibrary {
    pub fn new() -> Self {
        PatternLibrary::default()
    }

    pub fn insert(&mut self, name: &str, pattern: MultiPattern) {
        self.entries.insert(name.to_string(), pattern);
    }

    /// Parses a library file: one `name = pattern` per line, `#` comments.
    pub fn parse(text: &str) -> Result<PatternLibrary> {
        let mut library = PatternLibrary::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (name, pattern) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("library line without `=`: {line}")))?;
            let name = name.trim();
            if name.is_empty() {
                return Err(Error::Parse(format!("library line without a name: {line}")));
            }
            library.insert(name, parse_multipattern(pattern)?);
        }
        Ok(library)
    }

    pub fn resolve(&self, name: &str) -> Option<MultiPattern> {
        if let Some(pattern) = self.entries.get(name) {
            return Some(pattern.clone());
        }
        match name {
            "eps" => Some(generators::empty()),
            "rest" => Some(generators::rest()),
            "downup" => Some(generators::down_up()),
            _ => None,
        }
    }

    /// The built-in name of a label, if it is one of the generators.
    fn builtin_name(pattern: &MultiPattern) -> Option<&'static str> {
        if *pattern == generators::empty() {
            Some("eps")
        } else if *pattern == generators::rest() {
            Some("rest")
        } else if *pattern == generators::down_up() {
            Some("downup")
        } else {
            None
        }
    }
}

/// Parses a nested-parentheses composition tree: `(name child ...)` for a
/// node, `_` for a leaf. Node names resolve through `library`.
pub fn parse_tree(text: &str, library: &PatternLibrary) -> Result<CompositionTree> {
    let mut tokens = tokenize_tree(text);
    tokens.reverse();
    let tree = parse_tree_tokens(&mut tokens, library)?;
    if let Some(extra) = tokens.last() {
        return Err(Error::Parse(format!("trailing input after tree: {extra}")));
    }
    Ok(tree)
}

fn tokenize_tree(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    for c in text.chars() {
        match c {
            '(' | ')' => {
                if !current.is_empty() {
                    tokens.push(std::mem::take(&mut current));
                }
                tokens.push(c.to_string());
            }
            c if c.is_whitespace() => {
                if !current.is_empty() {
                    tokens.push(std::mem::take(&mut current));
                }
            }
            c => current.push(c),
        }
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    tokens
}

// Trees may be arbitrarily deep (decomposition produces one gadget per
// unit of degree), so parsing and printing run on explicit stacks.
fn parse_tree_tokens(
    tokens: &mut Vec<String>,
    library: &PatternLibrary,
) -> Result<CompositionTree> {
    struct Frame {
        label: MultiPattern,
        children: Vec<CompositionTree>,
    }
    let mut open: Vec<Frame> = Vec::new();
    loop {
        let finished = match tokens.pop().as_deref() {
            Some("_") => CompositionTree::Leaf,
            Some("(") => {
                let name = match tokens.pop() {
                    Some(token) if token != "(" && token != ")" => token,
                    _ => return Err(Error::Parse("expected a node name after `(`".into())),
                };
                let label = library
                    .resolve(&name)
                    .ok_or_else(|| Error::Parse(format!("unknown tree node name: {name}")))?;
                open.push(Frame {
                    label,
                    children: Vec::new(),
                });
                continue;
            }
            Some(")") => {
                let frame = open
                    .pop()
                    .ok_or_else(|| Error::Parse("unbalanced parentheses".into()))?;
                CompositionTree::node(frame.label, frame.children)
            }
            Some(other) => return Err(Error::Parse(format!("unexpected token: {other}"))),
            None if open.is_empty() => return Err(Error::Parse("empty tree".into())),
            None => return Err(Error::Parse("unbalanced parentheses".into())),
        };
        match open.last_mut() {
            Some(frame) => frame.children.push(finished),
            None => return Ok(finished),
        }
    }
}

/// Prints a tree in the nested-parentheses form. Generator labels print
/// under their built-in names; other labels need a name in `names`,
/// keyed by the pattern's canonical text.
pub fn format_tree(tree: &CompositionTree, names: &HashMap<String, String>) -> Result<String> {
    let mut out = String::new();
    write_tree(tree, names, &mut out)?;
    Ok(out)
}

fn write_tree(
    tree: &CompositionTree,
    names: &HashMap<String, String>,
    out: &mut String,
) -> Result<()> {
    enum Piece<'a> {
        Tree(&'a CompositionTree),
        Text(&'static str),
    }
    let mut work = vec![Piece::Tree(tree)];
    while let Some(piece) = work.pop() {
        match piece {
            Piece::Text(text) => out.push_str(text),
            Piece::Tree(CompositionTree::Leaf) => out.push('_'),
            Piece::Tree(CompositionTree::Node { label, children }) => {
                let key = label.to_string();
                let name = match PatternLibrary::builtin_name(label) {
                    Some(name) => name,
                    None => names
                        .get(&key)
                        .ok_or_else(|| Error::Parse(format!("no name for tree label `{key}`")))?,
                };
                out.push('(');
                out.push_str(name);
                work.push(Piece::Text(")"));
                for child in children.iter().rev() {
                    work.push(Piece::Tree(child));
                    work.push(Piece::Text(" "));
                }
            }
        }
    }
    Ok(())
}
