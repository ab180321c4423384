//! Decomposition of monophonic patterns over a three-element generating
//! set: the empty pattern, the single rest, and the down-up step `-1 1`.
//!
//! Any pattern is reachable from these generators. The construction here
//! is a deterministic left-to-right greedy one: build an all-beat
//! staircase whose degree at column `j` matches the target (columns that
//! will become rests get degree 0), chaining one down-up gadget per
//! column, then erase the rest columns by grafting the rest generator.
//! The resulting tree is far from minimal; only its evaluation matters.

use crate::patterns::{CompositionTree, MultiPattern, Pattern, Token};

/// The three generators of the monophonic pattern operad, as one-voice
/// multi-patterns usable as tree labels.
pub mod generators {
    use super::*;

    /// The empty pattern; grafting it deletes a beat.
    pub fn empty() -> MultiPattern {
        MultiPattern::from(Pattern::empty())
    }

    /// The single rest; grafting it silences a beat, keeping the length.
    pub fn rest() -> MultiPattern {
        MultiPattern::from(Pattern::from_tokens([Token::Rest]))
    }

    /// The down-up step `-1 1`, the only generator of positive arity.
    pub fn down_up() -> MultiPattern {
        MultiPattern::from(Pattern::from_tokens([
            Token::Beat((-1).into()),
            Token::Beat(1.into()),
        ]))
    }
}

fn empty_node() -> CompositionTree {
    CompositionTree::node(generators::empty(), vec![])
}

fn rest_node() -> CompositionTree {
    CompositionTree::node(generators::rest(), vec![])
}

/// Wraps `cont` so that the result evaluates to the singleton `(shift)`
/// grafted over `cont`: each layer is a down-up gadget with one side
/// erased by the empty generator.
fn shift_chain(shift: i128, mut cont: CompositionTree) -> CompositionTree {
    let mut remaining = shift;
    while remaining > 0 {
        cont = CompositionTree::node(generators::down_up(), vec![empty_node(), cont]);
        remaining -= 1;
    }
    while remaining < 0 {
        cont = CompositionTree::node(generators::down_up(), vec![cont, empty_node()]);
        remaining += 1;
    }
    cont
}

impl Pattern {
    /// A composition tree over the three generators that evaluates (in the
    /// one-voice operad) back to `self`.
    pub fn decompose(&self) -> CompositionTree {
        let tokens: Vec<Token> = self.tokens().collect();
        if tokens.is_empty() {
            return empty_node();
        }

        // Degree targets per column; rest columns carry a placeholder 0
        // that the rest generator erases below.
        let values: Vec<i128> = tokens
            .iter()
            .map(|token| match token {
                Token::Beat(d) => d.value() as i128,
                Token::Rest => 0,
            })
            .collect();
        let mut fillers: Vec<CompositionTree> = tokens
            .iter()
            .map(|token| match token {
                Token::Beat(_) => CompositionTree::Leaf,
                Token::Rest => rest_node(),
            })
            .collect();

        // From the last column backwards: extend the staircase by one
        // column per step. The two-slot gadget evaluates to `(0, delta)`,
        // keeping the current column and appending the next one.
        let mut cont = fillers.pop().expect("at least one column");
        for index in (0..values.len() - 1).rev() {
            let delta = values[index + 1] - values[index];
            cont = CompositionTree::node(
                generators::down_up(),
                vec![
                    shift_chain(1, fillers.pop().expect("one filler per column")),
                    shift_chain(delta - 1, cont),
                ],
            );
        }
        shift_chain(values[0], cont)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_pattern;

    fn roundtrip(text: &str) {
        let pattern = parse_pattern(text).unwrap();
        let tree = pattern.decompose();
        assert_eq!(
            tree.eval(1).unwrap(),
            MultiPattern::from(pattern.clone()),
            "decomposition of {pattern:?} does not evaluate back"
        );
    }

    #[test]
    fn unit_decomposes_to_a_leaf() {
        let tree = parse_pattern("0").unwrap().decompose();
        assert_eq!(tree, CompositionTree::Leaf);
    }

    #[test]
    fn single_rest_decomposes_to_the_rest_generator() {
        let tree = parse_pattern(".").unwrap().decompose();
        assert_eq!(tree, rest_node());
        roundtrip(".");
    }

    #[test]
    fn empty_pattern_decomposes_to_the_empty_generator() {
        let tree = Pattern::empty().decompose();
        assert_eq!(tree, empty_node());
    }

    #[test]
    fn labels_stay_within_the_generator_set() {
        fn check(tree: &CompositionTree) {
            if let CompositionTree::Node { label, children } = tree {
                assert!(
                    *label == generators::empty()
                        || *label == generators::rest()
                        || *label == generators::down_up()
                );
                children.iter().for_each(check);
            }
        }
        let pattern = parse_pattern("-1 . . 1 . 3").unwrap();
        check(&pattern.decompose());
    }

    #[test]
    fn assorted_round_trips() {
        for text in [
            "-1 . . 1 . 3",
            "1 1",
            "0 0",
            ". . .",
            "5",
            "-4",
            "0 2 . 1 . 0 4",
            "2 1 0 2 . 1 . 0 .",
            ". -2 -1 . 0",
            "7 -7 7 -7",
        ] {
            roundtrip(text);
        }
    }
}
