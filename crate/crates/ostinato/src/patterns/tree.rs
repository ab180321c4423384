use crate::error::{Error, Result};
use crate::patterns::MultiPattern;

/// A composition plan: leaves are identity inputs, internal nodes carry a
/// multi-pattern and one subtree per input slot of that pattern.
///
/// Trees can be very deep — decomposing a pattern yields one gadget per
/// unit of degree magnitude — so the traversals here (and the drop glue)
/// use explicit work lists instead of recursion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompositionTree {
    Leaf,
    Node {
        label: MultiPattern,
        children: Vec<CompositionTree>,
    },
}

impl CompositionTree {
    pub fn node(label: MultiPattern, children: Vec<CompositionTree>) -> CompositionTree {
        CompositionTree::Node { label, children }
    }

    /// Number of open inputs, i.e. the arity of the evaluated pattern.
    pub fn arity(&self) -> usize {
        let mut open = 0;
        let mut work = vec![self];
        while let Some(tree) = work.pop() {
            match tree {
                CompositionTree::Leaf => open += 1,
                CompositionTree::Node { children, .. } => work.extend(children),
            }
        }
        open
    }

    /// Evaluates the tree in the operad of `m`-voice multi-patterns: a leaf
    /// is the unit and an internal node grafts its evaluated children into
    /// its label, one per slot. Post-order over an explicit stack.
    pub fn eval(&self, m: usize) -> Result<MultiPattern> {
        enum Step<'a> {
            Enter(&'a CompositionTree),
            Graft(&'a MultiPattern, usize),
        }

        let mut work = vec![Step::Enter(self)];
        let mut values: Vec<MultiPattern> = Vec::new();
        while let Some(step) = work.pop() {
            match step {
                Step::Enter(CompositionTree::Leaf) => values.push(MultiPattern::unit(m)?),
                Step::Enter(CompositionTree::Node { label, children }) => {
                    if label.voice_count() != m {
                        return Err(Error::VoiceCountMismatch {
                            left: m,
                            right: label.voice_count(),
                        });
                    }
                    if children.len() != label.arity() {
                        return Err(Error::MalformedTree {
                            arity: label.arity(),
                            children: children.len(),
                        });
                    }
                    work.push(Step::Graft(label, children.len()));
                    // Children enter in reverse so their values come off
                    // the stack in slot order.
                    work.extend(children.iter().rev().map(Step::Enter));
                }
                Step::Graft(label, count) => {
                    let operands = values.split_off(values.len() - count);
                    values.push(label.compose_all(&operands)?);
                }
            }
        }
        Ok(values.pop().expect("one value per tree"))
    }
}

impl Drop for CompositionTree {
    fn drop(&mut self) {
        let mut work = Vec::new();
        if let CompositionTree::Node { children, .. } = self {
            work.append(children);
        }
        while let Some(mut tree) = work.pop() {
            if let CompositionTree::Node { children, .. } = &mut tree {
                work.append(children);
            }
        }
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
    fn leaf_evaluates_to_the_unit() {
        assert_eq!(
            CompositionTree::Leaf.eval(2).unwrap(),
            MultiPattern::unit(2).unwrap()
        );
    }

    #[test]
    fn node_over_leaves_evaluates_to_its_label() {
        let x = mp("0 . 1 . 1 ; . -2 -3 . 0");
        let tree = CompositionTree::node(x.clone(), vec![CompositionTree::Leaf; 3]);
        assert_eq!(tree.eval(2).unwrap(), x);
    }

    #[test]
    fn nested_two_voice_plan() {
        let a = mp("0 . ; . 0");
        let b = mp("1 0 1 ; -7 0 0");
        let c = mp("1 2 . 3 ; -1 0 . 1");

        let inner = CompositionTree::node(
            a,
            vec![CompositionTree::node(
                b.clone(),
                vec![CompositionTree::Leaf; 3],
            )],
        );
        let tree = CompositionTree::node(
            b,
            vec![
                CompositionTree::Leaf,
                inner,
                CompositionTree::node(c, vec![CompositionTree::Leaf; 3]),
            ],
        );
        assert_eq!(tree.arity(), 7);
        assert_eq!(
            tree.eval(2).unwrap(),
            mp("1 1 0 1 . 2 3 . 4 ; -7 . -7 0 0 -1 0 . 1")
        );
    }

    #[test]
    fn malformed_trees_are_rejected() {
        let x = mp("0 0");
        let tree = CompositionTree::node(x.clone(), vec![CompositionTree::Leaf]);
        assert_eq!(
            tree.eval(1),
            Err(Error::MalformedTree {
                arity: 2,
                children: 1
            })
        );
        let tree = CompositionTree::node(x, vec![CompositionTree::Leaf; 2]);
        assert_eq!(
            tree.eval(2),
            Err(Error::VoiceCountMismatch { left: 2, right: 1 })
        );
    }
}
