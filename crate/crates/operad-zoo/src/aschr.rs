use operad_core::{Color, Operad, OperadError};

use crate::term::Term;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    A,
    B,
}

impl Label {
    fn other(self) -> Label {
        match self {
            Label::A => Label::B,
            Label::B => Label::A,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Label::A => "a",
            Label::B => "b",
        }
    }
}

/// An alternating Schröder tree: internal nodes have at least two children
/// and are labeled `a` or `b` so that no node has a child with its own label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ASchrTree {
    Leaf,
    Node(Label, Vec<ASchrTree>),
}

impl ASchrTree {
    pub fn corolla(label: Label, arity: usize) -> Self {
        ASchrTree::Node(label, vec![ASchrTree::Leaf; arity])
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            ASchrTree::Leaf => 1,
            ASchrTree::Node(_, cs) => cs.iter().map(ASchrTree::leaf_count).sum(),
        }
    }

    /// Checks arities and the alternation of labels.
    pub fn is_valid(&self) -> bool {
        fn rec(t: &ASchrTree, parent: Option<Label>) -> bool {
            match t {
                ASchrTree::Leaf => true,
                ASchrTree::Node(l, cs) => {
                    Some(*l) != parent && cs.len() >= 2 && cs.iter().all(|c| rec(c, Some(*l)))
                }
            }
        }
        rec(self, None)
    }

    fn to_term(&self) -> Term {
        match self {
            ASchrTree::Leaf => Term::Leaf,
            ASchrTree::Node(l, cs) => Term::Node(l.name().into(), cs.iter().map(|c| c.to_term()).collect()),
        }
    }

    fn from_term(t: &Term) -> Result<Self, String> {
        match t {
            Term::Leaf => Ok(ASchrTree::Leaf),
            Term::Node(name, cs) => {
                let label = match name.as_str() {
                    "a" => Label::A,
                    "b" => Label::B,
                    _ => return Err(format!("unknown label {name}")),
                };
                let cs = cs.iter().map(ASchrTree::from_term).collect::<Result<Vec<_>, _>>()?;
                Ok(ASchrTree::Node(label, cs))
            }
            other => Err(format!("unexpected {other} in an alternating Schröder tree")),
        }
    }

    /// Grafts `t` on the `i`-th leaf, merging the grafted root into the
    /// parent of that leaf when both carry the same label.
    fn graft(&self, i: usize, t: &ASchrTree) -> ASchrTree {
        match self {
            ASchrTree::Leaf => t.clone(),
            ASchrTree::Node(label, cs) => {
                let mut remaining = i;
                let mut children = Vec::with_capacity(cs.len() + 2);
                for c in cs {
                    let n = c.leaf_count();
                    if remaining == 0 || remaining > n {
                        if remaining > 0 {
                            remaining -= n;
                        }
                        children.push(c.clone());
                        continue;
                    }
                    match (c, t) {
                        (ASchrTree::Leaf, ASchrTree::Node(tl, tcs)) if tl == label => {
                            children.extend(tcs.iter().cloned());
                        }
                        (ASchrTree::Leaf, _) => children.push(t.clone()),
                        _ => children.push(c.graft(remaining, t)),
                    }
                    remaining = 0;
                }
                ASchrTree::Node(*label, children)
            }
        }
    }

    /// All alternating Schröder trees with `n` leaves.
    pub fn all(n: usize) -> Vec<ASchrTree> {
        if n == 0 {
            return vec![];
        }
        if n == 1 {
            return vec![ASchrTree::Leaf];
        }
        let mut memo = std::collections::HashMap::new();
        let mut out = rooted(Label::A, n, &mut memo);
        out.extend(rooted(Label::B, n, &mut memo));
        out.sort();
        out
    }
}

type Memo = std::collections::HashMap<(Label, usize), Vec<ASchrTree>>;

/// Trees with `n ≥ 2` leaves whose root is labeled `label`.
fn rooted(label: Label, n: usize, memo: &mut Memo) -> Vec<ASchrTree> {
    if let Some(v) = memo.get(&(label, n)) {
        return v.clone();
    }
    // Children sequences: each child is a leaf or a tree rooted at the other label.
    let mut seqs: Vec<Vec<Vec<ASchrTree>>> = vec![vec![]; n + 1];
    seqs[0].push(vec![]);
    for total in 1..=n {
        let mut acc = Vec::new();
        for first in 1..=total.min(n - 1) {
            let heads: Vec<ASchrTree> = if first == 1 {
                vec![ASchrTree::Leaf]
            } else {
                rooted(label.other(), first, memo)
            };
            for h in &heads {
                for tail in &seqs[total - first] {
                    let mut s = Vec::with_capacity(tail.len() + 1);
                    s.push(h.clone());
                    s.extend(tail.iter().cloned());
                    acc.push(s);
                }
            }
        }
        seqs[total] = acc;
    }
    let result: Vec<ASchrTree> = seqs[n]
        .iter()
        .filter(|s| s.len() >= 2)
        .map(|s| ASchrTree::Node(label, s.clone()))
        .collect();
    memo.insert((label, n), result.clone());
    result
}

/// The operad of alternating Schröder trees.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ASchr;

impl Operad for ASchr {
    type Elem = ASchrTree;

    fn color_count(&self) -> usize {
        1
    }

    fn arity(&self, x: &ASchrTree) -> usize {
        x.leaf_count()
    }

    fn out_color(&self, _x: &ASchrTree) -> Color {
        0
    }

    fn in_color(&self, _x: &ASchrTree, _i: usize) -> Color {
        0
    }

    fn unit(&self, c: Color) -> Result<ASchrTree, OperadError> {
        if c == 0 {
            Ok(ASchrTree::Leaf)
        } else {
            Err(OperadError::UnknownColor(self.color_name(c)))
        }
    }

    fn compose_unchecked(&self, s: &ASchrTree, i: usize, t: &ASchrTree) -> ASchrTree {
        s.graft(i, t)
    }

    fn render(&self, x: &ASchrTree) -> String {
        x.to_term().to_string()
    }

    fn parse(&self, s: &str) -> Result<ASchrTree, OperadError> {
        let t = ASchrTree::from_term(&Term::parse(s)?).map_err(|e| OperadError::parse(s, e))?;
        if t.is_valid() {
            Ok(t)
        } else {
            Err(OperadError::parse(s, "not an alternating Schröder tree"))
        }
    }

    fn elements(&self, n: usize) -> Option<Vec<ASchrTree>> {
        Some(ASchrTree::all(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> ASchrTree {
        ASchr.parse(s).unwrap()
    }

    #[test]
    fn merge_and_graft() {
        let merged = ASchr.partial_compose(&p("a(b(*,*),*)"), 3, &p("a(*,*)")).unwrap();
        assert_eq!(ASchr.render(&merged), "a(b(*,*),*,*)");
        let grafted = ASchr.partial_compose(&p("a(*,*)"), 1, &p("b(*,*)")).unwrap();
        assert_eq!(ASchr.render(&grafted), "a(b(*,*),*)");
        let deep = ASchr.partial_compose(&p("a(b(*,*),*)"), 2, &p("b(*,*,*)")).unwrap();
        assert_eq!(ASchr.render(&deep), "a(b(*,*,*,*),*)");
        assert!(deep.is_valid());
    }

    #[test]
    fn rejects_non_alternating() {
        assert!(ASchr.parse("a(a(*,*),*)").is_err());
        assert!(ASchr.parse("a(*)").is_err());
    }

    #[test]
    fn little_schroeder_counts() {
        // Two labelings of each Schröder tree with at least one node.
        let counts: Vec<usize> = (1..=6).map(|n| ASchrTree::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 6, 22, 90, 394]);
    }
}
