use operad_core::{Color, Operad, OperadError};

use crate::term::Term;

/// A binary tree stored as its preorder traversal: `true` for an internal
/// node, `false` for a leaf.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MagTree(Vec<bool>);

impl MagTree {
    pub fn leaf() -> Self {
        MagTree(vec![false])
    }

    pub fn node(left: &MagTree, right: &MagTree) -> Self {
        let mut code = Vec::with_capacity(1 + left.0.len() + right.0.len());
        code.push(true);
        code.extend_from_slice(&left.0);
        code.extend_from_slice(&right.0);
        MagTree(code)
    }

    /// The binary tree with one internal node.
    pub fn corolla() -> Self {
        MagTree(vec![true, false, false])
    }

    pub fn leaf_count(&self) -> usize {
        self.0.iter().filter(|b| !**b).count()
    }

    pub fn node_count(&self) -> usize {
        self.0.len() - self.leaf_count()
    }

    /// Left and right subtrees, or `None` for the leaf.
    pub fn split(&self) -> Option<(MagTree, MagTree)> {
        if !self.0[0] {
            return None;
        }
        let end = subtree_end(&self.0, 1);
        Some((
            MagTree(self.0[1..end].to_vec()),
            MagTree(self.0[end..].to_vec()),
        ))
    }

    /// Length of a longest root-to-leaf path (the leaf has height 0).
    pub fn height(&self) -> usize {
        match self.split() {
            None => 0,
            Some((l, r)) => 1 + l.height().max(r.height()),
        }
    }

    /// `true` when, at every node, the heights of both subtrees differ by at
    /// most one.
    pub fn is_balanced(&self) -> bool {
        fn rec(t: &MagTree) -> Option<usize> {
            match t.split() {
                None => Some(0),
                Some((l, r)) => {
                    let (hl, hr) = (rec(&l)?, rec(&r)?);
                    (hl.abs_diff(hr) <= 1).then(|| 1 + hl.max(hr))
                }
            }
        }
        rec(self).is_some()
    }

    pub fn to_term(&self) -> Term {
        match self.split() {
            None => Term::Leaf,
            Some((l, r)) => Term::Node("a".into(), vec![l.to_term(), r.to_term()]),
        }
    }

    pub fn from_term(t: &Term) -> Result<Self, String> {
        match t {
            Term::Leaf => Ok(MagTree::leaf()),
            Term::Node(_, cs) if cs.len() == 2 => {
                Ok(MagTree::node(&MagTree::from_term(&cs[0])?, &MagTree::from_term(&cs[1])?))
            }
            Term::Node(name, cs) => Err(format!("node {name} has {} children, expected 2", cs.len())),
            other => Err(format!("unexpected {other} in a binary tree")),
        }
    }

    /// Grafts `t` on the `i`-th leaf.
    pub fn graft(&self, i: usize, t: &MagTree) -> Result<MagTree, OperadError> {
        let n = self.leaf_count();
        if i == 0 || i > n {
            return Err(OperadError::PositionOutOfRange {
                position: i,
                arity: n,
            });
        }
        Ok(self.graft_unchecked(i, t))
    }

    fn graft_unchecked(&self, i: usize, t: &MagTree) -> MagTree {
        let pos = nth_leaf(&self.0, i);
        let mut code = Vec::with_capacity(self.0.len() + t.0.len() - 1);
        code.extend_from_slice(&self.0[..pos]);
        code.extend_from_slice(&t.0);
        code.extend_from_slice(&self.0[pos + 1..]);
        MagTree(code)
    }

    /// All binary trees with `n` leaves, in preorder-code order.
    pub fn all(n: usize) -> Vec<MagTree> {
        let mut table: Vec<Vec<MagTree>> = vec![vec![], vec![MagTree::leaf()]];
        for m in 2..=n {
            let mut row = Vec::new();
            for k in 1..m {
                for l in &table[k] {
                    for r in &table[m - k] {
                        row.push(MagTree::node(l, r));
                    }
                }
            }
            row.sort();
            table.push(row);
        }
        table.get(n).cloned().unwrap_or_default()
    }
}

fn subtree_end(code: &[bool], start: usize) -> usize {
    let mut need = 1usize;
    let mut p = start;
    while need > 0 {
        if code[p] {
            need += 1;
        } else {
            need -= 1;
        }
        p += 1;
    }
    p
}

fn nth_leaf(code: &[bool], i: usize) -> usize {
    code.iter()
        .enumerate()
        .filter(|(_, b)| !**b)
        .nth(i - 1)
        .map(|(p, _)| p)
        .expect("leaf index in range")
}

/// The magmatic operad of binary trees, composed by grafting.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Mag;

impl Operad for Mag {
    type Elem = MagTree;

    fn color_count(&self) -> usize {
        1
    }

    fn arity(&self, x: &MagTree) -> usize {
        x.leaf_count()
    }

    fn out_color(&self, _x: &MagTree) -> Color {
        0
    }

    fn in_color(&self, _x: &MagTree, _i: usize) -> Color {
        0
    }

    fn unit(&self, c: Color) -> Result<MagTree, OperadError> {
        if c == 0 {
            Ok(MagTree::leaf())
        } else {
            Err(OperadError::UnknownColor(self.color_name(c)))
        }
    }

    fn compose_unchecked(&self, x: &MagTree, i: usize, y: &MagTree) -> MagTree {
        x.graft_unchecked(i, y)
    }

    fn full_compose_unchecked(&self, x: &MagTree, ys: &[&MagTree]) -> MagTree {
        let mut code = Vec::with_capacity(x.0.len() + ys.iter().map(|y| y.0.len()).sum::<usize>());
        let mut next = ys.iter();
        for &b in &x.0 {
            if b {
                code.push(true);
            } else {
                code.extend_from_slice(&next.next().expect("one operand per leaf").0);
            }
        }
        MagTree(code)
    }

    fn render(&self, x: &MagTree) -> String {
        x.to_term().to_string()
    }

    fn parse(&self, s: &str) -> Result<MagTree, OperadError> {
        let t = Term::parse(s)?;
        MagTree::from_term(&t).map_err(|e| OperadError::parse(s, e))
    }

    fn elements(&self, n: usize) -> Option<Vec<MagTree>> {
        Some(MagTree::all(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grafting_on_corollas() {
        let c = MagTree::corolla();
        let left = Mag.partial_compose(&c, 1, &c).unwrap();
        let right = Mag.partial_compose(&c, 2, &c).unwrap();
        assert_eq!(Mag.render(&left), "a(a(*,*),*)");
        assert_eq!(Mag.render(&right), "a(*,a(*,*))");
        assert_eq!(Mag.partial_compose(&MagTree::leaf(), 1, &c).unwrap(), c);
        assert!(Mag.partial_compose(&c, 3, &c).is_err());
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| MagTree::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn balance_and_height() {
        let c = MagTree::corolla();
        let comb = Mag.parse("a(a(a(*,*),*),*)").unwrap();
        assert_eq!(comb.height(), 3);
        assert!(!comb.is_balanced());
        assert!(MagTree::node(&c, &c).is_balanced());
    }
}
