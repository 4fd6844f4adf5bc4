use std::collections::HashMap;
use std::sync::Arc;

use operad_core::{Color, ColorSet, Operad, OperadError};

use crate::term::Term;

/// A generator of a colored graded collection: a name, an output color and
/// a nonempty word of input colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub out: Color,
    pub ins: Vec<Color>,
}

impl Generator {
    pub fn arity(&self) -> usize {
        self.ins.len()
    }
}

/// A finite colored graded collection `C`, the signature of `Free(C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    colors: ColorSet,
    gens: Vec<Generator>,
    by_name: HashMap<String, usize>,
}

impl Signature {
    pub fn new(colors: ColorSet, gens: Vec<Generator>) -> Result<Self, OperadError> {
        let mut by_name = HashMap::new();
        for (idx, g) in gens.iter().enumerate() {
            if g.name.is_empty() || !g.name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_') {
                return Err(OperadError::Signature(format!("invalid generator name {:?}", g.name)));
            }
            if g.ins.is_empty() {
                return Err(OperadError::Signature(format!("generator {} has arity 0", g.name)));
            }
            if let Some(&c) = std::iter::once(&g.out).chain(&g.ins).find(|c| !colors.contains(**c)) {
                return Err(OperadError::UnknownColor(format!("#{c} in generator {}", g.name)));
            }
            if by_name.insert(g.name.clone(), idx).is_some() {
                return Err(OperadError::Signature(format!("duplicate generator {}", g.name)));
            }
        }
        Ok(Signature { colors, gens, by_name })
    }

    /// A monochrome signature from `(name, arity)` pairs.
    pub fn monochrome<S: AsRef<str>>(gens: &[(S, usize)]) -> Result<Self, OperadError> {
        let gens = gens
            .iter()
            .map(|(name, n)| Generator {
                name: name.as_ref().to_string(),
                out: 0,
                ins: vec![0; *n],
            })
            .collect();
        Signature::new(ColorSet::monochrome(), gens)
    }

    /// The signature `{a1, …, am}` with `ak` of arity `k`, standing for the
    /// operad of all planar trees with node arities capped at `m`.
    pub fn tree(cap: usize) -> Result<Self, OperadError> {
        let gens: Vec<(String, usize)> = (1..=cap).map(|k| (format!("a{k}"), k)).collect();
        Signature::monochrome(&gens)
    }

    pub fn colors(&self) -> &ColorSet {
        &self.colors
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn generator(&self, idx: usize) -> &Generator {
        &self.gens[idx]
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }

    pub fn has_unary(&self) -> bool {
        self.gens.iter().any(|g| g.arity() == 1)
    }
}

/// One token of the preorder traversal of a syntax tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tok {
    Leaf(Color),
    Node(u32),
}

/// An element of `Free(C)`, stored as its preorder traversal. Leaves carry
/// their color, so the tree reduced to one leaf is the unit of that color.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeTree(Vec<Tok>);

impl FreeTree {
    pub fn unit(c: Color) -> Self {
        FreeTree(vec![Tok::Leaf(c)])
    }

    pub fn tokens(&self) -> &[Tok] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().filter(|t| matches!(t, Tok::Node(_))).count()
    }

    pub fn leaf_count(&self) -> usize {
        self.0.len() - self.degree()
    }

    fn nth_leaf(&self, i: usize) -> (usize, Color) {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(p, t)| match t {
                Tok::Leaf(c) => Some((p, *c)),
                Tok::Node(_) => None,
            })
            .nth(i - 1)
            .expect("leaf index in range")
    }
}

/// The free colored operad `Free(C)` over a signature.
#[derive(Clone, Debug)]
pub struct FreeOperad {
    sig: Arc<Signature>,
}

impl FreeOperad {
    pub fn new(sig: Signature) -> Self {
        FreeOperad { sig: Arc::new(sig) }
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    /// The corolla of a generator, given by name.
    pub fn corolla(&self, name: &str) -> Result<FreeTree, OperadError> {
        let idx = self
            .sig
            .lookup(name)
            .ok_or_else(|| OperadError::Signature(format!("unknown generator {name}")))?;
        Ok(self.corolla_of(idx))
    }

    pub fn corolla_of(&self, idx: usize) -> FreeTree {
        let g = &self.sig.gens[idx];
        let mut toks = vec![Tok::Node(idx as u32)];
        toks.extend(g.ins.iter().map(|&c| Tok::Leaf(c)));
        FreeTree(toks)
    }

    /// End (exclusive) of the subtree starting at token `start`.
    fn subtree_end(&self, t: &FreeTree, start: usize) -> usize {
        let mut need = 1usize;
        let mut p = start;
        while need > 0 {
            match t.0[p] {
                Tok::Leaf(_) => need -= 1,
                Tok::Node(g) => need += self.sig.gens[g as usize].arity() - 1,
            }
            p += 1;
        }
        p
    }

    /// Length of a longest root-to-leaf path.
    pub fn height(&self, t: &FreeTree) -> usize {
        // Stack of remaining children per open node, with the depth of each.
        let mut stack: Vec<usize> = Vec::new();
        let mut best = 0;
        for tok in &t.0 {
            let depth = stack.len();
            match *tok {
                Tok::Leaf(_) => {
                    best = best.max(depth);
                    pop_finished(&mut stack);
                }
                Tok::Node(g) => stack.push(self.sig.gens[g as usize].arity()),
            }
        }
        best
    }

    /// Root generator and root subtrees, or `None` for a unit.
    pub fn split(&self, t: &FreeTree) -> Option<(usize, Vec<FreeTree>)> {
        let Tok::Node(g) = t.0[0] else { return None };
        let mut children = Vec::new();
        let mut p = 1;
        while p < t.0.len() {
            let end = self.subtree_end(t, p);
            children.push(FreeTree(t.0[p..end].to_vec()));
            p = end;
        }
        Some((g as usize, children))
    }

    /// Builds `g(children…)` after checking colors.
    pub fn node(&self, idx: usize, children: &[FreeTree]) -> Result<FreeTree, OperadError> {
        let g = &self.sig.gens[idx];
        if g.arity() != children.len() {
            return Err(OperadError::ArityMismatch {
                expected: g.arity(),
                found: children.len(),
            });
        }
        let mut toks = vec![Tok::Node(idx as u32)];
        for (i, (c, &want)) in children.iter().zip(&g.ins).enumerate() {
            let found = self.out_color(c);
            if found != want {
                return Err(OperadError::CompositionUndefined {
                    position: i + 1,
                    expected: self.color_name(want),
                    found: self.color_name(found),
                });
            }
            toks.extend_from_slice(&c.0);
        }
        Ok(FreeTree(toks))
    }

    fn to_term(&self, t: &FreeTree, pos: &mut usize, root: bool) -> Term {
        let tok = t.0[*pos];
        *pos += 1;
        match tok {
            Tok::Leaf(c) if root && !self.sig.colors.is_monochrome() => {
                Term::Unit(self.sig.colors.token(c).to_string())
            }
            Tok::Leaf(_) => Term::Leaf,
            Tok::Node(g) => {
                let g = &self.sig.gens[g as usize];
                let children = (0..g.arity()).map(|_| self.to_term(t, pos, false)).collect();
                Term::Node(g.name.clone(), children)
            }
        }
    }

    fn encode_term(&self, t: &Term, expected: Option<Color>, out: &mut Vec<Tok>) -> Result<(), String> {
        match t {
            Term::Leaf => match expected {
                Some(c) => out.push(Tok::Leaf(c)),
                None if self.sig.colors.is_monochrome() => out.push(Tok::Leaf(0)),
                None => return Err("a bare leaf needs a color, write !c".into()),
            },
            Term::Unit(tok) => {
                let c = self.sig.colors.lookup(tok).map_err(|e| e.to_string())?;
                if expected.is_some_and(|e| e != c) {
                    return Err(format!("leaf of color {tok} where another color is expected"));
                }
                out.push(Tok::Leaf(c));
            }
            Term::Node(name, cs) => {
                let idx = self.sig.lookup(name).ok_or_else(|| format!("unknown generator {name}"))?;
                let g = &self.sig.gens[idx];
                if expected.is_some_and(|e| e != g.out) {
                    return Err(format!("generator {name} has the wrong output color"));
                }
                if cs.len() != g.arity() {
                    return Err(format!("generator {name} expects {} children, got {}", g.arity(), cs.len()));
                }
                out.push(Tok::Node(idx as u32));
                for (c, &want) in cs.iter().zip(&g.ins) {
                    self.encode_term(c, Some(want), out)?;
                }
            }
            Term::Atom(name) => return Err(format!("unexpected atom {name}")),
        }
        Ok(())
    }

    /// Trees of arity `n` for each output color, when no generator is unary.
    fn enumerate(&self, n: usize) -> Vec<FreeTree> {
        let k = self.sig.colors.len();
        // table[m][c]: trees of arity m with output color c.
        let mut table: Vec<Vec<Vec<FreeTree>>> = vec![vec![vec![]; k]; n + 1];
        if n >= 1 {
            for c in 0..k {
                table[1][c].push(FreeTree::unit(c));
            }
        }
        for m in 2..=n {
            for (idx, g) in self.sig.gens.iter().enumerate() {
                let mut partial: Vec<(Vec<Tok>, usize)> = vec![(vec![Tok::Node(idx as u32)], 0)];
                for (pos, &want) in g.ins.iter().enumerate() {
                    let left = g.arity() - pos - 1;
                    let mut next = Vec::new();
                    for (toks, used) in &partial {
                        for size in 1..=(m - used - left).min(m - 1) {
                            for child in &table[size][want] {
                                let mut t = toks.clone();
                                t.extend_from_slice(&child.0);
                                next.push((t, used + size));
                            }
                        }
                    }
                    partial = next;
                }
                for (toks, used) in partial {
                    if used == m {
                        table[m][g.out].push(FreeTree(toks));
                    }
                }
            }
        }
        let mut all: Vec<FreeTree> = table.swap_remove(n).into_iter().flatten().collect();
        all.sort();
        all
    }
}

fn pop_finished(stack: &mut Vec<usize>) {
    while let Some(top) = stack.last_mut() {
        *top -= 1;
        if *top > 0 {
            break;
        }
        stack.pop();
    }
}

impl Operad for FreeOperad {
    type Elem = FreeTree;

    fn color_count(&self) -> usize {
        self.sig.colors.len()
    }

    fn color_name(&self, c: Color) -> String {
        if self.sig.colors.contains(c) {
            self.sig.colors.token(c).to_string()
        } else {
            format!("#{c}")
        }
    }

    fn arity(&self, x: &FreeTree) -> usize {
        x.leaf_count()
    }

    fn out_color(&self, x: &FreeTree) -> Color {
        match x.0[0] {
            Tok::Leaf(c) => c,
            Tok::Node(g) => self.sig.gens[g as usize].out,
        }
    }

    fn in_color(&self, x: &FreeTree, i: usize) -> Color {
        x.nth_leaf(i).1
    }

    fn in_colors(&self, x: &FreeTree) -> Vec<Color> {
        x.0.iter()
            .filter_map(|t| match t {
                Tok::Leaf(c) => Some(*c),
                Tok::Node(_) => None,
            })
            .collect()
    }

    fn unit(&self, c: Color) -> Result<FreeTree, OperadError> {
        if self.sig.colors.contains(c) {
            Ok(FreeTree::unit(c))
        } else {
            Err(OperadError::UnknownColor(format!("#{c}")))
        }
    }

    fn compose_unchecked(&self, x: &FreeTree, i: usize, y: &FreeTree) -> FreeTree {
        let (pos, _) = x.nth_leaf(i);
        let mut toks = Vec::with_capacity(x.0.len() + y.0.len() - 1);
        toks.extend_from_slice(&x.0[..pos]);
        toks.extend_from_slice(&y.0);
        toks.extend_from_slice(&x.0[pos + 1..]);
        FreeTree(toks)
    }

    fn full_compose_unchecked(&self, x: &FreeTree, ys: &[&FreeTree]) -> FreeTree {
        let mut toks = Vec::with_capacity(x.0.len() + ys.iter().map(|y| y.0.len()).sum::<usize>());
        let mut next = ys.iter();
        for tok in &x.0 {
            match tok {
                Tok::Node(_) => toks.push(*tok),
                Tok::Leaf(_) => toks.extend_from_slice(&next.next().expect("one operand per leaf").0),
            }
        }
        FreeTree(toks)
    }

    fn render(&self, x: &FreeTree) -> String {
        self.to_term(x, &mut 0, true).to_string()
    }

    fn parse(&self, s: &str) -> Result<FreeTree, OperadError> {
        let term = Term::parse(s)?;
        let mut toks = Vec::new();
        self.encode_term(&term, None, &mut toks)
            .map_err(|e| OperadError::parse(s, e))?;
        Ok(FreeTree(toks))
    }

    fn elements(&self, n: usize) -> Option<Vec<FreeTree>> {
        if self.sig.has_unary() {
            None
        } else {
            Some(self.enumerate(n))
        }
    }
}
