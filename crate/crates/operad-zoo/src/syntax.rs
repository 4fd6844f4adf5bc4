//! Syntax trees over sets of operad elements: evaluation, the hook-length
//! count of linear extensions, and bottom-up enumeration of treelike
//! expressions.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use operad_core::{Color, Operad, OperadError};

/// A syntax tree whose internal nodes are labeled by values of type `L`
/// (operad elements, or indices into a generating set) and whose leaves
/// carry a color.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SyntaxTree<L> {
    Leaf(Color),
    Node(L, Vec<SyntaxTree<L>>),
}

impl<L> SyntaxTree<L> {
    /// Number of internal nodes.
    pub fn degree(&self) -> usize {
        match self {
            SyntaxTree::Leaf(_) => 0,
            SyntaxTree::Node(_, cs) => 1 + cs.iter().map(SyntaxTree::degree).sum::<usize>(),
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            SyntaxTree::Leaf(_) => 1,
            SyntaxTree::Node(_, cs) => cs.iter().map(SyntaxTree::arity).sum(),
        }
    }

    pub fn height(&self) -> usize {
        match self {
            SyntaxTree::Leaf(_) => 0,
            SyntaxTree::Node(_, cs) => 1 + cs.iter().map(SyntaxTree::height).max().unwrap_or(0),
        }
    }

    /// `true` when all root-to-leaf paths have the same length.
    pub fn is_perfect(&self) -> bool {
        fn depth<L>(t: &SyntaxTree<L>) -> Option<usize> {
            match t {
                SyntaxTree::Leaf(_) => Some(0),
                SyntaxTree::Node(_, cs) => {
                    let first = depth(cs.first()?)?;
                    cs[1..]
                        .iter()
                        .all(|c| depth(c) == Some(first))
                        .then_some(first + 1)
                }
            }
        }
        depth(self).is_some()
    }

    /// The number of linear extensions of the tree poset, that is
    /// `deg(t)! / Π_v deg(t_v)` over internal nodes `v`.
    pub fn hook_count(&self) -> BigUint {
        fn rec<L>(t: &SyntaxTree<L>) -> (usize, BigUint) {
            match t {
                SyntaxTree::Leaf(_) => (0, BigUint::one()),
                SyntaxTree::Node(_, cs) => {
                    let mut deg = 0;
                    let mut count = BigUint::one();
                    for c in cs {
                        let (d, h) = rec(c);
                        count *= h * binomial(deg + d, d);
                        deg += d;
                    }
                    (deg + 1, count)
                }
            }
        }
        rec(self).1
    }

    pub fn map<M>(&self, f: &impl Fn(&L) -> M) -> SyntaxTree<M> {
        match self {
            SyntaxTree::Leaf(c) => SyntaxTree::Leaf(*c),
            SyntaxTree::Node(l, cs) => SyntaxTree::Node(f(l), cs.iter().map(|c| c.map(f)).collect()),
        }
    }
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc = acc * BigUint::from(n - j) / BigUint::from(j + 1);
    }
    acc
}

/// Evaluates a syntax tree labeled by elements of `op`: leaves become units
/// and each node is the full composition of its label with its children.
pub fn eval<O: Operad>(op: &O, t: &SyntaxTree<O::Elem>) -> Result<O::Elem, OperadError> {
    match t {
        SyntaxTree::Leaf(c) => op.unit(*c),
        SyntaxTree::Node(x, cs) => {
            let ys = cs.iter().map(|c| eval(op, c)).collect::<Result<Vec<_>, _>>()?;
            op.full_compose(x, &ys)
        }
    }
}

/// Evaluates a syntax tree whose labels index into `gens`.
pub fn eval_indexed<O: Operad>(
    op: &O,
    gens: &[O::Elem],
    t: &SyntaxTree<usize>,
) -> Result<O::Elem, OperadError> {
    eval(op, &t.map(&|&j| gens[j].clone()))
}

/// Result of [`finitely_factorizing_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorizingReport {
    pub ok: bool,
    /// Number of edges of a longest path in the color graph (meaningful
    /// only when `ok`).
    pub longest_chain: usize,
}

/// Decides whether a set of arity-one elements is finitely factorizing by
/// looking for a directed cycle in the multigraph with one edge
/// `out(s) → in_1(s)` per element `s`.
pub fn finitely_factorizing_check<'a, O, I>(op: &O, unary: I) -> FactorizingReport
where
    O: Operad,
    O::Elem: 'a,
    I: IntoIterator<Item = &'a O::Elem>,
{
    let k = op.color_count();
    let mut adj: Vec<Vec<Color>> = vec![vec![]; k];
    for s in unary {
        debug_assert_eq!(op.arity(s), 1);
        adj[op.out_color(s)].push(op.in_color(s, 1));
    }
    // Longest path by memoized DFS; state 1 marks nodes on the current path.
    let mut state = vec![0u8; k];
    let mut longest = vec![0usize; k];
    fn visit(c: Color, adj: &[Vec<Color>], state: &mut [u8], longest: &mut [usize]) -> bool {
        match state[c] {
            1 => return false,
            2 => return true,
            _ => {}
        }
        state[c] = 1;
        let mut best = 0;
        for &d in &adj[c] {
            if !visit(d, adj, state, longest) {
                return false;
            }
            best = best.max(longest[d] + 1);
        }
        longest[c] = best;
        state[c] = 2;
        true
    }
    for c in 0..k {
        if !visit(c, &adj, &mut state, &mut longest) {
            return FactorizingReport {
                ok: false,
                longest_chain: 0,
            };
        }
    }
    FactorizingReport {
        ok: true,
        longest_chain: longest.into_iter().max().unwrap_or(0),
    }
}

/// Upper bound on the degree of a treelike expression of an element of
/// arity `n` when the arity-one generators have chains of length at most
/// `k`.
pub fn degree_bound(n: usize, k: usize) -> usize {
    n.saturating_sub(1) + (2 * n).saturating_sub(1) * k
}

/// Counts attached to one element by [`treelike_table`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TreelikeCounts {
    /// Number of treelike expressions.
    pub trees: BigUint,
    /// Number of left expressions, the sum of hook counts of the trees.
    pub left: BigUint,
    /// Largest degree of a treelike expression.
    pub max_degree: usize,
}

/// Treelike expressions of every element of arity at most `max_arity` in
/// the suboperad generated by `gens`, tabulated bottom-up by degree.
///
/// Subtrees never have a larger arity than the whole tree, so pruning by
/// `max_arity` loses nothing. The table is complete when `gens` restricted to
/// arity one is finitely factorizing; otherwise an error is returned.
pub fn treelike_table<O: Operad>(
    op: &O,
    gens: &[O::Elem],
    max_arity: usize,
) -> Result<HashMap<O::Elem, TreelikeCounts>, OperadError> {
    let max_degree = checked_degree_bound(op, gens, max_arity)?;
    let layers = degree_layers(op, gens, max_arity, max_degree);
    let mut table: HashMap<O::Elem, TreelikeCounts> = HashMap::new();
    for (d, layer) in layers.into_iter().enumerate() {
        for (x, w) in layer {
            let e = table.entry(x).or_default();
            e.trees += w.trees;
            e.left += w.left;
            e.max_degree = d;
        }
    }
    Ok(table)
}

fn checked_degree_bound<O: Operad>(
    op: &O,
    gens: &[O::Elem],
    max_arity: usize,
) -> Result<usize, OperadError> {
    let report = finitely_factorizing_check(op, gens.iter().filter(|g| op.arity(g) == 1));
    if !report.ok {
        return Err(OperadError::Incompatible(
            "the arity-one generators are not finitely factorizing".into(),
        ));
    }
    Ok(degree_bound(max_arity, report.longest_chain))
}

#[derive(Clone, Debug)]
struct LayerWeight {
    trees: BigUint,
    left: BigUint,
}

/// `layers[d]` maps each element to the weight of its degree-`d` trees.
fn degree_layers<O: Operad>(
    op: &O,
    gens: &[O::Elem],
    max_arity: usize,
    max_degree: usize,
) -> Vec<HashMap<O::Elem, LayerWeight>> {
    let k = op.color_count();
    let mut layers: Vec<HashMap<O::Elem, LayerWeight>> = Vec::new();
    // by_color[d][c]: the entries of layers[d] with output color c.
    let mut by_color: Vec<Vec<Vec<(O::Elem, LayerWeight)>>> = Vec::new();
    let mut units = HashMap::new();
    for c in 0..k {
        if let Ok(u) = op.unit(c) {
            units.insert(
                u,
                LayerWeight {
                    trees: BigUint::one(),
                    left: BigUint::one(),
                },
            );
        }
    }
    layers.push(units);
    for d in 1..=max_degree {
        let mut layer: HashMap<O::Elem, LayerWeight> = HashMap::new();
        let prev = &layers[d - 1];
        let mut split = vec![vec![]; k];
        for (x, w) in prev {
            split[op.out_color(x)].push((x.clone(), w.clone()));
        }
        by_color.push(split);
        for g in gens {
            let m = op.arity(g);
            if m > max_arity {
                continue;
            }
            let ins = op.in_colors(g);
            let mut chosen: Vec<(&O::Elem, &LayerWeight, usize)> = Vec::with_capacity(m);
            extend_children(
                op, g, &ins, &by_color, d - 1, max_arity, 0, &mut chosen, &mut layer,
            );
        }
        if layer.is_empty() {
            // Removing a bottom node of a larger tree never increases its
            // arity, so no larger degree can fit either.
            break;
        }
        layers.push(layer);
    }
    layers
}

#[allow(clippy::too_many_arguments)]
fn extend_children<'a, O: Operad>(
    op: &O,
    g: &O::Elem,
    ins: &[Color],
    by_color: &'a [Vec<Vec<(O::Elem, LayerWeight)>>],
    degree_left: usize,
    max_arity: usize,
    arity_used: usize,
    chosen: &mut Vec<(&'a O::Elem, &'a LayerWeight, usize)>,
    out: &mut HashMap<O::Elem, LayerWeight>,
) {
    let pos = chosen.len();
    if pos == ins.len() {
        if degree_left != 0 {
            return;
        }
        let ys: Vec<&O::Elem> = chosen.iter().map(|(y, _, _)| *y).collect();
        let x = op.full_compose_unchecked(g, &ys);
        let mut trees = BigUint::one();
        let mut left = BigUint::one();
        let mut deg = 0;
        for (_, w, d) in chosen.iter() {
            trees *= &w.trees;
            left *= &w.left * binomial(deg + d, *d);
            deg += d;
        }
        let e = out.entry(x).or_insert_with(|| LayerWeight {
            trees: BigUint::zero(),
            left: BigUint::zero(),
        });
        e.trees += trees;
        e.left += left;
        return;
    }
    let remaining_slots = ins.len() - pos - 1;
    let last = pos + 1 == ins.len();
    let lo = if last { degree_left } else { 0 };
    for d in lo..=degree_left {
        for (y, w) in &by_color[d][ins[pos]] {
            let a = op.arity(y);
            if arity_used + a + remaining_slots > max_arity {
                continue;
            }
            chosen.push((y, w, d));
            extend_children(
                op,
                g,
                ins,
                by_color,
                degree_left - d,
                max_arity,
                arity_used + a,
                chosen,
                out,
            );
            chosen.pop();
        }
    }
}

/// Counts of perfect treelike expressions (all leaves at the same depth) of
/// every element of arity at most `max_arity`, tabulated by height.
pub fn perfect_treelike_table<O: Operad>(
    op: &O,
    gens: &[O::Elem],
    max_arity: usize,
) -> Result<HashMap<O::Elem, BigUint>, OperadError> {
    let cap = checked_degree_bound(op, gens, max_arity)? + 1;
    let k = op.color_count();
    let mut level: HashMap<O::Elem, BigUint> = HashMap::new();
    for c in 0..k {
        if let Ok(u) = op.unit(c) {
            level.insert(u, BigUint::one());
        }
    }
    let mut table = level.clone();
    for _ in 0..cap {
        let mut split: Vec<Vec<(&O::Elem, &BigUint)>> = vec![vec![]; k];
        for (x, w) in &level {
            split[op.out_color(x)].push((x, w));
        }
        let mut next: HashMap<O::Elem, BigUint> = HashMap::new();
        for g in gens {
            let ins = op.in_colors(g);
            let mut stack: Vec<(Vec<&O::Elem>, BigUint, usize)> = vec![(vec![], BigUint::one(), 0)];
            while let Some((ys, w, used)) = stack.pop() {
                let pos = ys.len();
                if pos == ins.len() {
                    let x = op.full_compose_unchecked(g, &ys);
                    *next.entry(x).or_insert_with(BigUint::zero) += w;
                    continue;
                }
                let slots = ins.len() - pos - 1;
                for (y, wy) in &split[ins[pos]] {
                    let a = op.arity(y);
                    if used + a + slots <= max_arity {
                        let mut ys2 = ys.clone();
                        ys2.push(*y);
                        stack.push((ys2, &w * *wy, used + a));
                    }
                }
            }
        }
        if next.is_empty() {
            return Ok(table);
        }
        for (x, w) in &next {
            *table.entry(x.clone()).or_insert_with(BigUint::zero) += w;
        }
        level = next;
    }
    Err(OperadError::Incompatible(
        "perfect treelike expressions did not terminate within the degree bound".into(),
    ))
}

/// All treelike expressions of `x` over `gens` with degree at most
/// `degree_bound`, as trees labeled by indices into `gens`, sorted.
pub fn treelike_expressions<O: Operad>(
    op: &O,
    gens: &[O::Elem],
    x: &O::Elem,
    degree_bound: usize,
) -> Vec<SyntaxTree<usize>> {
    let n = op.arity(x);
    let k = op.color_count();
    // layers[d][c]: (element, trees) of degree d and output color c.
    let mut layers: Vec<Vec<Vec<(O::Elem, Vec<SyntaxTree<usize>>)>>> = Vec::new();
    let mut base = vec![vec![]; k];
    for (c, slot) in base.iter_mut().enumerate() {
        if let Ok(u) = op.unit(c) {
            slot.push((u, vec![SyntaxTree::Leaf(c)]));
        }
    }
    layers.push(base);
    for d in 1..=degree_bound {
        let mut layer: HashMap<O::Elem, Vec<SyntaxTree<usize>>> = HashMap::new();
        for (j, g) in gens.iter().enumerate() {
            let ins = op.in_colors(g);
            // Partial choices: (children, child trees per slot, degree used, arity used).
            type Partial<'b, E> = (Vec<&'b E>, Vec<&'b [SyntaxTree<usize>]>, usize, usize);
            let mut partial: Vec<Partial<O::Elem>> = vec![(vec![], vec![], 0, 0)];
            for (pos, &c) in ins.iter().enumerate() {
                let slots = ins.len() - pos - 1;
                let mut next = Vec::new();
                for (ys, ts, du, au) in &partial {
                    for (dd, layer_d) in layers.iter().enumerate() {
                        if du + dd > d - 1 {
                            break;
                        }
                        for (y, trees) in &layer_d[c] {
                            let a = op.arity(y);
                            if au + a + slots > n {
                                continue;
                            }
                            let mut ys2 = ys.clone();
                            ys2.push(y);
                            let mut ts2 = ts.clone();
                            ts2.push(trees.as_slice());
                            next.push((ys2, ts2, du + dd, au + a));
                        }
                    }
                }
                partial = next;
            }
            for (ys, ts, du, _) in partial {
                if du != d - 1 {
                    continue;
                }
                let value = op.full_compose_unchecked(g, &ys);
                let entry = layer.entry(value).or_default();
                for combo in cartesian(&ts) {
                    entry.push(SyntaxTree::Node(j, combo));
                }
            }
        }
        let mut split = vec![vec![]; k];
        for (y, trees) in layer {
            split[op.out_color(&y)].push((y, trees));
        }
        layers.push(split);
    }
    let mut found: Vec<SyntaxTree<usize>> = layers
        .into_iter()
        .flatten()
        .flatten()
        .filter(|(y, _)| y == x)
        .flat_map(|(_, ts)| ts)
        .collect();
    found.sort();
    found
}

fn cartesian(choices: &[&[SyntaxTree<usize>]]) -> Vec<Vec<SyntaxTree<usize>>> {
    let mut acc: Vec<Vec<SyntaxTree<usize>>> = vec![vec![]];
    for options in choices {
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |t| {
                    let mut v = prefix.clone();
                    v.push(t.clone());
                    v
                })
            })
            .collect();
    }
    acc
}

/// The number of left expressions of `x`: the sum of the hook counts of its
/// treelike expressions.
pub fn left_expression_count<O: Operad>(
    op: &O,
    gens: &[O::Elem],
    x: &O::Elem,
) -> Result<BigUint, OperadError> {
    let table = treelike_table(op, gens, op.arity(x))?;
    Ok(table.get(x).map(|c| c.left.clone()).unwrap_or_default())
}

/// The largest degree of a treelike expression of `x` over `gens`.
pub fn s_degree<O: Operad>(op: &O, gens: &[O::Elem], x: &O::Elem) -> Result<usize, OperadError> {
    let table = treelike_table(op, gens, op.arity(x))?;
    table
        .get(x)
        .map(|c| c.max_degree)
        .ok_or_else(|| OperadError::Incompatible(format!("{} is not generated", op.render(x))))
}
