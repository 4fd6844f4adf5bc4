//! Arity-graded computation of the least solution of `x = start + f ⊙ x`.

use std::collections::HashMap;
use std::hash::Hash;

use operad_core::{Color, Operad};

use crate::{iteration_cap, Scalar, Series, SeriesError};

type Slice<E, S> = Vec<Vec<(E, S)>>;

/// The least solution of `x = start + f ⊙ x`, stored slice by slice:
/// `slice(m, c)` holds the terms of arity `m` and output color `c`.
///
/// A term of arity `m` is either a term of `start`, or `y ∘ [z_1, …, z_k]`
/// with `k ≥ 2` and every `z_j` of arity below `m`, or `y ∘_1 z` for a
/// unary `y` and `z` of arity `m`. Each slice is therefore finished before
/// the next one starts, and only the unary part needs to be iterated, which
/// stops because it is finitely factorizing.
#[derive(Clone, Debug)]
pub struct TreeSlices<E, S> {
    slices: Vec<Slice<E, S>>,
}

struct Parts<'a, E, S> {
    wide: Vec<(&'a E, Vec<Color>, &'a S)>,
    unary: Vec<Vec<(&'a E, &'a S)>>,
    cap: usize,
}

impl<'a, E: Clone + Eq + Hash, S: Scalar> Parts<'a, E, S> {
    fn new<O: Operad<Elem = E>>(op: &O, f: &'a Series<E, S>, max_arity: usize) -> Result<Self, SeriesError> {
        let cap = iteration_cap(op, f)?;
        let mut wide = Vec::new();
        let mut unary = vec![vec![]; op.color_count()];
        for (y, a) in f.iter() {
            let n = op.arity(y);
            if n == 1 {
                unary[op.in_color(y, 1)].push((y, a));
            } else if n <= max_arity {
                wide.push((y, op.in_colors(y), a));
            }
        }
        Ok(Parts { wide, unary, cap })
    }
}

fn accumulate<E: Eq + Hash, S: Scalar>(acc: &mut HashMap<E, S>, x: E, w: &S) {
    acc.entry(x).or_insert_with(S::zero).add_assign(w);
}

/// Calls `emit` on every `y ∘ [z_1, …, z_k]` whose arguments are taken from
/// the finished slices and whose arities sum to `m`.
#[allow(clippy::too_many_arguments)]
fn spread<'a, O: Operad, S: Scalar>(
    op: &O,
    y: &O::Elem,
    ins: &[Color],
    slices: &'a [Slice<O::Elem, S>],
    m: usize,
    used: usize,
    weight: S,
    chosen: &mut Vec<&'a O::Elem>,
    emit: &mut dyn FnMut(O::Elem, S),
) {
    let pos = chosen.len();
    let left = ins.len() - pos;
    if left == 0 {
        if used == m {
            emit(op.full_compose_unchecked(y, chosen), weight);
        }
        return;
    }
    let rest = m - used;
    if rest < left {
        return;
    }
    let sizes = if left == 1 { rest..=rest } else { 1..=rest - (left - 1) };
    for s in sizes {
        let Some(slice) = slices.get(s) else { continue };
        for (z, w) in &slice[ins[pos]] {
            chosen.push(z);
            spread(op, y, ins, slices, m, used + s, weight.mul(w), chosen, emit);
            chosen.pop();
        }
    }
}

impl<E: Clone + Eq + Hash, S: Scalar> TreeSlices<E, S> {
    /// Solves `x = start + f ⊙ x` up to the common bound of `f` and `start`.
    pub fn build<O: Operad<Elem = E>>(op: &O, f: &Series<E, S>, start: &Series<E, S>) -> Result<Self, SeriesError> {
        f.check_bound(start)?;
        let n = f.bound();
        let k = op.color_count();
        let parts = Parts::new(op, f, n)?;
        let mut slices: Vec<Slice<E, S>> = vec![vec![vec![]; k]];
        for m in 1..=n {
            let mut acc: HashMap<E, S> = HashMap::new();
            for (x, c) in start.iter() {
                if op.arity(x) == m {
                    accumulate(&mut acc, x.clone(), c);
                }
            }
            for (y, ins, a) in &parts.wide {
                if ins.len() <= m {
                    let mut chosen = Vec::with_capacity(ins.len());
                    spread(op, y, ins, &slices, m, 0, (*a).clone(), &mut chosen, &mut |x, w| {
                        accumulate(&mut acc, x, &w)
                    });
                }
            }
            let mut delta: Vec<(E, S)> = acc.iter().map(|(x, c)| (x.clone(), c.clone())).collect();
            let mut steps = 0;
            while !delta.is_empty() {
                steps += 1;
                if steps > parts.cap {
                    return Err(SeriesError::Divergence("unary closure did not stabilize".into()));
                }
                let mut next: HashMap<E, S> = HashMap::new();
                for (z, w) in &delta {
                    for (r, a) in &parts.unary[op.out_color(z)] {
                        accumulate(&mut next, op.compose_unchecked(r, 1, z), &a.mul(w));
                    }
                }
                for (x, w) in &next {
                    accumulate(&mut acc, x.clone(), w);
                }
                delta = next.into_iter().filter(|(_, w)| !w.is_zero()).collect();
            }
            let mut slice: Slice<E, S> = vec![vec![]; k];
            for (x, w) in acc {
                if !w.is_zero() {
                    slice[op.out_color(&x)].push((x, w));
                }
            }
            slices.push(slice);
        }
        Ok(TreeSlices { slices })
    }

    /// Largest arity stored.
    pub fn bound(&self) -> usize {
        self.slices.len() - 1
    }

    /// Terms of arity `m` and output color `c`.
    pub fn slice(&self, m: usize, c: Color) -> &[(E, S)] {
        self.slices.get(m).and_then(|s| s.get(c)).map_or(&[], |v| v.as_slice())
    }

    /// All stored terms as a series truncated at [`TreeSlices::bound`].
    pub fn into_series(self) -> Series<E, S> {
        let mut out = Series::zero(self.bound());
        for slice in self.slices {
            for group in slice {
                for (x, w) in group {
                    out.add_term_unchecked(x, &w);
                }
            }
        }
        out
    }

    /// Streams the terms of arity `bound + 1` of the same solution without
    /// storing them. Every tree is reported separately, so one element may
    /// be emitted several times; only the terms satisfying `keep` are
    /// passed to `emit`.
    pub fn stream_next<O: Operad<Elem = E>>(
        &self,
        op: &O,
        f: &Series<E, S>,
        start: &Series<E, S>,
        keep: &dyn Fn(&E) -> bool,
        emit: &mut dyn FnMut(E, S),
    ) -> Result<(), SeriesError> {
        let m = self.bound() + 1;
        let parts = Parts::new(op, f, m)?;
        let mut failed = false;
        {
            let mut visit = |x: E, w: S| {
                if !failed {
                    failed = !unary_walk(op, &parts, x, w, 0, keep, emit);
                }
            };
            for (x, c) in start.iter() {
                if op.arity(x) == m {
                    visit(x.clone(), c.clone());
                }
            }
            for (y, ins, a) in &parts.wide {
                if ins.len() <= m {
                    let mut chosen = Vec::with_capacity(ins.len());
                    spread(op, y, ins, &self.slices, m, 0, (*a).clone(), &mut chosen, &mut visit);
                }
            }
        }
        if failed {
            Err(SeriesError::Divergence("unary closure did not stabilize".into()))
        } else {
            Ok(())
        }
    }
}

fn unary_walk<O: Operad, S: Scalar>(
    op: &O,
    parts: &Parts<'_, O::Elem, S>,
    x: O::Elem,
    w: S,
    depth: usize,
    keep: &dyn Fn(&O::Elem) -> bool,
    emit: &mut dyn FnMut(O::Elem, S),
) -> bool {
    if depth > parts.cap {
        return false;
    }
    for (r, a) in &parts.unary[op.out_color(&x)] {
        let y = op.compose_unchecked(r, 1, &x);
        if !unary_walk(op, parts, y, a.mul(&w), depth + 1, keep, emit) {
            return false;
        }
    }
    if keep(&x) {
        emit(x, w);
    }
    true
}
