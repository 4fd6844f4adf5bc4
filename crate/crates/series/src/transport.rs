//! Pushforwards of series along the pruning and colorization maps, the
//! color-type table, and the encoding of noncommutative word series.

use std::collections::BTreeMap;
use std::hash::Hash;

use operad_core::{type_of, BudElem, Color, Operad, TypeVector};

use crate::{Scalar, Series};

/// `col(f)`: the series of colors `Σ ⟨x,f⟩ (out(x), in(x))`, over
/// `Bud_𝒞(As)`.
pub fn col_series<O: Operad, S: Scalar>(op: &O, f: &Series<O::Elem, S>) -> Series<BudElem<usize>, S> {
    let mut out = Series::zero(f.bound());
    for (x, c) in f.iter() {
        let ins = op.in_colors(x);
        out.add_term_unchecked(BudElem::new(op.out_color(x), ins.len(), ins), c);
    }
    out
}

/// `pru(f)`: the pruned series, over the ground operad.
pub fn pru_series<E: Clone + Eq + Hash, S: Scalar>(f: &Series<BudElem<E>, S>) -> Series<E, S> {
    let mut out = Series::zero(f.bound());
    for (x, c) in f.iter() {
        out.add_term_unchecked(x.ground.clone(), c);
    }
    out
}

/// `colt(f)`: coefficients summed by output color and type of the input
/// word. The key `(a, α)` stands for the monomial `x_a Y^α`.
pub fn colt_table<O: Operad, S: Scalar>(op: &O, f: &Series<O::Elem, S>) -> BTreeMap<(Color, TypeVector), S> {
    let k = op.color_count();
    let mut table: BTreeMap<(Color, TypeVector), S> = BTreeMap::new();
    for (x, c) in f.iter() {
        let slot = table
            .entry((op.out_color(x), type_of(k, &op.in_colors(x))))
            .or_insert_with(S::zero);
        slot.add_assign(c);
    }
    table.retain(|_, c| !c.is_zero());
    table
}

/// Encodes a noncommutative polynomial over an alphabet of `k` letters
/// (colors `0..k`) as a series on `Bud(As)` with the extra color `◊ = k`:
/// the word `u` becomes `(◊, ⋆_{|u|+1}, u◊)`. Words longer than `bound − 1`
/// are dropped.
pub fn mu_encode<S: Scalar>(
    words: &[(Vec<Color>, S)],
    k: usize,
    bound: usize,
) -> Series<BudElem<usize>, S> {
    let mut out = Series::zero(bound);
    for (w, c) in words {
        if w.len() < bound {
            let mut ins = w.clone();
            ins.push(k);
            out.add_term_unchecked(BudElem::new(k, w.len() + 1, ins), c);
        }
    }
    out
}
