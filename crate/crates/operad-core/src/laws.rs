//! Checks of the operad axioms on concrete elements, shared by the test
//! suites of every operad implementation.

use crate::Operad;

/// Outcome of an axiom check that applies: `Ok(())` when the identity holds,
/// `Err` with both sides rendered otherwise.
pub type LawResult = Result<(), String>;

fn compare<O: Operad>(op: &O, law: &str, lhs: &O::Elem, rhs: &O::Elem) -> LawResult {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{law}: {} ≠ {}", op.render(lhs), op.render(rhs)))
    }
}

/// `(x ∘_i y) ∘_{i+j−1} z = x ∘_i (y ∘_j z)`. Returns `None` when the
/// compositions are not defined.
pub fn sequential<O: Operad>(
    op: &O,
    x: &O::Elem,
    i: usize,
    y: &O::Elem,
    j: usize,
    z: &O::Elem,
) -> Option<LawResult> {
    if !op.composable(x, i, y) || !op.composable(y, j, z) {
        return None;
    }
    let lhs = op.partial_compose(&op.partial_compose(x, i, y).ok()?, i + j - 1, z);
    let rhs = op.partial_compose(y, j, z).and_then(|yz| op.partial_compose(x, i, &yz));
    Some(match (lhs, rhs) {
        (Ok(l), Ok(r)) => compare(op, "sequential associativity", &l, &r),
        (l, r) => Err(format!("sequential associativity: undefined side {l:?} / {r:?}")),
    })
}

/// `(x ∘_i y) ∘_{j+|y|−1} z = (x ∘_j z) ∘_i y` for `i < j`. Returns `None`
/// when the compositions are not defined.
pub fn parallel<O: Operad>(
    op: &O,
    x: &O::Elem,
    i: usize,
    y: &O::Elem,
    j: usize,
    z: &O::Elem,
) -> Option<LawResult> {
    if i >= j || !op.composable(x, i, y) || !op.composable(x, j, z) {
        return None;
    }
    let m = op.arity(y);
    let lhs = op
        .partial_compose(x, i, y)
        .and_then(|xy| op.partial_compose(&xy, j + m - 1, z));
    let rhs = op
        .partial_compose(x, j, z)
        .and_then(|xz| op.partial_compose(&xz, i, y));
    Some(match (lhs, rhs) {
        (Ok(l), Ok(r)) => compare(op, "parallel associativity", &l, &r),
        (l, r) => Err(format!("parallel associativity: undefined side {l:?} / {r:?}")),
    })
}

/// Both unit laws for `x`: `𝟙_{out(x)} ∘_1 x = x` and `x ∘_i 𝟙_{in_i(x)} = x`
/// for every position `i`.
pub fn units<O: Operad>(op: &O, x: &O::Elem) -> LawResult {
    let fail = |e: crate::OperadError| Err(format!("unit law: {e}"));
    let left = match op.unit(op.out_color(x)).and_then(|u| op.partial_compose(&u, 1, x)) {
        Ok(v) => v,
        Err(e) => return fail(e),
    };
    compare(op, "left unit", &left, x)?;
    for i in 1..=op.arity(x) {
        let right = match op.unit(op.in_color(x, i)).and_then(|u| op.partial_compose(x, i, &u)) {
            Ok(v) => v,
            Err(e) => return fail(e),
        };
        compare(op, "right unit", &right, x)?;
    }
    Ok(())
}

/// Checks every applicable axiom on the triple `(x, y, z)` at positions
/// `(i, j)`, and the arity of the composite. Returns the number of
/// identities checked.
pub fn check_triple<O: Operad>(
    op: &O,
    x: &O::Elem,
    i: usize,
    y: &O::Elem,
    j: usize,
    z: &O::Elem,
) -> Result<usize, String> {
    let mut checked = 0;
    if op.composable(x, i, y) {
        let xy = op.compose_unchecked(x, i, y);
        if op.arity(&xy) != op.arity(x) + op.arity(y) - 1 {
            return Err(format!("arity of {} is wrong", op.render(&xy)));
        }
        checked += 1;
    }
    for law in [sequential(op, x, i, y, j, z), parallel(op, x, i, y, j, z)]
        .into_iter()
        .flatten()
    {
        law?;
        checked += 1;
    }
    for e in [x, y, z] {
        units(op, e)?;
    }
    Ok(checked + 3)
}
