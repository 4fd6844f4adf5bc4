//! The pre-Lie product, the composition product, their powers and stars,
//! and the ⊙-inverse.

use operad_core::{Color, Operad};
use operad_zoo::{degree_bound, finitely_factorizing_check};

use crate::{units_series, Scalar, Series, SeriesError, TreeSlices};

/// Terms of a series grouped by output color, each group sorted by arity.
struct ByColor<'a, E, S> {
    groups: Vec<Vec<(&'a E, &'a S, usize)>>,
    min_arity: usize,
}

impl<'a, E: Clone + Eq + std::hash::Hash, S: Scalar> ByColor<'a, E, S> {
    fn new<O: Operad<Elem = E>>(op: &O, g: &'a Series<E, S>) -> Self {
        let mut groups = vec![vec![]; op.color_count()];
        let mut min_arity = usize::MAX;
        for (z, c) in g.iter() {
            let a = op.arity(z);
            min_arity = min_arity.min(a);
            groups[op.out_color(z)].push((z, c, a));
        }
        for group in &mut groups {
            group.sort_by_key(|t| t.2);
        }
        ByColor { groups, min_arity }
    }
}

/// `f ↶ g`: the sum of `⟨y,f⟩⟨z,g⟩ · y ∘_i z` over all defined compositions,
/// truncated at the common bound.
pub fn pre_lie<O: Operad, S: Scalar>(
    op: &O,
    f: &Series<O::Elem, S>,
    g: &Series<O::Elem, S>,
) -> Result<Series<O::Elem, S>, SeriesError> {
    f.check_bound(g)?;
    let n = f.bound();
    let by = ByColor::new(op, g);
    let mut out = Series::zero(n);
    for (y, a) in f.iter() {
        let m = op.arity(y);
        let ins = op.in_colors(y);
        for (pos, &c) in ins.iter().enumerate() {
            for &(z, b, k) in &by.groups[c] {
                if m + k - 1 > n {
                    break;
                }
                out.add_term_unchecked(op.compose_unchecked(y, pos + 1, z), &a.mul(b));
            }
        }
    }
    Ok(out)
}

/// `f ⊙ g`: the sum of `⟨y,f⟩ Π_i ⟨z_i,g⟩ · y ∘ [z_1, …, z_{|y|}]`,
/// truncated at the common bound.
pub fn compose_prod<O: Operad, S: Scalar>(
    op: &O,
    f: &Series<O::Elem, S>,
    g: &Series<O::Elem, S>,
) -> Result<Series<O::Elem, S>, SeriesError> {
    f.check_bound(g)?;
    let n = f.bound();
    let by = ByColor::new(op, g);
    let mut out = Series::zero(n);
    if g.is_empty() {
        return Ok(out);
    }
    for (y, a) in f.iter() {
        let ins = op.in_colors(y);
        if ins.len() * by.min_arity > n {
            continue;
        }
        let mut chosen: Vec<&O::Elem> = Vec::with_capacity(ins.len());
        fill(op, y, &ins, &by, n, 0, a.clone(), &mut chosen, &mut out);
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn fill<'a, O: Operad, S: Scalar>(
    op: &O,
    y: &O::Elem,
    ins: &[Color],
    by: &ByColor<'a, O::Elem, S>,
    n: usize,
    used: usize,
    coeff: S,
    chosen: &mut Vec<&'a O::Elem>,
    out: &mut Series<O::Elem, S>,
) {
    let pos = chosen.len();
    if pos == ins.len() {
        out.add_term_unchecked(op.full_compose_unchecked(y, chosen), &coeff);
        return;
    }
    let reserve = (ins.len() - pos - 1) * by.min_arity;
    for &(z, b, k) in &by.groups[ins[pos]] {
        if used + k + reserve > n {
            break;
        }
        chosen.push(z);
        fill(op, y, ins, by, n, used + k, coeff.mul(b), chosen, out);
        chosen.pop();
    }
}

/// `f^{↶_ℓ}`: `u` for `ℓ = 0`, then `f^{↶_{ℓ+1}} = f^{↶_ℓ} ↶ f`.
pub fn pre_lie_power<O: Operad, S: Scalar>(
    op: &O,
    f: &Series<O::Elem, S>,
    ell: usize,
) -> Result<Series<O::Elem, S>, SeriesError> {
    let mut p = units_series(op, f.bound());
    for _ in 0..ell {
        p = pre_lie(op, &p, f)?;
    }
    Ok(p)
}

/// `f^{⊙_ℓ}`: `u` for `ℓ = 0`, then `f^{⊙_{ℓ+1}} = f^{⊙_ℓ} ⊙ f`.
pub fn compose_power<O: Operad, S: Scalar>(
    op: &O,
    f: &Series<O::Elem, S>,
    ell: usize,
) -> Result<Series<O::Elem, S>, SeriesError> {
    let mut p = units_series(op, f.bound());
    for _ in 0..ell {
        p = compose_prod(op, &p, f)?;
    }
    Ok(p)
}

/// Number of iterations after which a star computation must have
/// stabilized, or an error when the arity-one part of the support is not
/// finitely factorizing.
pub fn iteration_cap<O: Operad, S: Scalar>(op: &O, f: &Series<O::Elem, S>) -> Result<usize, SeriesError> {
    let unary: Vec<&O::Elem> = f.support().filter(|x| op.arity(x) == 1).collect();
    let report = finitely_factorizing_check(op, unary);
    if !report.ok {
        return Err(SeriesError::Divergence(
            "the arity-one part of the support is not finitely factorizing".into(),
        ));
    }
    Ok(degree_bound(f.bound(), report.longest_chain) + 2)
}

/// `Σ_ℓ start ↶ f ↶ … ↶ f` (ℓ left-nested factors), which is
/// `start ⊙ f^{↶*}` when `start` is a sum of units.
pub fn pre_lie_closure<O: Operad, S: Scalar>(
    op: &O,
    start: &Series<O::Elem, S>,
    f: &Series<O::Elem, S>,
) -> Result<Series<O::Elem, S>, SeriesError> {
    let cap = iteration_cap(op, f)?;
    let mut total = start.clone();
    let mut p = start.clone();
    for _ in 0..cap {
        p = pre_lie(op, &p, f)?;
        if p.is_empty() {
            return Ok(total);
        }
        total.add_assign(&p);
    }
    Err(SeriesError::Divergence("pre-Lie iteration did not stabilize".into()))
}

/// `f^{↶*}`, the unique solution of `x = u + x ↶ f`.
pub fn pre_lie_star<O: Operad, S: Scalar>(
    op: &O,
    f: &Series<O::Elem, S>,
) -> Result<Series<O::Elem, S>, SeriesError> {
    pre_lie_closure(op, &units_series(op, f.bound()), f)
}

/// `Σ_ℓ f^{⊙_ℓ} ⊙ start`, computed level by level as `q_{ℓ+1} = f ⊙ q_ℓ`.
/// With `start` a sum of units, this counts perfect trees.
pub fn perfect_closure<O: Operad, S: Scalar>(
    op: &O,
    f: &Series<O::Elem, S>,
    start: &Series<O::Elem, S>,
) -> Result<Series<O::Elem, S>, SeriesError> {
    let cap = iteration_cap(op, f)?;
    let mut total = start.clone();
    let mut q = start.clone();
    for _ in 0..cap {
        q = compose_prod(op, f, &q)?;
        if q.is_empty() {
            return Ok(total);
        }
        total.add_assign(&q);
    }
    Err(SeriesError::Divergence("composition iteration did not stabilize".into()))
}

/// `f^{⊙*}`, the unique solution of `x = u + x ⊙ f`.
pub fn compose_star<O: Operad, S: Scalar>(
    op: &O,
    f: &Series<O::Elem, S>,
) -> Result<Series<O::Elem, S>, SeriesError> {
    perfect_closure(op, f, &units_series(op, f.bound()))
}

/// The least solution of `x = start + f ⊙ x`. With `start` a sum of units
/// this sums over all syntax trees on the support of `f`, weighted by the
/// product of their node coefficients.
pub fn tree_closure<O: Operad, S: Scalar>(
    op: &O,
    f: &Series<O::Elem, S>,
    start: &Series<O::Elem, S>,
) -> Result<Series<O::Elem, S>, SeriesError> {
    Ok(TreeSlices::build(op, f, start)?.into_series())
}

/// Unit coefficients `λ_a` and the non-unit part of `f`.
fn split_units<O: Operad, S: Scalar>(
    op: &O,
    f: &Series<O::Elem, S>,
) -> Result<(Vec<S>, Series<O::Elem, S>), SeriesError> {
    let mut lambdas = Vec::with_capacity(op.color_count());
    for c in 0..op.color_count() {
        let u = op.unit(c)?;
        let l = f.coeff(&u);
        if l.inverse().is_none() {
            return Err(SeriesError::NotInvertible(format!(
                "the coefficient of the unit of color {} is not invertible",
                op.color_name(c)
            )));
        }
        lambdas.push(l);
    }
    let rest = f.filter(|x| !op.is_unit(x));
    Ok((lambdas, rest))
}

/// The ⊙-inverse of `f`, as the alternating sum over syntax trees on the
/// non-unit support `S` of `f`: a tree contributes the product over its
/// nodes `s` of `−⟨s,f⟩ / Π_j λ_{in_j(s)}`, divided by `λ_{out}`.
///
/// The sum over trees is the least solution of `y = u + w ⊙ y` for the
/// series `w` of node weights, evaluated arity slice by arity slice.
pub fn compose_inverse<O: Operad, S: Scalar>(
    op: &O,
    f: &Series<O::Elem, S>,
) -> Result<Series<O::Elem, S>, SeriesError> {
    let (lambdas, rest) = split_units(op, f)?;
    let n = f.bound();
    let inv: Vec<S> = lambdas.iter().map(|l| l.inverse().expect("checked")).collect();
    let mut weights = Series::zero(n);
    for (s, c) in rest.iter() {
        let mut w = c.neg();
        for b in op.in_colors(s) {
            w = w.mul(&inv[b]);
        }
        weights.add_term_unchecked(s.clone(), &w);
    }
    let trees = tree_closure(op, &weights, &units_series(op, n))?;
    let mut out = Series::zero(n);
    for (x, w) in trees.iter() {
        out.add_term_unchecked(x.clone(), &w.mul(&inv[op.out_color(x)]));
    }
    Ok(out)
}

/// The ⊙-inverse of `f` by fixpoint iteration of
/// `g = Λ^{-1} ⊙ (u − (f − Λ) ⊙ g)`, where `Λ` is the unit part of `f`.
pub fn compose_inverse_fixpoint<O: Operad, S: Scalar>(
    op: &O,
    f: &Series<O::Elem, S>,
) -> Result<Series<O::Elem, S>, SeriesError> {
    let (lambdas, rest) = split_units(op, f)?;
    let cap = iteration_cap(op, &rest)?;
    let inv: Vec<S> = lambdas.iter().map(|l| l.inverse().expect("checked")).collect();
    let u = units_series(op, f.bound());
    let rescale = |h: &Series<O::Elem, S>| {
        let mut out = Series::zero(h.bound());
        for (x, c) in h.iter() {
            out.add_term_unchecked(x.clone(), &c.mul(&inv[op.out_color(x)]));
        }
        out
    };
    let mut g = rescale(&u);
    for _ in 0..cap {
        let next = rescale(&u.sub(&compose_prod(op, &rest, &g)?)?);
        if next == g {
            return Ok(g);
        }
        g = next;
    }
    Err(SeriesError::Divergence("inverse fixpoint did not stabilize".into()))
}
