//! The functional equations of the color-type series, solved by iterating
//! from `f_a = y_a`.

use budgen::BudSystem;
use operad_core::Operad;

use crate::{chi_table, ChiTable, CountError, TypePoly};

fn variables(k: usize) -> Vec<TypePoly> {
    (0..k).map(|c| TypePoly::var(k, c)).collect()
}

/// Iterations after which a truncation at `bound` must be stable. A
/// derivation tree with at most `bound` leaves has at most `bound − 1`
/// branching nodes on a path, separated by chains of arity-one rules, and
/// these chains have fewer than `k` rules when the color graph is acyclic.
fn cap(k: usize, bound: u32) -> usize {
    (bound as usize + 1) * k.max(1) + 2
}

fn check<O: Operad>(sys: &BudSystem<O>) -> Result<ChiTable, CountError> {
    if !sys.factorizing_report().ok {
        return Err(CountError::Divergence(
            "the rules of arity one are not finitely factorizing".into(),
        ));
    }
    Ok(chi_table(sys))
}

fn iterate(
    k: usize,
    bound: u32,
    mut step: impl FnMut(&[TypePoly]) -> Vec<TypePoly>,
) -> Result<Vec<TypePoly>, CountError> {
    let mut f = variables(k);
    let limit = cap(k, bound);
    for _ in 0..limit {
        let next = step(&f);
        if next == f {
            return Ok(f);
        }
        f = next;
    }
    Err(CountError::NotStabilized {
        bound,
        iterations: limit,
    })
}

/// The series `f_a` with `f_a = y_a + g_a(f_1, …, f_k)` for every color
/// `a`, truncated at total degree `bound`. Their coefficients count the
/// treelike expressions by output color and input type.
pub fn solve_synt_system<O: Operad>(sys: &BudSystem<O>, bound: u32) -> Result<Vec<TypePoly>, CountError> {
    let chi = check(sys)?;
    let k = chi.colors();
    let g: Vec<TypePoly> = (0..k).map(|a| chi.g_poly(a)).collect();
    let y = variables(k);
    iterate(k, bound, |f| {
        (0..k)
            .map(|a| y[a].add(&g[a].substitute(f, Some(bound))).truncate(bound))
            .collect()
    })
}

/// The series `f_a` with `f_a(y) = y_a + f_a(g_1(y), …, g_k(y))`,
/// truncated at total degree `bound`. Their coefficients count the perfect
/// treelike expressions by output color and input type.
pub fn solve_sync_system<O: Operad>(sys: &BudSystem<O>, bound: u32) -> Result<Vec<TypePoly>, CountError> {
    let chi = check(sys)?;
    let k = chi.colors();
    let g: Vec<TypePoly> = (0..k).map(|a| chi.g_poly(a)).collect();
    let y = variables(k);
    iterate(k, bound, |f| {
        (0..k)
            .map(|a| y[a].add(&f[a].substitute(&g, Some(bound))).truncate(bound))
            .collect()
    })
}

/// The exact polynomials `f^{(0)}, …, f^{(levels)}` of the synchronous
/// iteration `f_a^{(ℓ)}(y) = y_a + f_a^{(ℓ−1)}(g(y))`, without truncation.
/// Entry `ℓ` holds one polynomial per color and counts the perfect
/// treelike expressions of height at most `ℓ`.
pub fn sync_iterates<O: Operad>(sys: &BudSystem<O>, levels: usize) -> Vec<Vec<TypePoly>> {
    let chi = chi_table(sys);
    let k = chi.colors();
    let g: Vec<TypePoly> = (0..k).map(|a| chi.g_poly(a)).collect();
    let y = variables(k);
    let mut out = vec![y.clone()];
    for _ in 0..levels {
        let prev = out.last().expect("nonempty");
        let next = (0..k).map(|a| y[a].add(&prev[a].substitute(&g, None))).collect();
        out.push(next);
    }
    out
}

