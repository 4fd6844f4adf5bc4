use std::collections::HashMap;
use std::hash::Hash;

use operad_core::Operad;

use crate::{Rational, Scalar, SeriesError};

/// A formal power series on a colored operad, truncated at arity `bound`.
///
/// Only nonzero coefficients are stored, and only for elements of arity at
/// most `bound`. The carrier operad is passed to every operation that needs
/// arities or compositions.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<E: Eq + Hash, S = Rational> {
    bound: usize,
    coeffs: HashMap<E, S>,
}

impl<E: Clone + Eq + Hash, S: Scalar> Series<E, S> {
    pub fn zero(bound: usize) -> Self {
        Series {
            bound,
            coeffs: HashMap::new(),
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, x: &E) -> S {
        self.coeffs.get(x).cloned().unwrap_or_else(S::zero)
    }

    pub fn get(&self, x: &E) -> Option<&S> {
        self.coeffs.get(x)
    }

    pub fn contains(&self, x: &E) -> bool {
        self.coeffs.contains_key(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&E, &S)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &E> {
        self.coeffs.keys()
    }

    /// Adds `c·x`, ignoring `x` when its arity exceeds the bound.
    pub fn add_term<O: Operad<Elem = E>>(&mut self, op: &O, x: E, c: &S) {
        if op.arity(&x) <= self.bound {
            self.add_term_unchecked(x, c);
        }
    }

    /// Adds `c·x` for an `x` already known to fit the bound.
    pub(crate) fn add_term_unchecked(&mut self, x: E, c: &S) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&x) {
            Some(slot) => {
                slot.add_assign(c);
                if slot.is_zero() {
                    self.coeffs.remove(&x);
                }
            }
            None => {
                self.coeffs.insert(x, c.clone());
            }
        }
    }

    pub fn check_bound(&self, other: &Self) -> Result<(), SeriesError> {
        if self.bound == other.bound {
            Ok(())
        } else {
            Err(SeriesError::BoundMismatch(self.bound, other.bound))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_bound(other)?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    /// In-place sum. Both series are expected to share the same bound.
    pub fn add_assign(&mut self, other: &Self) {
        for (x, c) in &other.coeffs {
            self.add_term_unchecked(x.clone(), c);
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.scale(&S::from_int(-1)))
    }

    pub fn scale(&self, lambda: &S) -> Self {
        let mut out = Series::zero(self.bound);
        for (x, c) in &self.coeffs {
            out.add_term_unchecked(x.clone(), &lambda.mul(c));
        }
        out
    }

    /// Keeps the terms satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(&E) -> bool) -> Self {
        Series {
            bound: self.bound,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(x, _)| keep(x))
                .map(|(x, c)| (x.clone(), c.clone()))
                .collect(),
        }
    }

    /// The same series seen at a smaller bound.
    pub fn truncate<O: Operad<Elem = E>>(&self, op: &O, bound: usize) -> Self {
        let mut out = self.filter(|x| op.arity(x) <= bound);
        out.bound = bound.min(self.bound);
        out
    }

    /// Terms sorted by arity, then by canonical rendering.
    pub fn sorted_terms<O: Operad<Elem = E>>(&self, op: &O) -> Vec<(String, &E, &S)> {
        let mut terms: Vec<(usize, String, &E, &S)> = self
            .coeffs
            .iter()
            .map(|(x, c)| (op.arity(x), op.render(x), x, c))
            .collect();
        terms.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        terms.into_iter().map(|(_, s, x, c)| (s, x, c)).collect()
    }

    /// One `coeff * element` line per term, in canonical order.
    pub fn render<O: Operad<Elem = E>>(&self, op: &O) -> String {
        let mut out = String::new();
        for (s, _, c) in self.sorted_terms(op) {
            let c = c.to_string();
            if c.contains(' ') {
                out.push_str(&format!("({c}) * {s}\n"));
            } else {
                out.push_str(&format!("{c} * {s}\n"));
            }
        }
        out
    }

    /// Number of support elements of each arity `0..=bound`.
    pub fn counts_by_arity<O: Operad<Elem = E>>(&self, op: &O) -> Vec<usize> {
        let mut counts = vec![0; self.bound + 1];
        for x in self.coeffs.keys() {
            counts[op.arity(x)] += 1;
        }
        counts
    }

    /// `true` when every coefficient is 0 or 1.
    pub fn is_boolean(&self) -> bool {
        self.coeffs.values().all(|c| c.is_one())
    }
}

/// The characteristic series of a set of elements.
pub fn characteristic<O: Operad, S: Scalar>(
    op: &O,
    elems: impl IntoIterator<Item = O::Elem>,
    bound: usize,
) -> Series<O::Elem, S> {
    let mut f = Series::zero(bound);
    for x in elems {
        if op.arity(&x) <= bound && !f.contains(&x) {
            f.add_term_unchecked(x, &S::one());
        }
    }
    f
}

/// The series `u` of all colored units.
pub fn units_series<O: Operad, S: Scalar>(op: &O, bound: usize) -> Series<O::Elem, S> {
    characteristic(op, (0..op.color_count()).filter_map(|c| op.unit(c).ok()), bound)
}

/// The series `Σ_{a∈colors} 𝟙_a` of the units of the given colors.
pub fn units_of<O: Operad, S: Scalar>(
    op: &O,
    colors: impl IntoIterator<Item = operad_core::Color>,
    bound: usize,
) -> Series<O::Elem, S> {
    characteristic(op, colors.into_iter().filter_map(|c| op.unit(c).ok()), bound)
}

/// `Σ_x ⟨x, f⟩⟨x, g⟩`.
pub fn scalar_product<E: Clone + Eq + Hash, S: Scalar>(f: &Series<E, S>, g: &Series<E, S>) -> S {
    let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    let mut total = S::zero();
    for (x, c) in small.iter() {
        if let Some(d) = large.get(x) {
            total.add_assign(&c.mul(d));
        }
    }
    total
}
