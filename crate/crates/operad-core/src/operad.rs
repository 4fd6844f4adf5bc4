use std::fmt::Debug;
use std::hash::Hash;

use crate::{Color, OperadError};

/// The behavioral contract of a colored operad.
///
/// Implementors provide arities, colors, units and a raw composition
/// [`Operad::compose_unchecked`]; the checked operations are derived from
/// those. Positions are 1-based throughout, as in `x ∘_i y`.
///
/// Equality and hashing of elements are structural, which coincides with
/// equality of their canonical serializations produced by [`Operad::render`].
pub trait Operad {
    type Elem: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    /// Number of colors of the operad.
    fn color_count(&self) -> usize;

    fn arity(&self, x: &Self::Elem) -> usize;

    fn out_color(&self, x: &Self::Elem) -> Color;

    /// The `i`-th input color of `x`, for `1 ≤ i ≤ arity(x)`.
    fn in_color(&self, x: &Self::Elem, i: usize) -> Color;

    fn unit(&self, c: Color) -> Result<Self::Elem, OperadError>;

    /// `x ∘_i y` without any check. Callers must have established
    /// `1 ≤ i ≤ arity(x)` and `out(y) = in_i(x)`.
    fn compose_unchecked(&self, x: &Self::Elem, i: usize, y: &Self::Elem) -> Self::Elem;

    /// Canonical textual form of `x`.
    fn render(&self, x: &Self::Elem) -> String;

    /// Inverse of [`Operad::render`].
    fn parse(&self, s: &str) -> Result<Self::Elem, OperadError>;

    /// Name of a color, used in messages and in renderings.
    fn color_name(&self, c: Color) -> String {
        (c + 1).to_string()
    }

    /// All elements of arity `n`, for operads that are locally finite.
    fn elements(&self, _n: usize) -> Option<Vec<Self::Elem>> {
        None
    }

    fn in_colors(&self, x: &Self::Elem) -> Vec<Color> {
        (1..=self.arity(x)).map(|i| self.in_color(x, i)).collect()
    }

    fn is_unit(&self, x: &Self::Elem) -> bool {
        self.arity(x) == 1
            && self
                .unit(self.out_color(x))
                .map(|u| &u == x)
                .unwrap_or(false)
    }

    fn composable(&self, x: &Self::Elem, i: usize, y: &Self::Elem) -> bool {
        i >= 1 && i <= self.arity(x) && self.in_color(x, i) == self.out_color(y)
    }

    fn partial_compose(
        &self,
        x: &Self::Elem,
        i: usize,
        y: &Self::Elem,
    ) -> Result<Self::Elem, OperadError> {
        let n = self.arity(x);
        if i == 0 || i > n {
            return Err(OperadError::PositionOutOfRange {
                position: i,
                arity: n,
            });
        }
        let expected = self.in_color(x, i);
        let found = self.out_color(y);
        if expected != found {
            return Err(OperadError::CompositionUndefined {
                position: i,
                expected: self.color_name(expected),
                found: self.color_name(found),
            });
        }
        Ok(self.compose_unchecked(x, i, y))
    }

    /// `x ∘ [y_1, …, y_n]`, computed as the right-to-left fold of partial
    /// compositions `(…((x ∘_n y_n) ∘_{n−1} y_{n−1})…) ∘_1 y_1`.
    fn full_compose(&self, x: &Self::Elem, ys: &[Self::Elem]) -> Result<Self::Elem, OperadError> {
        let n = self.arity(x);
        if ys.len() != n {
            return Err(OperadError::ArityMismatch {
                expected: n,
                found: ys.len(),
            });
        }
        let mut acc = x.clone();
        for (i, y) in ys.iter().enumerate().rev() {
            acc = self.partial_compose(&acc, i + 1, y)?;
        }
        Ok(acc)
    }

    /// Unchecked variant of [`Operad::full_compose`] taking borrowed operands.
    fn full_compose_unchecked(&self, x: &Self::Elem, ys: &[&Self::Elem]) -> Self::Elem {
        let mut acc = x.clone();
        for (i, y) in ys.iter().enumerate().rev() {
            acc = self.compose_unchecked(&acc, i + 1, y);
        }
        acc
    }
}
