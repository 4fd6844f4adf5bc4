use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use operad_core::{Color, TypeVector};
use series::Rational;

/// A polynomial, or a series truncated at some total degree, in the
/// commuting variables `y_1, …, y_k` attached to the colors. Monomials are
/// indexed by their exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypePoly {
    k: usize,
    terms: BTreeMap<TypeVector, Rational>,
}

impl TypePoly {
    pub fn zero(k: usize) -> Self {
        TypePoly {
            k,
            terms: BTreeMap::new(),
        }
    }

    /// The variable `y_c` of the color `c`.
    pub fn var(k: usize, c: Color) -> Self {
        let mut p = TypePoly::zero(k);
        p.add_term(TypeVector::unit(k, c), Rational::one());
        p
    }

    pub fn one(k: usize) -> Self {
        let mut p = TypePoly::zero(k);
        p.add_term(TypeVector::zero(k), Rational::one());
        p
    }

    /// Number of variables.
    pub fn colors(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, alpha: TypeVector, c: Rational) {
        assert_eq!(alpha.len(), self.k, "monomial with the wrong number of variables");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(alpha.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&alpha);
        }
    }

    pub fn coeff(&self, alpha: &TypeVector) -> Rational {
        self.terms.get(alpha).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in increasing order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&TypeVector, &Rational)> {
        self.terms.iter()
    }

    /// Largest total degree of a term, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(TypeVector::degree).max()
    }

    /// Drops the terms of total degree above `bound`.
    pub fn truncate(&self, bound: u32) -> Self {
        TypePoly {
            k: self.k,
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| t.degree() <= bound)
                .map(|(t, c)| (t.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &TypePoly) -> Self {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    /// Product, truncated at total degree `bound` when given.
    pub fn mul(&self, other: &TypePoly, bound: Option<u32>) -> Self {
        let mut out = TypePoly::zero(self.k);
        for (t1, c1) in &self.terms {
            for (t2, c2) in &other.terms {
                if bound.is_some_and(|b| t1.degree() + t2.degree() > b) {
                    continue;
                }
                out.add_term(t1 + t2, c1 * c2);
            }
        }
        out
    }

    /// `p(q_1, …, q_k)` for the polynomials `images = [q_1, …, q_k]` (all in
    /// the same number of variables), truncated at `bound` when given.
    pub fn substitute(&self, images: &[TypePoly], bound: Option<u32>) -> Self {
        assert_eq!(images.len(), self.k, "one image per variable");
        let target = images.first().map_or(self.k, |q| q.k);
        let mut powers: Vec<Vec<TypePoly>> = vec![vec![TypePoly::one(target)]; self.k];
        let mut out = TypePoly::zero(target);
        for (t, c) in &self.terms {
            let mut term = TypePoly::one(target);
            for (b, &e) in t.0.iter().enumerate() {
                while powers[b].len() <= e as usize {
                    let next = powers[b].last().expect("nonempty").mul(&images[b], bound);
                    powers[b].push(next);
                }
                term = term.mul(&powers[b][e as usize], bound);
            }
            for (s, d) in term.terms {
                out.add_term(s, d * c);
            }
        }
        out
    }

    /// The univariate series obtained by sending `y_c` to `t` for `c` in
    /// `colors` and to `0` otherwise, as its coefficients by degree
    /// `0..=bound`.
    pub fn diagonal(&self, colors: &[Color], bound: u32) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); bound as usize + 1];
        for (t, c) in &self.terms {
            let d = t.degree();
            if d <= bound && t.support().all(|b| colors.contains(&b)) {
                out[d as usize] += c;
            }
        }
        out
    }

    /// Parses sums such as `y1 + 2*y1^2*y2 - 1/2*y3`.
    pub fn parse(k: usize, s: &str) -> Result<Self, String> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err("empty polynomial".into());
        }
        let mut pieces = Vec::new();
        let mut current = String::new();
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                pieces.push(std::mem::take(&mut current));
            }
            current.push(ch);
        }
        pieces.push(current);
        let mut out = TypePoly::zero(k);
        for piece in pieces {
            let (sign, body) = match piece.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            let mut coeff = Rational::from_integer(sign.into());
            let mut alpha = TypeVector::zero(k);
            for factor in body.split('*') {
                if let Some(var) = factor.strip_prefix('y') {
                    let (idx, exp) = match var.split_once('^') {
                        Some((i, e)) => (i, e.parse::<u32>().map_err(|e| format!("{factor}: {e}"))?),
                        None => (var, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| format!("bad variable {factor}"))?;
                    if idx == 0 || idx > k {
                        return Err(format!("variable {factor} out of range y1..y{k}"));
                    }
                    alpha.0[idx - 1] += exp;
                } else {
                    let value: Rational = factor.parse().map_err(|_| format!("bad coefficient {factor:?}"))?;
                    coeff *= value;
                }
            }
            out.add_term(alpha, coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for TypePoly {
    /// Terms by increasing total degree, and within a degree by decreasing
    /// exponent of `y_1`, then of `y_2`, and so on.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        for (i, (t, c)) in terms.into_iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !magnitude.is_one() || t.is_zero() {
                factors.push(magnitude.to_string());
            }
            for (b, &e) in t.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("y{}", b + 1)),
                    _ => factors.push(format!("y{}^{e}", b + 1)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}
