use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Exact coefficients of series: a commutative ring with exact equality.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_int(n: i64) -> Self;
    fn add_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, when it exists in the ring.
    fn inverse(&self) -> Option<Self>;
    /// The value as an integer, when it is a constant integer.
    fn as_integer(&self) -> Option<BigInt>;

    fn sub_assign(&mut self, other: &Self) {
        self.add_assign(&other.neg());
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }

    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }

    fn as_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.to_integer())
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_int(n: i64) -> Self {
        n.into()
    }

    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inverse(&self) -> Option<Self> {
        (self.abs() == One::one()).then(|| self.clone())
    }

    fn as_integer(&self) -> Option<BigInt> {
        Some(self.clone())
    }
}

/// A monomial `q_0^{e_0} q_1^{e_1} …`, stored as its exponent vector without
/// trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// The monomial `q_i`.
    pub fn var(i: usize) -> Self {
        Monomial::from_exponents(&[(i, 1)])
    }

    pub fn from_exponents(pairs: &[(usize, u32)]) -> Self {
        let mut e = Vec::new();
        for &(i, k) in pairs {
            if e.len() <= i {
                e.resize(i + 1, 0);
            }
            e[i] += k;
        }
        Monomial::trimmed(e)
    }

    fn trimmed(mut e: Vec<u32>) -> Self {
        while e.last() == Some(&0) {
            e.pop();
        }
        Monomial(e)
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::trimmed((0..n).map(|i| self.exponent(i) + other.exponent(i)).collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "q{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A polynomial in the commuting parameters `q_0, q_1, …` with rational
/// coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly(BTreeMap<Monomial, Rational>);

impl Poly {
    pub fn constant(c: Rational) -> Self {
        let mut p = Poly::default();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Poly::default();
        p.add_term(m, c);
        p
    }

    /// The parameter `q_i`.
    pub fn var(i: usize) -> Self {
        Poly::monomial(Monomial::var(i), One::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if Zero::is_zero(&c) {
            return;
        }
        let slot = self.0.entry(m.clone()).or_insert_with(Zero::zero);
        *slot += c;
        if Zero::is_zero(slot) {
            self.0.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.0.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.0.get(m).cloned().unwrap_or_else(Zero::zero)
    }

    /// Substitutes a rational value for each parameter.
    pub fn evaluate(&self, value: impl Fn(usize) -> Rational) -> Rational {
        let mut total: Rational = Zero::zero();
        for (m, c) in &self.0 {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= value(i);
                }
            }
            total += t;
        }
        total
    }

    /// Parses sums such as `2*q2^2*q3 + q5` or `q2^3 - 1/2*q4`.
    pub fn parse(s: &str) -> Result<Poly, String> {
        let mut poly = Poly::default();
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err("empty polynomial".into());
        }
        let mut terms = Vec::new();
        let mut current = String::new();
        for (idx, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && idx > 0 {
                terms.push(std::mem::take(&mut current));
            }
            current.push(ch);
        }
        terms.push(current);
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, term.strip_prefix('+').unwrap_or(&term)),
            };
            let mut coeff = Rational::from_integer(sign.into());
            let mut mono = Monomial::one();
            for factor in body.split('*').filter(|f| !f.is_empty()) {
                if let Some(var) = factor.strip_prefix('q') {
                    let (idx, exp) = match var.split_once('^') {
                        Some((i, e)) => (i, e.parse::<u32>().map_err(|e| e.to_string())?),
                        None => (var, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| format!("bad parameter in {factor}"))?;
                    mono = mono.mul(&Monomial::from_exponents(&[(idx, exp)]));
                } else {
                    let value: Rational = factor.parse().map_err(|_| format!("bad coefficient {factor}"))?;
                    coeff *= value;
                }
            }
            poly.add_term(mono, coeff);
        }
        Ok(poly)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        // Higher total degree first, then by exponents, for a stable reading order.
        let mut terms: Vec<_> = self.0.iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then_with(|| b.cmp(a)));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if k == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            if *m == Monomial::one() {
                write!(f, "{magnitude}")?;
            } else if One::is_one(&magnitude) {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Scalar for Poly {
    fn zero() -> Self {
        Poly::default()
    }

    fn one() -> Self {
        Poly::constant(One::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn from_int(n: i64) -> Self {
        Poly::constant(Rational::from_integer(n.into()))
    }

    fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.0 {
            self.add_term(m.clone(), c.clone());
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Poly::default();
        for (m1, c1) in &self.0 {
            for (m2, c2) in &other.0 {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    fn neg(&self) -> Self {
        Poly(self.0.iter().map(|(m, c)| (m.clone(), -c)).collect())
    }

    fn inverse(&self) -> Option<Self> {
        match self.0.len() {
            1 => {
                let (m, c) = self.0.iter().next()?;
                (*m == Monomial::one()).then(|| Poly::constant(c.recip()))
            }
            _ => None,
        }
    }

    fn as_integer(&self) -> Option<BigInt> {
        match self.0.len() {
            0 => Some(<BigInt as Zero>::zero()),
            1 => {
                let (m, c) = self.0.iter().next()?;
                (*m == Monomial::one() && c.is_integer()).then(|| c.to_integer())
            }
            _ => None,
        }
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_arithmetic_and_text() {
        let p = Poly::parse("2*q2^2*q3 + q5").unwrap();
        assert_eq!(p.to_string(), "2*q2^2*q3 + q5");
        let q = Poly::parse("q2 - q3").unwrap();
        let sq = q.mul(&q);
        assert_eq!(sq, Poly::parse("q2^2 - 2*q2*q3 + q3^2").unwrap());
        let mut z = sq.clone();
        z.sub_assign(&sq);
        assert!(Scalar::is_zero(&z));
        assert_eq!(Poly::from_int(3).as_integer(), Some(BigInt::from(3)));
        assert_eq!(p.as_integer(), None);
        assert_eq!(Poly::from_int(2).inverse(), Some(Poly::parse("1/2").unwrap()));
        assert!(q.inverse().is_none());
        let at_one = p.evaluate(|_| Rational::from_integer(1.into()));
        assert_eq!(at_one, Rational::from_integer(3.into()));
    }

    #[test]
    fn rational_ring() {
        let a = Rational::from_int(3);
        assert_eq!(Scalar::inverse(&a).unwrap(), Rational::new(1.into(), 3.into()));
        assert!(Scalar::inverse(&Rational::from_int(0)).is_none());
        assert_eq!(Rational::new(4.into(), 2.into()).as_integer(), Some(BigInt::from(2)));
    }
}
