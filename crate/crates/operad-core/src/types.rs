use std::fmt;
use std::ops::Add;

use crate::{Color, OperadError};

/// A vector of color multiplicities `(α_1, …, α_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TypeVector(pub Vec<u32>);

impl TypeVector {
    pub fn zero(k: usize) -> Self {
        TypeVector(vec![0; k])
    }

    /// The type of the one-letter word `c`.
    pub fn unit(k: usize, c: Color) -> Self {
        let mut v = vec![0; k];
        v[c] = 1;
        TypeVector(v)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn get(&self, c: Color) -> u32 {
        self.0[c]
    }

    /// Componentwise `self ≤ other`.
    pub fn fits_in(&self, other: &TypeVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise difference, `None` if some component would be negative.
    pub fn checked_sub(&self, other: &TypeVector) -> Option<TypeVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(TypeVector)
    }

    /// Support of the vector: colors with a nonzero entry.
    pub fn support(&self) -> impl Iterator<Item = Color> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(c, _)| c)
    }

    /// All type vectors with `k` components and degree exactly `n`, in
    /// lexicographically decreasing order of the components.
    pub fn all_of_degree(k: usize, n: u32) -> Vec<TypeVector> {
        fn rec(k: usize, n: u32, prefix: &mut Vec<u32>, out: &mut Vec<TypeVector>) {
            if prefix.len() + 1 == k {
                prefix.push(n);
                out.push(TypeVector(prefix.clone()));
                prefix.pop();
                return;
            }
            for a in (0..=n).rev() {
                prefix.push(a);
                rec(k, n - a, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if k > 0 {
            rec(k, n, &mut Vec::with_capacity(k), &mut out);
        }
        out
    }

    pub fn parse(s: &str) -> Result<Self, OperadError> {
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| OperadError::parse(s, e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(TypeVector)
    }
}

impl Add for &TypeVector {
    type Output = TypeVector;

    fn add(self, rhs: &TypeVector) -> TypeVector {
        assert_eq!(self.0.len(), rhs.0.len(), "type vectors of different lengths");
        TypeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for TypeVector {
    type Output = TypeVector;

    fn add(self, rhs: TypeVector) -> TypeVector {
        &self + &rhs
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Counts the occurrences of each of the `k` colors in the word `u`.
pub fn type_of(k: usize, u: &[Color]) -> TypeVector {
    let mut v = vec![0; k];
    for &c in u {
        v[c] += 1;
    }
    TypeVector(v)
}
