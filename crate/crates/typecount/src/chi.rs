use std::collections::BTreeMap;

use budgen::BudSystem;
use num_bigint::BigInt;
use num_traits::One;
use operad_core::{type_of, Color, Operad, TypeVector};
use series::Rational;

use crate::TypePoly;

/// The numbers `χ_{a,α}` of rules with output color `a` and input type `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiTable {
    k: usize,
    entries: BTreeMap<(Color, TypeVector), u64>,
}

impl ChiTable {
    /// Number of colors.
    pub fn colors(&self) -> usize {
        self.k
    }

    pub fn get(&self, a: Color, alpha: &TypeVector) -> u64 {
        self.entries.get(&(a, alpha.clone())).copied().unwrap_or(0)
    }

    /// The nonzero entries, by output color then type.
    pub fn iter(&self) -> impl Iterator<Item = (Color, &TypeVector, u64)> {
        self.entries.iter().map(|((a, t), &n)| (*a, t, n))
    }

    /// The types of the rules with output color `a`, with their counts.
    pub fn rules_of(&self, a: Color) -> impl Iterator<Item = (&TypeVector, u64)> {
        self.entries
            .range((a, TypeVector::default())..)
            .take_while(move |((b, _), _)| *b == a)
            .map(|((_, t), &n)| (t, n))
    }

    /// `g_a = Σ_γ χ_{a,γ} Y^γ`.
    pub fn g_poly(&self, a: Color) -> TypePoly {
        let mut g = TypePoly::zero(self.k);
        for (t, n) in self.rules_of(a) {
            g.add_term(t.clone(), Rational::from_integer(n.into()));
        }
        g
    }
}

pub fn chi_table<O: Operad>(sys: &BudSystem<O>) -> ChiTable {
    let k = sys.colors().len();
    let mut entries = BTreeMap::new();
    for r in sys.rules() {
        *entries.entry((r.out, type_of(k, &r.ins))).or_insert(0) += 1;
    }
    ChiTable { k, entries }
}

/// The polynomial `g_a` of a system.
pub fn g_poly<O: Operad>(sys: &BudSystem<O>, a: Color) -> TypePoly {
    chi_table(sys).g_poly(a)
}

/// The multinomial coefficient `(Σ S)! / Π s!` of a multiset `S`.
pub fn multiset_factorial(s: &[u32]) -> BigInt {
    let mut out = BigInt::one();
    let mut total = 0u64;
    for &x in s {
        // Multiply by binom(total + x, x) one factor at a time; each partial
        // quotient is an integer.
        for j in 1..=u64::from(x) {
            total += 1;
            out = out * total / j;
        }
    }
    out
}
