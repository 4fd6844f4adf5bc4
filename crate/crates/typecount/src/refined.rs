use num_bigint::BigInt;
use num_traits::{One, Zero};
use series::{Monomial, Poly, Rational, Scalar};

use crate::multiset_factorial;

/// Calls `visit` with the multiplicities `d_b` (indexed by `b`) of every
/// partition of `n` into parts at least 2.
fn partitions(n: usize, visit: &mut dyn FnMut(&[u32])) {
    fn rec(remaining: usize, largest: usize, d: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        if remaining == 0 {
            visit(d);
            return;
        }
        for b in (2..=largest.min(remaining)).rev() {
            d[b] += 1;
            rec(remaining - b, b, d, visit);
            d[b] -= 1;
        }
    }
    let mut d = vec![0; n + 1];
    rec(n, n, &mut d, visit);
}

/// The series `s_q` refining the enumeration of perfect trees (all internal
/// nodes of arity at least 2) by the number of internal nodes of each
/// arity: entry `n` is the polynomial in which the coefficient of
/// `Π q_b^{d_b}` counts the perfect trees with `n` leaves and `d_b` internal
/// nodes of arity `b`. Entries `0..=bound`.
pub fn refined_perfect(bound: usize) -> Vec<Poly> {
    let mut s: Vec<Poly> = vec![<Poly as Scalar>::zero(); bound + 1];
    if bound >= 1 {
        s[1] = <Poly as Scalar>::one();
    }
    for n in 2..=bound {
        let mut total = <Poly as Scalar>::zero();
        partitions(n, &mut |d| {
            let below: u32 = d.iter().sum();
            let weight = Rational::from_integer(multiset_factorial(d));
            let pairs: Vec<(usize, u32)> = d.iter().enumerate().filter(|(_, &e)| e > 0).map(|(b, &e)| (b, e)).collect();
            let layer = Poly::monomial(Monomial::from_exponents(&pairs), weight);
            total.add_assign(&layer.mul(&s[below as usize]));
        });
        s[n] = total;
    }
    s
}

/// Specializes `s_q` at `q_b = 1` for `b ∈ arities` and `q_b = 0` otherwise,
/// which counts the `B`-perfect trees by number of leaves.
pub fn specialize_refined(s: &[Poly], arities: &[usize]) -> Vec<BigInt> {
    s.iter()
        .map(|p| {
            p.evaluate(|b| if arities.contains(&b) { <Rational as One>::one() } else { <Rational as Zero>::zero() })
                .to_integer()
        })
        .collect()
}
