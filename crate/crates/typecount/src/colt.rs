//! The color-type recurrences for the syntactic and synchronous series.
//!
//! Both recurrences index coefficients by an output color `a` and an input
//! type `α` and count treelike (resp. perfect treelike) expressions over the
//! rules. The sums over the maps `φ: 𝒞 × 𝒯_𝒞 → ℕ` are organized color by
//! color: for each color `b` one chooses a multiset of types whose sum fits
//! in what remains of `α`, so only maps compatible with `α` are visited.

use std::collections::{BTreeMap, HashMap, HashSet};

use budgen::BudSystem;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use operad_core::{Color, Operad, TypeVector};

use crate::{chi_table, multiset_factorial, ChiTable, CountError};

/// Calls `visit(sum, size, weight)` for every multiset over `items` whose
/// sum fits in `room` and whose size is `size` when given. The weight of a
/// multiset taking the item `(γ, v)` with multiplicity `m_γ` is
/// `⟦m⟧! · Π v^{m_γ}`.
fn multisets(
    items: &[(TypeVector, BigInt)],
    size: Option<u32>,
    room: &TypeVector,
    visit: &mut dyn FnMut(&TypeVector, u32, &BigInt),
) {
    fn rec(
        items: &[(TypeVector, BigInt)],
        size: Option<u32>,
        sum: &TypeVector,
        room: &TypeVector,
        mults: &mut Vec<u32>,
        product: &BigInt,
        visit: &mut dyn FnMut(&TypeVector, u32, &BigInt),
    ) {
        let count: u32 = mults.iter().sum();
        let Some(((gamma, value), rest)) = items.split_first() else {
            if size.is_none_or(|s| s == count) {
                visit(sum, count, &(product * multiset_factorial(mults)));
            }
            return;
        };
        let mut sum = sum.clone();
        let mut product = product.clone();
        let mut m = 0;
        loop {
            mults.push(m);
            rec(rest, size, &sum, room, mults, &product, visit);
            mults.pop();
            m += 1;
            if size.is_some_and(|s| count + m > s) {
                break;
            }
            sum = &sum + gamma;
            if !sum.fits_in(room) {
                break;
            }
            product *= value;
        }
    }
    rec(items, size, &TypeVector::zero(room.len()), room, &mut Vec::new(), &BigInt::one(), visit);
}

/// All nonzero vectors componentwise at most `top`, of degree at most `max_degree`.
fn vectors_below(top: &TypeVector, max_degree: u32) -> Vec<TypeVector> {
    let mut out = vec![TypeVector::zero(top.len())];
    for (c, &bound) in top.0.iter().enumerate() {
        let mut next = Vec::new();
        for v in &out {
            let d = v.degree();
            for e in 0..=bound.min(max_degree.saturating_sub(d)) {
                let mut w = v.clone();
                w.0[c] = e;
                next.push(w);
            }
        }
        out = next;
    }
    out.retain(|v| !v.is_zero());
    out
}

fn require_factorizing<O: Operad>(sys: &BudSystem<O>) -> Result<(), CountError> {
    if sys.factorizing_report().ok {
        Ok(())
    } else {
        Err(CountError::Divergence(
            "the rules of arity one are not finitely factorizing".into(),
        ))
    }
}

/// Memoized evaluation shared by both recurrences: cycle detection and a
/// cache of computed cells.
#[derive(Default)]
struct Memo {
    values: HashMap<(Color, TypeVector), BigInt>,
    active: HashSet<(Color, TypeVector)>,
}

impl Memo {
    fn enter(&mut self, key: &(Color, TypeVector)) -> Result<Option<BigInt>, CountError> {
        if let Some(v) = self.values.get(key) {
            return Ok(Some(v.clone()));
        }
        if !self.active.insert(key.clone()) {
            return Err(CountError::Divergence(format!(
                "the coefficient of color {} and type ({}) depends on itself",
                key.0, key.1
            )));
        }
        Ok(None)
    }

    fn leave(&mut self, key: (Color, TypeVector), value: &BigInt) {
        self.active.remove(&key);
        self.values.insert(key, value.clone());
    }
}

/// The coefficients `⟨x_a Y^α, f⟩` of the color-type series of the
/// syntactic series, computed by the recurrence on the root rule.
pub struct SyntRecurrence {
    chi: ChiTable,
    memo: Memo,
}

impl SyntRecurrence {
    pub fn new<O: Operad>(sys: &BudSystem<O>) -> Result<Self, CountError> {
        require_factorizing(sys)?;
        Ok(SyntRecurrence {
            chi: chi_table(sys),
            memo: Memo::default(),
        })
    }

    pub fn chi(&self) -> &ChiTable {
        &self.chi
    }

    pub fn coeff(&mut self, a: Color, alpha: &TypeVector) -> Result<BigInt, CountError> {
        let key = (a, alpha.clone());
        if let Some(v) = self.memo.enter(&key)? {
            return Ok(v);
        }
        let k = self.chi.colors();
        let mut total = BigInt::zero();
        if *alpha == TypeVector::unit(k, a) {
            total += 1;
        }
        let rules: Vec<(TypeVector, u64)> = self.chi.rules_of(a).map(|(t, n)| (t.clone(), n)).collect();
        for (beta, chi) in rules {
            if beta.degree() > alpha.degree() {
                continue;
            }
            let part = self.spread(&beta, alpha)?;
            total += part * chi;
        }
        self.memo.leave(key, &total);
        Ok(total)
    }

    /// `Σ_φ (Π_b φ_b!) Π ⟨x_b Y^γ, f⟩^{φ(b,γ)}` over the maps `φ` placing
    /// `β_b` subtrees under the inputs of color `b`, with total type `α`.
    fn spread(&mut self, beta: &TypeVector, alpha: &TypeVector) -> Result<BigInt, CountError> {
        let slack = alpha.degree() + 1 - beta.degree();
        let mut states: BTreeMap<TypeVector, BigInt> = BTreeMap::new();
        states.insert(TypeVector::zero(alpha.len()), BigInt::one());
        for b in beta.support() {
            let mut items = Vec::new();
            for gamma in vectors_below(alpha, slack) {
                let v = self.coeff(b, &gamma)?;
                if !v.is_zero() {
                    items.push((gamma, v));
                }
            }
            let mut next: BTreeMap<TypeVector, BigInt> = BTreeMap::new();
            for (sigma, w) in &states {
                let room = alpha.checked_sub(sigma).expect("partial sums fit");
                multisets(&items, Some(beta.get(b)), &room, &mut |s, _, x| {
                    *next.entry(sigma + s).or_default() += w * x;
                });
            }
            states = next;
        }
        Ok(states.remove(alpha).unwrap_or_default())
    }
}

/// The coefficients `⟨x_a Y^α, f⟩` of the color-type series of the
/// synchronous series, computed by the recurrence on the last layer of
/// rules.
pub struct SyncRecurrence {
    chi: ChiTable,
    /// For each color, the types of its rules with their counts as items.
    items: Vec<Vec<(TypeVector, BigInt)>>,
    memo: Memo,
}

impl SyncRecurrence {
    pub fn new<O: Operad>(sys: &BudSystem<O>) -> Result<Self, CountError> {
        require_factorizing(sys)?;
        let chi = chi_table(sys);
        let items = (0..chi.colors())
            .map(|b| chi.rules_of(b).map(|(t, n)| (t.clone(), BigInt::from(n))).collect())
            .collect();
        Ok(SyncRecurrence {
            chi,
            items,
            memo: Memo::default(),
        })
    }

    pub fn chi(&self) -> &ChiTable {
        &self.chi
    }

    pub fn coeff(&mut self, a: Color, alpha: &TypeVector) -> Result<BigInt, CountError> {
        let key = (a, alpha.clone());
        if let Some(v) = self.memo.enter(&key)? {
            return Ok(v);
        }
        let k = self.chi.colors();
        let mut total = BigInt::zero();
        if *alpha == TypeVector::unit(k, a) {
            total += 1;
        }
        // States: (type produced so far, type of the leaves rewritten so far).
        let mut states: BTreeMap<(TypeVector, TypeVector), BigInt> = BTreeMap::new();
        states.insert((TypeVector::zero(k), TypeVector::zero(k)), BigInt::one());
        for b in 0..k {
            if self.items[b].is_empty() {
                continue;
            }
            let mut next: BTreeMap<(TypeVector, TypeVector), BigInt> = BTreeMap::new();
            for ((sigma, delta), w) in &states {
                let room = alpha.checked_sub(sigma).expect("partial sums fit");
                multisets(&self.items[b], None, &room, &mut |s, size, x| {
                    let mut d = delta.clone();
                    d.0[b] += size;
                    *next.entry((sigma + s, d)).or_default() += w * x;
                });
            }
            states = next;
        }
        for ((sigma, delta), w) in states {
            if sigma == *alpha && !delta.is_zero() {
                total += w * self.coeff(a, &delta)?;
            }
        }
        self.memo.leave(key, &total);
        Ok(total)
    }
}

/// `⟨x_a Y^α, colt(synt(B))⟩` by the syntactic recurrence. It counts
/// treelike expressions, hence elements of the language when the system is
/// unambiguous.
pub fn colt_synt_coeff<O: Operad>(sys: &BudSystem<O>, a: Color, alpha: &TypeVector) -> Result<BigInt, CountError> {
    SyntRecurrence::new(sys)?.coeff(a, alpha)
}

/// `⟨x_a Y^α, colt(sync(B))⟩` by the synchronous recurrence.
pub fn colt_sync_coeff<O: Operad>(sys: &BudSystem<O>, a: Color, alpha: &TypeVector) -> Result<BigInt, CountError> {
    SyncRecurrence::new(sys)?.coeff(a, alpha)
}

/// The type vectors of degree `n` supported on `colors`, out of `k` colors.
pub(crate) fn types_on(k: usize, colors: &[Color], n: u32) -> Vec<TypeVector> {
    TypeVector::all_of_degree(colors.len(), n)
        .into_iter()
        .map(|v| {
            let mut t = TypeVector::zero(k);
            for (i, &c) in colors.iter().enumerate() {
                t.0[c] = v.0[i];
            }
            t
        })
        .collect()
}

/// `Σ_{a ∈ I} Σ_{α on T, deg α = n} coeff(a, α)` for `n = 0..=bound`.
pub(crate) fn accepted_totals<O: Operad>(
    sys: &BudSystem<O>,
    bound: usize,
    mut coeff: impl FnMut(Color, &TypeVector) -> Result<BigInt, CountError>,
) -> Result<Vec<BigInt>, CountError> {
    let k = sys.colors().len();
    let mut out = vec![BigInt::zero(); bound + 1];
    for (n, slot) in out.iter_mut().enumerate().skip(1) {
        for alpha in types_on(k, sys.terminal(), n as u32) {
            for &a in sys.initial() {
                *slot += coeff(a, &alpha)?;
            }
        }
    }
    Ok(out)
}

/// Number of treelike expressions of the system with an initial output
/// color and terminal input colors, by arity `0..=bound`.
pub fn synt_counts<O: Operad>(sys: &BudSystem<O>, bound: usize) -> Result<Vec<BigInt>, CountError> {
    let mut rec = SyntRecurrence::new(sys)?;
    accepted_totals(sys, bound, |a, t| rec.coeff(a, t))
}

/// Number of perfect treelike expressions of the system with an initial
/// output color and terminal input colors, by arity `0..=bound`.
pub fn sync_counts<O: Operad>(sys: &BudSystem<O>, bound: usize) -> Result<Vec<BigInt>, CountError> {
    let mut rec = SyncRecurrence::new(sys)?;
    accepted_totals(sys, bound, |a, t| rec.coeff(a, t))
}

/// How a counting sequence was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountPath {
    /// From the color-type recurrence; the system was found unambiguous up
    /// to the bound, so expressions and elements are in bijection.
    Recurrence,
    /// From the support of the series, the system being ambiguous.
    Support,
}

/// Counts of a language by arity `0..=bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountingSeries {
    pub counts: Vec<BigInt>,
    pub path: CountPath,
}

/// Counts of the language by arity. When the system is unambiguous up to
/// `bound` they come from the recurrence; otherwise the elements are
/// counted directly.
pub fn lang_counting_series<O: Operad>(sys: &BudSystem<O>, bound: usize) -> Result<CountingSeries, CountError> {
    let report = budgen::analyze_language(sys, bound)?;
    if report.unambiguous.holds() {
        Ok(CountingSeries {
            counts: synt_counts(sys, bound)?,
            path: CountPath::Recurrence,
        })
    } else {
        Ok(CountingSeries {
            counts: report.counts.into_iter().map(BigInt::from).collect(),
            path: CountPath::Support,
        })
    }
}

/// Counts of the synchronous language by arity, as in
/// [`lang_counting_series`].
pub fn sync_counting_series<O: Operad>(sys: &BudSystem<O>, bound: usize) -> Result<CountingSeries, CountError> {
    let report = budgen::analyze_sync_language(sys, bound)?;
    if report.unambiguous.holds() {
        Ok(CountingSeries {
            counts: sync_counts(sys, bound)?,
            path: CountPath::Recurrence,
        })
    } else {
        Ok(CountingSeries {
            counts: report.counts.into_iter().map(BigInt::from).collect(),
            path: CountPath::Support,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multisets_weigh_by_multinomials() {
        let items = vec![
            (TypeVector(vec![1, 0]), BigInt::from(2)),
            (TypeVector(vec![0, 1]), BigInt::from(3)),
        ];
        let mut seen = Vec::new();
        multisets(&items, Some(2), &TypeVector(vec![2, 2]), &mut |s, n, w| {
            seen.push((s.clone(), n, w.clone()));
        });
        seen.sort();
        // (x + y)^2 with x = 2, y = 3: 4, 2·6, 9.
        assert_eq!(
            seen,
            vec![
                (TypeVector(vec![0, 2]), 2, BigInt::from(9)),
                (TypeVector(vec![1, 1]), 2, BigInt::from(12)),
                (TypeVector(vec![2, 0]), 2, BigInt::from(4)),
            ]
        );
    }

    #[test]
    fn vectors_below_respects_degree() {
        let v = vectors_below(&TypeVector(vec![2, 1]), 2);
        assert_eq!(v.len(), 4);
        assert!(v.iter().all(|t| t.degree() <= 2 && !t.is_zero()));
    }
}
