//! Bounded faithfulness and unambiguity verdicts, and exact language counts.
//!
//! The syntactic side stores the solution of `x = 𝐭 + 𝐫 ⊙ x` up to arity
//! `N − 1` and only streams the arity-`N` slice, whose elements are
//! fingerprinted by a 64-bit hash. Hashes seen more than once are settled in
//! a second pass that collects the corresponding elements exactly, so the
//! results do not depend on the absence of hash collisions.

use std::collections::{HashMap, HashSet};
use std::hash::{DefaultHasher, Hash, Hasher};

use num_bigint::BigInt;
use num_traits::One;
use operad_core::{BudElem, Operad};
use operad_zoo::FactorizingReport;

use crate::{sync_series, synt_slices, BudError, BudSystem};

/// Why a property fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness<E> {
    /// An element whose coefficient is not 1.
    Coefficient { element: BudElem<E>, count: BigInt },
    /// Distinct language elements with the same pruned element.
    SharedGround { elements: Vec<BudElem<E>> },
}

/// A property checked on all elements of arity at most `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict<E> {
    pub bound: usize,
    pub witness: Option<Witness<E>>,
}

impl<E> Verdict<E> {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Counts and verdicts for the language or the synchronous language.
#[derive(Clone, Debug)]
pub struct LanguageReport<E> {
    pub bound: usize,
    /// Number of elements of each arity `0..=bound`.
    pub counts: Vec<u64>,
    pub unambiguous: Verdict<E>,
    pub faithful: Verdict<E>,
}

fn fingerprint<T: Hash>(x: &T) -> u64 {
    let mut h = DefaultHasher::new();
    x.hash(&mut h);
    h.finish()
}

/// Keeps the canonically smallest witness of each kind.
struct Witnesses<'a, O: Operad> {
    sys: &'a BudSystem<O>,
    ambiguous: Option<(usize, String, BudElem<O::Elem>, BigInt)>,
    shared: Option<(usize, String, Vec<BudElem<O::Elem>>)>,
}

impl<'a, O: Operad> Witnesses<'a, O> {
    fn new(sys: &'a BudSystem<O>) -> Self {
        Witnesses {
            sys,
            ambiguous: None,
            shared: None,
        }
    }

    fn coefficient(&mut self, x: &BudElem<O::Elem>, w: &BigInt) {
        if w.is_one() {
            return;
        }
        let key = (x.ins.len(), self.sys.render(x));
        if self.ambiguous.as_ref().is_none_or(|(a, s, _, _)| key < (*a, s.clone())) {
            self.ambiguous = Some((key.0, key.1, x.clone(), w.clone()));
        }
    }

    fn shared_ground(&mut self, group: Vec<&BudElem<O::Elem>>) {
        if group.len() < 2 {
            return;
        }
        let mut group: Vec<BudElem<O::Elem>> = group.into_iter().cloned().collect();
        self.sys.sort_canonically(&mut group);
        let key = (group[0].ins.len(), self.sys.render(&group[0]));
        if self.shared.as_ref().is_none_or(|(a, s, _)| key < (*a, s.clone())) {
            self.shared = Some((key.0, key.1, group));
        }
    }

    fn groups<'b>(&mut self, elems: impl IntoIterator<Item = &'b BudElem<O::Elem>>)
    where
        O::Elem: 'b,
    {
        let mut by_ground: HashMap<&O::Elem, Vec<&BudElem<O::Elem>>> = HashMap::new();
        for x in elems {
            by_ground.entry(&x.ground).or_default().push(x);
        }
        for (_, group) in by_ground {
            self.shared_ground(group);
        }
    }

    fn finish(self, bound: usize, counts: Vec<u64>) -> LanguageReport<O::Elem> {
        LanguageReport {
            bound,
            counts,
            unambiguous: Verdict {
                bound,
                witness: self
                    .ambiguous
                    .map(|(_, _, element, count)| Witness::Coefficient { element, count }),
            },
            faithful: Verdict {
                bound,
                witness: self.shared.map(|(_, _, elements)| Witness::SharedGround { elements }),
            },
        }
    }
}

/// Exact counts of the language by arity, together with the unambiguity
/// (syntactic coefficients all 1) and faithfulness (pruning injective on
/// the language) verdicts, up to arity `bound`.
pub fn analyze_language<O: Operad>(sys: &BudSystem<O>, bound: usize) -> Result<LanguageReport<O::Elem>, BudError> {
    let mut counts = vec![0u64; bound + 1];
    let mut wit = Witnesses::new(sys);
    if bound == 0 {
        return Ok(wit.finish(0, counts));
    }
    let low = synt_slices(sys, bound - 1)?;
    let mut accepted = Vec::new();
    for m in 1..bound {
        for &c in sys.initial() {
            for (x, w) in low.slice(m, c) {
                if sys.accepts(x) {
                    counts[m] += 1;
                    wit.coefficient(x, w);
                    accepted.push(x);
                }
            }
        }
    }
    wit.groups(accepted);

    let r = sys.rule_series(bound);
    let t = sys.terminal_series(bound);
    let keep = |x: &BudElem<O::Elem>| sys.accepts(x);
    let mut entries: Vec<(u64, u64)> = Vec::new();
    let mut flagged: HashSet<u64> = HashSet::new();
    low.stream_next(sys.bud(), &r, &t, &keep, &mut |x, w| {
        let h = fingerprint(&x);
        if !w.is_one() {
            flagged.insert(h);
        }
        entries.push((h, fingerprint(&x.ground)));
    })?;
    entries.sort_unstable();

    let mut suspects: HashSet<u64> = flagged;
    for pair in entries.windows(2) {
        if pair[0].0 == pair[1].0 {
            suspects.insert(pair[0].0);
        }
    }
    entries.dedup();
    let mut ground_hashes: Vec<u64> = entries.iter().map(|e| e.1).collect();
    ground_hashes.sort_unstable();
    let mut shared_grounds: HashSet<u64> = HashSet::new();
    for pair in ground_hashes.windows(2) {
        if pair[0] == pair[1] {
            shared_grounds.insert(pair[0]);
        }
    }
    let mut distinct: HashSet<u64> = HashSet::new();
    let mut top = 0u64;
    for &(h, _) in &entries {
        if !suspects.contains(&h) && distinct.insert(h) {
            top += 1;
        }
    }
    drop(entries);

    if !suspects.is_empty() || !shared_grounds.is_empty() {
        let mut exact: HashMap<BudElem<O::Elem>, BigInt> = HashMap::new();
        low.stream_next(sys.bud(), &r, &t, &keep, &mut |x, w| {
            if suspects.contains(&fingerprint(&x)) || shared_grounds.contains(&fingerprint(&x.ground)) {
                *exact.entry(x).or_default() += w;
            }
        })?;
        for (x, w) in &exact {
            if suspects.contains(&fingerprint(x)) {
                top += 1;
                wit.coefficient(x, w);
            }
        }
        wit.groups(exact.keys().filter(|x| shared_grounds.contains(&fingerprint(&x.ground))));
    }
    counts[bound] = top;
    Ok(wit.finish(bound, counts))
}

/// Exact counts of the synchronous language by arity, with the synchronous
/// unambiguity and faithfulness verdicts.
pub fn analyze_sync_language<O: Operad>(
    sys: &BudSystem<O>,
    bound: usize,
) -> Result<LanguageReport<O::Elem>, BudError> {
    let f = sync_series(sys, bound)?;
    let mut counts = vec![0u64; bound + 1];
    let mut wit = Witnesses::new(sys);
    for (x, w) in f.iter() {
        counts[x.ins.len()] += 1;
        wit.coefficient(x, w);
    }
    wit.groups(f.support());
    Ok(wit.finish(bound, counts))
}

pub fn is_unambiguous<O: Operad>(sys: &BudSystem<O>, bound: usize) -> Result<Verdict<O::Elem>, BudError> {
    Ok(analyze_language(sys, bound)?.unambiguous)
}

pub fn is_faithful<O: Operad>(sys: &BudSystem<O>, bound: usize) -> Result<Verdict<O::Elem>, BudError> {
    Ok(analyze_language(sys, bound)?.faithful)
}

pub fn is_sync_unambiguous<O: Operad>(sys: &BudSystem<O>, bound: usize) -> Result<Verdict<O::Elem>, BudError> {
    Ok(analyze_sync_language(sys, bound)?.unambiguous)
}

pub fn is_sync_faithful<O: Operad>(sys: &BudSystem<O>, bound: usize) -> Result<Verdict<O::Elem>, BudError> {
    Ok(analyze_sync_language(sys, bound)?.faithful)
}

/// Everything `bud check` reports.
#[derive(Clone, Debug)]
pub struct CheckReport<E> {
    pub factorizing: FactorizingReport,
    pub language: LanguageReport<E>,
    pub sync_language: LanguageReport<E>,
}

/// Runs both analyses. Fails with a divergence error when the rules of
/// arity one are not finitely factorizing.
pub fn check<O: Operad>(sys: &BudSystem<O>, bound: usize) -> Result<CheckReport<O::Elem>, BudError> {
    let factorizing = sys.require_factorizing()?;
    Ok(CheckReport {
        factorizing,
        language: analyze_language(sys, bound)?,
        sync_language: analyze_sync_language(sys, bound)?,
    })
}
