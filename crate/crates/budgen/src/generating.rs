//! The hook, syntactic and synchronous generating series of a system.

use num_bigint::BigInt;
use operad_core::{BudElem, Operad};
use series::{perfect_closure, pre_lie_closure, Series, TreeSlices};

use crate::{BudError, BudSystem};

/// Integer series on the bud operad of a system.
pub type BudSeries<E> = Series<BudElem<E>, BigInt>;

/// `𝐢 ⊙ 𝐫^{↶*} ⊙ 𝐭`: the coefficient of `x` is the number of left
/// expressions of `x` over the rules, that is the number of ways to derive
/// `x` one rule at a time.
pub fn hook_series<O: Operad>(sys: &BudSystem<O>, bound: usize) -> Result<BudSeries<O::Elem>, BudError> {
    let r = sys.rule_series(bound);
    let start = sys.initial_series(bound);
    Ok(pre_lie_closure(sys.bud(), &start, &r)?.filter(|x| sys.accepts(x)))
}

/// The least solution of `x = 𝐭 + 𝐫 ⊙ x`, slice by slice, over all output
/// colors: the coefficient of `x` is its number of treelike expressions
/// over the rules with terminal leaves.
pub fn synt_slices<O: Operad>(sys: &BudSystem<O>, bound: usize) -> Result<TreeSlices<BudElem<O::Elem>, BigInt>, BudError> {
    sys.require_factorizing()?;
    let r = sys.rule_series(bound);
    let t = sys.terminal_series(bound);
    Ok(TreeSlices::build(sys.bud(), &r, &t)?)
}

/// `𝐢 ⊙ (𝐮 − 𝐫)^{⊙−1} ⊙ 𝐭`: the coefficient of `x` is its number of
/// treelike expressions over the rules.
pub fn synt_series<O: Operad>(sys: &BudSystem<O>, bound: usize) -> Result<BudSeries<O::Elem>, BudError> {
    Ok(synt_slices(sys, bound)?.into_series().filter(|x| sys.accepts(x)))
}

/// `𝐢 ⊙ 𝐫^{⊙*} ⊙ 𝐭`: the coefficient of `x` is its number of perfect
/// treelike expressions over the rules.
pub fn sync_series<O: Operad>(sys: &BudSystem<O>, bound: usize) -> Result<BudSeries<O::Elem>, BudError> {
    let r = sys.rule_series(bound);
    let t = sys.terminal_series(bound);
    Ok(perfect_closure(sys.bud(), &r, &t)?.filter(|x| sys.accepts(x)))
}

fn sorted_support<O: Operad>(sys: &BudSystem<O>, f: &BudSeries<O::Elem>) -> Vec<BudElem<O::Elem>> {
    let mut out: Vec<BudElem<O::Elem>> = f.support().cloned().collect();
    sys.sort_canonically(&mut out);
    out
}

/// The elements of the language of arity at most `bound`, in canonical
/// order (the support of the syntactic series).
pub fn language<O: Operad>(sys: &BudSystem<O>, bound: usize) -> Result<Vec<BudElem<O::Elem>>, BudError> {
    Ok(sorted_support(sys, &synt_series(sys, bound)?))
}

/// The elements of the synchronous language of arity at most `bound`.
pub fn sync_language<O: Operad>(sys: &BudSystem<O>, bound: usize) -> Result<Vec<BudElem<O::Elem>>, BudError> {
    Ok(sorted_support(sys, &sync_series(sys, bound)?))
}
