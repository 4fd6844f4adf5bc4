use std::collections::BTreeMap;

use operad_core::{Bud, BudElem, Color, ColorSet, Operad};
use operad_zoo::{finitely_factorizing_check, FactorizingReport};
use series::{characteristic, units_of, Scalar, Series, SeriesError};

use crate::BudError;

/// A bud generating system `(O, 𝒞, ℜ, I, T)`: a monochrome ground operad,
/// an ordered set of colors, a finite set of rules in `Bud_𝒞(O)`, and the
/// initial and terminal colors.
///
/// Rules are kept sorted and without repetition; `I` and `T` are kept in
/// color order.
#[derive(Clone, Debug)]
pub struct BudSystem<O: Operad> {
    bud: Bud<O>,
    rules: Vec<BudElem<O::Elem>>,
    initial: Vec<Color>,
    terminal: Vec<Color>,
}

fn color_subset(colors: &ColorSet, set: Vec<Color>, what: &str) -> Result<Vec<Color>, BudError> {
    let mut set = set;
    set.sort_unstable();
    set.dedup();
    if let Some(c) = set.iter().find(|&&c| !colors.contains(c)) {
        return Err(BudError::Invalid(format!("{what} color #{c} is not a color of the system")));
    }
    Ok(set)
}

impl<O: Operad> BudSystem<O> {
    pub fn new(
        ground: O,
        colors: ColorSet,
        rules: Vec<BudElem<O::Elem>>,
        initial: Vec<Color>,
        terminal: Vec<Color>,
    ) -> Result<Self, BudError> {
        let bud = Bud::new(ground, colors)?;
        let mut checked = Vec::with_capacity(rules.len());
        for r in rules {
            if r.ins.is_empty() {
                return Err(BudError::Invalid("rules must have arity at least 1".into()));
            }
            checked.push(bud.element(r.out, r.ground, r.ins)?);
        }
        checked.sort();
        checked.dedup();
        let initial = color_subset(bud.colors(), initial, "initial")?;
        let terminal = color_subset(bud.colors(), terminal, "terminal")?;
        Ok(BudSystem {
            bud,
            rules: checked,
            initial,
            terminal,
        })
    }

    /// The hook system `(O, {1}, G, {1}, {1})` of a set `G` of elements of
    /// a monochrome operad.
    pub fn hook_system(ground: O, gens: Vec<O::Elem>) -> Result<Self, BudError> {
        let rules = gens
            .into_iter()
            .map(|g| {
                let n = ground.arity(&g);
                BudElem::new(0, g, vec![0; n])
            })
            .collect();
        BudSystem::new(ground, ColorSet::monochrome(), rules, vec![0], vec![0])
    }

    /// The bud operad `Bud_𝒞(O)` in which the system lives.
    pub fn bud(&self) -> &Bud<O> {
        &self.bud
    }

    pub fn ground(&self) -> &O {
        self.bud.ground()
    }

    pub fn colors(&self) -> &ColorSet {
        self.bud.colors()
    }

    pub fn rules(&self) -> &[BudElem<O::Elem>] {
        &self.rules
    }

    pub fn initial(&self) -> &[Color] {
        &self.initial
    }

    pub fn terminal(&self) -> &[Color] {
        &self.terminal
    }

    /// One color, which is both initial and terminal.
    pub fn is_monochrome(&self) -> bool {
        self.colors().len() == 1 && self.initial == [0] && self.terminal == [0]
    }

    /// Whether `x` has an initial output color and terminal input colors.
    pub fn accepts(&self, x: &BudElem<O::Elem>) -> bool {
        self.initial.contains(&x.out) && x.ins.iter().all(|c| self.terminal.contains(c))
    }

    /// The rules with output color `c`.
    pub fn rules_of(&self, c: Color) -> impl Iterator<Item = &BudElem<O::Elem>> {
        self.rules.iter().filter(move |r| r.out == c)
    }

    /// The series `𝐫` of the rules, truncated at `bound`.
    pub fn rule_series<S: Scalar>(&self, bound: usize) -> Series<BudElem<O::Elem>, S> {
        characteristic(&self.bud, self.rules.iter().cloned(), bound)
    }

    /// The series `𝐢` of the units of the initial colors.
    pub fn initial_series<S: Scalar>(&self, bound: usize) -> Series<BudElem<O::Elem>, S> {
        units_of(&self.bud, self.initial.iter().copied(), bound)
    }

    /// The series `𝐭` of the units of the terminal colors.
    pub fn terminal_series<S: Scalar>(&self, bound: usize) -> Series<BudElem<O::Elem>, S> {
        units_of(&self.bud, self.terminal.iter().copied(), bound)
    }

    /// The color graph check on the rules of arity one.
    pub fn factorizing_report(&self) -> FactorizingReport {
        finitely_factorizing_check(&self.bud, self.rules.iter().filter(|r| r.ins.len() == 1))
    }

    pub(crate) fn require_factorizing(&self) -> Result<FactorizingReport, BudError> {
        let report = self.factorizing_report();
        if report.ok {
            Ok(report)
        } else {
            Err(SeriesError::Divergence("the rules of arity one are not finitely factorizing".into()).into())
        }
    }

    /// Canonical serialization of an element of the bud operad.
    pub fn render(&self, x: &BudElem<O::Elem>) -> String {
        self.bud.render(x)
    }

    /// Sorts elements by arity, then by canonical serialization.
    pub fn sort_canonically(&self, elems: &mut [BudElem<O::Elem>]) {
        elems.sort_by_cached_key(|x| (x.ins.len(), self.render(x)));
    }

    /// All `x ∘_i r` for a rule `r`, with multiplicities, in canonical order.
    pub fn successors(&self, x: &BudElem<O::Elem>) -> Vec<(BudElem<O::Elem>, usize)> {
        let mut acc: BTreeMap<BudElem<O::Elem>, usize> = BTreeMap::new();
        for (pos, &c) in x.ins.iter().enumerate() {
            for r in self.rules_of(c) {
                *acc.entry(self.bud.compose_unchecked(x, pos + 1, r)).or_default() += 1;
            }
        }
        self.canonical_multiset(acc)
    }

    /// All `x ∘ [r_1, …, r_n]` for rules `r_j`, with multiplicities, in
    /// canonical order.
    pub fn sync_successors(&self, x: &BudElem<O::Elem>) -> Vec<(BudElem<O::Elem>, usize)> {
        let choices: Vec<Vec<&BudElem<O::Elem>>> = x.ins.iter().map(|&c| self.rules_of(c).collect()).collect();
        let mut acc: BTreeMap<BudElem<O::Elem>, usize> = BTreeMap::new();
        if choices.iter().all(|c| !c.is_empty()) {
            let mut idx = vec![0usize; choices.len()];
            loop {
                let ys: Vec<&BudElem<O::Elem>> = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
                *acc.entry(self.bud.full_compose_unchecked(x, &ys)).or_default() += 1;
                let mut j = idx.len();
                loop {
                    if j == 0 {
                        return self.canonical_multiset(acc);
                    }
                    j -= 1;
                    idx[j] += 1;
                    if idx[j] < choices[j].len() {
                        break;
                    }
                    idx[j] = 0;
                }
            }
        }
        self.canonical_multiset(acc)
    }

    fn canonical_multiset(&self, acc: BTreeMap<BudElem<O::Elem>, usize>) -> Vec<(BudElem<O::Elem>, usize)> {
        let mut out: Vec<(BudElem<O::Elem>, usize)> = acc.into_iter().collect();
        out.sort_by_cached_key(|(x, _)| (x.ins.len(), self.render(x)));
        out
    }
}
