//! Context-free grammars and their emulation over `Bud(As)`.

use std::collections::{BTreeSet, HashSet};

use budgen::BudSystem;
use operad_core::{BudElem, ColorSet};
use operad_zoo::{AnyElem, AnyOperad};

use crate::text::{lines, single_arg, unknown_directive, Line};
use crate::GrammarError;

/// A context-free grammar `(V, T, P, s)`. The variables are the left-hand
/// sides of the productions and the start symbol; the terminals are the
/// other symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cfg {
    pub variables: BTreeSet<String>,
    pub terminals: BTreeSet<String>,
    pub productions: Vec<(String, Vec<String>)>,
    pub start: String,
}

impl Cfg {
    /// Reads the text format:
    ///
    /// ```text
    /// start S          # optional, defaults to the first left-hand side
    /// S -> S S
    /// S -> a b
    /// ```
    pub fn parse(text: &str) -> Result<Cfg, GrammarError> {
        let mut start = None;
        let mut productions = Vec::new();
        for l in lines(text)? {
            match l {
                Line::Directive { line, keyword: "start", args } => start = Some(single_arg(line, "start", &args)?.to_string()),
                Line::Directive { line, keyword, .. } => return Err(unknown_directive(line, keyword)),
                Line::Production { line, lhs, rhs } => {
                    let rhs: Vec<String> = rhs.split_whitespace().map(str::to_string).collect();
                    if rhs.is_empty() {
                        return Err(GrammarError::EmptyProduction { line });
                    }
                    for s in &rhs {
                        crate::text::check_symbol(s, line)?;
                    }
                    productions.push((lhs.to_string(), rhs));
                }
            }
        }
        let start = start
            .or_else(|| productions.first().map(|p| p.0.clone()))
            .ok_or(GrammarError::NoStart)?;
        let mut variables: BTreeSet<String> = productions.iter().map(|p| p.0.clone()).collect();
        variables.insert(start.clone());
        let terminals = productions
            .iter()
            .flat_map(|p| p.1.iter())
            .filter(|s| !variables.contains(*s))
            .cloned()
            .collect();
        Ok(Cfg {
            variables,
            terminals,
            productions,
            start,
        })
    }
}

/// `CFG(G) = (As, V ⊔ T, {(a, u) : (a, u) ∈ P}, {s}, T)`. Colors are the
/// variables, then the terminals, each in lexicographic order.
pub fn cfg_to_bud(g: &Cfg) -> Result<BudSystem<AnyOperad>, GrammarError> {
    let colors = ColorSet::new(g.variables.iter().chain(&g.terminals).cloned())?;
    let color = |s: &str| colors.lookup(s);
    let mut rules = Vec::with_capacity(g.productions.len());
    for (a, u) in &g.productions {
        if u.is_empty() {
            return Err(GrammarError::EmptyProduction { line: 0 });
        }
        let ins = u.iter().map(|s| color(s)).collect::<Result<Vec<_>, _>>()?;
        rules.push(BudElem::new(color(a)?, AnyElem::As(u.len()), ins));
    }
    let start = vec![color(&g.start)?];
    let terminal = g.terminals.iter().map(|s| color(s)).collect::<Result<Vec<_>, _>>()?;
    Ok(BudSystem::new(AnyOperad::As, colors, rules, start, terminal)?)
}

/// The words of length at most `max_len` generated by the grammar, found by
/// exhaustive leftmost rewriting. Sentential forms never shrink, so longer
/// ones are discarded.
pub fn cfg_bruteforce(g: &Cfg, max_len: usize) -> BTreeSet<Vec<String>> {
    let mut out = BTreeSet::new();
    if max_len == 0 {
        return out;
    }
    let start = vec![g.start.clone()];
    let mut seen: HashSet<Vec<String>> = HashSet::from([start.clone()]);
    let mut stack = vec![start];
    while let Some(form) = stack.pop() {
        let Some(pos) = form.iter().position(|s| g.variables.contains(s)) else {
            out.insert(form);
            continue;
        };
        for (a, w) in &g.productions {
            if *a != form[pos] || form.len() - 1 + w.len() > max_len {
                continue;
            }
            let mut next = form[..pos].to_vec();
            next.extend(w.iter().cloned());
            next.extend(form[pos + 1..].iter().cloned());
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    out
}

/// The input words of the elements of the language of a compiled system,
/// of length at most `max_len`.
pub fn emulated_words(sys: &BudSystem<AnyOperad>, max_len: usize) -> Result<BTreeSet<Vec<String>>, GrammarError> {
    let colors = sys.colors();
    Ok(budgen::language(sys, max_len)?
        .into_iter()
        .map(|x| x.ins.iter().map(|&c| colors.token(c).to_string()).collect())
        .collect())
}
