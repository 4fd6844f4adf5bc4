//! Regular tree grammars and their emulation over free operads.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use budgen::BudSystem;
use operad_core::{BudElem, ColorSet, Operad};
use operad_zoo::term::Term;
use operad_zoo::{AnyElem, AnyOperad, FreeOperad, Signature};

use crate::labeled::{degree, join, leaves, replace_leaf, split};
use crate::text::{lines, single_arg, unknown_directive, Line};
use crate::GrammarError;

/// A regular tree grammar `(V, T, P, s)`. Variables (all of arity 0) are the
/// left-hand sides and the start symbol; terminals are the other symbols of
/// the right-hand sides, with the arity they are used with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rtg {
    pub variables: BTreeSet<String>,
    pub terminals: BTreeMap<String, usize>,
    pub productions: Vec<(String, Term)>,
    pub start: String,
}

fn collect_terminals(
    t: &Term,
    variables: &BTreeSet<String>,
    terminals: &mut BTreeMap<String, usize>,
) -> Result<(), GrammarError> {
    let (name, arity) = match t {
        Term::Atom(a) if variables.contains(a) => return Ok(()),
        Term::Atom(a) => (a, 0),
        Term::Node(name, cs) => {
            if variables.contains(name) {
                return Err(GrammarError::VariableArity(name.clone()));
            }
            for c in cs {
                collect_terminals(c, variables, terminals)?;
            }
            (name, cs.len())
        }
        Term::Leaf | Term::Unit(_) => unreachable!("leaves are checked to be labeled"),
    };
    if *terminals.entry(name.clone()).or_insert(arity) != arity {
        return Err(GrammarError::InconsistentArity(name.clone()));
    }
    Ok(())
}

impl Rtg {
    /// Reads the text format:
    ///
    /// ```text
    /// start S
    /// S -> f(S, S)
    /// S -> a
    /// ```
    pub fn parse(text: &str) -> Result<Rtg, GrammarError> {
        let mut start = None;
        let mut productions = Vec::new();
        for l in lines(text)? {
            match l {
                Line::Directive { line, keyword: "start", args } => start = Some(single_arg(line, "start", &args)?.to_string()),
                Line::Directive { line, keyword, .. } => return Err(unknown_directive(line, keyword)),
                Line::Production { line, lhs, rhs } => {
                    if rhs.is_empty() {
                        return Err(GrammarError::EmptyProduction { line });
                    }
                    let t = Term::parse(rhs).map_err(|e| GrammarError::Syntax {
                        line,
                        message: e.to_string(),
                    })?;
                    split(&t).map_err(|message| GrammarError::Syntax { line, message })?;
                    productions.push((lhs.to_string(), t));
                }
            }
        }
        let start = start
            .or_else(|| productions.first().map(|p| p.0.clone()))
            .ok_or(GrammarError::NoStart)?;
        let mut variables: BTreeSet<String> = productions.iter().map(|p| p.0.clone()).collect();
        variables.insert(start.clone());
        let mut terminals = BTreeMap::new();
        for (_, t) in &productions {
            collect_terminals(t, &variables, &mut terminals)?;
        }
        Ok(Rtg {
            variables,
            terminals,
            productions,
            start,
        })
    }

    /// The terminals of arity 0, which label the leaves of generated trees.
    pub fn constants(&self) -> impl Iterator<Item = &String> {
        self.terminals.iter().filter(|(_, &n)| n == 0).map(|(s, _)| s)
    }
}

/// `RTG(G) = (Free(T ∖ T(0)), V ⊔ T(0), ℜ, {s}, T(0))`, with a rule
/// `(v, 𝔱, u)` for each production `v → 𝔱_{v,u}`.
pub fn rtg_to_bud(g: &Rtg) -> Result<BudSystem<AnyOperad>, GrammarError> {
    let gens: Vec<(String, usize)> = g
        .terminals
        .iter()
        .filter(|(_, &n)| n > 0)
        .map(|(s, &n)| (s.clone(), n))
        .collect();
    let ground = AnyOperad::Free(FreeOperad::new(Signature::monochrome(&gens)?));
    let colors = ColorSet::new(g.variables.iter().chain(g.constants()).cloned())?;
    let mut rules = Vec::with_capacity(g.productions.len());
    for (v, t) in &g.productions {
        let (shape, labels) = split(t).expect("checked when parsing");
        let elem = ground.parse(&shape.to_string())?;
        let ins = labels.iter().map(|s| colors.lookup(s)).collect::<Result<Vec<_>, _>>()?;
        rules.push(BudElem::new(colors.lookup(v)?, elem, ins));
    }
    let start = vec![colors.lookup(&g.start)?];
    let terminal = g.constants().map(|s| colors.lookup(s)).collect::<Result<Vec<_>, _>>()?;
    Ok(BudSystem::new(ground, colors, rules, start, terminal)?)
}

/// The trees with at most `max_degree` internal nodes generated by the
/// grammar, in the term syntax, found by exhaustive leftmost rewriting.
pub fn rtg_bruteforce(g: &Rtg, max_degree: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let start = Term::Atom(g.start.clone());
    let mut seen: HashSet<String> = HashSet::from([start.to_string()]);
    let mut stack = vec![start];
    while let Some(t) = stack.pop() {
        let Some(pos) = leaves(&t).iter().position(|s| g.variables.contains(*s)) else {
            out.insert(t.to_string());
            continue;
        };
        let var = leaves(&t)[pos].to_string();
        for (a, s) in &g.productions {
            if *a != var {
                continue;
            }
            let next = replace_leaf(&t, pos, s);
            if degree(&next) <= max_degree && seen.insert(next.to_string()) {
                stack.push(next);
            }
        }
    }
    out
}

/// The trees `𝔱_{s,u}` of the elements `(s, 𝔱, u)` of the language of a
/// compiled system with at most `max_degree` internal nodes.
pub fn emulated_trees(sys: &BudSystem<AnyOperad>, max_degree: usize) -> Result<BTreeSet<String>, GrammarError> {
    let widest = match sys.ground() {
        AnyOperad::Free(f) => f.signature().generators().iter().map(|g| g.arity()).max().unwrap_or(1),
        _ => 2,
    };
    let bound = 1 + max_degree * widest.saturating_sub(1);
    let colors = sys.colors();
    let mut out = BTreeSet::new();
    for x in budgen::language(sys, bound)? {
        let AnyElem::Free(tree) = &x.ground else { continue };
        if tree.degree() > max_degree {
            continue;
        }
        let shape = Term::parse(&sys.ground().render(&x.ground))?;
        let labels: Vec<&str> = x.ins.iter().map(|&c| colors.token(c)).collect();
        out.insert(join(&shape, &labels).to_string());
    }
    Ok(out)
}
