//! Synchronous grammars and their emulation over the operad of planar
//! trees, with node arities capped.

use std::collections::{BTreeSet, HashSet};

use budgen::BudSystem;
use operad_core::{BudElem, ColorSet, Operad};
use operad_zoo::term::Term;
use operad_zoo::{AnyOperad, FreeOperad, Signature};

use crate::labeled::{graft_all, join, leaves, split};
use crate::text::{lines, single_arg, unknown_directive, Line};
use crate::GrammarError;

/// A synchronous grammar `(B, a, R)`: bud labels, an axiom and substitution
/// rules `b → 𝔰` with `𝔰` a tree whose leaves carry bud labels. Internal
/// nodes are written `a<k>` where `k` is their number of children.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyncGrammar {
    pub labels: BTreeSet<String>,
    pub axiom: String,
    pub rules: Vec<(String, Term)>,
}

fn check_nodes(t: &Term, line: usize) -> Result<(), GrammarError> {
    if let Term::Node(name, cs) = t {
        if *name != format!("a{}", cs.len()) {
            return Err(GrammarError::Syntax {
                line,
                message: format!("node {name} with {} children should be written a{}", cs.len(), cs.len()),
            });
        }
        for c in cs {
            check_nodes(c, line)?;
        }
    }
    Ok(())
}

fn max_arity(t: &Term) -> usize {
    match t {
        Term::Node(_, cs) => cs.iter().map(max_arity).max().unwrap_or(0).max(cs.len()),
        _ => 0,
    }
}

impl SyncGrammar {
    /// Reads the text format:
    ///
    /// ```text
    /// axiom 1
    /// labels 1 2       # optional, defaults to the symbols of the rules
    /// 1 -> a2(1, 2)
    /// 2 -> 1
    /// ```
    pub fn parse(text: &str) -> Result<SyncGrammar, GrammarError> {
        let mut axiom = None;
        let mut declared: Option<BTreeSet<String>> = None;
        let mut rules = Vec::new();
        for l in lines(text)? {
            match l {
                Line::Directive { line, keyword: "axiom", args } => axiom = Some(single_arg(line, "axiom", &args)?.to_string()),
                Line::Directive { keyword: "labels", args, .. } => {
                    declared = Some(args.iter().map(|s| s.to_string()).collect())
                }
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
                    check_nodes(&t, line)?;
                    rules.push((lhs.to_string(), t));
                }
            }
        }
        let axiom = axiom
            .or_else(|| rules.first().map(|r| r.0.clone()))
            .ok_or(GrammarError::NoStart)?;
        let used: BTreeSet<String> = rules
            .iter()
            .flat_map(|(b, t)| std::iter::once(b.clone()).chain(leaves(t).into_iter().map(str::to_string)))
            .collect();
        let labels = match declared {
            Some(d) => {
                if let Some(s) = used.iter().find(|s| !d.contains(*s)) {
                    return Err(GrammarError::Syntax {
                        line: 0,
                        message: format!("symbol {s} is not a declared label"),
                    });
                }
                d
            }
            None => used,
        };
        if !labels.contains(&axiom) {
            return Err(GrammarError::UnknownAxiom(axiom));
        }
        Ok(SyncGrammar { labels, axiom, rules })
    }

    /// Largest number of children of a node in a rule.
    pub fn widest(&self) -> usize {
        self.rules.iter().map(|(_, t)| max_arity(t)).max().unwrap_or(0)
    }
}

/// `SG(G) = (Tree, B, ℜ, {a}, B)`, where `Tree` is the free operad on one
/// generator `a<k>` of each arity `k ≤ cap`, with a rule `(b, 𝔱, u)` for
/// each substitution rule `b → 𝔱_{b,u}`.
pub fn sg_to_bud(g: &SyncGrammar, cap: usize) -> Result<BudSystem<AnyOperad>, GrammarError> {
    for (_, t) in &g.rules {
        let widest = max_arity(t);
        if widest > cap {
            return Err(GrammarError::CapExceeded {
                node: format!("a{widest}"),
                arity: widest,
                cap,
            });
        }
    }
    let ground = AnyOperad::Free(FreeOperad::new(Signature::tree(cap.max(1))?));
    let colors = ColorSet::new(g.labels.iter().cloned())?;
    let mut rules = Vec::with_capacity(g.rules.len());
    for (b, t) in &g.rules {
        let (shape, labels) = split(t).expect("checked when parsing");
        let elem = ground.parse(&shape.to_string())?;
        let ins = labels.iter().map(|s| colors.lookup(s)).collect::<Result<Vec<_>, _>>()?;
        rules.push(BudElem::new(colors.lookup(b)?, elem, ins));
    }
    let all: Vec<usize> = (0..colors.len()).collect();
    let axiom = vec![colors.lookup(&g.axiom)?];
    Ok(BudSystem::new(ground, colors, rules, axiom, all)?)
}

/// The trees with at most `max_arity` leaves derivable from the axiom by
/// synchronous steps, in the term syntax. Steps never decrease the number of
/// leaves; the exploration stops after `(max_arity + 1)·(|B| + 1)` steps,
/// which reaches every such tree when the rules that keep one leaf cannot be
/// chained forever.
pub fn sg_bruteforce(g: &SyncGrammar, max_arity: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    if max_arity == 0 {
        return out;
    }
    let start = Term::Atom(g.axiom.clone());
    let mut seen: HashSet<String> = HashSet::from([start.to_string()]);
    out.insert(start.to_string());
    let mut layer = vec![start];
    let steps = (max_arity + 1) * (g.labels.len() + 1);
    for _ in 0..steps {
        let mut next_layer = Vec::new();
        for t in &layer {
            let labels = leaves(t);
            let choices: Vec<Vec<&Term>> = labels
                .iter()
                .map(|b| g.rules.iter().filter(|(l, _)| l == b).map(|(_, s)| s).collect())
                .collect();
            if choices.iter().any(Vec::is_empty) {
                continue;
            }
            let mut idx = vec![0usize; choices.len()];
            'combos: loop {
                let subs: Vec<&Term> = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
                let grown = graft_all(t, &subs);
                if leaves(&grown).len() <= max_arity {
                    let key = grown.to_string();
                    if seen.insert(key.clone()) {
                        out.insert(key);
                        next_layer.push(grown);
                    }
                }
                let mut j = idx.len();
                loop {
                    if j == 0 {
                        break 'combos;
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
        if next_layer.is_empty() {
            break;
        }
        layer = next_layer;
    }
    out
}

/// The trees `𝔱_{a,u}` of the elements `(a, 𝔱, u)` of the synchronous
/// language of a compiled system, of arity at most `max_arity`.
pub fn emulated_sync_trees(sys: &BudSystem<AnyOperad>, max_arity: usize) -> Result<BTreeSet<String>, GrammarError> {
    let colors = sys.colors();
    let mut out = BTreeSet::new();
    for x in budgen::sync_language(sys, max_arity)? {
        let shape = Term::parse(&sys.ground().render(&x.ground))?;
        let labels: Vec<&str> = x.ins.iter().map(|&c| colors.token(c)).collect();
        out.insert(join(&shape, &labels).to_string());
    }
    Ok(out)
}
