//! Trees whose leaves carry labels, written in the term syntax with atoms
//! at the leaves: `f(a, g(S))`.

use operad_zoo::term::Term;

/// Splits a labeled tree into its shape (leaves written `*`) and the word of
/// its leaf labels, from left to right.
pub(crate) fn split(t: &Term) -> Result<(Term, Vec<String>), String> {
    fn rec(t: &Term, labels: &mut Vec<String>) -> Result<Term, String> {
        match t {
            Term::Atom(a) => {
                labels.push(a.clone());
                Ok(Term::Leaf)
            }
            Term::Node(name, cs) => Ok(Term::Node(
                name.clone(),
                cs.iter().map(|c| rec(c, labels)).collect::<Result<_, _>>()?,
            )),
            Term::Leaf | Term::Unit(_) => Err("every leaf must carry a label".into()),
        }
    }
    let mut labels = Vec::new();
    let shape = rec(t, &mut labels)?;
    Ok((shape, labels))
}

/// Labels the leaves of a shape from left to right.
pub(crate) fn join<S: AsRef<str>>(shape: &Term, labels: &[S]) -> Term {
    fn rec<S: AsRef<str>>(t: &Term, labels: &[S], next: &mut usize) -> Term {
        match t {
            Term::Node(name, cs) => Term::Node(name.clone(), cs.iter().map(|c| rec(c, labels, next)).collect()),
            _ => {
                let a = Term::Atom(labels[*next].as_ref().to_string());
                *next += 1;
                a
            }
        }
    }
    rec(shape, labels, &mut 0)
}

/// Number of internal nodes.
pub(crate) fn degree(t: &Term) -> usize {
    match t {
        Term::Node(_, cs) => 1 + cs.iter().map(degree).sum::<usize>(),
        _ => 0,
    }
}

/// Replaces the leaf at preorder leaf position `target` by `by`.
pub(crate) fn replace_leaf(t: &Term, target: usize, by: &Term) -> Term {
    fn rec(t: &Term, target: usize, by: &Term, seen: &mut usize) -> Term {
        match t {
            Term::Node(name, cs) => Term::Node(name.clone(), cs.iter().map(|c| rec(c, target, by, seen)).collect()),
            leaf => {
                let here = *seen;
                *seen += 1;
                if here == target {
                    by.clone()
                } else {
                    leaf.clone()
                }
            }
        }
    }
    rec(t, target, by, &mut 0)
}

/// The leaf labels from left to right.
pub(crate) fn leaves(t: &Term) -> Vec<&str> {
    fn rec<'a>(t: &'a Term, out: &mut Vec<&'a str>) {
        match t {
            Term::Node(_, cs) => cs.iter().for_each(|c| rec(c, out)),
            Term::Atom(a) | Term::Unit(a) => out.push(a),
            Term::Leaf => out.push("*"),
        }
    }
    let mut out = Vec::new();
    rec(t, &mut out);
    out
}

/// Replaces every leaf `i` by `subs[i]`.
pub(crate) fn graft_all(t: &Term, subs: &[&Term]) -> Term {
    fn rec(t: &Term, subs: &[&Term], next: &mut usize) -> Term {
        match t {
            Term::Node(name, cs) => Term::Node(name.clone(), cs.iter().map(|c| rec(c, subs, next)).collect()),
            _ => {
                let s = subs[*next].clone();
                *next += 1;
                s
            }
        }
    }
    rec(t, subs, &mut 0)
}
