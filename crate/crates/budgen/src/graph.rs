use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use operad_core::{BudElem, Operad};

use crate::{BudError, BudSystem};

/// A derivation graph: vertices in discovery order and edges with
/// multiplicities.
#[derive(Clone, Debug)]
pub struct DerivGraph<E> {
    vertices: Vec<E>,
    index: HashMap<E, usize>,
    edges: BTreeMap<(usize, usize), usize>,
    synchronous: bool,
}

impl<E: Clone + Eq + Hash> DerivGraph<E> {
    pub fn vertices(&self) -> &[E] {
        &self.vertices
    }

    pub fn index_of(&self, x: &E) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn is_synchronous(&self) -> bool {
        self.synchronous
    }

    /// Edges as `(source, target, multiplicity)`, by vertex index.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.edges.iter().map(|(&(a, b), &m)| (a, b, m))
    }

    /// Multiplicity of the edge from `x` to `y`, 0 when absent.
    pub fn multiplicity(&self, x: &E, y: &E) -> usize {
        match (self.index_of(x), self.index_of(y)) {
            (Some(a), Some(b)) => self.edges.get(&(a, b)).copied().unwrap_or(0),
            _ => 0,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.values().sum()
    }
}

/// The (synchronous) derivation graph of `sys` restricted to elements of
/// arity at most `bound`, explored breadth first from the units of the
/// initial colors.
pub fn derivation_graph<O: Operad>(
    sys: &BudSystem<O>,
    bound: usize,
    synchronous: bool,
) -> Result<DerivGraph<BudElem<O::Elem>>, BudError> {
    sys.require_factorizing()?;
    let mut g = DerivGraph {
        vertices: Vec::new(),
        index: HashMap::new(),
        edges: BTreeMap::new(),
        synchronous,
    };
    let mut queue = VecDeque::new();
    for &a in sys.initial() {
        let u = sys.bud().unit(a)?;
        if bound >= 1 && !g.index.contains_key(&u) {
            g.index.insert(u.clone(), g.vertices.len());
            g.vertices.push(u);
            queue.push_back(g.vertices.len() - 1);
        }
    }
    while let Some(v) = queue.pop_front() {
        let x = g.vertices[v].clone();
        let next = if synchronous {
            sys.sync_successors(&x)
        } else {
            sys.successors(&x)
        };
        for (y, m) in next {
            if y.ins.len() > bound {
                continue;
            }
            let w = match g.index.get(&y) {
                Some(&w) => w,
                None => {
                    g.index.insert(y.clone(), g.vertices.len());
                    g.vertices.push(y);
                    queue.push_back(g.vertices.len() - 1);
                    g.vertices.len() - 1
                }
            };
            *g.edges.entry((v, w)).or_default() += m;
        }
    }
    Ok(g)
}

/// Number of multipaths from `src` to `dst`, each edge counted with its
/// multiplicity. Derivation graphs are acyclic, so this is finite.
pub fn multipath_count<E: Clone + Eq + Hash>(g: &DerivGraph<E>, src: &E, dst: &E) -> BigUint {
    let (Some(s), Some(t)) = (g.index_of(src), g.index_of(dst)) else {
        return BigUint::zero();
    };
    let mut out: Vec<Vec<(usize, usize)>> = vec![vec![]; g.vertices.len()];
    for (a, b, m) in g.edges() {
        out[a].push((b, m));
    }
    let mut memo: Vec<Option<BigUint>> = vec![None; g.vertices.len()];
    // Iterative post-order to avoid deep recursion on long chains.
    let mut stack = vec![(s, false)];
    while let Some((v, expanded)) = stack.pop() {
        if memo[v].is_some() {
            continue;
        }
        if expanded {
            let mut total = if v == t { BigUint::one() } else { BigUint::zero() };
            for &(w, m) in &out[v] {
                total += memo[w].as_ref().expect("children are done") * BigUint::from(m);
            }
            memo[v] = Some(total);
        } else {
            stack.push((v, true));
            for &(w, _) in &out[v] {
                if memo[w].is_none() {
                    stack.push((w, false));
                }
            }
        }
    }
    memo[s].take().unwrap_or_default()
}

/// Number of multipaths from `src` to every vertex, indexed like
/// [`DerivGraph::vertices`].
pub fn multipath_counts_from<E: Clone + Eq + Hash>(g: &DerivGraph<E>, src: &E) -> Vec<BigUint> {
    let n = g.vertices.len();
    let mut counts = vec![BigUint::zero(); n];
    let Some(s) = g.index_of(src) else {
        return counts;
    };
    let mut out: Vec<Vec<(usize, usize)>> = vec![vec![]; n];
    let mut indegree = vec![0usize; n];
    for (a, b, m) in g.edges() {
        out[a].push((b, m));
        indegree[b] += 1;
    }
    counts[s] = BigUint::one();
    let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    while let Some(v) = ready.pop() {
        let here = std::mem::take(&mut counts[v]);
        for &(w, m) in &out[v] {
            if !here.is_zero() {
                counts[w] += &here * BigUint::from(m);
            }
            indegree[w] -= 1;
            if indegree[w] == 0 {
                ready.push(w);
            }
        }
        counts[v] = here;
    }
    counts
}

/// DOT rendering: vertices labeled by their canonical serialization and
/// one arrow per unit of multiplicity.
pub fn to_dot<O: Operad>(sys: &BudSystem<O>, g: &DerivGraph<BudElem<O::Elem>>) -> String {
    let mut s = String::new();
    let name = if g.synchronous { "sync_derivations" } else { "derivations" };
    writeln!(s, "digraph {name} {{").unwrap();
    for (i, x) in g.vertices.iter().enumerate() {
        let label = sys.render(x).replace('\\', "\\\\").replace('"', "\\\"");
        writeln!(s, "  v{i} [label=\"{label}\"];").unwrap();
    }
    for (a, b, m) in g.edges() {
        for _ in 0..m {
            writeln!(s, "  v{a} -> v{b};").unwrap();
        }
    }
    s.push_str("}\n");
    s
}
