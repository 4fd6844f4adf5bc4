use budgen::{
    builtin, derivation_graph, hook_series, multipath_count, multipath_counts_from, to_dot, BudSystem, PresetParams,
};
use num_bigint::{BigInt, BigUint};
use operad_core::{BudElem, ColorSet, Operad};
use operad_zoo::{AnyElem, AnyOperad};

fn preset(name: &str) -> BudSystem<AnyOperad> {
    builtin(name, &PresetParams::default()).unwrap()
}

fn el(sys: &BudSystem<AnyOperad>, s: &str) -> BudElem<AnyElem> {
    sys.bud().parse(s).unwrap()
}

fn rendered(sys: &BudSystem<AnyOperad>, v: &[(BudElem<AnyElem>, usize)]) -> Vec<(String, usize)> {
    v.iter().map(|(x, m)| (sys.render(x), *m)).collect()
}

#[test]
fn motzkin_successors_of_the_unit() {
    let bp = preset("bp");
    let u = bp.bud().unit(0).unwrap();
    assert_eq!(
        rendered(&bp, &bp.successors(&u)),
        vec![("(1, H, [2,2])".to_string(), 1), ("(1, UD, [1,1,1])".to_string(), 1)]
    );
    // Color 2 has no rule, so an element with an input of color 2 has no
    // synchronous successor.
    assert!(bp.sync_successors(&el(&bp, "(1, H, [2,2])")).is_empty());
    assert_eq!(bp.sync_successors(&el(&bp, "(1, UD, [1,1,1])")).iter().map(|p| p.1).sum::<usize>(), 8);
}

#[test]
fn dias_successors_and_edge_multiplicities() {
    let b = preset("bdias");
    let s = b.successors(&el(&b, "01"));
    assert_eq!(s.iter().map(|p| p.1).sum::<usize>(), 4);
    assert_eq!(rendered(&b, &s), vec![("011".to_string(), 3), ("101".to_string(), 1)]);

    let g = derivation_graph(&b, 5, false).unwrap();
    assert_eq!(g.multiplicity(&el(&b, "01"), &el(&b, "011")), 3);
    assert_eq!(g.multiplicity(&el(&b, "011"), &el(&b, "0111")), 5);
    assert_eq!(g.multiplicity(&el(&b, "0111"), &el(&b, "011")), 0);
    // Every Dias_1 word of arity at most 5 is reached.
    assert_eq!(g.vertices().len(), 1 + 2 + 3 + 4 + 5);
}

#[test]
fn graph_of_a_ruleless_system() {
    let sys = BudSystem::new(AnyOperad::Mag, ColorSet::numbered(2), vec![], vec![0, 1], vec![0]).unwrap();
    let g = derivation_graph(&sys, 4, false).unwrap();
    assert_eq!(g.vertices().len(), 2);
    assert_eq!(g.edge_count(), 0);
    let s = derivation_graph(&sys, 4, true).unwrap();
    assert_eq!(s.vertices().len(), 2);
}

#[test]
fn balanced_trees_sync_graph() {
    let bbt = preset("bbt");
    let g = derivation_graph(&bbt, 6, true).unwrap();
    let u = bbt.bud().unit(0).unwrap();
    let out: usize = g.edges().filter(|e| e.0 == g.index_of(&u).unwrap()).map(|e| e.2).sum();
    assert_eq!(out, 3);
    assert!(g.is_synchronous());
    let dot = to_dot(&bbt, &g);
    assert!(dot.starts_with("digraph sync_derivations {"));
    assert_eq!(dot.matches("->").count(), g.edge_count());
}

#[test]
fn multipath_counts() {
    let b = preset("bdias");
    let g = derivation_graph(&b, 4, false).unwrap();
    let u = el(&b, "0");
    assert_eq!(multipath_count(&g, &u, &u), BigUint::from(1u32));
    assert_eq!(multipath_count(&g, &el(&b, "011"), &el(&b, "01")), BigUint::from(0u32));
    assert_eq!(multipath_count(&g, &u, &el(&b, "0111")), BigUint::from(15u32));
    let other = BudSystem::new(AnyOperad::Mag, ColorSet::numbered(1), vec![], vec![0], vec![0]).unwrap();
    let lonely = derivation_graph(&other, 3, false).unwrap();
    let corolla = other.bud().parse("a(*,*)").unwrap();
    assert_eq!(multipath_count(&lonely, &other.bud().unit(0).unwrap(), &corolla), BigUint::from(0u32));
}

/// The hook coefficient of every accepted vertex is its number of
/// multipaths from the unit of its output color.
#[test]
fn hook_coefficients_are_multipath_counts() {
    for (name, bound) in [("bdias", 6), ("bp", 6), ("bs", 6), ("bbt", 5), ("b1", 6), ("hs-motz", 5)] {
        let sys = preset(name);
        let g = derivation_graph(&sys, bound, false).unwrap();
        let hook = hook_series(&sys, bound).unwrap();
        let mut seen = 0;
        for x in g.vertices() {
            let u = sys.bud().unit(x.out).unwrap();
            let paths = BigInt::from(multipath_count(&g, &u, x));
            if sys.accepts(x) {
                assert_eq!(hook.coeff(x), paths, "{name}: {}", sys.render(x));
                seen += 1;
            }
        }
        assert_eq!(seen, hook.len(), "{name}");
    }
}

#[test]
fn divergent_rules_are_rejected() {
    let b = operad_core::Bud::new(AnyOperad::As, ColorSet::numbered(2)).unwrap();
    let rules = vec![b.parse("(1, 1, [2])").unwrap(), b.parse("(2, 1, [1])").unwrap()];
    let sys = BudSystem::new(AnyOperad::As, ColorSet::numbered(2), rules, vec![0], vec![0]).unwrap();
    let err = derivation_graph(&sys, 3, false).unwrap_err();
    assert!(err.is_divergence());
    assert!(hook_series(&sys, 3).unwrap_err().is_divergence());
}

#[test]
fn single_source_counts_agree_with_pairwise_counts() {
    for (name, bound) in [("bdias", 5), ("bp", 6), ("b1", 5)] {
        let sys = preset(name);
        let g = derivation_graph(&sys, bound, false).unwrap();
        let u = sys.bud().unit(sys.initial()[0]).unwrap();
        let all = multipath_counts_from(&g, &u);
        assert_eq!(all.len(), g.vertices().len());
        for (x, c) in g.vertices().iter().zip(&all) {
            assert_eq!(*c, multipath_count(&g, &u, x), "{name}: {}", sys.render(x));
        }
    }
}
