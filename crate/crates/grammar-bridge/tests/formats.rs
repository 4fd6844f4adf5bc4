use grammar_bridge::{sg_to_bud, Cfg, GrammarError, Rtg, SyncGrammar};

#[test]
fn empty_productions_are_rejected() {
    assert!(matches!(Cfg::parse("S -> a\nS ->"), Err(GrammarError::EmptyProduction { line: 2 })));
    assert!(matches!(Rtg::parse("S -> "), Err(GrammarError::EmptyProduction { line: 1 })));
}

#[test]
fn variables_have_arity_zero() {
    assert!(matches!(Rtg::parse("S -> S(a)"), Err(GrammarError::VariableArity(v)) if v == "S"));
    assert!(matches!(Rtg::parse("S -> f(a)\nS -> f(a, a)"), Err(GrammarError::InconsistentArity(v)) if v == "f"));
    assert!(matches!(Rtg::parse("S -> f(*)"), Err(GrammarError::Syntax { line: 1, .. })));
}

#[test]
fn axioms_must_be_labels() {
    assert!(matches!(
        SyncGrammar::parse("axiom z\nlabels 1\n1 -> a2(1, 1)"),
        Err(GrammarError::UnknownAxiom(a)) if a == "z"
    ));
    assert!(SyncGrammar::parse("axiom 1\n1 -> f(1, 1)").is_err());
}

#[test]
fn arity_cap_is_enforced() {
    let g = SyncGrammar::parse("1 -> a3(1, 1, 1)").unwrap();
    assert_eq!(g.widest(), 3);
    assert!(matches!(sg_to_bud(&g, 2), Err(GrammarError::CapExceeded { arity: 3, cap: 2, .. })));
    assert!(sg_to_bud(&g, 3).is_ok());
}

#[test]
fn grammar_structure() {
    let g = Cfg::parse("# comment\nstart E\nE -> E p x  # trailing\nE -> x\n").unwrap();
    assert_eq!(g.start, "E");
    assert_eq!(g.variables.iter().collect::<Vec<_>>(), ["E"]);
    assert_eq!(g.terminals.iter().collect::<Vec<_>>(), ["p", "x"]);
    assert!(Cfg::parse("").is_err());
    assert!(Cfg::parse("frobnicate S").is_err());
    assert!(Cfg::parse("S -> a,b").is_err());

    let t = Rtg::parse("S -> f(S, g(a))\nS -> b").unwrap();
    assert_eq!(t.terminals.get("f"), Some(&2));
    assert_eq!(t.terminals.get("g"), Some(&1));
    assert_eq!(t.constants().collect::<Vec<_>>(), ["a", "b"]);
}
