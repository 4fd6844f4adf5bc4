use std::path::PathBuf;

use budgen::{builtin, PresetParams};
use grammar_bridge::{
    cfg_bruteforce, cfg_to_bud, emulated_sync_trees, emulated_trees, emulated_words, rtg_bruteforce, rtg_to_bud,
    sg_bruteforce, sg_to_bud, Cfg, Rtg, SyncGrammar,
};
use operad_core::Operad;

fn corpus(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn context_free_corpus() {
    for name in ["dyck.cfg", "arith.cfg", "palindromes.cfg"] {
        let g = Cfg::parse(&corpus(name)).unwrap();
        let sys = cfg_to_bud(&g).unwrap();
        let brute = cfg_bruteforce(&g, 6);
        assert!(!brute.is_empty(), "{name}");
        assert_eq!(emulated_words(&sys, 6).unwrap(), brute, "{name}");
    }
}

#[test]
fn regular_tree_corpus() {
    for name in ["binary.rtg", "alternating.rtg", "chains.rtg"] {
        let g = Rtg::parse(&corpus(name)).unwrap();
        let sys = rtg_to_bud(&g).unwrap();
        let brute = rtg_bruteforce(&g, 4);
        assert!(brute.len() > 3, "{name}");
        assert_eq!(emulated_trees(&sys, 4).unwrap(), brute, "{name}");
    }
}

#[test]
fn synchronous_corpus() {
    for (name, cap) in [("balanced.sg", 2), ("perfect23.sg", 3), ("mixed.sg", 3)] {
        let g = SyncGrammar::parse(&corpus(name)).unwrap();
        let sys = sg_to_bud(&g, cap).unwrap();
        let brute = sg_bruteforce(&g, 8);
        assert!(brute.len() > 3, "{name}");
        assert_eq!(emulated_sync_trees(&sys, 8).unwrap(), brute, "{name}");
    }
}

#[test]
fn small_languages() {
    let g = Cfg::parse("S -> a b").unwrap();
    let words: Vec<Vec<String>> = cfg_bruteforce(&g, 2).into_iter().collect();
    assert_eq!(words, vec![vec!["a".to_string(), "b".to_string()]]);

    let g = Cfg::parse("S -> S S\nS -> a b").unwrap();
    let words: Vec<String> = cfg_bruteforce(&g, 4).into_iter().map(|w| w.concat()).collect();
    assert_eq!(words, vec!["ab", "abab"]);
    let sys = cfg_to_bud(&g).unwrap();
    assert_eq!(sys.rules().len(), 2);
    assert_eq!(sys.colors().len(), 3);

    let g = Rtg::parse("S -> f(a, b)").unwrap();
    assert_eq!(rtg_to_bud(&g).unwrap().rules().len(), 1);
    assert_eq!(rtg_bruteforce(&g, 4).into_iter().collect::<Vec<_>>(), vec!["f(a,b)"]);
}

#[test]
fn balanced_grammar_compiles_to_the_balanced_tree_system() {
    let g = SyncGrammar::parse(&corpus("balanced.sg")).unwrap();
    let sg = sg_to_bud(&g, 2).unwrap();
    let bbt = builtin("bbt", &PresetParams::default()).unwrap();
    assert_eq!(sg.colors(), bbt.colors());
    assert_eq!(sg.initial(), bbt.initial());
    let render = |sys: &budgen::BudSystem<operad_zoo::AnyOperad>| -> Vec<String> {
        let mut r: Vec<String> = sys.rules().iter().map(|x| sys.render(x).replace("a2(", "a(")).collect();
        r.sort();
        r
    };
    assert_eq!(render(&sg), render(&bbt));

    // SG(G) accepts every label at the leaves; keeping the trees whose
    // leaves are all labeled 1 gives the synchronous language of B_bbt.
    let mut from_grammar: Vec<String> = budgen::sync_language(&sg, 8)
        .unwrap()
        .into_iter()
        .filter(|x| x.ins.iter().all(|&c| c == 0))
        .map(|x| sg.ground().render(&x.ground).replace("a2(", "a("))
        .collect();
    let mut from_preset: Vec<String> = budgen::sync_language(&bbt, 8)
        .unwrap()
        .into_iter()
        .map(|x| bbt.ground().render(&x.ground))
        .collect();
    from_grammar.sort();
    from_preset.sort();
    assert_eq!(from_grammar, from_preset);
    assert_eq!(from_preset.len(), 1 + 1 + 2 + 1 + 4 + 6 + 4 + 17);
}
