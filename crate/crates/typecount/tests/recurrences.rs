use budgen::{analyze_language, builtin, sync_series, synt_series, BudSystem, PresetParams};
use num_bigint::BigInt;
use operad_core::{BudElem, ColorSet, Operad, TypeVector};
use operad_zoo::AnyOperad;
use series::{colt_table, Rational};
use typecount::{
    colt_sync_coeff, colt_synt_coeff, lang_counting_series, solve_sync_system, solve_synt_system, sync_counting_series,
    synt_counts, CountPath, SyncRecurrence, SyntRecurrence,
};

fn preset(name: &str) -> BudSystem<AnyOperad> {
    builtin(name, &PresetParams::default()).unwrap()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

const ALL: &[&str] = &["bdias", "bp", "bs", "bu", "btree", "bbt", "b1", "b2", "b3", "hs-mag", "hs-motz"];

/// Every type vector with `k` components of degree `1..=n`.
fn all_types(k: usize, n: u32) -> Vec<TypeVector> {
    (1..=n).flat_map(|d| TypeVector::all_of_degree(k, d)).collect()
}

#[test]
fn recurrences_agree_with_element_level_tables() {
    for name in ALL {
        let sys = preset(name);
        let n = if *name == "bu" { 5 } else { 6 };
        let k = sys.colors().len();

        // The syntactic series with every color initial and terminal counts all
        // treelike expressions, which is what the recurrence computes.
        let open = BudSystem::new(
            sys.ground().clone(),
            sys.colors().clone(),
            sys.rules().to_vec(),
            (0..k).collect(),
            (0..k).collect(),
        )
        .unwrap();
        let synt = colt_table(open.bud(), &synt_series(&open, n).unwrap());
        let sync = colt_table(open.bud(), &sync_series(&open, n).unwrap());
        let mut synt_rec = SyntRecurrence::new(&sys).unwrap();
        let mut sync_rec = SyncRecurrence::new(&sys).unwrap();
        for a in 0..k {
            for alpha in all_types(k, n as u32) {
                let key = (a, alpha.clone());
                let want = synt.get(&key).cloned().unwrap_or_default();
                assert_eq!(synt_rec.coeff(a, &alpha).unwrap(), want, "{name} synt {a} {alpha}");
                let want = sync.get(&key).cloned().unwrap_or_default();
                assert_eq!(sync_rec.coeff(a, &alpha).unwrap(), want, "{name} sync {a} {alpha}");
            }
        }
    }
}

#[test]
fn functional_equations_agree_with_the_recurrences() {
    for name in ALL {
        let sys = preset(name);
        let n = 7;
        let k = sys.colors().len();
        let f = solve_synt_system(&sys, n).unwrap();
        let h = solve_sync_system(&sys, n).unwrap();
        let mut synt_rec = SyntRecurrence::new(&sys).unwrap();
        let mut sync_rec = SyncRecurrence::new(&sys).unwrap();
        for a in 0..k {
            for alpha in all_types(k, n) {
                let c = Rational::from_integer(synt_rec.coeff(a, &alpha).unwrap());
                assert_eq!(f[a].coeff(&alpha), c, "{name} synt {a} {alpha}");
                let c = Rational::from_integer(sync_rec.coeff(a, &alpha).unwrap());
                assert_eq!(h[a].coeff(&alpha), c, "{name} sync {a} {alpha}");
            }
        }
    }
}

#[test]
fn single_coefficients() {
    let b = operad_core::Bud::new(AnyOperad::As, ColorSet::numbered(2)).unwrap();
    let ruleless = BudSystem::new(AnyOperad::As, ColorSet::numbered(2), vec![], vec![0], vec![0]).unwrap();
    assert_eq!(colt_synt_coeff(&ruleless, 0, &TypeVector(vec![1, 0])).unwrap(), BigInt::from(1));
    assert_eq!(colt_synt_coeff(&ruleless, 0, &TypeVector(vec![0, 1])).unwrap(), BigInt::from(0));
    assert_eq!(colt_sync_coeff(&ruleless, 1, &TypeVector(vec![0, 1])).unwrap(), BigInt::from(1));

    let bs = preset("bs");
    let catalan = [1, 1, 2, 5, 14, 42, 132];
    for (n, &c) in (1..=7u32).zip(&catalan) {
        let total: BigInt = (0..=n)
            .map(|l| colt_synt_coeff(&bs, 0, &TypeVector(vec![l, n - l])).unwrap())
            .sum();
        assert_eq!(total, BigInt::from(c), "n = {n}");
    }
    drop(b);
}

#[test]
fn cycles_of_unary_rules_are_divergent() {
    let b = operad_core::Bud::new(AnyOperad::As, ColorSet::numbered(2)).unwrap();
    let rules = vec![b.parse("(1, 1, [2])").unwrap(), b.parse("(2, 1, [1])").unwrap()];
    let sys = BudSystem::new(AnyOperad::As, ColorSet::numbered(2), rules, vec![0], vec![0]).unwrap();
    assert!(colt_synt_coeff(&sys, 0, &TypeVector(vec![1, 0])).unwrap_err().is_divergence());
    assert!(solve_sync_system(&sys, 3).unwrap_err().is_divergence());
    assert!(lang_counting_series(&sys, 3).unwrap_err().is_divergence());
}

#[test]
fn language_counts() {
    let bs = lang_counting_series(&preset("bs"), 8).unwrap();
    assert_eq!(bs.path, CountPath::Recurrence);
    assert_eq!(bs.counts[1..], big(&[1, 1, 2, 5, 14, 42, 132, 429]));

    let bu = lang_counting_series(&preset("bu"), 6).unwrap();
    assert_eq!(bu.path, CountPath::Recurrence);
    assert_eq!(bu.counts[1..], big(&[2, 8, 64, 640, 7168, 86016]));

    let bp = lang_counting_series(&preset("bp"), 9).unwrap();
    assert_eq!(bp.path, CountPath::Support);
    assert_eq!(bp.counts[1..], big(&[1, 1, 1, 3, 5, 11, 25, 55, 129]));
    // The recurrence overcounts on an ambiguous system.
    let trees = synt_counts(&preset("bp"), 9).unwrap();
    assert!(trees[5] > bp.counts[5]);
}

#[test]
fn recurrence_counts_match_direct_counts_when_unambiguous() {
    for name in ["bs", "bu", "hs-mag"] {
        let sys = preset(name);
        let report = analyze_language(&sys, 6).unwrap();
        assert!(report.unambiguous.holds(), "{name}");
        let counts: Vec<BigInt> = report.counts.iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(synt_counts(&sys, 6).unwrap(), counts, "{name}");
    }
}

#[test]
fn synchronous_language_counts() {
    let cases: &[(&str, &[i64])] = &[
        ("btree", &[1, 1, 1, 1, 2, 2, 3, 4, 5, 8, 14, 23]),
        ("bbt", &[1, 1, 2, 1, 4, 6, 4, 17, 32, 44, 60, 70, 184, 476]),
        ("b1", &[1, 1, 1, 1, 2, 2, 2, 4, 6, 9, 11, 13, 22]),
        ("b2", &[1, 1, 3, 1, 7, 12, 6, 52, 119, 137]),
        ("b3", &[1, 1, 1, 1, 3, 2, 2, 6, 9, 15, 15, 17, 41]),
    ];
    for (name, want) in cases {
        let got = sync_counting_series(&preset(name), want.len()).unwrap();
        assert_eq!(got.path, CountPath::Recurrence, "{name}");
        assert_eq!(got.counts[1..], big(want), "{name}");
    }
    let b234 = builtin(
        "btree",
        &PresetParams {
            arities: Some(vec![2, 3, 4]),
            ..PresetParams::default()
        },
    )
    .unwrap();
    let got = sync_counting_series(&b234, 12).unwrap();
    assert_eq!(got.counts[1..], big(&[1, 1, 1, 2, 2, 4, 5, 9, 15, 28, 45, 73]));
}

#[test]
fn long_perfect_tree_sequences_by_recurrence() {
    let b23 = typecount::sync_counts(&preset("btree"), 20).unwrap();
    assert_eq!(
        b23[1..],
        big(&[1, 1, 1, 1, 2, 2, 3, 4, 5, 8, 14, 23, 32, 43, 63, 97, 149, 224, 332, 489])
    );
    let b234 = builtin(
        "btree",
        &PresetParams {
            arities: Some(vec![2, 3, 4]),
            ..PresetParams::default()
        },
    )
    .unwrap();
    let got = typecount::sync_counts(&b234, 20).unwrap();
    assert_eq!(
        got[1..],
        big(&[1, 1, 1, 2, 2, 4, 5, 9, 15, 28, 45, 73, 116, 199, 345, 601, 1021, 1738, 2987, 5244])
    );
}

#[test]
fn ruleless_sync_counts() {
    let sys = BudSystem::new(AnyOperad::Mag, ColorSet::monochrome(), Vec::<BudElem<_>>::new(), vec![0], vec![0])
        .unwrap();
    let got = sync_counting_series(&sys, 4).unwrap();
    assert_eq!(got.counts, big(&[0, 1, 0, 0, 0]));
}

mod random_systems {
    use operad_core::{As, BudElem, ColorSet, TypeVector};
    use proptest::prelude::*;
    use series::Rational;
    use typecount::{solve_sync_system, solve_synt_system, SyncRecurrence, SyntRecurrence};

    use super::all_types;

    /// Rules over `Bud_{1,2,3}(As)`; arity-one rules only go to a larger color,
    /// so the system is finitely factorizing.
    fn rules() -> impl Strategy<Value = Vec<BudElem<usize>>> {
        let rule = (0usize..3, prop::collection::vec(0usize..3, 1..4)).prop_filter_map("unary rules go up", |(out, ins)| {
            (ins.len() > 1 || ins[0] > out).then(|| BudElem::new(out, ins.len(), ins))
        });
        prop::collection::vec(rule, 0..5)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn recurrences_solve_the_functional_equations(rules in rules()) {
            let sys = budgen::BudSystem::new(As, ColorSet::numbered(3), rules, vec![0], vec![0, 1, 2]).unwrap();
            let n = 5;
            let f = solve_synt_system(&sys, n).unwrap();
            let h = solve_sync_system(&sys, n).unwrap();
            let mut synt = SyntRecurrence::new(&sys).unwrap();
            let mut sync = SyncRecurrence::new(&sys).unwrap();
            for a in 0..3 {
                for alpha in all_types(3, n) {
                    prop_assert_eq!(f[a].coeff(&alpha), Rational::from_integer(synt.coeff(a, &alpha).unwrap()));
                    prop_assert_eq!(h[a].coeff(&alpha), Rational::from_integer(sync.coeff(a, &alpha).unwrap()));
                }
            }
            let unit = TypeVector::unit(3, 0);
            prop_assert!(synt.coeff(0, &unit).unwrap() >= 1.into());
        }
    }
}
