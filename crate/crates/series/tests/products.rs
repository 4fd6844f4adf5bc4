use num_bigint::BigInt;
use operad_core::{As, Bud, BudElem, ColorSet, Operad};
use operad_zoo::{ASchr, Dias, FreeOperad, Generator, Mag, MagTree, Signature};
use proptest::prelude::*;
use series::{
    characteristic, col_series, colt_table, compose_inverse, compose_inverse_fixpoint, compose_power,
    compose_prod, compose_star, mu_encode, pre_lie, pre_lie_power, pre_lie_star, pru_series,
    scalar_product, tree_closure, units_series, iteration_cap, Rational, Scalar, Series, SeriesError, TreeSlices,
};

type Q = Rational;

fn q(n: i64) -> Q {
    Q::from_int(n)
}

fn as_series(terms: &[(usize, i64)], bound: usize) -> Series<usize, Q> {
    let mut f = Series::zero(bound);
    for &(n, c) in terms {
        f.add_term(&As, n, &q(c));
    }
    f
}

#[test]
fn pre_lie_in_as_is_not_associative() {
    let s = as_series(&[(2, 1)], 6);
    let s2 = pre_lie(&As, &s, &s).unwrap();
    assert_eq!(s2, as_series(&[(3, 2)], 6));
    assert_eq!(pre_lie(&As, &s2, &s).unwrap(), as_series(&[(4, 6)], 6));
    assert_eq!(pre_lie(&As, &s, &s2).unwrap(), as_series(&[(4, 4)], 6));
    assert_eq!(pre_lie_power(&As, &s, 2).unwrap(), as_series(&[(3, 2)], 6));
    assert_eq!(pre_lie_power(&As, &s, 0).unwrap(), units_series(&As, 6));
}

#[test]
fn composition_in_as() {
    let f = as_series(&[(2, 1)], 8);
    let g = as_series(&[(2, 1), (3, 1)], 8);
    assert_eq!(compose_prod(&As, &f, &g).unwrap(), as_series(&[(4, 1), (5, 2), (6, 1)], 8));
}

#[test]
fn units_act_as_expected() {
    let f = as_series(&[(1, 3), (2, 1), (4, -2)], 6);
    let u = units_series::<_, Q>(&As, 6);
    assert_eq!(pre_lie(&As, &u, &f).unwrap(), f);
    assert_eq!(pre_lie(&As, &f, &u).unwrap(), as_series(&[(1, 3), (2, 2), (4, -8)], 6));
    assert_eq!(compose_prod(&As, &u, &f).unwrap(), f);
    assert_eq!(compose_prod(&As, &f, &u).unwrap(), f);
}

#[test]
fn basic_series_operations() {
    let b = Bud::new(As, ColorSet::numbered(2)).unwrap();
    let x = BudElem::new(0, 2, vec![0, 1]);
    let y = BudElem::new(1, 1, vec![0]);
    let f: Series<_, Q> = characteristic(&b, [x.clone(), y.clone()], 4);
    assert_eq!(f.coeff(&x), q(1));
    assert!(f.add(&f.scale(&q(-1))).unwrap().is_empty());
    assert_eq!(f.scale(&q(2)).support().count(), 2);
    assert_eq!(scalar_product(&f, &f), q(2));
    let only_x = characteristic::<_, Q>(&b, [x.clone()], 4);
    assert_eq!(scalar_product(&only_x, &f), q(1));
    assert_eq!(scalar_product(&only_x, &characteristic(&b, [y], 4)), q(0));
    let u = units_series::<_, Q>(&b, 4);
    assert_eq!(u.len(), 2);
    let col = col_series(&b, &u);
    assert!(col.contains(&BudElem::new(1, 1, vec![1])));
    assert!(f.add(&Series::zero(5)).is_err());
    assert_eq!(f.render(&b), "1 * (2, 1, [1])\n1 * (1, 2, [1,2])\n");
}

#[test]
fn star_fixtures() {
    let zero = Series::<usize, Q>::zero(5);
    assert_eq!(pre_lie_star(&As, &zero).unwrap(), units_series(&As, 5));
    assert_eq!(compose_star(&As, &zero).unwrap(), units_series(&As, 5));

    let d = Dias::new(1);
    let rules = [d.word(&[0, 1]).unwrap(), d.word(&[1, 0]).unwrap()];
    let r: Series<_, Q> = characteristic(&d, rules, 5);
    let star = pre_lie_star(&d, &r).unwrap();
    assert_eq!(star.coeff(&d.word(&[1, 0, 1]).unwrap()), q(2));
    assert_eq!(star.coeff(&d.word(&[1, 0, 1, 1]).unwrap()), q(9));

    let c: Series<_, Q> = characteristic(&Mag, [MagTree::corolla()], 5);
    let star = pre_lie_star(&Mag, &c).unwrap();
    let t = |s: &str| Mag.parse(s).unwrap();
    assert_eq!(star.coeff(&t("a(a(a(*,*),*),*)")), q(1));
    assert_eq!(star.coeff(&t("a(*,a(*,a(*,*)))")), q(1));
    assert_eq!(star.coeff(&t("a(a(*,*),a(*,*))")), q(2));
    assert_eq!(star.coeff(&t("a(a(a(*,*),*),a(*,*))")), q(3));
}

#[test]
fn star_equations_and_powers() {
    let b = Bud::new(As, ColorSet::numbered(2)).unwrap();
    let r: Series<_, Q> = characteristic(
        &b,
        [
            BudElem::new(0, 2, vec![0, 1]),
            BudElem::new(1, 3, vec![1, 0, 0]),
            BudElem::new(1, 1, vec![0]),
        ],
        7,
    );
    let u = units_series(&b, 7);
    let ps = pre_lie_star(&b, &r).unwrap();
    assert_eq!(ps, u.add(&pre_lie(&b, &ps, &r).unwrap()).unwrap());
    let cs = compose_star(&b, &r).unwrap();
    assert_eq!(cs, u.add(&compose_prod(&b, &cs, &r).unwrap()).unwrap());
    let mut sum = Series::zero(7);
    for ell in 0..=12 {
        sum.add_assign(&compose_power(&b, &r, ell).unwrap());
    }
    assert_eq!(sum, cs);
    let first_two = compose_power(&b, &r, 0).unwrap().add(&compose_power(&b, &r, 1).unwrap()).unwrap();
    assert_eq!(first_two, u.add(&r).unwrap());
}

#[test]
fn divergence_is_reported() {
    let b = Bud::new(As, ColorSet::numbered(2)).unwrap();
    let r: Series<_, Q> = characteristic(&b, [BudElem::new(0, 1, vec![1]), BudElem::new(1, 1, vec![0])], 4);
    assert!(matches!(pre_lie_star(&b, &r), Err(SeriesError::Divergence(_))));
}

fn aschr_rules(bound: usize) -> (Bud<ASchr>, Series<BudElem<operad_zoo::ASchrTree>, Q>) {
    let b = Bud::new(ASchr, ColorSet::numbered(2)).unwrap();
    let rules = [
        b.parse("(1, a(*,*), [1,2])").unwrap(),
        b.parse("(2, b(*,*), [1,2])").unwrap(),
    ];
    let r = characteristic(&b, rules, bound);
    (b, r)
}

#[test]
fn inverses() {
    let u = units_series::<_, Q>(&As, 6);
    assert_eq!(compose_inverse(&As, &u).unwrap(), u);
    let half = compose_inverse(&As, &u.scale(&q(2))).unwrap();
    assert_eq!(half, u.scale(&Q::new(1.into(), 2.into())));
    assert!(matches!(
        compose_inverse(&As, &as_series(&[(2, 1)], 4)),
        Err(SeriesError::NotInvertible(_))
    ));

    let (b, r) = aschr_rules(8);
    let ub = units_series(&b, 8);
    let f = ub.sub(&r).unwrap();
    let inv = compose_inverse(&b, &f).unwrap();
    assert_eq!(compose_prod(&b, &f, &inv).unwrap(), ub);
    assert_eq!(compose_prod(&b, &inv, &f).unwrap(), ub);
    assert_eq!(compose_inverse_fixpoint(&b, &f).unwrap(), inv);
}

#[test]
fn inverse_with_general_unit_coefficients() {
    let b = Bud::new(As, ColorSet::numbered(2)).unwrap();
    let mut f: Series<_, Q> = Series::zero(6);
    f.add_term(&b, b.unit(0).unwrap(), &q(2));
    f.add_term(&b, b.unit(1).unwrap(), &q(-3));
    f.add_term(&b, BudElem::new(0, 2, vec![0, 1]), &q(5));
    f.add_term(&b, BudElem::new(1, 1, vec![0]), &q(7));
    f.add_term(&b, BudElem::new(1, 3, vec![1, 1, 0]), &Q::new(1.into(), 2.into()));
    let inv = compose_inverse(&b, &f).unwrap();
    let u = units_series(&b, 6);
    assert_eq!(compose_prod(&b, &f, &inv).unwrap(), u);
    assert_eq!(compose_prod(&b, &inv, &f).unwrap(), u);
    assert_eq!(compose_inverse_fixpoint(&b, &f).unwrap(), inv);
}

#[test]
fn colors_of_a_tree_series() {
    let g = |name: &str, out, ins: &[usize]| Generator {
        name: name.into(),
        out,
        ins: ins.to_vec(),
    };
    let free = FreeOperad::new(
        Signature::new(ColorSet::numbered(2), vec![g("a", 0, &[1, 0]), g("b", 1, &[0, 1, 0])]).unwrap(),
    );
    let mut fa: Series<_, Q> = Series::zero(4);
    for n in 1..=4 {
        for t in free.elements(n).unwrap() {
            let count = free.render(&t).matches("a(").count() as i64;
            fa.add_term(&free, t, &q(count));
        }
    }
    let colt = colt_table(&free, &fa);
    let tv = |v: &[u32]| operad_core::TypeVector(v.to_vec());
    assert_eq!(colt[&(0, tv(&[1, 1]))], q(1));
    assert_eq!(colt[&(0, tv(&[1, 2]))], q(2));
    assert_eq!(colt[&(0, tv(&[3, 1]))], q(1));
    assert_eq!(colt[&(0, tv(&[1, 3]))], q(3));
    assert_eq!(colt[&(1, tv(&[2, 2]))], q(2));
    let col = col_series(&free, &fa);
    assert_eq!(col.coeff(&BudElem::new(0, 3, vec![1, 1, 0])), q(2));
    assert_eq!(col.coeff(&BudElem::new(0, 4, vec![0, 1, 0, 0])), q(1));
}

#[test]
fn pruning() {
    let b = Bud::new(As, ColorSet::monochrome()).unwrap();
    let f: Series<_, Q> = characteristic(&b, [BudElem::new(0, 2, vec![0, 0]), BudElem::new(0, 3, vec![0; 3])], 4);
    assert_eq!(pru_series(&f), as_series(&[(2, 1), (3, 1)], 4));
    let b2 = Bud::new(As, ColorSet::numbered(2)).unwrap();
    let g: Series<_, Q> = characteristic(&b2, [BudElem::new(0, 2, vec![0, 1]), BudElem::new(1, 2, vec![0, 0])], 4);
    assert_eq!(pru_series(&g), as_series(&[(2, 2)], 4));
}

#[test]
fn integer_scalars() {
    let f: Series<usize, BigInt> = characteristic(&As, [2usize], 5);
    let star = pre_lie_star(&As, &f).unwrap();
    assert_eq!(star.coeff(&4), BigInt::from(6));
}

fn word_series(words: &[(Vec<usize>, i64)]) -> Vec<(Vec<usize>, Q)> {
    words.iter().map(|(w, c)| (w.clone(), q(*c))).collect()
}

fn arb_words() -> impl Strategy<Value = Vec<(Vec<usize>, i64)>> {
    prop::collection::vec((prop::collection::vec(0usize..2, 0..3), -3i64..4), 0..5)
}

fn bud12() -> Bud<As> {
    Bud::new(As, ColorSet::numbered(2)).unwrap()
}

fn arb_bud_series() -> impl Strategy<Value = Series<BudElem<usize>, Q>> {
    prop::collection::vec(
        ((0usize..2), prop::collection::vec(0usize..2, 1..4), -2i64..3),
        0..4,
    )
    .prop_map(|terms| {
        let b = bud12();
        let mut f = Series::zero(6);
        for (out, ins, c) in terms {
            f.add_term(&b, BudElem::new(out, ins.len(), ins), &q(c));
        }
        f
    })
}

fn arb_mag_series() -> impl Strategy<Value = Series<MagTree, Q>> {
    prop::collection::vec((1usize..4, any::<prop::sample::Index>(), -2i64..3), 0..4).prop_map(|terms| {
        let mut f = Series::zero(6);
        for (n, idx, c) in terms {
            let all = MagTree::all(n);
            f.add_term(&Mag, idx.get(&all).clone(), &q(c));
        }
        f
    })
}

fn pre_lie_defect<O: Operad>(op: &O, f: &Series<O::Elem, Q>, g: &Series<O::Elem, Q>, h: &Series<O::Elem, Q>) -> Series<O::Elem, Q> {
    let left = pre_lie(op, &pre_lie(op, f, g).unwrap(), h).unwrap();
    let right = pre_lie(op, f, &pre_lie(op, g, h).unwrap()).unwrap();
    left.sub(&right).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mu_turns_pre_lie_into_concatenation(s in arb_words(), t in arb_words()) {
        let b = Bud::new(As, ColorSet::numbered(3)).unwrap();
        let (s, t) = (word_series(&s), word_series(&t));
        let mut product = Vec::new();
        for (u, a) in &s {
            for (v, c) in &t {
                let mut w = u.clone();
                w.extend(v);
                product.push((w, a.mul(c)));
            }
        }
        let lhs = pre_lie(&b, &mu_encode(&s, 2, 5), &mu_encode(&t, 2, 5)).unwrap();
        prop_assert_eq!(lhs, mu_encode(&product, 2, 5));
    }

    #[test]
    fn pre_lie_relation_bud(f in arb_bud_series(), g in arb_bud_series(), h in arb_bud_series()) {
        let b = bud12();
        prop_assert_eq!(pre_lie_defect(&b, &f, &g, &h), pre_lie_defect(&b, &f, &h, &g));
    }

    #[test]
    fn pre_lie_relation_mag(f in arb_mag_series(), g in arb_mag_series(), h in arb_mag_series()) {
        prop_assert_eq!(pre_lie_defect(&Mag, &f, &g, &h), pre_lie_defect(&Mag, &f, &h, &g));
    }

    #[test]
    fn graded_tree_closure_matches_fixpoint(f in arb_bud_series()) {
        let b = bud12();
        let u = units_series(&b, 6);
        match iteration_cap(&b, &f) {
            Err(_) => prop_assert!(tree_closure(&b, &f, &u).is_err()),
            Ok(cap) => {
                let mut x = u.clone();
                for _ in 0..cap {
                    let mut next = compose_prod(&b, &f, &x).unwrap();
                    next.add_assign(&u);
                    x = next;
                }
                prop_assert_eq!(tree_closure(&b, &f, &u).unwrap(), x);
            }
        }
    }

    #[test]
    fn streamed_slice_matches_stored_slice(f in arb_bud_series()) {
        let b = bud12();
        prop_assume!(iteration_cap(&b, &f).is_ok());
        let full = tree_closure(&b, &f, &units_series(&b, 6)).unwrap();
        let low = TreeSlices::build(&b, &f.truncate(&b, 5), &units_series(&b, 5)).unwrap();
        let mut streamed: Series<BudElem<usize>, Q> = Series::zero(6);
        low.stream_next(&b, &f, &units_series(&b, 6), &|_| true, &mut |x, w| streamed.add_term(&b, x, &w))
            .unwrap();
        prop_assert_eq!(streamed, full.filter(|x| x.ins.len() == 6));
    }

    #[test]
    fn composition_is_associative_and_unital(f in arb_bud_series(), g in arb_bud_series(), h in arb_bud_series()) {
        let b = bud12();
        let fg_h = compose_prod(&b, &compose_prod(&b, &f, &g).unwrap(), &h).unwrap();
        let f_gh = compose_prod(&b, &f, &compose_prod(&b, &g, &h).unwrap()).unwrap();
        prop_assert_eq!(fg_h, f_gh);
        let u = units_series(&b, 6);
        prop_assert_eq!(compose_prod(&b, &u, &f).unwrap(), f.clone());
        prop_assert_eq!(compose_prod(&b, &f, &u).unwrap(), f);
    }
}

#[test]
fn mu_encoding_shapes() {
    let empty = mu_encode(&[(vec![], q(1))], 2, 3);
    let b = Bud::new(As, ColorSet::numbered(3)).unwrap();
    assert_eq!(empty, units_series::<_, Q>(&b, 3).filter(|x| x.out == 2));
    let all2: Vec<(Vec<usize>, Q)> = [[0, 0], [0, 1], [1, 0], [1, 1]].iter().map(|w| (w.to_vec(), q(1))).collect();
    assert_eq!(mu_encode(&all2, 2, 3).len(), 4);
}
