use budgen::{builtin, BudSystem, PresetParams};
use num_bigint::BigInt;
use operad_zoo::AnyOperad;
use series::{Poly, Rational, Scalar};
use typecount::{refined_perfect, solve_sync_system, solve_synt_system, specialize_refined, sync_iterates, TypePoly};

fn preset(name: &str) -> BudSystem<AnyOperad> {
    builtin(name, &PresetParams::default()).unwrap()
}

fn poly(k: usize, s: &str) -> TypePoly {
    TypePoly::parse(k, s).unwrap()
}

fn rationals(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

#[test]
fn balanced_tree_iterates() {
    let it = sync_iterates(&preset("bbt"), 3);
    assert_eq!(it[0][0], poly(2, "y1"));
    assert_eq!(it[1][0], poly(2, "y1 + y1^2 + 2*y1*y2"));
    assert_eq!(
        it[2][0],
        poly(2, "y1 + y1^2 + 2*y1*y2 + 2*y1^3 + 4*y1^2*y2 + y1^4 + 4*y1^3*y2 + 4*y1^2*y2^2")
    );
    assert_eq!(
        it[3][0],
        poly(
            2,
            "y1 + y1^2 + 2*y1*y2 + 2*y1^3 + 4*y1^2*y2 + y1^4 + 4*y1^3*y2 + 4*y1^2*y2^2 + 4*y1^5 \
             + 16*y1^4*y2 + 16*y1^3*y2^2 + 6*y1^6 + 28*y1^5*y2 + 40*y1^4*y2^2 + 16*y1^3*y2^3 + 4*y1^7 \
             + 24*y1^6*y2 + 48*y1^5*y2^2 + 32*y1^4*y2^3 + y1^8 + 8*y1^7*y2 + 24*y1^6*y2^2 + 32*y1^5*y2^3 \
             + 16*y1^4*y2^4"
        )
    );
    assert_eq!(
        it[2][0].to_string(),
        "y1 + y1^2 + 2*y1*y2 + 2*y1^3 + 4*y1^2*y2 + y1^4 + 4*y1^3*y2 + 4*y1^2*y2^2"
    );
}

#[test]
fn truncated_solution_extends_the_iterates() {
    let sys = preset("bbt");
    let f = solve_sync_system(&sys, 8).unwrap();
    let it = sync_iterates(&sys, 3);
    // Perfect trees of height at least 4 have at least 8 leaves.
    assert_eq!(it[3][0].truncate(7), f[0].truncate(7));
}

#[test]
fn schroeder_series_is_algebraic() {
    let n = 12;
    let f = solve_synt_system(&preset("bs"), n).unwrap();
    let s = f[0].diagonal(&[0, 1], n);
    // t − s + s² = 0 up to degree n.
    for d in 0..=n as usize {
        let square: Rational = (0..=d).map(|i| &s[i] * &s[d - i]).sum();
        let t = if d == 1 { Rational::from_integer(1.into()) } else { Rational::from_integer(0.into()) };
        assert_eq!(t - &s[d] + square, Rational::from_integer(0.into()), "degree {d}");
    }
    assert_eq!(s[1..9], rationals(&[1, 1, 2, 5, 14, 42, 132, 429]));
}

#[test]
fn perfect_tree_functional_equation() {
    // f(y) = y + f(y² + y³) for B = {2, 3}.
    let n = 14;
    let f = &solve_sync_system(&preset("btree"), n).unwrap()[0];
    let g = poly(1, "y1^2 + y1^3");
    let rhs = poly(1, "y1").add(&f.substitute(&[g], Some(n)));
    assert_eq!(*f, rhs);
    assert_eq!(f.diagonal(&[0], n)[1..13], rationals(&[1, 1, 1, 1, 2, 2, 3, 4, 5, 8, 14, 23]));
}

#[test]
fn refined_perfect_tree_series() {
    let s = refined_perfect(9);
    let expected = [
        "1",
        "q2",
        "q3",
        "q2^3 + q4",
        "2*q2^2*q3 + q5",
        "q2^3*q3 + q2*q3^2 + 2*q2^2*q4 + q6",
        "3*q2^2*q3^2 + 2*q2*q3*q4 + 2*q2^2*q5 + q7",
        "q2^7 + q2^4*q4 + 3*q2*q3^3 + 3*q2^2*q3*q4 + q2*q4^2 + 2*q2*q3*q5 + 2*q2^2*q6 + q8",
        "4*q2^6*q3 + 4*q2^3*q3*q4 + q3^4 + 6*q2*q3^2*q4 + 3*q2^2*q3*q5 + 2*q2*q4*q5 + 2*q2*q3*q6 + 2*q2^2*q7 + q9",
    ];
    assert_eq!(s[0], <Poly as Scalar>::zero());
    for (n, text) in (1..=9).zip(expected) {
        assert_eq!(s[n], Poly::parse(text).unwrap(), "n = {n}");
    }
}

#[test]
fn refined_series_specializes_to_perfect_tree_counts() {
    let s = refined_perfect(12);
    let b23: Vec<BigInt> = [0, 1, 1, 1, 1, 2, 2, 3, 4, 5, 8, 14, 23].iter().map(|&x| BigInt::from(x)).collect();
    assert_eq!(specialize_refined(&s, &[2, 3]), b23);
    let b234: Vec<BigInt> = [0, 1, 1, 1, 2, 2, 4, 5, 9, 15, 28, 45, 73].iter().map(|&x| BigInt::from(x)).collect();
    assert_eq!(specialize_refined(&s, &[2, 3, 4]), b234);
}
