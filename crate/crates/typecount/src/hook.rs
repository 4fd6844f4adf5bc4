use num_bigint::BigInt;
use num_traits::Zero;

/// The triangle `h_{n,a}` for `1 ≤ n ≤ n_max` and `0 ≤ a ≤ n − 1`, given
/// by `h_{1,0} = 1` and
/// `h_{n,a} = (2a − 1) h_{n−1,a−1} + (2n − 2a − 3) h_{n−1,a}`, where a term
/// is absent when its index falls outside row `n − 1`. Row `n` is entry
/// `n − 1` of the result.
pub fn hook_triangle(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max);
    if n_max == 0 {
        return rows;
    }
    rows.push(vec![BigInt::from(1)]);
    for n in 2..=n_max {
        let prev = rows.last().expect("nonempty");
        let row = (0..n)
            .map(|a| {
                let mut h = BigInt::zero();
                if a >= 1 {
                    h += &prev[a - 1] * (2 * a - 1);
                }
                if a + 1 < n {
                    h += &prev[a] * (2 * n - 2 * a - 3);
                }
                h
            })
            .collect();
        rows.push(row);
    }
    rows
}
