//! Brute-force theta series of a lattice coset: direct enumeration of integer
//! vectors in a fixed coordinate window. The caller chooses the window; it
//! must be wide enough that every vector with exponent <= trunc lies inside
//! (small positive-definite Grams with moderate truncations only).

use num_rational::BigRational;
use std::collections::BTreeMap;

/// sum over x in [-window, window]^n of q^((1/2) |x + shift|^2), as a map
/// exponent -> count, keeping exponents <= trunc.
pub fn theta_window(
    gram: &[Vec<BigRational>],
    shift: &[BigRational],
    window: i64,
    trunc: &BigRational,
) -> BTreeMap<BigRational, u64> {
    let n = gram.len();
    let mut out: BTreeMap<BigRational, u64> = BTreeMap::new();
    let mut x = vec![-window; n];
    loop {
        let v: Vec<BigRational> = (0..n)
            .map(|i| BigRational::from_integer(x[i].into()) + &shift[i])
            .collect();
        let mut q2 = BigRational::from_integer(0.into());
        for i in 0..n {
            for j in 0..n {
                q2 += &v[i] * &v[j] * &gram[i][j];
            }
        }
        let expo = q2 / BigRational::from_integer(2.into());
        if &expo <= trunc {
            *out.entry(expo).or_insert(0) += 1;
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == n {
                return out;
            }
            x[pos] += 1;
            if x[pos] <= window {
                break;
            }
            x[pos] = -window;
            pos += 1;
        }
    }
}
