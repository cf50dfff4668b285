//! Arbitrary-precision rational scalars and their canonical text form.
//!
//! Every quantity in this crate (Gram entries, conformal weights, character
//! exponents) is an exact rational. The canonical text form used in all JSON
//! output is `"p"` for integers and `"p/q"` for proper fractions, always in
//! lowest terms with q > 0.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

/// The integer n as a rational.
pub fn qz(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// The fraction n/d (d nonzero), reduced.
pub fn qq(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

/// Canonical text form: `"p"` or `"p/q"`, lowest terms, q > 0.
pub fn q_str(x: &Q) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse the canonical form (integer or `p/q`). Whitespace is not accepted.
pub fn parse_q(s: &str) -> Option<Q> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Q::from_integer(n))
        }
    }
}

/// Largest integer ≤ x.
pub fn floor_int(x: &Q) -> BigInt {
    x.floor().to_integer()
}

/// Smallest integer ≥ x.
pub fn ceil_int(x: &Q) -> BigInt {
    x.ceil().to_integer()
}

/// Floor of √x for x ≥ 0, as an integer (0 for x < 1).
///
/// Exact: returns the largest m ≥ 0 with m² ≤ x, found from the integer
/// square root of ⌊x⌋ and corrected without any floating point.
pub fn floor_sqrt(x: &Q) -> BigInt {
    assert!(!x.is_negative(), "floor_sqrt of a negative rational");
    let fl = floor_int(x);
    let mut m = fl.sqrt();
    // fl.sqrt() is exact for integers, but x may exceed fl; at most one step.
    loop {
        let next = &m + 1;
        if Q::from_integer(&next * &next) <= *x {
            m = next;
        } else {
            break;
        }
    }
    m
}

/// Exact symmetric-matrix utilities used across modules.
pub mod mat {
    use super::Q;
    use num_traits::Zero;

    /// Determinant by fraction-free-ish Gaussian elimination (exact).
    pub fn det(a: &[Vec<Q>]) -> Q {
        let n = a.len();
        let mut m: Vec<Vec<Q>> = a.to_vec();
        let mut d = Q::from_integer(1.into());
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r][col].is_zero());
            let Some(p) = pivot else {
                return Q::zero();
            };
            if p != col {
                m.swap(p, col);
                d = -d;
            }
            let piv = m[col][col].clone();
            d *= piv.clone();
            for r in col + 1..n {
                let f = &m[r][col] / &piv;
                for c in col..n {
                    let sub = &f * &m[col][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
        d
    }

    /// Inverse by Gauss–Jordan elimination; panics if singular.
    pub fn inverse(a: &[Vec<Q>]) -> Vec<Vec<Q>> {
        let n = a.len();
        let mut m: Vec<Vec<Q>> = a.to_vec();
        let mut inv: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Q::from_integer(1.into())
                        } else {
                            Q::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .expect("singular matrix");
            m.swap(p, col);
            inv.swap(p, col);
            let piv = m[col][col].clone();
            for c in 0..n {
                m[col][c] = &m[col][c] / &piv;
                inv[col][c] = &inv[col][c] / &piv;
            }
            for r in 0..n {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let f = m[r][col].clone();
                for c in 0..n {
                    let s1 = &f * &m[col][c];
                    m[r][c] = &m[r][c] - &s1;
                    let s2 = &f * &inv[col][c];
                    inv[r][c] = &inv[r][c] - &s2;
                }
            }
        }
        inv
    }

    /// x^T a y for column vectors x, y.
    pub fn pair(a: &[Vec<Q>], x: &[Q], y: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                acc += xi * yj * &a[i][j];
            }
        }
        acc
    }

    /// Leading principal minors det(a[..t][..t]) for t = 1..=n.
    pub fn leading_minors(a: &[Vec<Q>]) -> Vec<Q> {
        (1..=a.len())
            .map(|t| {
                let sub: Vec<Vec<Q>> = a[..t].iter().map(|row| row[..t].to_vec()).collect();
                det(&sub)
            })
            .collect()
    }
}
