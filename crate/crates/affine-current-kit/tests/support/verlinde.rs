//! Exact Verlinde fusion numbers for sl(2) at level k.
//!
//! The S-matrix for sl(2)_k is S_im = sqrt(2/(k+2)) sin((i+1)(m+1)pi/(k+2)),
//! and the Verlinde formula gives
//!
//!   N_ij^r = sum_m S_im S_jm S_rm / S_0m.
//!
//! Writing y_m = 2cos((m+1)pi/(k+2)) and chi_a for the Chebyshev-like
//! polynomials with chi_0 = 1, chi_1 = y, chi_{a+1} = y chi_a - chi_{a-1}
//! (so that chi_a(y_m) = sin((a+1)t)/sin t at y = 2cos t), the formula becomes
//!
//!   N_ij^r = sum_m chi_i(y_m) chi_j(y_m) chi_r(y_m) (4 - y_m^2) / (2(k+2)),
//!
//! a symmetric function of the roots y_m of chi_{k+1}. Power sums of those
//! roots follow from Newton's identities on the integer coefficients of
//! chi_{k+1}, so the whole computation is exact integer arithmetic: no sine
//! is ever evaluated and no library fusion code is consulted.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// chi_0, ..., chi_last as coefficient vectors (index = power of y).
fn chi_polys(last: usize) -> Vec<Vec<BigInt>> {
    let mut polys: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)], vec![BigInt::zero(), 1.into()]];
    while polys.len() <= last {
        let a = polys.len() - 1;
        // y * chi_a
        let mut next = vec![BigInt::zero()];
        next.extend_from_slice(&polys[a]);
        // - chi_{a-1}
        for (t, c) in polys[a - 1].iter().enumerate() {
            next[t] -= c;
        }
        polys.push(next);
    }
    polys
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (s, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (t, cb) in b.iter().enumerate() {
            out[s + t] += ca * cb;
        }
    }
    out
}

/// Power sums p_0..p_tmax of the roots of a monic integer polynomial,
/// via Newton's identities.
fn power_sums(monic: &[BigInt], tmax: usize) -> Vec<BigInt> {
    let n = monic.len() - 1;
    assert_eq!(monic[n], BigInt::from(1), "polynomial must be monic");
    // e_m = (-1)^m * coefficient of y^{n-m}; e_m = 0 for m > n.
    let e = |m: usize| -> BigInt {
        if m > n {
            BigInt::zero()
        } else if m % 2 == 0 {
            monic[n - m].clone()
        } else {
            -&monic[n - m]
        }
    };
    let mut p: Vec<BigInt> = Vec::with_capacity(tmax + 1);
    p.push(BigInt::from(n as i64));
    for m in 1..=tmax {
        // p_m = sum_{t=1}^{m-1} (-1)^{t-1} e_t p_{m-t} + (-1)^{m-1} m e_m
        let mut acc = BigInt::zero();
        for t in 1..m {
            let term = e(t) * &p[m - t];
            if t % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let tail = e(m) * BigInt::from(m as i64);
        if m % 2 == 1 {
            acc += tail;
        } else {
            acc -= tail;
        }
        p.push(acc);
    }
    p
}

/// The fusion number N_{ij}^r of sl(2) at level k, computed from the
/// Verlinde formula in exact arithmetic.
pub fn sl2_fusion_number(k: u32, i: u32, j: u32, r: u32) -> u64 {
    assert!(i <= k && j <= k && r <= k, "labels out of range");
    let polys = chi_polys((k + 1) as usize);
    // Integrand chi_i chi_j chi_r (4 - y^2).
    let four_minus_y2 = vec![BigInt::from(4), BigInt::zero(), BigInt::from(-1)];
    let mut integrand = poly_mul(&polys[i as usize], &polys[j as usize]);
    integrand = poly_mul(&integrand, &polys[r as usize]);
    integrand = poly_mul(&integrand, &four_minus_y2);
    let p = power_sums(&polys[(k + 1) as usize], integrand.len() - 1);
    let mut total = BigInt::zero();
    for (t, c) in integrand.iter().enumerate() {
        total += c * &p[t];
    }
    let denom = BigInt::from(2 * (k as i64 + 2));
    let (q, rem) = num_integer::Integer::div_rem(&total, &denom);
    assert!(rem.is_zero(), "Verlinde sum not divisible by 2(k+2)");
    q.to_u64().expect("fusion number out of u64 range")
}

/// Full level-k table as a map (i, j) -> sorted list of r with N_{ij}^r = 1.
/// (sl(2) fusion numbers are always 0 or 1; asserted here.)
pub fn sl2_fusion_table(k: u32) -> Vec<((u32, u32), Vec<u32>)> {
    let mut table = Vec::new();
    for i in 0..=k {
        for j in 0..=k {
            let mut rs = Vec::new();
            for r in 0..=k {
                let n = sl2_fusion_number(k, i, j, r);
                assert!(n <= 1, "sl(2) fusion multiplicity exceeded 1");
                if n == 1 {
                    rs.push(r);
                }
            }
            table.push(((i, j), rs));
        }
    }
    table
}
