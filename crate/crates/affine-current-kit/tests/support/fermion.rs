//! Free-fermion product oracle: coefficients of
//!
//!   prod_{j >= 1} (1 + q^(j - 1/2))^m
//!
//! indexed by doubled exponent, so out[d] is the coefficient of q^(d/2).

/// Expand prod_{j>=1} (1 + x^(2j-1))^m with x = q^(1/2), up to x^max_doubled.
pub fn fermion_product_doubled(m: usize, max_doubled: usize) -> Vec<u64> {
    let mut out = vec![0u64; max_doubled + 1];
    out[0] = 1;
    for _ in 0..m {
        let mut j = 1usize;
        while 2 * j - 1 <= max_doubled {
            let e = 2 * j - 1;
            for d in (e..=max_doubled).rev() {
                out[d] += out[d - e];
            }
            j += 1;
        }
    }
    out
}
