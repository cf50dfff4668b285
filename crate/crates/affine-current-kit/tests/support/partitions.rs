//! Partition counters used as oracles for boson character coefficients.

/// p(n) for n = 0..=max: partitions of n into positive parts.
pub fn partitions(max: usize) -> Vec<u64> {
    colored_partitions(1, max)
}

/// Partitions of n into parts of `colors` kinds, i.e. coefficients of
/// prod_{j>=1} (1-q^j)^(-colors). Computed by the standard bounded-part DP.
pub fn colored_partitions(colors: usize, max: usize) -> Vec<u64> {
    let mut dp = vec![0u64; max + 1];
    dp[0] = 1;
    for _ in 0..colors {
        for part in 1..=max {
            for n in part..=max {
                dp[n] += dp[n - part];
            }
        }
    }
    dp
}
