//! Small exact integer helpers.

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        // exact at every step: acc * (n - i) is divisible by (i + 1)
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Signed variant used by the f/h transforms, where arguments can go negative.
pub(crate) fn binomial_i(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        0
    } else {
        binomial(n as u64, k as u64) as i64
    }
}

/// `n!` in 128 bits, `None` on overflow (n > 34).
pub fn factorial(n: u32) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, i| acc.checked_mul(i))
}

/// Number of integer partitions of `n`, by the coin-change recurrence over
/// part sizes. Independent of [`crate::partition::partitions_of`].
pub fn partition_count(n: usize) -> u128 {
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}
