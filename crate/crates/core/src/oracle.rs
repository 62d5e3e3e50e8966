//! Brute-force combinatorial counts used as ground truth.
//!
//! Set partitions are walked one by one as restricted growth strings, and
//! permutations are walked in lexicographic order with their cycles counted.
//! Nothing here uses a recurrence.

use crate::error::{Error, Result};

pub const PARTITION_LIMIT: usize = 13;
pub const PERMUTATION_LIMIT: usize = 10;

/// `counts[k]` is the number of partitions of an `n`-set into `k` blocks.
pub fn partition_counts(n: usize) -> Result<Vec<u64>> {
    if n > PARTITION_LIMIT {
        return Err(Error::OracleLimit { n, limit: PARTITION_LIMIT });
    }
    let mut counts = vec![0u64; n + 1];
    if n == 0 {
        counts[0] = 1;
        return Ok(counts);
    }
    // a[i] is the block of element i; a[0] = 0 and a[i] <= 1 + max(a[..i]).
    let mut a = vec![0usize; n];
    let mut prefix_max = vec![0usize; n];
    loop {
        counts[prefix_max[n - 1] + 1] += 1;
        let mut i = n - 1;
        loop {
            if i == 0 {
                return Ok(counts);
            }
            if a[i] <= prefix_max[i - 1] {
                a[i] += 1;
                prefix_max[i] = prefix_max[i - 1].max(a[i]);
                for j in i + 1..n {
                    a[j] = 0;
                    prefix_max[j] = prefix_max[i];
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Number of set partitions of an `n`-set.
pub fn bell_count(n: usize) -> Result<u64> {
    Ok(partition_counts(n)?.iter().sum())
}

/// `counts[k]` is the number of permutations of `n` elements with `k` cycles.
pub fn cycle_counts(n: usize) -> Result<Vec<u64>> {
    if n > PERMUTATION_LIMIT {
        return Err(Error::OracleLimit { n, limit: PERMUTATION_LIMIT });
    }
    let mut counts = vec![0u64; n + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        counts[count_cycles(&perm)] += 1;
        if !next_permutation(&mut perm) {
            return Ok(counts);
        }
    }
}

fn count_cycles(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
        }
    }
    cycles
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_partition_rows() {
        assert_eq!(partition_counts(0).unwrap(), vec![1]);
        assert_eq!(partition_counts(1).unwrap(), vec![0, 1]);
        assert_eq!(partition_counts(4).unwrap(), vec![0, 1, 7, 6, 1]);
        assert_eq!(partition_counts(5).unwrap()[3], 25);
    }

    #[test]
    fn bell_numbers() {
        let b: Vec<u64> = (0..=10).map(|n| bell_count(n).unwrap()).collect();
        assert_eq!(b, vec![1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]);
    }

    #[test]
    fn cycles() {
        assert_eq!(cycle_counts(0).unwrap(), vec![1]);
        assert_eq!(cycle_counts(3).unwrap(), vec![0, 2, 3, 1]);
        assert_eq!(cycle_counts(4).unwrap(), vec![0, 6, 11, 6, 1]);
    }

    #[test]
    fn guards() {
        assert!(matches!(partition_counts(14), Err(Error::OracleLimit { .. })));
        assert!(matches!(cycle_counts(11), Err(Error::OracleLimit { .. })));
    }
}
