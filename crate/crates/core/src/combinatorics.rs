//! Exact, overflow-checked integer combinatorics.

use crate::error::{Error, Result};

/// `n` choose `k`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // C(n, i+1) = C(n, i) * (n - i) / (i + 1), exact at each step.
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return Err(Error::Overflow("binomial coefficient"));
        }
    }
    Ok(acc as u64)
}

/// Stirling number of the second kind: partitions of an `n`-set into `k`
/// non-empty blocks.
pub fn stirling2(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    if n == 0 {
        return Ok(1);
    }
    if k == 0 {
        return Ok(0);
    }
    let k = k as usize;
    // Row m holds S(m, 0..=k). Entries off the band that feeds S(n, k) may
    // overflow; they are tracked as None and never reach the result.
    let mut row: Vec<Option<u64>> = vec![None; k + 1];
    row[0] = Some(1);
    for j in 1..=k {
        row[j] = Some(0);
    }
    for m in 1..=n {
        let mut next = vec![Some(0u64); k + 1];
        next[0] = Some(0);
        for j in 1..=k.min(m as usize) {
            next[j] = match (row[j], row[j - 1]) {
                (Some(a), Some(b)) => (j as u64).checked_mul(a).and_then(|x| x.checked_add(b)),
                _ => None,
            };
        }
        row = next;
    }
    row[k].ok_or(Error::Overflow("Stirling number"))
}

pub fn factorial(n: u64) -> Result<u64> {
    (1..=n).try_fold(1u64, |acc, i| acc.checked_mul(i)).ok_or(Error::Overflow("factorial"))
}

/// `k (k-1) ... (k-j+1)`.
pub fn falling_factorial(k: u64, j: u64) -> Result<u64> {
    if j > k {
        return Ok(0);
    }
    (0..j).try_fold(1u64, |acc, i| acc.checked_mul(k - i)).ok_or(Error::Overflow("falling factorial"))
}

pub fn checked_pow(base: u64, exp: u64) -> Result<u64> {
    let e = u32::try_from(exp).map_err(|_| Error::Overflow("power"))?;
    base.checked_pow(e).ok_or(Error::Overflow("power"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(stirling2(3, 2).unwrap(), 3);
        assert_eq!(binomial(5, 2).unwrap(), 10);
        assert_eq!(binomial(2, 5).unwrap(), 0);
        for n in 1..30 {
            assert_eq!(stirling2(n, n).unwrap(), 1);
            assert_eq!(stirling2(n, 1).unwrap(), 1);
        }
        assert_eq!(stirling2(0, 0).unwrap(), 1);
        assert_eq!(stirling2(4, 0).unwrap(), 0);
        assert_eq!(stirling2(10, 3).unwrap(), 9330);
        assert_eq!(factorial(5).unwrap(), 120);
        assert_eq!(falling_factorial(5, 2).unwrap(), 20);
    }

    #[test]
    fn stirling_by_brute_force() {
        // Count restricted growth strings with exactly k blocks.
        fn rgs(n: usize, pos: usize, blocks: usize, counts: &mut [u64]) {
            if pos == n {
                counts[blocks] += 1;
                return;
            }
            for b in 0..=blocks {
                rgs(n, pos + 1, blocks.max(b + 1), counts);
            }
        }
        for n in 1..=9 {
            let mut counts = vec![0u64; n + 1];
            rgs(n, 0, 0, &mut counts);
            for k in 0..=n {
                assert_eq!(stirling2(n as u64, k as u64).unwrap(), counts[k], "S({n},{k})");
            }
        }
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(binomial(64, 32).unwrap(), 1_832_624_140_942_590_534);
        assert!(binomial(100, 50).is_err());
        assert!(factorial(21).is_err());
        assert!(stirling2(60, 20).is_err());
        // Large n, but the result itself is small.
        assert_eq!(stirling2(64, 63).unwrap(), binomial(64, 2).unwrap());
    }

    #[test]
    fn pascal_rule() {
        for n in 1..40u64 {
            for k in 1..n {
                assert_eq!(binomial(n, k).unwrap(), binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap());
            }
        }
    }
}
