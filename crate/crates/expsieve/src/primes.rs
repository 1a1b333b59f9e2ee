//! Primality testing and prime generation.
//!
//! Deterministic Miller-Rabin for u64 plus a segmented Eratosthenes sieve for
//! iterating sweep ranges without holding the whole range in memory.

use crate::modarith::pow_mod;

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes <= limit, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for p in 2..=n {
        if composite[p] {
            continue;
        }
        out.push(p as u64);
        let mut m = p * p;
        while m <= n {
            composite[m] = true;
            m += p;
        }
    }
    out
}

/// Primes in [lo, hi) by segmented sieve.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    let lo = lo.max(2);
    if hi <= lo {
        return Vec::new();
    }
    let base = primes_up_to(hi.isqrt() + 1);
    let mut out = Vec::new();
    const SEG: u64 = 1 << 18;
    let mut start = lo;
    while start < hi {
        let end = (start + SEG).min(hi);
        let mut composite = vec![false; (end - start) as usize];
        for &p in &base {
            if p * p >= end {
                break;
            }
            let mut m = (start + p - 1) / p * p;
            if m < p * p {
                m = p * p;
            }
            while m < end {
                composite[(m - start) as usize] = true;
                m += p;
            }
        }
        for (i, &c) in composite.iter().enumerate() {
            let n = start + i as u64;
            if !c && n >= 2 {
                out.push(n);
            }
        }
        start = end;
    }
    out
}

/// Largest prime factor of n >= 2.
pub fn largest_prime_factor(n: u64) -> u64 {
    assert!(n >= 2);
    crate::modarith::factor(n).last().unwrap().0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primality() {
        let known: Vec<u64> = primes_up_to(200);
        for n in 0..=200u64 {
            assert_eq!(is_prime(n), known.contains(&n), "n = {n}");
        }
    }

    #[test]
    fn miller_rabin_larger() {
        assert!(is_prime(999_983));
        assert!(!is_prime(999_981));
        assert!(is_prime(2_147_483_647)); // 2^31 - 1
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2,3,5,7
    }

    #[test]
    fn segmented_matches_simple() {
        let simple: Vec<u64> = primes_up_to(10_000)
            .into_iter()
            .filter(|&p| p >= 4_000)
            .collect();
        assert_eq!(primes_in_range(4_000, 10_001), simple);
        assert_eq!(primes_in_range(13, 14), vec![13]);
        assert!(primes_in_range(24, 29).is_empty());
    }

    #[test]
    fn lpf() {
        assert_eq!(largest_prime_factor(12), 3);
        assert_eq!(largest_prime_factor(240), 5);
        assert_eq!(largest_prime_factor(97), 97);
    }
}
