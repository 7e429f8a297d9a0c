//! Integer utilities: primality, factorization, prime-power tests, odd parts
//! and radicals. Everything is plain trial division, which is exact and fast
//! at the orders this crate targets (q up to about 10^6).

use alloc::vec::Vec;

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    if n.is_multiple_of(3) {
        return n == 3;
    }
    let mut d = 5;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push_factor = |p: u64, n: &mut u64| {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push_factor(2, &mut n);
    push_factor(3, &mut n);
    let mut d = 5;
    while d * d <= n {
        push_factor(d, &mut n);
        push_factor(d + 2, &mut n);
        d += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn distinct_prime_factors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Decomposes n as p^k with p prime, or returns `None` when n is not a prime
/// power. Inputs below 2 are rejected.
pub fn prime_power_decompose(n: u64) -> Result<Option<(u64, u32)>> {
    if n < 2 {
        return Err(Error::InvalidArgument("prime power test needs n >= 2"));
    }
    let factors = factorize(n);
    if factors.len() == 1 {
        Ok(Some(factors[0]))
    } else {
        Ok(None)
    }
}

/// Greatest odd divisor of k.
pub fn odd_part(k: u64) -> u64 {
    k >> k.trailing_zeros().min(63)
}

/// Product of the distinct prime factors of k; 1 when k = 1.
pub fn radical(k: u64) -> u64 {
    distinct_prime_factors(k).into_iter().product::<u64>().max(1)
}

/// All divisors of n, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

pub fn mod_pow(mut base: u64, mut exponent: u64, modulus: u64) -> u64 {
    let mut result = 1 % modulus;
    base %= modulus;
    while exponent > 0 {
        if exponent & 1 == 1 {
            result = mul_mod(result, base, modulus);
        }
        base = mul_mod(base, base, modulus);
        exponent >>= 1;
    }
    result
}

pub fn mul_mod(a: u64, b: u64, modulus: u64) -> u64 {
    ((a as u128 * b as u128) % modulus as u128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_examples() {
        assert_eq!(prime_power_decompose(343).unwrap(), Some((7, 3)));
        assert_eq!(prime_power_decompose(6751).unwrap(), None);
        assert_eq!(prime_power_decompose(19).unwrap(), Some((19, 1)));
        assert_eq!(prime_power_decompose(25).unwrap(), Some((5, 2)));
        assert_eq!(prime_power_decompose(33).unwrap(), None);
        assert!(prime_power_decompose(1).is_err());
        assert!(prime_power_decompose(0).is_err());
    }

    #[test]
    fn odd_part_and_radical() {
        assert_eq!((odd_part(12), radical(12)), (3, 6));
        assert_eq!((odd_part(1), radical(1)), (1, 1));
        assert_eq!((odd_part(15), radical(15)), (15, 15));
        assert_eq!(odd_part(64), 1);
        assert_eq!(radical(441), 21);
    }

    #[test]
    fn divisor_list() {
        assert_eq!(divisors(18), alloc::vec![1, 2, 3, 6, 9, 18]);
        assert_eq!(divisors(1), alloc::vec![1]);
    }

    #[test]
    fn gcd_lcm_basics() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(lcm(3, 15), 15);
        assert_eq!(lcm(9, 19), 171);
        assert_eq!(gcd(7, 0), 7);
    }
}
