//! Small integer helpers: primality, factorization, p-parts.

use alloc::vec::Vec;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d as u64);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n as u64);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u128, p: u64) -> u128 {
    let p = p as u128;
    let mut part = 1;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

pub fn is_power_of(n: u128, p: u64) -> bool {
    n >= 1 && p_part(n, p) == n
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_parts() {
        assert!(is_prime(19));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
        assert_eq!(prime_divisors(3420), [2, 3, 5, 19]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(p_part(3420, 3), 9);
        assert_eq!(p_part(3420, 7), 1);
        assert!(is_power_of(1, 5));
        assert!(is_power_of(27, 3));
        assert!(!is_power_of(18, 3));
        assert_eq!(lcm(6, 4), 12);
    }
}
