//! Small integer-arithmetic helpers shared across the crate.

use num::BigUint;

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    num::integer::gcd(a, b)
}

pub(crate) fn gcd_u128(a: u128, b: u128) -> u128 {
    num::integer::gcd(a, b)
}


/// `(a + b) mod n` for `a, b < n`, without overflowing u128.
pub(crate) fn add_mod_u128(a: u128, b: u128, n: u128) -> u128 {
    debug_assert!(a < n && b < n);
    if a >= n - b {
        a - (n - b)
    } else {
        a + b
    }
}

/// Divisors of `m` in increasing order. Trial division; `m >= 1`.
pub(crate) fn divisors(m: u64) -> Vec<u64> {
    assert!(m >= 1, "divisors of 0 are not defined");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= m {
        if m % d == 0 {
            small.push(d);
            if d != m / d {
                large.push(m / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Prime factorization of `m >= 1` as `(p, exponent)` pairs, p increasing.
pub(crate) fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    assert!(m >= 1, "cannot factor 0");
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= m {
        if m % p == 0 {
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((m, 1));
    }
    factors
}

/// Distinct prime divisors of `m >= 1`.
pub(crate) fn prime_divisors(m: u64) -> Vec<u64> {
    factorize(m).into_iter().map(|(p, _)| p).collect()
}

/// p-adic valuation of a nonzero u64.
pub(crate) fn valuation_u64(mut m: u64, p: u64) -> u32 {
    assert!(m != 0 && p >= 2);
    let mut v = 0;
    while m % p == 0 {
        m /= p;
        v += 1;
    }
    v
}

/// p-adic valuation of a nonzero BigUint.
pub(crate) fn valuation_big(m: &BigUint, p: u64) -> u32 {
    use num::Zero;
    assert!(!m.is_zero());
    let p = BigUint::from(p);
    let mut m = m.clone();
    let mut v = 0;
    loop {
        let (q, r) = num::Integer::div_rem(&m, &p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn factorizations() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
    }

    #[test]
    fn modular_add_no_overflow() {
        let n = u128::MAX - 1;
        assert_eq!(add_mod_u128(n - 1, n - 1, n), n - 2);
        assert_eq!(add_mod_u128(0, 5, 10), 5);
        assert_eq!(add_mod_u128(7, 3, 10), 0);
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation_u64(48, 2), 4);
        assert_eq!(valuation_u64(48, 3), 1);
        assert_eq!(valuation_u64(48, 5), 0);
        assert_eq!(valuation_big(&BigUint::from(1024u32), 2), 10);
    }
}
