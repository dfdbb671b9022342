//! Small integer and rational helpers shared by every module.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational numbers.
pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `num/den` in lowest terms, or just `num` for integers.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `a`, `-a`, `a/b`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::invalid(format!("cannot parse rational '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::invalid(format!("zero denominator in '{s}'")));
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    // deterministic Miller-Rabin for 64-bit inputs
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::invalid(format!("{p} is not prime")))
    }
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Multiplicative order of `a` modulo `n`; requires gcd(a, n) = 1.
pub fn mult_order(a: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    debug_assert_eq!(gcd(a % n, n), 1);
    let mut x = a % n;
    let mut k = 1;
    while x != 1 {
        x = mul_mod(x, a, n);
        k += 1;
    }
    k
}

pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factor_u64(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds: Vec<u64> = (1..=n).filter(|d| d * d <= n && n % d == 0).collect();
    let big: Vec<u64> = ds.iter().rev().map(|d| n / d).filter(|&e| e * e != n).collect();
    ds.extend(big);
    ds
}

/// Returns `(p, m)` with `q = p^m`, or `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factor_u64(q).as_slice() {
        [(p, m)] => Some((*p, *m)),
        _ => None,
    }
}

/// Least positive primitive root modulo a prime p.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let fs = factor_u64(p - 1);
    (2..p)
        .find(|&g| fs.iter().all(|&(l, _)| pow_mod(g, (p - 1) / l, p) != 1))
        .expect("primes have primitive roots")
}

/// Factorization of a positive big integer by trial division.
pub fn factor_big(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut out = Vec::new();
    let mut n = n.clone();
    if let Some(small) = n.to_u64() {
        return factor_u64(small)
            .into_iter()
            .map(|(p, e)| (BigUint::from(p), e))
            .collect();
    }
    let mut d = BigUint::from(2u32);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let mut e = 0;
            while (&n % &d).is_zero() {
                n /= &d;
                e += 1;
            }
            out.push((d.clone(), e));
        }
        d += 1u32;
    }
    if !n.is_one() {
        out.push((n, 1));
    }
    out
}

/// Exponent of `p` in a nonzero integer.
pub fn vp_int(p: u64, n: &BigInt) -> u32 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (quot, rem) = n.div_rem(&p);
        if !rem.is_zero() {
            return v;
        }
        n = quot;
        v += 1;
    }
}

/// Exponent of `p` in a nonzero rational.
pub fn vp_q(p: u64, x: &Q) -> i64 {
    vp_int(p, x.numer()) as i64 - vp_int(p, x.denom()) as i64
}

pub fn pow_big(p: u64, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(p), e as usize)
}

/// Least non-negative residue.
pub fn modp(a: &BigInt, m: &BigInt) -> BigInt {
    a.mod_floor(m)
}

/// Inverse of `a` modulo `m` (requires gcd(a, m) = 1).
pub fn inv_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Reduces a p-integral rational modulo `m = p^k`.
pub fn q_mod(x: &Q, m: &BigInt) -> Option<BigInt> {
    let inv = inv_mod(x.denom(), m)?;
    Some((x.numer() * inv).mod_floor(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_orders() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(561));
        assert_eq!(mult_order(2, 7), 3);
        assert_eq!(mult_order(3, 8), 2);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(13), 2);
    }

    #[test]
    fn divisors_and_phi() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(9), vec![1, 3, 9]);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
    }

    #[test]
    fn rational_text() {
        let x = parse_q("-691/2730").unwrap();
        assert_eq!(fmt_q(&x), "-691/2730");
        assert_eq!(fmt_q(&parse_q("4/2").unwrap()), "2");
        assert!(parse_q("1/0").is_err());
        assert_eq!(vp_q(13, &x), -1);
    }
}
