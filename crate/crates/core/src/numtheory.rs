//! Exact 64-bit number theory: primality, factorization, quadratic symbols and
//! square roots modulo a prime.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Trial division runs up to this bound before Pollard rho takes over.
const TRIAL_LIMIT: u64 = 1 << 20;

/// Bases that make Miller-Rabin deterministic for every `u64`.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
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

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Deterministic Miller-Rabin.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in MR_BASES {
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

/// Prime factorization of a positive integer, primes strictly increasing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Exponent of `p`, zero when `p` does not occur.
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, a)| a)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, a)| a == 1)
    }

    /// Product of the prime powers.
    pub fn value(&self) -> u128 {
        self.factors
            .iter()
            .map(|&(p, a)| (p as u128).pow(a))
            .product()
    }
}

fn pollard_brent(n: u64) -> u64 {
    debug_assert!(n > 3 && n % 2 == 1 && !is_prime(n));
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut q, mut g) = (2u64, 2u64, 1u64, 1u64);
        let mut ys = y;
        let m = 128;
        let mut r = 1u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn split_composite(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split_composite(d, out);
    split_composite(n / d, out);
}

/// Factor a nonzero integer into a sign and the prime factorization of `|m|`.
pub fn factorize(m: i64) -> Result<(i8, Factorization)> {
    if m == 0 {
        return Err(Error::Zero);
    }
    let sign = if m < 0 { -1 } else { 1 };
    let mut rest = m.unsigned_abs();
    let mut primes = Vec::new();

    while rest.is_multiple_of(2) {
        primes.push(2);
        rest /= 2;
    }
    let mut d = 3u64;
    while d <= TRIAL_LIMIT && d * d <= rest {
        while rest.is_multiple_of(d) {
            primes.push(d);
            rest /= d;
        }
        d += 2;
    }
    split_composite(rest, &mut primes);
    primes.sort_unstable();

    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, a)) if *q == p => *a += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok((sign, Factorization { factors }))
}

pub fn is_squarefree(m: i64) -> Result<bool> {
    Ok(factorize(m)?.1.is_squarefree())
}

fn checked_prime(p: i64) -> Result<u64> {
    if p > 1 && is_prime(p as u64) {
        Ok(p as u64)
    } else {
        Err(Error::NotPrime { p })
    }
}

fn checked_odd_prime(p: i64) -> Result<u64> {
    if p > 2 && is_prime(p as u64) {
        Ok(p as u64)
    } else {
        Err(Error::NotOddPrime { p })
    }
}

/// `a mod p` as a residue in `[0, p)`.
pub(crate) fn residue(a: i64, p: u64) -> u64 {
    (a as i128).rem_euclid(p as i128) as u64
}

/// Legendre symbol by Euler's criterion.
pub fn legendre(a: i64, p: i64) -> Result<i8> {
    let p = checked_odd_prime(p)?;
    let a = residue(a, p);
    Ok(match pow_mod(a, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    })
}

/// Kronecker symbol `(a / p)` for a prime `p`.
pub fn kronecker(a: i64, p: i64) -> Result<i8> {
    let p_u = checked_prime(p)?;
    if p_u != 2 {
        return legendre(a, p);
    }
    Ok(match a.rem_euclid(8) {
        0 | 2 | 4 | 6 => 0,
        1 | 7 => 1,
        _ => -1,
    })
}

/// Square root of `a` modulo an odd prime, the smaller of the two roots.
pub fn sqrt_mod(a: i64, p: i64) -> Result<Option<u64>> {
    let p = checked_odd_prime(p)?;
    let a = residue(a, p);
    if a == 0 {
        return Ok(Some(0));
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return Ok(None);
    }
    let x = if p % 4 == 3 {
        pow_mod(a, (p + 1) / 4, p)
    } else {
        tonelli_shanks(a, p)
    };
    debug_assert_eq!(mul_mod(x, x, p), a);
    Ok(Some(x.min(p - x)))
}

fn tonelli_shanks(a: u64, p: u64) -> u64 {
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2u64;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0u32;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1u64 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    r
}

/// Inverse of `a` modulo prime `p`.
pub(crate) fn inv_mod_prime(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_primes(below: u64) -> Vec<u64> {
        (2..below)
            .filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
            .collect()
    }

    #[test]
    fn factorize_examples() {
        let (s, f) = factorize(12).unwrap();
        assert_eq!((s, f.factors()), (1, &[(2, 2), (3, 1)][..]));
        let (s, f) = factorize(1).unwrap();
        assert_eq!((s, f.factors().len()), (1, 0));
        let (s, f) = factorize(-997).unwrap();
        assert_eq!((s, f.factors()), (-1, &[(997, 1)][..]));
        assert_eq!(factorize(0), Err(Error::Zero));
    }

    #[test]
    fn factorize_hard_cases() {
        // two primes above the trial-division limit
        let p = 1_000_003u64;
        let q = 2_147_483_647u64;
        let (_, f) = factorize((p * q) as i64).unwrap();
        assert_eq!(f.factors(), &[(p, 1), (q, 1)]);
        let (s, f) = factorize(i64::MIN).unwrap();
        assert_eq!((s, f.factors()), (-1, &[(2, 63)][..]));
        let big = 9_223_372_036_854_775_783u64; // largest prime below 2^63
        let (_, f) = factorize(big as i64).unwrap();
        assert_eq!(f.factors(), &[(big, 1)]);
    }

    #[test]
    fn primality_matches_sieve() {
        let primes = small_primes(2000);
        for n in 0..2000u64 {
            assert_eq!(is_prime(n), primes.contains(&n), "{n}");
        }
        // strong pseudoprime to bases 2..=37 is well above 2^64, so check a
        // few Carmichael numbers instead
        for n in [561u64, 1105, 1729, 2465, 3_215_031_751] {
            assert!(!is_prime(n));
        }
    }

    #[test]
    fn legendre_examples_and_euler_vs_enumeration() {
        assert_eq!(legendre(0, 7), Ok(0));
        assert_eq!(legendre(1, 5), Ok(1));
        assert_eq!(legendre(2, 3), Ok(-1));
        assert_eq!(legendre(3, 2), Err(Error::NotOddPrime { p: 2 }));
        assert_eq!(legendre(3, 9), Err(Error::NotOddPrime { p: 9 }));

        for p in small_primes(100).into_iter().filter(|&p| p > 2) {
            let squares: Vec<u64> = (1..p).map(|x| x * x % p).collect();
            for a in 0..p {
                let expected = if a == 0 {
                    0
                } else if squares.contains(&a) {
                    1
                } else {
                    -1
                };
                assert_eq!(legendre(a as i64, p as i64).unwrap(), expected, "({a}/{p})");
            }
        }
    }

    #[test]
    fn kronecker_at_two() {
        assert_eq!(kronecker(-4, 2), Ok(0));
        assert_eq!(kronecker(7, 2), Ok(1));
        assert_eq!(kronecker(5, 2), Ok(-1));
        assert_eq!(kronecker(-1, 2), Ok(1));
        assert_eq!(kronecker(-3, 2), Ok(-1));
        assert_eq!(kronecker(3, 15), Err(Error::NotPrime { p: 15 }));
        for a in (-101i64..101).step_by(2) {
            assert_eq!(kronecker(a, 2), kronecker(a + 8, 2));
        }
        assert_eq!(kronecker(10, 3), legendre(10, 3));
    }

    #[test]
    fn sqrt_mod_examples_and_scan() {
        assert_eq!(sqrt_mod(1, 7), Ok(Some(1)));
        assert_eq!(sqrt_mod(4, 7), Ok(Some(2)));
        assert_eq!(sqrt_mod(2, 3), Ok(None));
        assert_eq!(sqrt_mod(-1, 5), Ok(Some(2)));
        for p in small_primes(50).into_iter().filter(|&p| p > 2) {
            for a in 0..p {
                let roots: Vec<u64> = (0..p).filter(|x| x * x % p == a).collect();
                match sqrt_mod(a as i64, p as i64).unwrap() {
                    Some(x) => assert_eq!(Some(&x), roots.first(), "sqrt({a}) mod {p}"),
                    None => assert!(roots.is_empty()),
                }
            }
        }
        // p = 1 mod 8 exercises the full Tonelli-Shanks loop
        let p = 1_000_000_009i64;
        let x = sqrt_mod(5, p).unwrap().unwrap();
        assert_eq!(mul_mod(x, x, p as u64), 5);
    }
}
