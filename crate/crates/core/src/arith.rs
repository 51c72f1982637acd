//! Integer helpers shared by the ring modules: rounding, gcds, square roots
//! and trial-division primality.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Nearest integer to `n / d`, ties rounded away from zero.
///
/// Panics if `d` is zero.
pub fn round_half_away(n: &BigInt, d: &BigInt) -> BigInt {
    assert!(!d.is_zero(), "round_half_away: zero denominator");
    let two_d = d.abs() * 2u32;
    let q = (n.abs() * 2u32 + d.abs()).div_floor(&two_d);
    if (n.sign() == Sign::Minus) != (d.sign() == Sign::Minus) {
        -q
    } else {
        q
    }
}

/// Exact quotient `n / d`, or `None` when `d` does not divide `n`.
pub fn exact_div(n: &BigInt, d: &BigInt) -> Option<BigInt> {
    if d.is_zero() {
        return if n.is_zero() { Some(BigInt::zero()) } else { None };
    }
    let (q, r) = n.div_rem(d);
    r.is_zero().then_some(q)
}

/// Extended Euclid: returns `(g, s, t)` with `s·a + t·b = g = gcd(a, b) ≥ 0`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = r0.div_floor(&r1);
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        let t2 = &t0 - &q * &t1;
        r0 = core::mem::replace(&mut r1, r2);
        s0 = core::mem::replace(&mut s1, s2);
        t0 = core::mem::replace(&mut t1, t2);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Integer solution `(r, s)` of `a·r + b·s = c`, if one exists.
pub fn solve_linear(a: &BigInt, b: &BigInt, c: &BigInt) -> Option<(BigInt, BigInt)> {
    let (g, s, t) = ext_gcd(a, b);
    if g.is_zero() {
        return c.is_zero().then(|| (BigInt::zero(), BigInt::zero()));
    }
    let k = exact_div(c, &g)?;
    Some((s * &k, t * k))
}

/// Floor square root of a non-negative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of a negative number");
    n.sqrt()
}

/// `Some(r)` with `r² = n`, `r ≥ 0`, when `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Deterministic primality test for `|n|`.
///
/// Below `3.3·10²⁴` Miller–Rabin with the first twelve prime bases is
/// exact; above that trial division is used.
pub fn is_prime(n: &BigInt) -> bool {
    let n = n.abs();
    if n < BigInt::from(1u32 << 16) {
        return is_prime_u64(n.to_u64().expect("small"));
    }
    if n.is_even() {
        return false;
    }
    let limit: BigInt = "3317044064679887385961981".parse().expect("literal");
    if n < limit {
        return miller_rabin(&n);
    }
    smallest_prime_factor(&n) == n
}

const WITNESS_BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn miller_rabin(n: &BigInt) -> bool {
    let one = BigInt::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().expect("n > 1");
    let d = &n1 >> s;
    'bases: for a in WITNESS_BASES {
        let a = BigInt::from(a);
        if (&a % n).is_zero() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    smallest_factor_u64(n) == n
}

fn smallest_factor_u64(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

/// Smallest prime factor of `|n|` for `|n| ≥ 2`.
///
/// Panics when `|n| < 2`.
pub fn smallest_prime_factor(n: &BigInt) -> BigInt {
    let n = n.abs();
    assert!(n > BigInt::one(), "smallest_prime_factor needs |n| >= 2");
    if let Some(small) = n.to_u64() {
        return BigInt::from(smallest_factor_u64(small));
    }
    if n.is_even() {
        return BigInt::from(2u32);
    }
    let mut d = BigInt::from(3u32);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            return d;
        }
        d += 2u32;
    }
    n
}

/// Exponent of the prime `p` in `n ≠ 0`.
pub fn valuation(n: &BigInt, p: &BigInt) -> u32 {
    assert!(!n.is_zero(), "valuation of zero");
    let mut n = n.clone();
    let mut e = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return e;
        }
        n = q;
        e += 1;
    }
}
