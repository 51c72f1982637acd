//! Factorization into irreducibles, plus the integer helpers it rests on:
//! trial-division factoring and two-squares representations.
//!
//! None of the three rings has unique factorization, so [`factor`] returns
//! one valid factorization. `8 = 2·2·2 = (3 + j)(3 − j)` in `Z[j]` and
//! `4 = 2·2 = (2 + k)(2 − k)` in `Z[k]` are the standard counterexamples.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{self, exact_sqrt, isqrt, solve_linear};
use crate::classify::IrreducibleForm;
use crate::error::{Error, Result};
use crate::euclid::divides;
use crate::ring::{Element, RingKind};

/// `unit · factors[0] · factors[1] · …` equals the factored element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Element,
    /// Canonical associates, sorted by `(η⁺, x, y)`.
    pub factors: Vec<Element>,
    /// Set when the input was a zero divisor of `Z[k]`. Such elements are
    /// outside the usual existence theorem but still factor as `y·k`.
    pub zero_divisor_extension: bool,
}

impl Factorization {
    pub fn product(&self) -> Element {
        self.factors
            .iter()
            .fold(self.unit.clone(), |acc, f| &acc * f)
    }
}

/// Sign and prime factorization of a non-zero integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntFactorization {
    /// `−1` or `1`.
    pub sign: i8,
    /// `(prime, exponent)` in increasing prime order.
    pub primes: Vec<(BigInt, u32)>,
}

pub fn int_factor(n: &BigInt) -> Result<IntFactorization> {
    if n.is_zero() {
        return Err(Error::InputIsZero);
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut rest = n.abs();
    let mut primes = Vec::new();
    while !rest.is_one() {
        let p = arith::smallest_prime_factor(&rest);
        let e = arith::valuation(&rest, &p);
        rest /= p.pow(e);
        primes.push((p, e));
    }
    Ok(IntFactorization { sign, primes })
}

/// `Some((p, e))` with `n = p^e` when `n > 1` is a prime power.
pub fn prime_power(n: &BigInt) -> Option<(BigInt, u32)> {
    if *n <= BigInt::one() {
        return None;
    }
    let p = arith::smallest_prime_factor(n);
    let e = arith::valuation(n, &p);
    (p.pow(e) == *n).then_some((p, e))
}

/// `(a, b)` with `a ≥ b ≥ 0` and `a² + b² = p`, or `None` when `p ≡ 3 (mod 4)`.
pub fn sum_two_squares(p: &BigInt) -> Result<Option<(BigInt, BigInt)>> {
    if p.is_negative() || !arith::is_prime(p) {
        return Err(Error::NotPrime);
    }
    let mut a = isqrt(p);
    while &a * &a * 2u32 >= *p {
        if let Some(b) = exact_sqrt(&(p - &a * &a)) {
            return Ok(Some((a, b)));
        }
        a -= 1u32;
    }
    Ok(None)
}

/// `(r, s)` with `n = r² − s²` and `r` as small as possible, or `None`
/// exactly when `n ≡ 2 (mod 4)`.
pub fn diff_two_squares(n: &BigInt) -> Result<Option<(BigInt, BigInt)>> {
    if !n.is_positive() {
        return Err(Error::NotPositive);
    }
    // n = d·e with d ≤ e of equal parity; r = (d + e)/2 shrinks as d grows.
    let mut d = isqrt(n);
    while d.is_positive() {
        let (e, rem) = n.div_rem(&d);
        if rem.is_zero() && (&d + &e).is_even() {
            return Ok(Some(((&e + &d) >> 1u32, (&e - &d) >> 1u32)));
        }
        d -= 1u32;
    }
    Ok(None)
}

fn check_splittable(a: &Element) -> Result<()> {
    if a.is_zero() {
        Err(Error::InputIsZero)
    } else if a.is_unit() {
        Err(Error::InputIsUnit)
    } else if a.kind() == RingKind::Hyperbolic && a.is_zero_divisor() {
        Err(Error::NoFactorizationInD)
    } else {
        Ok(())
    }
}

/// A factorization `a = b·c` with neither factor a unit, or `None` when `a`
/// is irreducible.
pub fn split(a: &Element) -> Result<Option<(Element, Element)>> {
    check_splittable(a)?;
    Ok(match a.kind() {
        RingKind::Elliptic => split_gaussian(a),
        RingKind::Hyperbolic => split_hyperbolic(a),
        RingKind::Parabolic => split_parabolic(a),
    })
}

fn try_divisor(d: Element, a: &Element) -> Option<(Element, Element)> {
    let q = divides(&d, a).ok()??;
    (!q.is_unit() && !d.is_unit()).then_some((d, q))
}

fn split_gaussian(a: &Element) -> Option<(Element, Element)> {
    let kind = a.kind();
    let norm = int_factor(&a.eta_plus()).ok()?;
    for (q, _) in norm.primes {
        let candidates = if q == BigInt::from(2) {
            vec![Element::from_i64(kind, 1, 1)]
        } else if q.mod_floor(&BigInt::from(4)).is_one() {
            let (r, s) = sum_two_squares(&q).ok()??;
            vec![Element::new(kind, r.clone(), s.clone()), Element::new(kind, r, -s)]
        } else {
            vec![Element::real(kind, q)]
        };
        for d in candidates {
            if let Some(pair) = try_divisor(d, a) {
                return Some(pair);
            }
        }
    }
    None
}

fn split_hyperbolic(a: &Element) -> Option<(Element, Element)> {
    let kind = a.kind();
    let norm = a.eta_plus();
    if arith::is_prime(&norm) {
        return None;
    }
    let odd = int_factor(&norm)
        .ok()?
        .primes
        .into_iter()
        .map(|(p, _)| p)
        .find(|p| p.is_odd());
    match odd {
        Some(p) => {
            // p = 2n + 1 = ((n + 1) + jn)((n + 1) − jn); one of the two divides a.
            let n: BigInt = p >> 1u32;
            let w = Element::new(kind, &n + 1u32, n);
            let wc = w.conj();
            try_divisor(w, a).or_else(|| try_divisor(wc, a))
        }
        None => {
            if IrreducibleForm::match_element(a).is_some() {
                None
            } else {
                try_divisor(Element::real(kind, 2), a)
            }
        }
    }
}

fn split_parabolic(a: &Element) -> Option<(Element, Element)> {
    let kind = a.kind();
    if a.x().is_zero() {
        return (!a.y().abs().is_one())
            .then(|| (Element::real(kind, a.y().clone()), Element::theta(kind)));
    }
    let sign = if a.x().is_negative() { -1 } else { 1 };
    let x = a.x().abs();
    let y = a.y() * sign;
    let (p, e) = match prime_power(&x) {
        Some((_, 1)) => return None,
        Some(pe) => pe,
        None => {
            // x = m·n with gcd(m, n) = 1; solve r·n + s·m = y
            let p = arith::smallest_prime_factor(&x);
            let m = p.pow(arith::valuation(&x, &p));
            let n = &x / &m;
            let (r0, _) = solve_linear(&n, &m, &y).expect("gcd(m, n) = 1");
            let r = r0.mod_floor(&m);
            let s = (&y - &r * &n) / &m;
            let b = Element::new(kind, m, r);
            let c = Element::new(kind, n, s);
            return Some((b.scale(&BigInt::from(sign)), c));
        }
    };
    if !y.is_multiple_of(&p) {
        return None;
    }
    // p^(e−1)·r + p·s = y, taking r = 0
    let b = Element::real(kind, p.clone());
    let c = Element::new(kind, p.pow(e - 1), &y / &p);
    Some((b.scale(&BigInt::from(sign)), c))
}

/// Factors `a` into irreducibles.
pub fn factor(a: &Element) -> Result<Factorization> {
    check_splittable(a)?;
    let kind = a.kind();
    let mut pending = vec![a.clone()];
    let mut factors = Vec::new();
    while let Some(z) = pending.pop() {
        match split(&z)? {
            Some((b, c)) => {
                pending.push(b);
                pending.push(c);
            }
            None => factors.push(z.canonical()),
        }
    }
    factors.sort_by(|f, g| {
        (f.eta_plus(), f.x(), f.y()).cmp(&(g.eta_plus(), g.x(), g.y()))
    });
    let product = factors
        .iter()
        .fold(Element::one(kind), |acc, f| &acc * f);
    let unit = divides(&product, a)?.expect("the factors multiply back to a");
    debug_assert!(unit.is_unit());
    Ok(Factorization {
        unit,
        factors,
        zero_divisor_extension: kind == RingKind::Parabolic && a.is_zero_divisor(),
    })
}
