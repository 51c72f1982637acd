//! Brute-force ground truth for the closed-form decisions in
//! [`classify`](crate::classify) and [`factor`](crate::factor).
//!
//! Nothing here calls into those modules. Divisors are enumerated exactly
//! from integer divisors of the coordinates or the norm:
//!
//! - `Z[j]`: in coordinates `(u, v) = (x + y, x − y)` multiplication is
//!   componentwise and the units are the sign flips, so divisor classes are
//!   pairs of positive integer divisors `(d₁ | u, d₂ | v)` subject to parity.
//! - `Z[k]`: `(m + kr)(n + ks) = mn + k(ms + nr)`, so the real part of a
//!   divisor divides `x` and `r` only matters modulo `m`.
//! - `Z[i]`: a divisor's norm divides the norm.
//!
//! Primality is only ever refuted, never confirmed: [`oracle_prime`] looks for
//! `a, b` in a box with `z | ab` but `z ∤ a` and `z ∤ b`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::euclid::divides;
use crate::ring::{Element, RingKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Confirmed,
    Refuted,
    NoCounterexampleFound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVerdict {
    pub verdict: Verdict,
    /// For refutations, the pair that exhibits the violation.
    pub witness: Option<(Element, Element)>,
}

/// Positive divisors of `n ≠ 0`, in increasing order.
fn int_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let e = &n / &d;
            if e != d {
                large.push(e);
            }
            small.push(d.clone());
        }
        d += 1u32;
    }
    small.extend(large.into_iter().rev());
    small
}

fn check_admissible(z: &Element) -> Result<()> {
    if z.is_zero() {
        return Err(Error::InputIsZero);
    }
    if z.kind() == RingKind::Hyperbolic && z.eta().is_zero() {
        return Err(Error::InfiniteDivisorSet);
    }
    Ok(())
}

fn sort_key(e: &Element) -> (BigInt, BigInt, BigInt) {
    (e.eta().abs(), e.x().clone(), e.y().clone())
}

/// Every divisor of `z`, one representative per associate class, sorted by
/// `(η⁺, x, y)`.
pub fn divisors(z: &Element) -> Result<Vec<Element>> {
    check_admissible(z)?;
    let kind = z.kind();
    let mut out = match kind {
        RingKind::Hyperbolic => {
            let u = z.x() + z.y();
            let v = z.x() - z.y();
            let du = int_divisors(&u);
            let dv = int_divisors(&v);
            let mut out = Vec::new();
            for d1 in &du {
                for d2 in &dv {
                    let (c1, c2) = (&u / d1, &v / d2);
                    if (d1 - d2).is_even() && (&c1 - &c2).is_even() {
                        out.push(Element::new(kind, (d1 + d2) / 2, (d1 - d2) / 2));
                    }
                }
            }
            out
        }
        RingKind::Parabolic => {
            let mut out = Vec::new();
            if z.x().is_zero() {
                // a + kb divides ky whenever a | y; kb divides it when b | y.
                for m in int_divisors(z.y()) {
                    let mut r = BigInt::zero();
                    while r < m {
                        out.push(Element::new(kind, m.clone(), r.clone()));
                        r += 1u32;
                    }
                    out.push(Element::new(kind, 0, m));
                }
            } else {
                for m in int_divisors(z.x()) {
                    let n = z.x() / &m;
                    let mut r = BigInt::zero();
                    while r < m {
                        if (z.y() - &r * &n).is_multiple_of(&m) {
                            out.push(Element::new(kind, m.clone(), r.clone()));
                        }
                        r += 1u32;
                    }
                }
            }
            out
        }
        RingKind::Elliptic => {
            let mut out = Vec::new();
            for n in int_divisors(&z.eta()) {
                // canonical representatives: x > 0, y ≥ 0
                let mut a = BigInt::one();
                while &a * &a <= n {
                    let rest = &n - &a * &a;
                    let b = rest.sqrt();
                    if &b * &b == rest {
                        let d = Element::new(kind, a.clone(), b);
                        if divides(&d, z)?.is_some() {
                            out.push(d);
                        }
                    }
                    a += 1u32;
                }
            }
            out
        }
    };
    out.sort_by_key(sort_key);
    out.dedup();
    Ok(out)
}

/// A factorization `z = a·b` with neither factor a unit, if one exists.
pub fn irreducible_witness(z: &Element) -> Result<Option<(Element, Element)>> {
    if z.is_unit() {
        return Err(Error::InputIsUnit);
    }
    for d in divisors(z)? {
        if d.eta().abs().is_one() {
            continue;
        }
        if let Some(c) = divides(&d, z)? {
            if !c.eta().abs().is_one() {
                return Ok(Some((d, c)));
            }
        }
    }
    Ok(None)
}

/// Whether `z` has only trivial factorizations, decided by enumeration.
pub fn oracle_irreducible(z: &Element) -> Result<bool> {
    Ok(irreducible_witness(z)?.is_none())
}

/// [`oracle_irreducible`] as a verdict: `Confirmed`, or `Refuted` with a
/// non-trivial factorization.
pub fn oracle_irreducible_verdict(z: &Element) -> Result<OracleVerdict> {
    Ok(match irreducible_witness(z)? {
        None => OracleVerdict {
            verdict: Verdict::Confirmed,
            witness: None,
        },
        Some(w) => OracleVerdict {
            verdict: Verdict::Refuted,
            witness: Some(w),
        },
    })
}

fn linf(e: &Element) -> BigInt {
    e.x().abs().max(e.y().abs())
}

/// Non-zero elements with both coordinates in `[−bound, bound]`, ordered by
/// sup norm, then by `x` and `y` descending.
fn box_elements(kind: RingKind, bound: i64) -> Vec<Element> {
    let mut out = Vec::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            if x != 0 || y != 0 {
                out.push(Element::from_i64(kind, x, y));
            }
        }
    }
    out.sort_by(|a, b| {
        linf(a)
            .cmp(&linf(b))
            .then_with(|| b.x().cmp(a.x()))
            .then_with(|| b.y().cmp(a.y()))
    });
    out
}

fn divides_exact(z: &Element, a: &Element) -> bool {
    divides(z, a).ok().flatten().is_some()
}

/// Witness ordering: sup norm of the product, then enumeration indices.
type WitnessKey = (BigInt, usize, usize);

/// Searches `|x|, |y| ≤ bound` for `a, b` with `z | ab`, `z ∤ a`, `z ∤ b`.
///
/// The box is searched in growing shells. Inside the first shell that has
/// a counterexample, the pair with the smallest product (sup norm) wins,
/// ties going to the earlier `a` and then the earlier `b` in box order.
pub fn oracle_prime(z: &Element, bound: u32) -> Result<OracleVerdict> {
    if z.is_zero() {
        return Err(Error::InputIsZero);
    }
    if z.is_unit() {
        return Err(Error::InputIsUnit);
    }
    let kind = z.kind();
    let bound = i64::from(bound);
    // only elements z does not divide can appear in a witness
    let pool: Vec<(usize, Element, i64)> = box_elements(kind, bound)
        .into_iter()
        .enumerate()
        .filter(|(_, e)| !divides_exact(z, e))
        .map(|(i, e)| {
            let r = linf(&e).to_i64().expect("box coordinates fit");
            (i, e, r)
        })
        .collect();
    for shell in 1..=bound {
        let inside: Vec<&(usize, Element, i64)> =
            pool.iter().filter(|(_, _, r)| *r <= shell).collect();
        let mut best: Option<(WitnessKey, (Element, Element))> = None;
        for (ia, a, ra) in &inside {
            for (ib, b, rb) in &inside {
                if *ra < shell && *rb < shell {
                    continue;
                }
                let ab = a * b;
                let key = (linf(&ab), *ia, *ib);
                if best.as_ref().is_some_and(|(k, _)| *k <= key) {
                    continue;
                }
                if divides_exact(z, &ab) {
                    best = Some((key, (a.clone(), b.clone())));
                }
            }
        }
        if let Some((_, pair)) = best {
            return Ok(OracleVerdict {
                verdict: Verdict::Refuted,
                witness: Some(pair),
            });
        }
    }
    Ok(OracleVerdict {
        verdict: Verdict::NoCounterexampleFound,
        witness: None,
    })
}
