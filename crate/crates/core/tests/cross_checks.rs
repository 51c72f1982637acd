//! Structural facts about primes and irreducibles, checked on boxes against
//! the brute-force oracle and the ring arithmetic.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use zplane::classify::{is_irreducible, is_prime, prime_integer_behavior};
use zplane::euclid::divides;
use zplane::oracle::{divisors, oracle_prime, Verdict};
use zplane::{Element, RingKind};

use RingKind::*;

fn e(kind: RingKind, x: i64, y: i64) -> Element {
    Element::from_i64(kind, x, y)
}

fn box_elements(kind: RingKind, bound: i64) -> impl Iterator<Item = Element> {
    (-bound..=bound).flat_map(move |x| (-bound..=bound).map(move |y| e(kind, x, y)))
}

fn divides_exact(d: &Element, z: &Element) -> bool {
    divides(d, z).unwrap().is_some()
}

#[test]
fn primes_off_the_zero_divisors_are_irreducible() {
    for kind in RingKind::ALL {
        for z in box_elements(kind, 25).filter(|z| !z.is_zero_divisor()) {
            if is_prime(&z) {
                assert!(is_irreducible(&z), "{z}");
            }
        }
    }
}

#[test]
fn hyperbolic_primes_have_the_expected_shape() {
    for z in box_elements(Hyperbolic, 25).filter(|z| !z.is_zero_divisor()) {
        if !is_prime(&z) {
            continue;
        }
        let c = z.canonical();
        let n = c.y().abs();
        assert_eq!(*c.x(), &n + 1u32, "{z}");
        assert_eq!(c.eta(), &n * 2u32 + 1u32, "{z}");
        // and z divides the rational prime η(z)
        assert!(divides_exact(&z, &Element::real(Hyperbolic, z.eta())), "{z}");
    }
}

#[test]
fn hyperbolic_irreducible_non_primes_have_power_of_two_norm() {
    for z in box_elements(Hyperbolic, 25).filter(|z| !z.is_zero_divisor() && !z.is_unit()) {
        if is_irreducible(&z) && !is_prime(&z) {
            let n = z.eta_plus();
            assert!(n >= BigInt::from(4), "{z}");
            assert_eq!(n.clone() & (n.clone() - 1u32), BigInt::from(0), "{z}");
        }
    }
}

#[test]
fn two_divides_products_of_the_odd_even_forms() {
    let forms: Vec<Element> = (0..12)
        .flat_map(|n| [e(Hyperbolic, 2 * n + 1, 2 * n - 1), e(Hyperbolic, 2 * n + 1, 1 - 2 * n)])
        .collect();
    let two = Element::real(Hyperbolic, 2);
    for z in &forms {
        for w in &forms {
            assert!(divides_exact(&two, &(z * w)), "{z} {w}");
        }
    }
}

#[test]
fn primes_divide_a_zero_divisor_or_its_conjugate() {
    for kind in [Hyperbolic, Parabolic] {
        let primes: Vec<Element> = box_elements(kind, 12).filter(is_prime).collect();
        for z in box_elements(kind, 12).filter(|z| z.is_zero_divisor() && !z.is_zero()) {
            for p in &primes {
                assert!(divides_exact(p, &z) || divides_exact(p, &z.conj()), "{p} {z}");
            }
        }
    }
}

#[test]
fn primality_is_never_refuted_for_primes() {
    for kind in RingKind::ALL {
        for z in box_elements(kind, 3).filter(is_prime) {
            let v = oracle_prime(&z, 6).unwrap();
            assert_ne!(v.verdict, Verdict::Refuted, "{z}: {v:?}");
        }
    }
    for z in [e(Hyperbolic, 1, 1), e(Hyperbolic, 2, 1), e(Parabolic, 0, 1), e(Elliptic, 3, 0)] {
        assert_eq!(oracle_prime(&z, 10).unwrap().verdict, Verdict::NoCounterexampleFound);
    }
}

#[test]
fn non_primes_are_refuted_in_a_small_box() {
    for kind in RingKind::ALL {
        for z in box_elements(kind, 3).filter(|z| !z.is_zero() && !z.is_unit() && !is_prime(z)) {
            let v = oracle_prime(&z, 6).unwrap();
            assert_eq!(v.verdict, Verdict::Refuted, "{z}");
            let (a, b) = v.witness.unwrap();
            assert!(divides_exact(&z, &(&a * &b)));
            assert!(!divides_exact(&z, &a) && !divides_exact(&z, &b));
        }
    }
}

#[test]
fn divisors_are_closed_under_cofactors() {
    for kind in RingKind::ALL {
        for z in box_elements(kind, 12).filter(|z| !z.is_zero_divisor()) {
            let ds = divisors(&z).unwrap();
            for d in &ds {
                let c = divides(d, &z).unwrap().expect("listed divisors divide");
                assert!(ds.contains(&c.canonical()), "{z}: cofactor of {d}");
            }
        }
    }
}

#[test]
fn rational_primes_in_each_ring() {
    for p in (2..300i64).filter(|&p| (2..p).all(|d| p % d != 0)) {
        for kind in RingKind::ALL {
            let r = prime_integer_behavior(&BigInt::from(p), kind).unwrap();
            let embedded = Element::real(kind, p);
            assert_eq!(r.is_prime_elt, is_prime(&embedded), "{p} in {kind}");
            assert_eq!(r.is_irreducible_elt, is_irreducible(&embedded), "{p} in {kind}");
            if let Some((a, b)) = r.witness {
                assert_eq!(&a * &b, embedded);
                assert!(!a.is_unit() && !b.is_unit());
            } else {
                assert!(r.is_irreducible_elt || kind == Hyperbolic && p == 2);
            }
        }
    }
    // no prime integer is prime in Z[j] or Z[k]
    for p in [2i64, 3, 5, 7] {
        assert!(!is_prime(&e(Hyperbolic, p, 0)) && !is_prime(&e(Parabolic, p, 0)));
    }
}

#[test]
fn units_have_unit_norm_and_inverse() {
    for kind in RingKind::ALL {
        for z in box_elements(kind, 30) {
            assert_eq!(z.is_unit(), z.eta_plus().is_one(), "{z}");
            if z.is_unit() {
                let inv = z.inverse().unwrap();
                assert!((&z * &inv).is_one());
                assert!(inv.x().to_i64().is_some());
            }
        }
    }
}
