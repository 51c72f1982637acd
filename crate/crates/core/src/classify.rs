//! Prime and irreducible decisions without search.
//!
//! | ring   | primes                                        | irreducibles                                  |
//! |--------|-----------------------------------------------|-----------------------------------------------|
//! | `Z[i]` | = irreducibles                                | `η⁺` prime, or associate of `p ≡ 3 (mod 4)`   |
//! | `Z[j]` | `±(1 ± j)`, and `η⁺` prime off the diagonals  | `η⁺` prime, or associate of `(2^γ+1) ± j(2^γ−1)` |
//! | `Z[k]` | `±k`                                          | `±k`; `x + ky` with `|x| = p^γ` and (`γ = 1` or `p ∤ y`) |
//!
//! Zero and units are neither prime nor irreducible nor reducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::factor;
use crate::ring::{Element, RingKind};

/// Joint verdicts for one element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Classification {
    pub is_zero: bool,
    pub is_unit: bool,
    pub is_zero_divisor: bool,
    pub is_prime: bool,
    pub is_irreducible: bool,
    pub is_reducible: bool,
}

/// The irreducible non-prime `(2^γ + 1) ± j(2^γ − 1)` of `Z[j]`, of norm
/// `2^(γ+2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IrreducibleForm {
    pub gamma: u32,
    /// Sign of the `j` coordinate, `+1` or `−1`.
    pub sign_y: i8,
}

impl IrreducibleForm {
    pub fn to_element(self) -> Element {
        let p = BigInt::one() << self.gamma;
        let y = &p - 1u32;
        Element::new(
            RingKind::Hyperbolic,
            p + 1u32,
            if self.sign_y < 0 { -y } else { y },
        )
    }

    /// Recognizes `z` (up to associates) as one of the forms.
    pub fn match_element(z: &Element) -> Option<IrreducibleForm> {
        if z.kind() != RingKind::Hyperbolic {
            return None;
        }
        let c = z.canonical();
        let gamma = power_of_two_exponent(&c.eta_plus())?.checked_sub(2)?;
        let sign_y = if c.y().is_negative() { -1 } else { 1 };
        let form = IrreducibleForm { gamma, sign_y };
        (form.to_element() == c).then_some(form)
    }
}

fn power_of_two_exponent(n: &BigInt) -> Option<u32> {
    if !n.is_positive() {
        return None;
    }
    let tz = n.trailing_zeros()?;
    (n >> tz).is_one().then_some(tz as u32)
}

fn nonzero_nonunit(z: &Element) -> bool {
    !z.is_zero() && !z.is_unit()
}

/// Whether `z` is a prime element of its ring.
pub fn is_prime(z: &Element) -> bool {
    if !nonzero_nonunit(z) {
        return false;
    }
    match z.kind() {
        RingKind::Elliptic => is_irreducible(z),
        RingKind::Hyperbolic => {
            if z.is_zero_divisor() {
                z.x().abs().is_one()
            } else {
                arith::is_prime(&z.eta_plus())
            }
        }
        RingKind::Parabolic => z.x().is_zero() && z.y().abs().is_one(),
    }
}

/// Whether `z` is irreducible: a non-zero non-unit with only trivial
/// factorizations.
pub fn is_irreducible(z: &Element) -> bool {
    if !nonzero_nonunit(z) {
        return false;
    }
    match z.kind() {
        RingKind::Elliptic => {
            let n = z.eta_plus();
            if arith::is_prime(&n) {
                return true;
            }
            let c = z.canonical();
            c.y().is_zero() && arith::is_prime(c.x()) && c.x().mod_floor(&BigInt::from(4)) == BigInt::from(3)
        }
        RingKind::Hyperbolic => {
            if z.is_zero_divisor() {
                return false;
            }
            arith::is_prime(&z.eta_plus()) || IrreducibleForm::match_element(z).is_some()
        }
        RingKind::Parabolic => {
            if z.x().is_zero() {
                return z.y().abs().is_one();
            }
            let x = z.x().abs();
            match factor::prime_power(&x) {
                None => false,
                Some((_, 1)) => true,
                Some((p, _)) => !z.y().is_multiple_of(&p),
            }
        }
    }
}

pub fn classify(z: &Element) -> Classification {
    let is_zero = z.is_zero();
    let is_unit = z.is_unit();
    let is_zero_divisor = z.is_zero_divisor();
    if is_zero || is_unit {
        return Classification {
            is_zero,
            is_unit,
            is_zero_divisor,
            ..Classification::default()
        };
    }
    let is_irreducible = is_irreducible(z);
    Classification {
        is_zero,
        is_unit,
        is_zero_divisor,
        is_prime: is_prime(z),
        is_irreducible,
        is_reducible: !is_irreducible,
    }
}

/// How a rational prime behaves once embedded in one of the rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeIntegerReport {
    pub is_prime_elt: bool,
    pub is_irreducible_elt: bool,
    /// A non-trivial factorization `p = a·b` when one exists.
    pub witness: Option<(Element, Element)>,
}

pub fn prime_integer_behavior(p: &BigInt, kind: RingKind) -> Result<PrimeIntegerReport> {
    if p.is_negative() || !arith::is_prime(p) {
        return Err(Error::NotPrime);
    }
    let report = match kind {
        RingKind::Elliptic => {
            let inert = p.mod_floor(&BigInt::from(4)) == BigInt::from(3);
            let witness = if inert {
                None
            } else {
                let (a, b) = factor::sum_two_squares(p)?.expect("p is 2 or 1 mod 4");
                let g = Element::new(kind, a, b);
                Some((g.clone(), g.conj()))
            };
            PrimeIntegerReport {
                is_prime_elt: inert,
                is_irreducible_elt: inert,
                witness,
            }
        }
        RingKind::Hyperbolic => {
            let witness = if p.is_odd() {
                // p = 2n + 1 = ((n + 1) + jn)((n + 1) − jn)
                let n: BigInt = p >> 1u32;
                let a = Element::new(kind, &n + 1u32, n);
                Some((a.clone(), a.conj()))
            } else {
                None
            };
            PrimeIntegerReport {
                is_prime_elt: false,
                is_irreducible_elt: witness.is_none(),
                witness,
            }
        }
        RingKind::Parabolic => PrimeIntegerReport {
            is_prime_elt: false,
            is_irreducible_elt: true,
            witness: None,
        },
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use RingKind::*;

    fn e(kind: RingKind, x: i64, y: i64) -> Element {
        Element::from_i64(kind, x, y)
    }

    #[test]
    fn prime_examples() {
        assert!(is_prime(&e(Hyperbolic, 1, 1)));
        assert!(is_prime(&e(Hyperbolic, -1, 1)));
        assert!(!is_prime(&e(Hyperbolic, 2, 0)));
        assert!(!is_prime(&e(Hyperbolic, 2, 2)));
        assert!(is_prime(&e(Hyperbolic, 2, 1)));
        assert!(is_prime(&e(Parabolic, 0, 1)));
        assert!(is_prime(&e(Parabolic, 0, -1)));
        assert!(!is_prime(&e(Parabolic, 0, 2)));
        assert!(!is_prime(&e(Parabolic, 3, 0)));
        assert!(is_prime(&e(Elliptic, 3, 0)));
        assert!(!is_prime(&e(Elliptic, 5, 0)));
    }

    #[test]
    fn irreducible_examples() {
        assert!(is_irreducible(&e(Hyperbolic, 2, 0)));
        assert!(is_irreducible(&e(Hyperbolic, 3, 1)));
        assert!(is_irreducible(&e(Hyperbolic, 3, -1)));
        assert!(!is_irreducible(&e(Hyperbolic, 7, 5)));
        assert!(!is_irreducible(&e(Hyperbolic, 1, 1)));
        assert!(!is_irreducible(&e(Hyperbolic, 3, 0)));
        assert!(!is_irreducible(&e(Parabolic, 9, 3)));
        assert!(is_irreducible(&e(Parabolic, 9, 1)));
        assert!(is_irreducible(&e(Parabolic, -9, 1)));
        assert!(!is_irreducible(&e(Parabolic, 6, 5)));
        assert!(is_irreducible(&e(Parabolic, 5, 7)));
        assert!(is_irreducible(&e(Parabolic, 0, 1)));
        assert!(!is_irreducible(&e(Parabolic, 0, 3)));
        assert!(is_irreducible(&e(Elliptic, 3, 0)));
        assert!(is_irreducible(&e(Elliptic, 0, 3)));
        assert!(!is_irreducible(&e(Elliptic, 2, 0)));
        assert!(is_irreducible(&e(Elliptic, 1, 1)));
        assert!(!is_irreducible(&e(Elliptic, 5, 0)));
        for k in RingKind::ALL {
            assert!(!is_irreducible(&Element::zero(k)));
            assert!(!is_irreducible(&Element::one(k)));
            assert!(!is_prime(&Element::one(k)));
        }
    }

    #[test]
    fn classification_examples() {
        let c = classify(&e(Hyperbolic, 1, 1));
        assert!(c.is_zero_divisor && c.is_prime && c.is_reducible && !c.is_irreducible);
        let c = classify(&e(Hyperbolic, 2, 0));
        assert!(c.is_irreducible && !c.is_prime && !c.is_zero_divisor);
        let c = classify(&e(Parabolic, 1, 5));
        assert_eq!(
            c,
            Classification {
                is_unit: true,
                ..Classification::default()
            }
        );
        let c = classify(&Element::zero(Parabolic));
        assert!(c.is_zero && c.is_zero_divisor && !c.is_prime && !c.is_reducible);
    }

    #[test]
    fn irreducible_forms() {
        for gamma in 0..8 {
            for sign_y in [-1, 1] {
                let f = IrreducibleForm { gamma, sign_y };
                let z = f.to_element();
                assert_eq!(z.eta(), BigInt::one() << (gamma + 2));
                assert!(z.x().is_positive());
                let back = IrreducibleForm::match_element(&(&z * &e(Hyperbolic, 0, -1))).unwrap();
                assert_eq!(back.gamma, gamma);
                if gamma > 0 {
                    assert_eq!(back.sign_y, sign_y);
                }
            }
        }
        assert_eq!(IrreducibleForm::match_element(&e(Hyperbolic, 4, 0)), None);
        assert_eq!(IrreducibleForm::match_element(&e(Hyperbolic, 6, 2)), None);
        assert_eq!(IrreducibleForm::match_element(&e(Parabolic, 3, 1)), None);
    }

    #[test]
    fn rational_primes_in_each_ring() {
        let r = prime_integer_behavior(&BigInt::from(7), Hyperbolic).unwrap();
        assert!(!r.is_prime_elt && !r.is_irreducible_elt);
        let (a, b) = r.witness.unwrap();
        assert_eq!(a, e(Hyperbolic, 4, 3));
        assert_eq!(&a * &b, e(Hyperbolic, 7, 0));

        let r = prime_integer_behavior(&BigInt::from(2), Hyperbolic).unwrap();
        assert!(!r.is_prime_elt && r.is_irreducible_elt && r.witness.is_none());

        let r = prime_integer_behavior(&BigInt::from(5), Parabolic).unwrap();
        assert!(!r.is_prime_elt && r.is_irreducible_elt);

        let r = prime_integer_behavior(&BigInt::from(5), Elliptic).unwrap();
        assert!(!r.is_prime_elt && !r.is_irreducible_elt);
        let (a, b) = r.witness.clone().unwrap();
        assert_eq!((a.clone(), b.clone()), (e(Elliptic, 2, 1), e(Elliptic, 2, -1)));
        assert_eq!(&a * &b, e(Elliptic, 5, 0));

        let r = prime_integer_behavior(&BigInt::from(7), Elliptic).unwrap();
        assert!(r.is_prime_elt && r.is_irreducible_elt && r.witness.is_none());

        assert_eq!(
            prime_integer_behavior(&BigInt::from(9), Elliptic),
            Err(Error::NotPrime)
        );
    }
}
