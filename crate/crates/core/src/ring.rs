//! Elements `x + θy` of `Z[i]`, `Z[j]` and `Z[k]` and their ring arithmetic.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Which of the three canonical planar structures an element belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingKind {
    /// `θ² = −1`, the Gaussian integers.
    Elliptic,
    /// `θ² = +1`, the perplex integers.
    Hyperbolic,
    /// `θ² = 0`, the dual integers.
    Parabolic,
}

impl RingKind {
    pub const ALL: [RingKind; 3] = [RingKind::Elliptic, RingKind::Hyperbolic, RingKind::Parabolic];

    /// The square of the imaginary unit.
    pub const fn mu(self) -> i32 {
        match self {
            RingKind::Elliptic => -1,
            RingKind::Hyperbolic => 1,
            RingKind::Parabolic => 0,
        }
    }

    /// Letter used for the imaginary unit in text form.
    pub const fn unit_symbol(self) -> char {
        match self {
            RingKind::Elliptic => 'i',
            RingKind::Hyperbolic => 'j',
            RingKind::Parabolic => 'k',
        }
    }

    pub fn from_symbol(c: char) -> Option<RingKind> {
        match c {
            'i' => Some(RingKind::Elliptic),
            'j' => Some(RingKind::Hyperbolic),
            'k' => Some(RingKind::Parabolic),
            _ => None,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            RingKind::Elliptic => "Z[i]",
            RingKind::Hyperbolic => "Z[j]",
            RingKind::Parabolic => "Z[k]",
        }
    }

    /// The units of the ring with `|x|, |y| ≤ bound`.
    ///
    /// `Z[i]` and `Z[j]` only have `±1, ±θ`; `Z[k]` has the infinite family
    /// `±1 + ky`, truncated to the bound.
    pub fn units_within(self, bound: i64) -> Vec<Element> {
        match self {
            RingKind::Elliptic | RingKind::Hyperbolic => [(1, 0), (-1, 0), (0, 1), (0, -1)]
                .into_iter()
                .map(|(x, y)| Element::from_i64(self, x, y))
                .collect(),
            RingKind::Parabolic => (-bound..=bound)
                .flat_map(|y| [Element::from_i64(self, 1, y), Element::from_i64(self, -1, y)])
                .collect(),
        }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for RingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "i" | "c" | "elliptic" | "gaussian" | "complex" => Ok(RingKind::Elliptic),
            "j" | "h" | "hyperbolic" | "perplex" | "split" => Ok(RingKind::Hyperbolic),
            "k" | "p" | "parabolic" | "dual" => Ok(RingKind::Parabolic),
            other => Err(Error::Parse {
                position: 0,
                message: alloc::format!("unknown ring `{}`", other),
            }),
        }
    }
}

/// A point `x + θy` of one of the three integer rings.
///
/// Equality is structural: same ring, same coordinates. Associates are
/// compared through [`Element::normalize_associate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    kind: RingKind,
    x: BigInt,
    y: BigInt,
}

/// Norm, positive norm and trace of an element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormData {
    pub eta: BigInt,
    pub eta_plus: BigInt,
    pub tau: BigInt,
}

/// A canonical representative of an associate class together with the
/// unit that produced it: `canonical = unit · input`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Associate {
    pub canonical: Element,
    pub unit: Element,
}

impl Element {
    pub fn new(kind: RingKind, x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Element {
            kind,
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn from_i64(kind: RingKind, x: i64, y: i64) -> Self {
        Element::new(kind, x, y)
    }

    pub fn zero(kind: RingKind) -> Self {
        Element::from_i64(kind, 0, 0)
    }

    pub fn one(kind: RingKind) -> Self {
        Element::from_i64(kind, 1, 0)
    }

    /// The imaginary unit `θ`.
    pub fn theta(kind: RingKind) -> Self {
        Element::from_i64(kind, 0, 1)
    }

    /// An integer embedded as `n + θ0`.
    pub fn real(kind: RingKind, n: impl Into<BigInt>) -> Self {
        Element::new(kind, n, 0)
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    /// Real part `Re(z)`.
    pub fn x(&self) -> &BigInt {
        &self.x
    }

    /// Coefficient of `θ`.
    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn into_parts(self) -> (RingKind, BigInt, BigInt) {
        (self.kind, self.x, self.y)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.x.is_one() && self.y.is_zero()
    }

    fn same_kind(&self, other: &Element) -> Result<()> {
        if self.kind == other.kind {
            Ok(())
        } else {
            Err(Error::KindMismatch {
                left: self.kind,
                right: other.kind,
            })
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        self.same_kind(other)?;
        Ok(Element::new(self.kind, &self.x + &other.x, &self.y + &other.y))
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element> {
        self.same_kind(other)?;
        Ok(Element::new(self.kind, &self.x - &other.x, &self.y - &other.y))
    }

    /// `(x₁x₂ + μy₁y₂) + θ(x₁y₂ + x₂y₁)` with `μ = θ²`.
    pub fn checked_mul(&self, other: &Element) -> Result<Element> {
        self.same_kind(other)?;
        let yy = &self.y * &other.y;
        let x = &self.x * &other.x
            + match self.kind.mu() {
                0 => BigInt::zero(),
                1 => yy,
                _ => -yy,
            };
        let y = &self.x * &other.y + &other.x * &self.y;
        Ok(Element::new(self.kind, x, y))
    }

    /// Multiplies by an integer scalar.
    pub fn scale(&self, n: &BigInt) -> Element {
        Element::new(self.kind, &self.x * n, &self.y * n)
    }

    pub fn pow(&self, mut e: u32) -> Element {
        let mut base = self.clone();
        let mut acc = Element::one(self.kind);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `x − θy`.
    pub fn conj(&self) -> Element {
        Element::new(self.kind, self.x.clone(), -&self.y)
    }

    /// `η(z) = x² − θ²y² = z·z̄`.
    pub fn eta(&self) -> BigInt {
        let xx = &self.x * &self.x;
        match self.kind.mu() {
            0 => xx,
            1 => xx - &self.y * &self.y,
            _ => xx + &self.y * &self.y,
        }
    }

    /// `η⁺(z) = |η(z)|`.
    pub fn eta_plus(&self) -> BigInt {
        self.eta().abs()
    }

    /// `τ(z) = 2x`.
    pub fn trace(&self) -> BigInt {
        &self.x * 2u32
    }

    pub fn norm_data(&self) -> NormData {
        let eta = self.eta();
        NormData {
            eta_plus: eta.abs(),
            tau: self.trace(),
            eta,
        }
    }

    /// Units are exactly the elements of positive norm one.
    pub fn is_unit(&self) -> bool {
        self.eta_plus().is_one()
    }

    /// Zero divisors, zero included, are exactly the elements of norm zero.
    pub fn is_zero_divisor(&self) -> bool {
        self.eta().is_zero()
    }

    /// Inverse inside the integer ring: `z̄ / η(z)`, defined for units only.
    pub fn inverse(&self) -> Result<Element> {
        let eta = self.eta();
        if !eta.abs().is_one() {
            return Err(Error::NotInvertible);
        }
        // η = ±1, so dividing by η is multiplying by it.
        Ok(self.conj().scale(&eta))
    }

    /// Indefinite inner product `Re(z·w̄) = x₁x₂ − θ²y₁y₂`, so that
    /// `⟨z, z⟩ = η(z)`.
    pub fn inner_product(&self, other: &Element) -> Result<BigInt> {
        self.same_kind(other)?;
        let xx = &self.x * &other.x;
        Ok(match self.kind.mu() {
            0 => xx,
            1 => xx - &self.y * &other.y,
            _ => xx + &self.y * &other.y,
        })
    }

    /// Lexicographic order on `Z[k]`; `ky` is infinitesimal next to any real.
    pub fn lex_cmp(&self, other: &Element) -> Result<Ordering> {
        for z in [self, other] {
            if z.kind != RingKind::Parabolic {
                return Err(Error::WrongRing {
                    expected: RingKind::Parabolic,
                    found: z.kind,
                });
            }
        }
        Ok(self.x.cmp(&other.x).then_with(|| self.y.cmp(&other.y)))
    }

    pub fn lex_less(&self, other: &Element) -> Result<bool> {
        Ok(self.lex_cmp(other)? == Ordering::Less)
    }

    /// Canonical member of the associate class `{u·z : u unit}`.
    ///
    /// - `Z[i]`: rotated into `x > 0, y ≥ 0` (or zero).
    /// - `Z[j]`: non zero divisors get `x > |y|`, so `η > 0` and `Re > 0`;
    ///   diagonal elements `±t(1 ± j)` get `t > 0`.
    /// - `Z[k]`: `x > 0` and `0 ≤ y < x` when `x ≠ 0`, else `y ≥ 0`.
    pub fn normalize_associate(&self) -> Associate {
        let kind = self.kind;
        let unit_from = |x: i64, y: i64| Element::from_i64(kind, x, y);
        if self.is_zero() {
            return Associate {
                canonical: self.clone(),
                unit: Element::one(kind),
            };
        }
        match kind {
            RingKind::Elliptic => {
                let mut unit = Element::one(kind);
                let mut z = self.clone();
                let i = Element::theta(kind);
                while !(z.x.is_positive() && !z.y.is_negative()) {
                    z = &z * &i;
                    unit = &unit * &i;
                }
                Associate { canonical: z, unit }
            }
            RingKind::Hyperbolic => {
                let unit = if self.x.abs() >= self.y.abs() {
                    // covers both the sector |x| > |y| and the diagonals
                    unit_from(if self.x.is_negative() { -1 } else { 1 }, 0)
                } else {
                    unit_from(0, if self.y.is_negative() { -1 } else { 1 })
                };
                Associate {
                    canonical: &unit * self,
                    unit,
                }
            }
            RingKind::Parabolic => {
                if self.x.is_zero() {
                    let s = if self.y.is_negative() { -1 } else { 1 };
                    let unit = unit_from(s, 0);
                    return Associate {
                        canonical: &unit * self,
                        unit,
                    };
                }
                let s: i64 = if self.x.is_negative() { -1 } else { 1 };
                let x = &self.x * s;
                let y = &self.y * s;
                // (1 + kt)(x + ky) = x + k(y + tx)
                let t = -y.div_floor(&x);
                let canonical = Element::new(kind, x.clone(), y + &t * &x);
                let unit = Element::new(kind, s, t * s);
                Associate { canonical, unit }
            }
        }
    }

    /// Shorthand for `normalize_associate().canonical`.
    pub fn canonical(&self) -> Element {
        self.normalize_associate().canonical
    }

    pub fn is_associate_of(&self, other: &Element) -> bool {
        self.kind == other.kind && self.canonical() == other.canonical()
    }

    /// Coordinates `(u, v) = (x + y, x − y)` in which `Z[j]` multiplies
    /// componentwise.
    pub(crate) fn split_coords(&self) -> (BigInt, BigInt) {
        (&self.x + &self.y, &self.x - &self.y)
    }

    /// Inverse of [`Element::split_coords`]; `u` and `v` must share parity.
    pub(crate) fn from_split(u: &BigInt, v: &BigInt) -> Element {
        debug_assert!((u - v).is_even());
        Element::new(RingKind::Hyperbolic, (u + v) / 2, (u - v) / 2)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.y.is_negative() { '-' } else { '+' };
        write!(
            f,
            "{}{}{}{}",
            self.x,
            sign,
            self.y.abs(),
            self.kind.unit_symbol()
        )
    }
}

impl core::str::FromStr for Element {
    type Err = Error;

    /// Parses the element grammar; plain integers are rejected as ambiguous.
    fn from_str(s: &str) -> Result<Self> {
        Element::parse(s, None)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Element> for &Element {
            type Output = Element;

            /// Panics when the operands belong to different rings; use the
            /// `checked_*` methods to get an error instead.
            fn $method(self, rhs: &Element) -> Element {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{}", e),
                }
            }
        }

        impl $trait<Element> for Element {
            type Output = Element;

            fn $method(self, rhs: Element) -> Element {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element::new(self.kind, -&self.x, -&self.y)
    }
}

impl Neg for Element {
    type Output = Element;

    fn neg(self) -> Element {
        -&self
    }
}
