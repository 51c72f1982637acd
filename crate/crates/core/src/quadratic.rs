//! Quotient rings `R[x]/(ax² + bx + c)` and their reduction to the three
//! canonical planes.
//!
//! Writing `θ` for the class of `x`, the relation becomes `θ² = α + βθ`
//! with `α = −c/a`, `β = −b/a`. The sign of the discriminant `β² + 4α`
//! (equivalently `b² − 4ac`) decides which canonical ring this is, and
//! completing the square gives the isomorphism explicitly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::analytic::RealElement;
use crate::error::{Error, Result};
use crate::ring::RingKind;

/// A point `x + θy` with rational coordinates.
pub type RationalPair = (BigRational, BigRational);

/// `θ² = alpha + beta·θ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralParams {
    pub alpha: BigRational,
    pub beta: BigRational,
}

impl GeneralParams {
    pub fn new(alpha: BigRational, beta: BigRational) -> Self {
        GeneralParams { alpha, beta }
    }

    pub fn from_integers(alpha: i64, beta: i64) -> Self {
        GeneralParams::new(int(alpha), int(beta))
    }

    /// `β² + 4α`.
    pub fn disc(&self) -> BigRational {
        &self.beta * &self.beta + &self.alpha * int(4)
    }

    pub fn kind(&self) -> RingKind {
        kind_from_sign(&self.disc())
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn kind_from_sign(d: &BigRational) -> RingKind {
    if d.is_negative() {
        RingKind::Elliptic
    } else if d.is_positive() {
        RingKind::Hyperbolic
    } else {
        RingKind::Parabolic
    }
}

/// `a·x² + b·x + c` with `a ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticPoly {
    a: BigRational,
    b: BigRational,
    c: BigRational,
}

impl QuadraticPoly {
    pub fn new(a: BigRational, b: BigRational, c: BigRational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::DegeneratePoly);
        }
        Ok(QuadraticPoly { a, b, c })
    }

    pub fn from_integers(a: i64, b: i64, c: i64) -> Result<Self> {
        QuadraticPoly::new(int(a), int(b), int(c))
    }

    pub fn coefficients(&self) -> (&BigRational, &BigRational, &BigRational) {
        (&self.a, &self.b, &self.c)
    }

    /// `b² − 4ac`.
    pub fn disc(&self) -> BigRational {
        &self.b * &self.b - &self.a * &self.c * int(4)
    }

    /// The relation `θ² = α + βθ` in the quotient ring.
    pub fn params(&self) -> GeneralParams {
        GeneralParams::new(-&self.c / &self.a, -&self.b / &self.a)
    }
}

pub fn classify_quadratic(p: &QuadraticPoly) -> RingKind {
    kind_from_sign(&p.disc())
}

/// `(x₁x₂ + αy₁y₂) + θ(x₁y₂ + x₂y₁ + βy₁y₂)`.
pub fn general_mul(g: &GeneralParams, z: &RationalPair, w: &RationalPair) -> RationalPair {
    let (x1, y1) = z;
    let (x2, y2) = w;
    let yy = y1 * y2;
    (
        x1 * x2 + &g.alpha * &yy,
        x1 * y2 + x2 * y1 + &g.beta * yy,
    )
}

/// `(η, τ)` with `η = x² + βxy − αy²` and `τ = 2x + βy`.
pub fn general_norm_trace(g: &GeneralParams, z: &RationalPair) -> (BigRational, BigRational) {
    let (x, y) = z;
    let eta = x * x + &g.beta * x * y - &g.alpha * y * y;
    let tau = x * int(2) + &g.beta * y;
    (eta, tau)
}

/// The norm in completed-square form `(x + βy/2)² − D·y²/4`.
pub fn general_norm_completed(g: &GeneralParams, z: &RationalPair) -> BigRational {
    let (x, y) = z;
    let shifted = x + &g.beta * y / int(2);
    &shifted * &shifted - g.disc() * y * y / int(4)
}

/// The change of basis `θ' = (θ − shift)/scale` onto a canonical ring.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Canonical {
    pub kind: RingKind,
    pub shift: f64,
    pub scale: f64,
}

impl Canonical {
    /// Image of `x + θy`, namely `(x + shift·y) + θ'(scale·y)`.
    pub fn apply(&self, x: f64, y: f64) -> Result<RealElement> {
        RealElement::new(self.kind, x + self.shift * y, self.scale * y)
    }
}

pub fn canonicalize(g: &GeneralParams) -> Canonical {
    let disc = g.disc();
    let kind = kind_from_sign(&disc);
    let shift = g.beta.to_f64().unwrap_or(f64::NAN) / 2.0;
    let scale = match kind {
        RingKind::Parabolic => 1.0,
        _ => libm::sqrt(disc.abs().to_f64().unwrap_or(f64::NAN)) / 2.0,
    };
    Canonical { kind, shift, scale }
}
