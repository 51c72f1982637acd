//! Real-coefficient elements `x + θy` and the exponential map.
//!
//! | ring | `exp(x + θy)`             |
//! |------|---------------------------|
//! | `i`  | `eˣ(cos y + i sin y)`     |
//! | `j`  | `eˣ(cosh y + j sinh y)`   |
//! | `k`  | `eˣ(1 + ky)`              |
//!
//! In the hyperbolic plane every `z` with `η(z) > 0` and `x > 0` has a polar
//! form `√η(z)(cosh α + j sinh α)`, and powers follow the Moivre rule.

use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::RingKind;

/// `x + θy` with finite `f64` coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealElement {
    pub kind: RingKind,
    pub x: f64,
    pub y: f64,
}

/// Compares with relative tolerance `tol` for magnitudes at least 1 and
/// absolute tolerance `tol · 1e−3` below that.
pub fn approx_eq(a: f64, b: f64, tol: f64) -> bool {
    let scale = a.abs().max(b.abs());
    if scale >= 1.0 {
        (a - b).abs() <= tol * scale
    } else {
        (a - b).abs() <= tol * 1e-3
    }
}

impl RealElement {
    pub fn new(kind: RingKind, x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(RealElement { kind, x, y })
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn one(kind: RingKind) -> Self {
        RealElement { kind, x: 1.0, y: 0.0 }
    }

    pub fn eta(&self) -> f64 {
        self.x * self.x - f64::from(self.kind.mu()) * self.y * self.y
    }

    pub fn conj(&self) -> Self {
        RealElement {
            y: -self.y,
            ..*self
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        RealElement {
            kind: self.kind,
            x: self.x * s,
            y: self.y * s,
        }
    }

    /// `self^n` by repeated squaring.
    pub fn powi(&self, n: u32) -> Self {
        let mut base = *self;
        let mut acc = RealElement::one(self.kind);
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            n >>= 1;
        }
        acc
    }

    pub fn approx_eq(&self, other: &RealElement, tol: f64) -> bool {
        self.kind == other.kind && approx_eq(self.x, other.x, tol) && approx_eq(self.y, other.y, tol)
    }
}

fn same_kind(a: &RealElement, b: &RealElement) -> RingKind {
    assert_eq!(a.kind, b.kind, "mixing elements of different rings");
    a.kind
}

impl Add for RealElement {
    type Output = RealElement;
    fn add(self, rhs: RealElement) -> RealElement {
        let kind = same_kind(&self, &rhs);
        RealElement {
            kind,
            x: self.x + rhs.x,
            y: self.y + rhs.y,
        }
    }
}

impl Sub for RealElement {
    type Output = RealElement;
    fn sub(self, rhs: RealElement) -> RealElement {
        self + (-rhs)
    }
}

impl Neg for RealElement {
    type Output = RealElement;
    fn neg(self) -> RealElement {
        self.scale(-1.0)
    }
}

impl Mul for RealElement {
    type Output = RealElement;
    fn mul(self, rhs: RealElement) -> RealElement {
        let kind = same_kind(&self, &rhs);
        let mu = f64::from(kind.mu());
        RealElement {
            kind,
            x: self.x * rhs.x + mu * self.y * rhs.y,
            y: self.x * rhs.y + self.y * rhs.x,
        }
    }
}

pub fn exp_theta(z: &RealElement) -> Result<RealElement> {
    let r = libm::exp(z.x);
    let (c, s) = match z.kind {
        RingKind::Elliptic => (libm::cos(z.y), libm::sin(z.y)),
        RingKind::Hyperbolic => (libm::cosh(z.y), libm::sinh(z.y)),
        RingKind::Parabolic => (1.0, z.y),
    };
    RealElement::new(z.kind, r * c, r * s).map_err(|_| Error::Overflow)
}

/// `z = r(cosh α + j sinh α)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarForm {
    pub r: f64,
    pub alpha: f64,
}

impl PolarForm {
    pub fn to_element(&self) -> RealElement {
        RealElement {
            kind: RingKind::Hyperbolic,
            x: self.r * libm::cosh(self.alpha),
            y: self.r * libm::sinh(self.alpha),
        }
    }
}

/// Polar form of a hyperbolic element in the sector `η > 0`, `x > 0`.
pub fn polar_decompose(z: &RealElement) -> Result<PolarForm> {
    if z.kind != RingKind::Hyperbolic {
        return Err(Error::WrongRing {
            expected: RingKind::Hyperbolic,
            found: z.kind,
        });
    }
    let eta = z.eta();
    if !(eta > 0.0 && z.x > 0.0) {
        return Err(Error::OutOfSector);
    }
    Ok(PolarForm {
        r: libm::sqrt(eta),
        alpha: libm::atanh(z.y / z.x),
    })
}

/// `zⁿ = rⁿ(cosh nα + j sinh nα)`.
pub fn pow_moivre(z: &RealElement, n: i32) -> Result<RealElement> {
    let p = polar_decompose(z)?;
    let rn = libm::pow(p.r, f64::from(n));
    let a = p.alpha * f64::from(n);
    RealElement::new(z.kind, rn * libm::cosh(a), rn * libm::sinh(a)).map_err(|_| Error::Overflow)
}

/// Evaluates `(e^{jx} + e^{−jx})/2` and `(e^{jx} − e^{−jx})/2j` in the
/// hyperbolic plane; these equal `cosh x` and `sinh x`.
pub fn euler_check(x: f64) -> (f64, f64) {
    let plus = exp_theta(&RealElement {
        kind: RingKind::Hyperbolic,
        x: 0.0,
        y: x,
    })
    .expect("finite for finite x");
    let minus = exp_theta(&RealElement {
        kind: RingKind::Hyperbolic,
        x: 0.0,
        y: -x,
    })
    .expect("finite for finite x");
    // j is its own inverse, so dividing by 2j is multiplying by j/2
    let j_half = RealElement {
        kind: RingKind::Hyperbolic,
        x: 0.0,
        y: 0.5,
    };
    let cosh = (plus + minus).scale(0.5);
    let sinh = (plus - minus) * j_half;
    (cosh.x, sinh.x)
}
