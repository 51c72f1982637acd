use alloc::string::String;
use core::fmt;

use crate::ring::RingKind;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live in different rings.
    KindMismatch { left: RingKind, right: RingKind },
    /// The operation is only defined for another ring.
    WrongRing { expected: RingKind, found: RingKind },
    /// Only units are invertible inside the integer ring.
    NotInvertible,
    /// Division by an element of positive norm zero.
    DivisorIsZeroDivisor,
    /// Division by the zero element.
    DivisionByZero,
    /// Leading coefficient of a quadratic polynomial is zero.
    DegeneratePoly,
    /// An integer argument that must be prime is not.
    NotPrime,
    /// An argument that must be strictly positive is not.
    NotPositive,
    /// Zero divisors of `Z[j]` have no factorization into irreducibles.
    NoFactorizationInD,
    InputIsZero,
    InputIsUnit,
    /// Divisor enumeration of a diagonal element of `Z[j]` never terminates.
    InfiniteDivisorSet,
    /// A float computation left the finite range.
    Overflow,
    /// The hyperbolic polar form needs `η > 0` and `x > 0`.
    OutOfSector,
    /// A coordinate was NaN or infinite.
    NonFinite,
    Parse { position: usize, message: String },
    /// A plain integer was given without saying which ring it belongs to.
    AmbiguousRing,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::KindMismatch { left, right } => {
                write!(f, "ring mismatch: {} vs {}", left.name(), right.name())
            }
            Error::WrongRing { expected, found } => write!(
                f,
                "operation needs the {} ring, got {}",
                expected.name(),
                found.name()
            ),
            Error::NotInvertible => f.write_str("element is not a unit"),
            Error::DivisorIsZeroDivisor => f.write_str("divisor has positive norm zero"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::DegeneratePoly => f.write_str("leading coefficient must be non-zero"),
            Error::NotPrime => f.write_str("integer is not prime"),
            Error::NotPositive => f.write_str("integer must be positive"),
            Error::NoFactorizationInD => {
                f.write_str("zero divisors of Z[j] have no factorization into irreducibles")
            }
            Error::InputIsZero => f.write_str("input is zero"),
            Error::InputIsUnit => f.write_str("input is a unit"),
            Error::InfiniteDivisorSet => f.write_str("element has infinitely many divisors"),
            Error::Overflow => f.write_str("floating point overflow"),
            Error::OutOfSector => f.write_str("polar form needs eta > 0 and x > 0"),
            Error::NonFinite => f.write_str("coordinates must be finite"),
            Error::Parse { position, message } => {
                write!(f, "parse error at {}: {}", position, message)
            }
            Error::AmbiguousRing => {
                f.write_str("plain integer needs a ring (i, j or k) to be interpreted")
            }
        }
    }
}

impl core::error::Error for Error {}
