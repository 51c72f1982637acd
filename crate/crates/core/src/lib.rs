//! Exact arithmetic in the three integer rings of the plane.
//!
//! Every element is `x + θy` with arbitrary-precision integer coordinates,
//! where the imaginary unit satisfies one of
//!
//! - `i² = −1`: the Gaussian integers `Z[i]` ([`RingKind::Elliptic`]),
//! - `j² = +1`: the hyperbolic (perplex) integers `Z[j]` ([`RingKind::Hyperbolic`]),
//! - `k² = 0`: the parabolic (dual) integers `Z[k]` ([`RingKind::Parabolic`]).
//!
//! `Z[j]` and `Z[k]` have zero divisors, so the familiar Gaussian picture
//! changes: primes need not be irreducible, irreducibles need not be prime
//! and factorizations into irreducibles are not unique. The crate provides
//!
//! - ring arithmetic, norms, units and associate normalization ([`ring`]),
//! - the norm-based division algorithm and finitely generated ideals ([`euclid`]),
//! - closed-form prime / irreducible decisions ([`classify`]),
//! - constructive factorization and square representations ([`factor`]),
//! - an independent brute-force ground truth ([`oracle`]),
//! - general quadratic quotient rings `R[x]/(ax²+bx+c)` ([`quadratic`]),
//! - floating point exponentials and hyperbolic polar forms ([`analytic`]).
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! ```
//! use zplane::{Element, RingKind};
//!
//! let z = Element::parse("3+1j", None).unwrap();
//! let w = z.conj();
//! assert_eq!(z.checked_mul(&w).unwrap(), Element::from_i64(RingKind::Hyperbolic, 8, 0));
//! assert!(zplane::classify::is_irreducible(&z));
//! assert!(!zplane::classify::is_prime(&z));
//! ```

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analytic;
pub mod arith;
pub mod classify;
mod error;
pub mod euclid;
pub mod factor;
mod lattice;
pub mod oracle;
pub mod quadratic;
pub mod ring;
mod text;

pub use error::{Error, Result};
pub use ring::{Associate, Element, NormData, RingKind};
