//! Division with remainder, exact divisibility and finitely generated ideals.
//!
//! For `η⁺(b) ≠ 0` the quotient `a/b = a·b̄ / η(b)` is a pair of rationals;
//! rounding both coordinates to a nearest integer gives `γ` with
//! `η⁺(a − γb) ≤ η⁺(b)/2`. Zero divisors cannot be divided by, but they still
//! divide things, and [`divides`] handles that case separately.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{exact_div, round_half_away};
use crate::error::{Error, Result};
use crate::lattice::Lattice2;
use crate::ring::{Element, RingKind};

/// `a = quotient · b + remainder` with `η⁺(remainder) < η⁺(b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivResult {
    pub quotient: Element,
    pub remainder: Element,
}

/// Division with remainder by any `b` of non-zero norm.
///
/// Each coordinate of `a/b` is rounded to the nearest integer, ties away
/// from zero, which guarantees `2·η⁺(ρ) ≤ η⁺(b)`.
pub fn div_rem(a: &Element, b: &Element) -> Result<DivResult> {
    if a.kind() != b.kind() {
        return Err(Error::KindMismatch {
            left: a.kind(),
            right: b.kind(),
        });
    }
    let eta = b.eta();
    if eta.is_zero() {
        return Err(Error::DivisorIsZeroDivisor);
    }
    let num = a * &b.conj();
    let quotient = Element::new(
        a.kind(),
        round_half_away(num.x(), &eta),
        round_half_away(num.y(), &eta),
    );
    let remainder = a - &(&quotient * b);
    Ok(DivResult {
        quotient,
        remainder,
    })
}

/// The exact quotient `q` with `a = q·b`, if `b` divides `a`.
///
/// For `η(b) ≠ 0` the quotient is unique. When `b` is a non-zero zero
/// divisor many quotients exist and a real one (`θ`-part zero) is returned.
pub fn divides(b: &Element, a: &Element) -> Result<Option<Element>> {
    let kind = b.kind();
    if a.kind() != kind {
        return Err(Error::KindMismatch {
            left: b.kind(),
            right: a.kind(),
        });
    }
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let eta = b.eta();
    if !eta.is_zero() {
        let num = a * &b.conj();
        return Ok(exact_div(num.x(), &eta)
            .zip(exact_div(num.y(), &eta))
            .map(|(x, y)| Element::new(kind, x, y)));
    }
    // b is a non-zero zero divisor: t(1 + j), t(1 − j) or kt.
    let on_line = match kind {
        RingKind::Elliptic => unreachable!("Z[i] has no non-zero zero divisors"),
        RingKind::Hyperbolic => {
            if b.x() == b.y() {
                a.x() == a.y()
            } else {
                *a.x() == -a.y()
            }
        }
        RingKind::Parabolic => a.x().is_zero(),
    };
    if !on_line {
        return Ok(None);
    }
    let (m, t) = match kind {
        RingKind::Parabolic => (a.y(), b.y()),
        _ => (a.x(), b.x()),
    };
    Ok(exact_div(m, t).map(|q| Element::real(kind, q)))
}

/// An ideal given by a finite list of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FGIdeal {
    kind: RingKind,
    generators: Vec<Element>,
}

impl FGIdeal {
    /// An empty generator list gives the zero ideal `⟨0⟩`.
    pub fn new(kind: RingKind, generators: Vec<Element>) -> Result<FGIdeal> {
        if let Some(g) = generators.iter().find(|g| g.kind() != kind) {
            return Err(Error::KindMismatch {
                left: kind,
                right: g.kind(),
            });
        }
        let generators = if generators.is_empty() {
            vec![Element::zero(kind)]
        } else {
            generators
        };
        Ok(FGIdeal { kind, generators })
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    /// The ideal as a lattice in the coordinates where its zero-divisor
    /// lines are the axes: `(u, v)` for `Z[j]`, `(x, y)` otherwise.
    fn lattice(&self) -> Lattice2 {
        let theta = Element::theta(self.kind);
        let coords: Vec<(BigInt, BigInt)> = self
            .generators
            .iter()
            .flat_map(|g| [g.clone(), g * &theta])
            .map(|z| match self.kind {
                RingKind::Hyperbolic => z.split_coords(),
                _ => {
                    let (_, x, y) = z.into_parts();
                    (x, y)
                }
            })
            .collect();
        Lattice2::span(coords.iter().map(|(a, b)| (a, b)))
    }
}

/// `I = (α) + I ∩ D`, with `I ∩ D` described by one integer per
/// zero-divisor line:
///
/// - `I ∩ D⁺ = {t(1 + j) : g⁺ | t}`,
/// - `I ∩ D⁻ = {t(1 − j) : g⁻ | t}`,
/// - `I ∩ D₀ = {kt : g₀ | t}`.
///
/// A generator of 0 means the intersection is `{0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealDecomposition {
    pub kind: RingKind,
    /// Element of least positive norm in `I`; absent when `I ⊆ D`.
    pub alpha: Option<Element>,
    pub dplus_gen: BigInt,
    pub dminus_gen: BigInt,
    pub d0_gen: BigInt,
}

/// Splits an ideal into a principal part and its zero-divisor part.
///
/// `α` comes from a Euclidean descent over the generators: the generator
/// of least positive norm is used to reduce all the others, and whenever a
/// remainder off `D` appears the scan restarts with a smaller `α`. In
/// `Z[i]` and `Z[k]` this reaches the global minimum of `η⁺` on `I`. In
/// `Z[j]` the descent can stall with every remainder on the diagonals, so
/// the result is checked against the finitely many lattice points that
/// could still beat it.
pub fn decompose(ideal: &FGIdeal) -> IdealDecomposition {
    let kind = ideal.kind;
    let lattice = ideal.lattice();
    let (dplus_gen, dminus_gen, d0_gen) = match kind {
        RingKind::Elliptic => (BigInt::zero(), BigInt::zero(), BigInt::zero()),
        RingKind::Hyperbolic => (
            lattice.first_axis_generator() / 2u32,
            lattice.second_axis_generator() / 2u32,
            BigInt::zero(),
        ),
        RingKind::Parabolic => (BigInt::zero(), BigInt::zero(), lattice.second_axis_generator()),
    };

    let mut alpha = descend(ideal.generators.clone());
    if kind == RingKind::Hyperbolic {
        if let Some(best) = least_norm_split_point(&lattice) {
            if alpha.as_ref().is_none_or(|a| best.eta_plus() < a.eta_plus()) {
                alpha = Some(best);
            }
        }
    }

    IdealDecomposition {
        kind,
        alpha: alpha.map(|a| a.canonical()),
        dplus_gen,
        dminus_gen,
        d0_gen,
    }
}

fn descend(mut pool: Vec<Element>) -> Option<Element> {
    loop {
        let (idx, alpha) = pool
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero_divisor())
            .min_by_key(|(_, e)| e.eta_plus())
            .map(|(i, e)| (i, e.clone()))?;
        let mut improved = false;
        for (i, e) in pool.iter_mut().enumerate() {
            if i == idx {
                continue;
            }
            let rho = div_rem(e, &alpha).expect("alpha has non-zero norm").remainder;
            improved |= !rho.is_zero_divisor();
            *e = rho;
        }
        if !improved {
            return Some(alpha);
        }
    }
}

// In (u, v) coordinates the ideal contains (a, 0) and (0, b) as soon as it
// leaves D, and any point with |u| > a or |v| > b can be shifted to one of
// smaller |uv| without landing on an axis. So the minimum of |uv| off the
// axes is attained with 0 < u ≤ a, 0 < v ≤ b; with b = r there is exactly
// one v per admissible u.
fn least_norm_split_point(lattice: &Lattice2) -> Option<Element> {
    let (p, q) = lattice.first.as_ref()?;
    let r = &lattice.r;
    if r.is_zero() {
        return None;
    }
    let a = lattice.first_axis_generator();
    let steps = &a / p;
    let mut best: Option<(BigInt, BigInt, BigInt)> = None;
    let mut m = BigInt::one();
    while m <= steps {
        let u = &m * p;
        let v = (&m * q - 1u32).mod_floor(r) + 1u32;
        let n = &u * &v;
        if best.as_ref().is_none_or(|(bn, _, _)| n < *bn) {
            best = Some((n, u, v));
        }
        m += 1u32;
    }
    best.map(|(_, u, v)| Element::from_split(&u, &v))
}

fn in_d_part(dec: &IdealDecomposition, rho: &Element) -> bool {
    if rho.is_zero() {
        return true;
    }
    let divisible = |t: &BigInt, g: &BigInt| exact_div(t, g).is_some();
    match dec.kind {
        RingKind::Elliptic => false,
        RingKind::Hyperbolic => {
            if rho.x() == rho.y() {
                divisible(rho.x(), &dec.dplus_gen)
            } else if *rho.x() == -rho.y() {
                divisible(rho.x(), &dec.dminus_gen)
            } else {
                false
            }
        }
        RingKind::Parabolic => rho.x().is_zero() && divisible(rho.y(), &dec.d0_gen),
    }
}

/// Membership test through the decomposition: reduce by `α`, then check
/// the remainder against the zero-divisor part.
pub fn ideal_contains(dec: &IdealDecomposition, z: &Element) -> Result<bool> {
    if z.kind() != dec.kind {
        return Err(Error::KindMismatch {
            left: dec.kind,
            right: z.kind(),
        });
    }
    let rho = match &dec.alpha {
        Some(alpha) => div_rem(z, alpha)?.remainder,
        None => z.clone(),
    };
    Ok(in_d_part(dec, &rho))
}

/// Randomized check that `D⁺`, `D⁻` (in `Z[j]`) and `D₀` (in `Z[k]`) are
/// prime ideals: `zw ∈ P ⇒ z ∈ P ∨ w ∈ P` over `trials` random pairs.
/// In `Z[i]` the zero-divisor set is `{0}` and the check is vacuous.
pub fn d_ideal_is_prime_witness(kind: RingKind, trials: usize) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0d1d_ea15);
    d_ideal_is_prime_witness_with(kind, trials, &mut rng)
}

pub fn d_ideal_is_prime_witness_with<R: Rng>(kind: RingKind, trials: usize, rng: &mut R) -> bool {
    let lines: &[fn(&Element) -> bool] = match kind {
        RingKind::Elliptic => return true,
        RingKind::Hyperbolic => &[|z| z.x() == z.y(), |z| *z.x() == -z.y()],
        RingKind::Parabolic => &[|z| z.x().is_zero()],
    };
    (0..trials).all(|_| {
        let mut pick = || Element::from_i64(kind, rng.gen_range(-30..=30), rng.gen_range(-30..=30));
        let (z, w) = (pick(), pick());
        let zw = &z * &w;
        lines
            .iter()
            .all(|on| !on(&zw) || on(&z) || on(&w))
    })
}
