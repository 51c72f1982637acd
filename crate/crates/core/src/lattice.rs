// Rank ≤ 2 sublattices of Z², kept in Hermite normal form
//
//     L = Z·(p, q) + Z·(0, r),   p > 0 or absent,  r ≥ 0,  0 ≤ q < r when r > 0.
//
// Ideals of Z[θ] are Z-modules spanned by {g, θg} over the generators g, so
// this is all the linear algebra ideal decomposition needs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::ext_gcd;
#[cfg(test)]
use crate::arith::exact_div;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Lattice2 {
    /// `(p, q)` with `p > 0`; absent when every vector has first coordinate 0.
    pub first: Option<(BigInt, BigInt)>,
    /// Generator of the intersection with the second axis, `r ≥ 0`.
    pub r: BigInt,
}

impl Lattice2 {
    pub fn span<'a>(vectors: impl IntoIterator<Item = (&'a BigInt, &'a BigInt)>) -> Lattice2 {
        let mut first: Option<(BigInt, BigInt)> = None;
        let mut r = BigInt::zero();
        for (a, b) in vectors {
            let (a, b) = (a.clone(), b.clone());
            match first.take() {
                None => {
                    if a.is_zero() {
                        r = r.gcd(&b);
                    } else {
                        first = Some((a, b));
                    }
                }
                Some((p, q)) => {
                    if a.is_zero() {
                        r = r.gcd(&b);
                        first = Some((p, q));
                        continue;
                    }
                    // Unimodular column operation merging (p, q) and (a, b):
                    // s·p + t·a = g; the complementary vector has first coord 0.
                    let (g, s, t) = ext_gcd(&p, &a);
                    let new_first = (g.clone(), &s * &q + &t * &b);
                    let pg = &p / &g;
                    let ag = &a / &g;
                    let leftover = &ag * &q - &pg * &b;
                    r = r.gcd(&leftover);
                    first = Some(new_first);
                }
            }
        }
        let first = first.map(|(p, q)| {
            let (p, q) = if p.is_negative() { (-p, -q) } else { (p, q) };
            let q = if r.is_zero() { q } else { q.mod_floor(&r) };
            (p, q)
        });
        Lattice2 { first, r }
    }

    #[cfg(test)]
    pub fn contains(&self, a: &BigInt, b: &BigInt) -> bool {
        let rest = match &self.first {
            None => {
                if !a.is_zero() {
                    return false;
                }
                b.clone()
            }
            Some((p, q)) => match exact_div(a, p) {
                None => return false,
                Some(m) => b - m * q,
            },
        };
        exact_div(&rest, &self.r).is_some()
    }

    /// Smallest `a > 0` with `(a, 0)` in the lattice, or 0 if none.
    pub fn first_axis_generator(&self) -> BigInt {
        match &self.first {
            None => BigInt::zero(),
            Some((p, q)) => {
                if self.r.is_zero() {
                    if q.is_zero() {
                        p.clone()
                    } else {
                        BigInt::zero()
                    }
                } else {
                    // m·q ≡ 0 (mod r)  <=>  r / gcd(q, r) divides m
                    p * (&self.r / q.gcd(&self.r))
                }
            }
        }
    }

    /// Smallest `b > 0` with `(0, b)` in the lattice, or 0 if none.
    pub fn second_axis_generator(&self) -> BigInt {
        self.r.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::vec::Vec;

    fn big(pairs: &[(i64, i64)]) -> Vec<(BigInt, BigInt)> {
        pairs.iter().map(|&(a, b)| (a.into(), b.into())).collect()
    }

    fn brute_contains(gens: &[(i64, i64)], a: i64, b: i64) -> bool {
        // flood fill over small combinations
        let w = 60i64;
        let size = (2 * w + 1) as usize;
        let mut seen = std::vec![false; size * size];
        let idx = |x: i64, y: i64| ((x + w) as usize) * size + (y + w) as usize;
        let mut stack = std::vec![(0i64, 0i64)];
        seen[idx(0, 0)] = true;
        while let Some((x, y)) = stack.pop() {
            for &(gx, gy) in gens {
                for s in [-1, 1] {
                    let (nx, ny) = (x + s * gx, y + s * gy);
                    if nx.abs() <= w && ny.abs() <= w && !seen[idx(nx, ny)] {
                        seen[idx(nx, ny)] = true;
                        stack.push((nx, ny));
                    }
                }
            }
        }
        seen[idx(a, b)]
    }

    #[test]
    fn hnf_matches_flood_fill() {
        let cases: &[&[(i64, i64)]] = &[
            &[(2, 2), (2, -2), (2, 0)],
            &[(4, 6), (6, 9)],
            &[(0, 3), (0, 5)],
            &[(3, 1)],
            &[(0, 0)],
            &[(6, 4), (10, 2), (0, 8)],
            &[(-3, 5), (5, -3)],
        ];
        for gens in cases {
            let v = big(gens);
            let l = Lattice2::span(v.iter().map(|(a, b)| (a, b)));
            for a in -12..=12 {
                for b in -12..=12 {
                    assert_eq!(
                        l.contains(&a.into(), &b.into()),
                        brute_contains(gens, a, b),
                        "{gens:?} ({a}, {b}) {l:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn axis_generators() {
        let v = big(&[(2, 2), (2, -2)]);
        let l = Lattice2::span(v.iter().map(|(a, b)| (a, b)));
        assert_eq!(l.first_axis_generator(), BigInt::from(4));
        assert_eq!(l.second_axis_generator(), BigInt::from(4));
        let v = big(&[(3, 1)]);
        let l = Lattice2::span(v.iter().map(|(a, b)| (a, b)));
        assert_eq!(l.first_axis_generator(), BigInt::from(0));
        assert_eq!(l.second_axis_generator(), BigInt::from(0));
    }
}
