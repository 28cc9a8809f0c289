//! Arithmetic contexts for Brown-type constructions: GF(q), Z/nZ, and the
//! projective points (line classes) of their three-dimensional spaces.

mod field;
mod ring;

pub use field::FiniteField;
pub use ring::RingZn;

use num_integer::Integer;

use crate::error::{input, Result};

/// Largest field order supported.
pub const MAX_FIELD_ORDER: u32 = 512;

/// Prime factorization by trial division, sorted by prime.
pub fn factorize(mut n: u64) -> Result<Vec<(u64, u32)>> {
    if n < 2 {
        return input(format!("cannot factorize {n}"));
    }
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(out)
}

/// `Some((p, k))` when `n = p^k` for a prime `p` and `k >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).ok()?.as_slice() {
        [single] => Some(*single),
        _ => None,
    }
}

pub fn is_prime(n: u64) -> bool {
    matches!(prime_power(n), Some((_, 1)))
}

/// Which coordinate space a projective point lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    Field { q: u32 },
    Ring { n: u32 },
}

/// Canonical representative of a line class of R^3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    pub coords: [u32; 3],
    pub space: Space,
}

/// Coordinate arithmetic shared by fields and Z/nZ.
pub trait Coordinates {
    fn space(&self) -> Space;
    fn size(&self) -> u32;
    fn add(&self, a: u32, b: u32) -> u32;
    fn mul(&self, a: u32, b: u32) -> u32;

    /// Canonical projective points in lexicographic order of coordinates.
    fn projective_points(&self) -> Vec<ProjectivePoint>;

    fn dot3(&self, v: &ProjectivePoint, w: &ProjectivePoint) -> Result<u32> {
        if v.space != self.space() || w.space != self.space() {
            return input("points belong to a different coordinate space");
        }
        Ok(self.dot_raw(&v.coords, &w.coords))
    }

    fn dot_raw(&self, v: &[u32; 3], w: &[u32; 3]) -> u32 {
        let xs = self.mul(v[0], w[0]);
        let ys = self.mul(v[1], w[1]);
        let zs = self.mul(v[2], w[2]);
        self.add(self.add(xs, ys), zs)
    }

    fn scale(&self, k: u32, v: &[u32; 3]) -> [u32; 3] {
        [self.mul(k, v[0]), self.mul(k, v[1]), self.mul(k, v[2])]
    }
}

fn all_vectors(size: u32) -> impl Iterator<Item = [u32; 3]> {
    (0..size).flat_map(move |x| (0..size).flat_map(move |y| (0..size).map(move |z| [x, y, z])))
}

impl Coordinates for FiniteField {
    fn space(&self) -> Space {
        Space::Field { q: self.order() }
    }

    fn size(&self) -> u32 {
        self.order()
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        FiniteField::add(self, a, b)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        FiniteField::mul(self, a, b)
    }

    /// Vectors whose first nonzero coordinate is 1.
    fn projective_points(&self) -> Vec<ProjectivePoint> {
        let space = self.space();
        all_vectors(self.order())
            .filter(|v| v.iter().find(|&&c| c != 0) == Some(&1))
            .map(|coords| ProjectivePoint { coords, space })
            .collect()
    }
}

impl Coordinates for RingZn {
    fn space(&self) -> Space {
        Space::Ring { n: self.modulus() }
    }

    fn size(&self) -> u32 {
        self.modulus()
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        RingZn::add(self, a, b)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        RingZn::mul(self, a, b)
    }

    /// Vectors with `gcd(x, y, z, n) = 1` (no nonzero annihilator), each
    /// the lexicographic minimum of its orbit under unit scaling.
    fn projective_points(&self) -> Vec<ProjectivePoint> {
        let n = self.modulus();
        let units = self.units();
        let space = self.space();
        all_vectors(n)
            .filter(|v| v[0].gcd(&v[1]).gcd(&v[2]).gcd(&n) == 1)
            .filter(|v| units.iter().all(|&u| self.scale(u, v) >= *v))
            .map(|coords| ProjectivePoint { coords, space })
            .collect()
    }
}

/// Predicted number of projective points of (Z/nZ)^3:
/// `Π (p^{2k} + p^{2k-1} + p^{2k-2})`.
pub fn ring_point_count(n: u64) -> Result<u64> {
    Ok(factorize(n)?
        .into_iter()
        .map(|(p, k)| p.pow(2 * k - 2) * (p * p + p + 1))
        .product())
}

/// Predicted maximum orthogonality degree over Z/nZ: `Π (p^k + p^{k-1})`.
pub fn ring_max_degree(n: u64) -> Result<u64> {
    Ok(factorize(n)?
        .into_iter()
        .map(|(p, k)| p.pow(k - 1) * (p + 1))
        .product())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_cases() {
        assert_eq!(factorize(6).unwrap(), vec![(2, 1), (3, 1)]);
        assert_eq!(factorize(12).unwrap(), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(19).unwrap(), vec![(19, 1)]);
        assert!(factorize(1).is_err());
        assert_eq!(prime_power(512), Some((2, 9)));
        assert_eq!(prime_power(12), None);
        assert!(is_prime(19) && !is_prime(9));
    }

    #[test]
    fn field_point_counts() {
        for q in [2u32, 3, 4, 5, 7, 8, 9] {
            let f = FiniteField::new(q).unwrap();
            assert_eq!(f.projective_points().len() as u32, q * q + q + 1, "q={q}");
        }
        let f19 = FiniteField::new(19).unwrap();
        assert_eq!(f19.projective_points().len(), 381);
    }

    #[test]
    fn ring_point_examples() {
        let count = |n| RingZn::new(n).unwrap().projective_points().len();
        assert_eq!(count(3), 13);
        assert_eq!(count(4), 28);
        assert_eq!(count(6), 91);
    }

    #[test]
    fn z4_survivors_and_orbits() {
        // brute force: 56 vectors pass the gcd filter; units {1, 3} pair them up
        let survivors = all_vectors(4)
            .filter(|v| v.iter().any(|c| c % 2 == 1))
            .count();
        assert_eq!(survivors, 56);
        assert_eq!(
            RingZn::new(4).unwrap().projective_points().len() * 2,
            survivors
        );
    }

    #[test]
    fn dot3_examples() {
        let f2 = FiniteField::new(2).unwrap();
        let pt = |coords| ProjectivePoint {
            coords,
            space: Space::Field { q: 2 },
        };
        assert_eq!(f2.dot3(&pt([1, 0, 0]), &pt([0, 1, 0])).unwrap(), 0);
        assert_eq!(f2.dot3(&pt([1, 1, 0]), &pt([1, 1, 0])).unwrap(), 0);
        let z4 = RingZn::new(4).unwrap();
        let e1 = ProjectivePoint {
            coords: [1, 0, 0],
            space: Space::Ring { n: 4 },
        };
        assert_eq!(z4.dot3(&e1, &e1).unwrap(), 1);
        assert!(z4.dot3(&e1, &pt([1, 0, 0])).is_err());
    }

    #[test]
    fn ring_formulas_match_enumeration() {
        for n in 2..=12u32 {
            let pts = RingZn::new(n).unwrap().projective_points();
            assert_eq!(
                pts.len() as u64,
                ring_point_count(u64::from(n)).unwrap(),
                "n={n}"
            );
        }
        assert_eq!(ring_max_degree(6).unwrap(), 12);
        assert_eq!(ring_max_degree(4).unwrap(), 6);
    }

    #[test]
    fn no_two_points_are_unit_multiples() {
        for n in 2..=12u32 {
            let r = RingZn::new(n).unwrap();
            let pts = r.projective_points();
            let set: std::collections::HashSet<_> = pts.iter().map(|p| p.coords).collect();
            for p in &pts {
                for u in r.units() {
                    let s = r.scale(u, &p.coords);
                    assert!(s == p.coords || !set.contains(&s), "n={n} {:?}", p.coords);
                }
            }
        }
        for q in [2u32, 3, 4, 5, 7, 8, 9] {
            let f = FiniteField::new(q).unwrap();
            let pts = f.projective_points();
            let set: std::collections::HashSet<_> = pts.iter().map(|p| p.coords).collect();
            for p in &pts {
                for k in 2..q {
                    assert!(!set.contains(&f.scale(k, &p.coords)), "q={q}");
                }
            }
        }
    }

    #[test]
    fn orthogonality_is_scaling_invariant() {
        for n in [4u32, 6, 9, 12] {
            let r = RingZn::new(n).unwrap();
            let pts = r.projective_points();
            for v in &pts {
                for w in &pts {
                    let zero = r.dot_raw(&v.coords, &w.coords) == 0;
                    for u in r.units() {
                        let scaled = r.scale(u, &v.coords);
                        assert_eq!(r.dot_raw(&scaled, &w.coords) == 0, zero);
                    }
                }
            }
        }
        let f = FiniteField::new(9).unwrap();
        let pts = f.projective_points();
        for v in &pts {
            for w in &pts {
                let zero = f.dot_raw(&v.coords, &w.coords) == 0;
                for k in 1..9 {
                    assert_eq!(f.dot_raw(&f.scale(k, &v.coords), &w.coords) == 0, zero);
                }
            }
        }
    }
}
