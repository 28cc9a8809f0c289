//! GF(p^k) arithmetic on integer element codes.
//!
//! An element is a polynomial `c0 + c1 x + … + c(k-1) x^(k-1)` over Z/pZ,
//! encoded as the integer `Σ ci p^i`. Addition and multiplication go
//! through tables built once per field.

use crate::algebra::{factorize, MAX_FIELD_ORDER};
use crate::error::{input, Result};

/// Finite field of order `q = p^k` with a monic irreducible modulus.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    /// Coefficients low to high, length `k + 1`, leading 1.
    modulus: Vec<u32>,
    add: Vec<u16>,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

impl std::fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl FiniteField {
    /// Field of order `q`, using the smallest monic irreducible modulus when
    /// `q` is not prime. Candidates are ordered by their lower coefficients
    /// read as a base-p number with the constant term least significant.
    pub fn new(q: u32) -> Result<Self> {
        if q < 2 {
            return input(format!("{q} is not a prime power"));
        }
        if q > MAX_FIELD_ORDER {
            return input(format!("field order {q} exceeds {MAX_FIELD_ORDER}"));
        }
        let factors = factorize(u64::from(q))?;
        if factors.len() != 1 {
            return input(format!("{q} is not a prime power"));
        }
        let (p, k) = (factors[0].0 as u32, factors[0].1);
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            (0..q)
                .map(|code| {
                    let mut poly = digits(code, p, k as usize);
                    poly.push(1);
                    poly
                })
                .find(|poly| is_irreducible(poly, p))
                .expect("an irreducible polynomial exists for every degree")
        };
        Ok(Self::with_modulus(p, k, modulus))
    }

    fn with_modulus(p: u32, k: u32, modulus: Vec<u32>) -> Self {
        let q = p.pow(k);
        let size = (q * q) as usize;
        let mut add = vec![0u16; size];
        let mut mul = vec![0u16; size];
        let polys: Vec<Vec<u32>> = (0..q).map(|c| digits(c, p, k as usize)).collect();
        for a in 0..q as usize {
            for b in 0..q as usize {
                let sum: Vec<u32> = polys[a]
                    .iter()
                    .zip(&polys[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * q as usize + b] = encode(&sum, p) as u16;
                let prod = poly_rem(&poly_mul(&polys[a], &polys[b], p), &modulus, p);
                mul[a * q as usize + b] = encode(&prod, p) as u16;
            }
        }
        let mut inv = vec![0u16; q as usize];
        for a in 1..q as usize {
            inv[a] = (1..q as usize)
                .find(|&b| mul[a * q as usize + b] == 1)
                .expect("nonzero elements of a field are invertible") as u16;
        }
        FiniteField {
            p,
            k,
            q,
            modulus,
            add,
            mul,
            inv,
        }
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        u32::from(self.add[(a * self.q + b) as usize])
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        u32::from(self.mul[(a * self.q + b) as usize])
    }

    pub fn neg(&self, a: u32) -> u32 {
        let coeffs: Vec<u32> = self
            .coeffs(a)
            .into_iter()
            .map(|c| (self.p - c) % self.p)
            .collect();
        encode(&coeffs, self.p)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| u32::from(self.inv[a as usize]))
    }

    /// Coefficients `c0..c(k-1)` of the element's polynomial.
    pub fn coeffs(&self, a: u32) -> Vec<u32> {
        digits(a, self.p, self.k as usize)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<u32> {
        if coeffs.len() != self.k as usize || coeffs.iter().any(|&c| c >= self.p) {
            return input("coefficient sequence does not belong to this field");
        }
        Ok(encode(coeffs, self.p))
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

fn digits(mut code: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(code % p);
        code /= p;
    }
    out
}

fn encode(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn trim(mut poly: Vec<u32>) -> Vec<u32> {
    while poly.len() > 1 && poly.last() == Some(&0) {
        poly.pop();
    }
    poly
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Remainder of `a` by a monic `m`, padded to `deg m` coefficients.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let deg = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > deg {
        let lead = r.pop().expect("nonempty");
        if lead != 0 {
            let off = r.len() - deg;
            for (i, &c) in m[..deg].iter().enumerate() {
                r[off + i] = (r[off + i] + (p - lead) * c % p) % p;
            }
        }
    }
    r.resize(deg, 0);
    r
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let mut divisor = digits(code, p, d);
            divisor.push(1);
            if trim(poly_rem(poly, &divisor, p)).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}
