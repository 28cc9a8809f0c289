//! The residue ring Z/nZ.

use num_integer::Integer;

use crate::algebra::factorize;
use crate::error::{input, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingZn {
    n: u32,
    factors: Vec<(u64, u32)>,
}

impl RingZn {
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return input(format!("ring modulus must be at least 2, got {n}"));
        }
        Ok(RingZn {
            n,
            factors: factorize(u64::from(n))?,
        })
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    /// Prime factorization `[(p, k)]`, sorted by prime.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((u64::from(a) + u64::from(b)) % u64::from(self.n)) as u32
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((u64::from(a) * u64::from(b)) % u64::from(self.n)) as u32
    }

    pub fn is_unit(&self, a: u32) -> bool {
        a.gcd(&self.n) == 1
    }

    /// Residues coprime to `n`, ascending.
    pub fn units(&self) -> Vec<u32> {
        (1..self.n).filter(|&a| self.is_unit(a)).collect()
    }
}
