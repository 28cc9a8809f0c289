//! Moore bounds, Moore ratios, ASPL lower bounds and the known optima for
//! the degree-diameter problem.
//!
//! All quantities are exact and generic over the integer scalar: `u64` or
//! `u128` report [`Error::Overflow`] when a bound does not fit, while
//! [`BigUint`] never overflows.

use std::fmt;

use num_bigint::BigUint;
use num_rational::Ratio;

use crate::algebra::prime_power;
use crate::error::{input, Error, Result};
use crate::scalar::{lift, render_percent, ExactInt};

/// `1 + Δ Σ_{k<D} (Δ-1)^k`, the largest order a graph of maximum degree Δ
/// and diameter D can have.
pub fn moore_bound<T: ExactInt>(delta: u32, diameter: u32) -> Result<T> {
    if delta < 2 || diameter < 1 {
        return input(format!(
            "Moore bound needs degree >= 2 and diameter >= 1, got ({delta}, {diameter})"
        ));
    }
    let overflow = || Error::Overflow("Moore bound");
    let branch: T = lift(u64::from(delta) - 1);
    let mut layer: T = lift(1);
    let mut sum: T = lift(0);
    for k in 0..diameter {
        if k > 0 {
            layer = layer.checked_mul(&branch).ok_or_else(overflow)?;
        }
        sum = sum.checked_add(&layer).ok_or_else(overflow)?;
    }
    let total = sum
        .checked_mul(&lift(u64::from(delta)))
        .ok_or_else(overflow)?;
    total.checked_add(&lift(1)).ok_or_else(overflow)
}

/// `order / moore_bound(delta, diameter)` as an exact fraction.
pub fn moore_ratio<T: ExactInt>(order: u64, delta: u32, diameter: u32) -> Result<Ratio<T>> {
    if order < 1 {
        return input("Moore ratio needs a positive order");
    }
    Ok(Ratio::new(lift(order), moore_bound(delta, diameter)?))
}

/// Percentage rendering with two decimals, e.g. `95.01`.
pub fn percent<T: ExactInt>(ratio: &Ratio<T>) -> String {
    render_percent(ratio.numer(), ratio.denom())
}

/// Smallest ASPL any graph of this order and maximum degree can have:
/// layers around a vertex are filled greedily, at most `Δ(Δ-1)^{k-1}`
/// vertices at distance `k`.
pub fn aspl_lower_bound<T: ExactInt>(order: u64, delta: u64) -> Result<Ratio<T>> {
    if order < 2 || delta < 2 {
        return input("ASPL bound needs order >= 2 and degree >= 2");
    }
    if delta >= order {
        return input(format!(
            "degree {delta} admits the complete graph on {order} vertices (bound 1)"
        ));
    }
    let overflow = || Error::Overflow("ASPL bound");
    let mut remaining = order - 1;
    let mut capacity = delta;
    let mut dist = 1u64;
    let mut total: T = lift(0);
    while remaining > 0 {
        let take = capacity.min(remaining);
        let term: T = lift::<T>(dist)
            .checked_mul(&lift(take))
            .ok_or_else(overflow)?;
        total = total.checked_add(&term).ok_or_else(overflow)?;
        remaining -= take;
        capacity = capacity.saturating_mul(delta - 1);
        dist += 1;
    }
    Ok(Ratio::new(total, lift(order - 1)))
}

/// Largest known order for a (degree, diameter) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnownOptimum {
    Exact(u64),
    /// Existence is an open problem.
    Open,
    Unknown,
}

impl fmt::Display for KnownOptimum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnownOptimum::Exact(n) => write!(f, "{n}"),
            KnownOptimum::Open => f.write_str("open"),
            KnownOptimum::Unknown => f.write_str("unknown"),
        }
    }
}

pub fn known_optimum(delta: u32, diameter: u32) -> KnownOptimum {
    match (delta, diameter) {
        (2, 2) => KnownOptimum::Exact(5),
        (3, 2) => KnownOptimum::Exact(10),
        (6, 2) => KnownOptimum::Exact(32),
        (7, 2) => KnownOptimum::Exact(50),
        (57, 2) => KnownOptimum::Open,
        _ => KnownOptimum::Unknown,
    }
}

/// Upper and lower bounds on the largest order for a (degree, diameter) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport<T = BigUint> {
    pub degree: u32,
    pub diameter: u32,
    pub moore_bound: T,
    pub known_optimum: KnownOptimum,
    /// `Δ² - Δ + 1` from Brown's graph when `Δ - 1` is a prime power (D = 2).
    pub brown: Option<T>,
    /// `Δ² - Δ + 2` when Δ is a power of two (D = 2); value only.
    pub power_of_two: Option<T>,
    /// `(Δ/2)^D` from the undirected de Bruijn graph when Δ is even.
    pub de_bruijn: Option<T>,
}

impl<T: ExactInt> BoundReport<T> {
    pub fn lower_bounds(&self) -> impl Iterator<Item = (&'static str, &T)> {
        [
            ("brown", self.brown.as_ref()),
            ("power_of_two", self.power_of_two.as_ref()),
            ("de_bruijn", self.de_bruijn.as_ref()),
        ]
        .into_iter()
        .filter_map(|(name, v)| v.map(|v| (name, v)))
    }
}

impl<T: ExactInt> fmt::Display for BoundReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "degree: {}", self.degree)?;
        writeln!(f, "diameter: {}", self.diameter)?;
        writeln!(f, "moore_bound: {}", self.moore_bound)?;
        writeln!(f, "known_optimum: {}", self.known_optimum)?;
        for (name, value) in self.lower_bounds() {
            writeln!(f, "lower_bound_{name}: {value}")?;
        }
        Ok(())
    }
}

pub fn construction_lower_bounds<T: ExactInt>(delta: u32, diameter: u32) -> Result<BoundReport<T>> {
    let moore = moore_bound::<T>(delta, diameter)?;
    let d = u64::from(delta);
    let square = d * d - d;
    let brown = (diameter == 2 && prime_power(d - 1).is_some()).then(|| lift(square + 1));
    let power_of_two = (diameter == 2 && d.is_power_of_two()).then(|| lift(square + 2));
    let de_bruijn = if d % 2 == 0 {
        let half: T = lift(d / 2);
        let mut acc: T = lift(1);
        for _ in 0..diameter {
            acc = acc
                .checked_mul(&half)
                .ok_or(Error::Overflow("de Bruijn bound"))?;
        }
        Some(acc)
    } else {
        None
    };
    Ok(BoundReport {
        degree: delta,
        diameter,
        moore_bound: moore,
        known_optimum: known_optimum(delta, diameter),
        brown,
        power_of_two,
        de_bruijn,
    })
}
