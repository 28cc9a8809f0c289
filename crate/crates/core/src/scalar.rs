//! Exact integer scalars shared by the bound computations.
//!
//! Bounds, ratios and ASPL values are computed generically over any
//! unsigned exact integer type: fixed-width types report overflow, while
//! [`num_bigint::BigUint`] never does.

use std::fmt::Display;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, FromPrimitive};

/// Exact non-negative integer arithmetic used by bounds and rational output.
pub trait ExactInt: Clone + Integer + CheckedAdd + CheckedMul + FromPrimitive + Display {}

impl<T> ExactInt for T where T: Clone + Integer + CheckedAdd + CheckedMul + FromPrimitive + Display {}

pub(crate) fn lift<T: ExactInt>(x: u64) -> T {
    T::from_u64(x).expect("every exact integer type holds small u64 values")
}

/// `num / den` with exactly `frac` digits after the point, rounded half up.
pub fn render_fixed<T: ExactInt>(num: &T, den: &T, frac: usize) -> String {
    let ten: T = lift(10);
    let two: T = lift(2);
    let mut scaled = num.clone();
    for _ in 0..frac {
        scaled = scaled * ten.clone();
    }
    let rounded = (two.clone() * scaled + den.clone()) / (two * den.clone());
    let digits = rounded.to_string();
    if frac == 0 {
        return digits;
    }
    let padded = format!("{digits:0>width$}", width = frac + 1);
    let (int, dec) = padded.split_at(padded.len() - frac);
    format!("{int}.{dec}")
}

/// `num / den` with `sig` significant digits, rounded half up.
pub fn render_significant<T: ExactInt>(num: &T, den: &T, sig: usize) -> String {
    if num.is_zero() {
        return render_fixed(num, den, sig.saturating_sub(1));
    }
    let int = num.clone() / den.clone();
    let frac = if int.is_zero() {
        // leading zeros after the point
        let ten: T = lift(10);
        let mut zeros = 0;
        let mut probe = num.clone() * ten.clone();
        while probe < *den {
            probe = probe * ten.clone();
            zeros += 1;
        }
        zeros + sig
    } else {
        sig.saturating_sub(int.to_string().len())
    };
    render_fixed(num, den, frac)
}

/// `num / den` as a percentage with two decimals.
pub fn render_percent<T: ExactInt>(num: &T, den: &T) -> String {
    render_fixed(&(num.clone() * lift::<T>(100)), den, 2)
}
