//! The number type every geometric routine is generic over.
//!
//! All decisions (orientation, side tests, comparisons) are computed with the
//! scalar's own arithmetic, so instantiating with [`Rational`] gives exact
//! results. [`Float`] is available for quick experiments and rendering, where
//! robustness is not required.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{FromPrimitive, Num, NumRef, Signed, ToPrimitive};

/// Exact arbitrary-precision rational.
pub type Rational = dashu_ratio::RBig;

/// Totally ordered `f64`, usable wherever a [`Scalar`] is expected.
pub type Float = ordered_float::OrderedFloat<f64>;

/// An ordered field element.
pub trait Scalar:
    Clone
    + Ord
    + Hash
    + Debug
    + Display
    + Num
    + NumRef
    + Signed
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Clone
        + Ord
        + Hash
        + Debug
        + Display
        + Num
        + NumRef
        + Signed
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// `num / den` in the scalar type. Panics on a zero denominator.
pub fn ratio<T: Scalar>(num: i64, den: i64) -> T {
    assert!(den != 0, "zero denominator");
    T::from_i64(num).expect("integer conversion") / T::from_i64(den).expect("integer conversion")
}

pub fn int<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("integer conversion")
}

pub fn from_usize<T: Scalar>(v: usize) -> T {
    T::from_usize(v).expect("integer conversion")
}

/// Lossy conversion used only for sampling probabilities and rendering.
pub fn to_f64<T: Scalar>(v: &T) -> f64 {
    ToPrimitive::to_f64(v).unwrap_or(f64::NAN)
}

/// Sign of `v` as an [`Ordering`](std::cmp::Ordering) against zero.
pub fn sign<T: Scalar>(v: &T) -> std::cmp::Ordering {
    v.cmp(&T::zero())
}

pub fn half<T: Scalar>() -> T {
    ratio(1, 2)
}

/// Smallest integer `>= v` for a non-negative scalar.
pub fn ceil_to_u64<T: Scalar>(v: &T) -> u64 {
    assert!(!v.is_negative(), "ceil_to_u64 on a negative value");
    let approx = to_f64(v).ceil().max(0.0) as u64;
    // Correct the float estimate exactly.
    let mut n = approx.saturating_sub(2);
    while from_u64::<T>(n) < *v {
        n += 1;
    }
    n
}

pub fn from_u64<T: Scalar>(v: u64) -> T {
    T::from_u64(v).expect("integer conversion")
}

/// Midpoint of two scalars.
pub fn mid<T: Scalar>(a: &T, b: &T) -> T {
    (a.clone() + b) / int::<T>(2)
}

/// Parses `"p/q"`, `"p"` or a decimal literal into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: dashu_ratio::RBig = n.trim().parse().ok()?;
        let d: dashu_ratio::RBig = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(n / d);
    }
    text.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn ceil_is_exact() {
        assert_eq!(ceil_to_u64(&ratio::<Rational>(10, 3)), 4);
        assert_eq!(ceil_to_u64(&ratio::<Rational>(9, 3)), 3);
        assert_eq!(ceil_to_u64(&Rational::zero()), 0);
        assert_eq!(ceil_to_u64(&Float::from(2.5)), 3);
    }

    #[test]
    fn parses_fractions() {
        assert_eq!(parse_rational("3/4"), Some(ratio(3, 4)));
        assert_eq!(parse_rational(" -2 "), Some(int(-2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
