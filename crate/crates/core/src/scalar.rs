//! Scalar abstraction for all exact arithmetic in the crate.
//!
//! Every geometric decision (cone membership, turning signs, adapted-basis
//! coordinates) is made over an exact ordered field. The [`Scalar`] trait
//! captures what the kernels need; the crate-root aliases pin the default
//! carrier to arbitrary-precision rationals. Floating-point types do not
//! implement `Ord` and are deliberately left out: a result must never change
//! under a global rescaling of the inputs, which rounding cannot guarantee.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, Signed};

/// Exact ordered-field scalar: rationals of some precision.
pub trait Scalar: Num + Signed + Ord + Clone + Debug + Display + 'static {
    fn from_int(n: i64) -> Self;

    /// n/d with d != 0.
    fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_int(n) / Self::from_int(d)
    }
}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(n: i64, d: i64) -> Self {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }
}

impl Scalar for Rational64 {
    fn from_int(n: i64) -> Self {
        Rational64::from_integer(n)
    }

    fn from_ratio(n: i64, d: i64) -> Self {
        Rational64::new(n, d)
    }
}

/// Sign of a scalar as -1, 0, +1.
pub fn sign<S: Scalar>(x: &S) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_construction_reduces() {
        let x: BigRational = Scalar::from_ratio(2, 4);
        let y: BigRational = Scalar::from_ratio(1, 2);
        assert_eq!(x, y);
        assert_eq!(sign(&x), 1);
        assert_eq!(sign(&(-x)), -1);
        assert_eq!(sign(&BigRational::from_int(0)), 0);
    }
}
