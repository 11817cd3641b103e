//! The scalar field abstraction.
//!
//! Every algebraic routine in the crate is written against [`Scalar`], so the
//! same code runs over exact rationals (the default, see [`crate::Rational`])
//! and over machine floats. Decisions that hinge on a value being exactly zero
//! (rank, nondegeneracy, semisimplicity) are only sound over an exact field.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, ToPrimitive};

/// A field element usable as a matrix / structure-constant entry.
pub trait Scalar:
    Num + Neg<Output = Self> + FromPrimitive + ToPrimitive + Clone + Debug + Display + Send + Sync + 'static
{
    /// Whether equality tests on this type are exact. Float scalars report `false`.
    const EXACT: bool;

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer representable in scalar type")
    }

    /// `Some(n)` iff `self` is exactly the non-negative integer `n`.
    fn to_exact_u64(&self) -> Option<u64> {
        let n = self.to_u64()?;
        (Self::from_u64(n)? == *self).then_some(n)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_int(num) / Self::from_int(den)
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Scalar for Ratio<i64> {
    const EXACT: bool = true;
}

impl Scalar for Ratio<i128> {
    const EXACT: bool = true;
}

impl Scalar for f64 {
    const EXACT: bool = false;
}

impl Scalar for f32 {
    const EXACT: bool = false;
}
