//! Coefficient scalars.
//!
//! Everything in this crate is generic over [`Scalar`]. The exact
//! verification suites run over [`Rational`](crate::Rational); the
//! floating-point instances are useful for quick numeric probing only,
//! since exact division and equality tests lose their meaning there.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed};

/// A commutative coefficient field of characteristic zero.
pub trait Scalar:
    Num + Signed + FromPrimitive + Clone + PartialEq + Debug + Display + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer constant representable in scalar type")
    }
}

impl<T> Scalar for T where
    T: Num + Signed + FromPrimitive + Clone + PartialEq + Debug + Display + Send + Sync + 'static
{
}

/// Builds a rational `num/den`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
