//! Number types the weight schemes can be evaluated in.
//!
//! Every scheme is written once against [`Scalar`]. Exact evaluation uses
//! [`BigRational`](num_rational::BigRational); `f64`/`f32` give a fast
//! approximate view whose equality checks go through [`Scalar::is_negligible`].

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

pub trait Scalar:
    Num + Signed + FromPrimitive + ToPrimitive + PartialOrd + Clone + Debug + Display
{
    /// True for types where `==` is meaningful on computed values.
    const EXACT: bool;

    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar type")
    }

    /// Zero test used by structural checks (linearity, ratios). Exact types
    /// compare against zero; floats use a small absolute tolerance.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    /// `self == other` under the type's notion of equality.
    fn approx_eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_negligible()
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;
}

impl Scalar for Ratio<i64> {
    const EXACT: bool = true;
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn is_negligible(&self) -> bool {
        self.abs() <= 1e-12
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn is_negligible(&self) -> bool {
        self.abs() <= 1e-5
    }
}

/// Shorthand for an exact integer-valued rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for the exact rational `num/den`.
///
/// Panics if `den` is zero.
pub fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
