//! Scalar abstraction shared by weights, embeddings and the linear solver.
//!
//! Every algorithm in this crate is written against [`Scalar`]. The exact
//! guarantees (zero residuals, tie-free sweeps, exact balance) only hold for
//! exact fields such as [`crate::Rational`]; `f64` satisfies the trait and is
//! useful for quick numeric previews, but its comparisons carry rounding error.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Ordered field elements with the arithmetic the partition algorithms need.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialOrd
    + Num
    + Signed
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Converts an `i64`; every implementor can represent small integers.
    fn of(v: i64) -> Self {
        Self::from_i64(v).expect("small integer must be representable")
    }

    fn half() -> Self {
        Self::one() / Self::of(2)
    }

    /// Exact ratio `num / den` (rounded for floating types).
    fn ratio(num: i64, den: i64) -> Self {
        Self::of(num) / Self::of(den)
    }

    /// Returns true when the scalar type compares without rounding.
    fn is_exact() -> bool;

    /// The value as a big integer, when it is one and the type is exact.
    fn to_bigint_exact(&self) -> Option<BigInt> {
        None
    }

    /// A positive factor that turns every value in `values` into an integer,
    /// when the type can find one cheaply; `1` otherwise.
    fn integer_scale(_values: &[Self]) -> Self {
        Self::one()
    }
}

impl Scalar for BigRational {
    fn to_bigint_exact(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.numer().clone())
    }

    fn integer_scale(values: &[Self]) -> Self {
        use num_integer::Integer;
        use num_traits::One;
        let l = values
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        BigRational::from_integer(l)
    }

    fn is_exact() -> bool {
        true
    }
}

impl Scalar for Ratio<i64> {
    fn to_bigint_exact(&self) -> Option<BigInt> {
        self.is_integer().then(|| BigInt::from(*self.numer()))
    }

    fn is_exact() -> bool {
        true
    }
}

impl Scalar for Ratio<i128> {
    fn to_bigint_exact(&self) -> Option<BigInt> {
        self.is_integer().then(|| BigInt::from(*self.numer()))
    }

    fn is_exact() -> bool {
        true
    }
}

impl Scalar for f64 {
    fn is_exact() -> bool {
        false
    }
}

impl Scalar for f32 {
    fn is_exact() -> bool {
        false
    }
}

pub(crate) fn max_of<S: Scalar>(a: S, b: S) -> S {
    if a >= b {
        a
    } else {
        b
    }
}
