//! The integer backing type shared by every exact computation.
//!
//! Every type in this crate is generic over an [`Int`]: `BigInt` for
//! unbounded work (the aliases at the crate root), or a machine integer such
//! as `i64`/`i128` when inputs are known to stay small. Machine integers
//! panic on overflow in debug builds, exactly like `Ratio<i64>` does.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive};

pub trait Int:
    Integer
    + Signed
    + Clone
    + Hash
    + Debug
    + Display
    + FromPrimitive
    + ToPrimitive
    + FromStr
    + Send
    + Sync
    + 'static
{
}

impl<T> Int for T where
    T: Integer
        + Signed
        + Clone
        + Hash
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + FromStr
        + Send
        + Sync
        + 'static
{
}

pub(crate) fn int<T: Int>(n: i64) -> T {
    T::from_i64(n).expect("small constant fits every Int")
}

pub(crate) fn rat<T: Int>(n: i64, d: i64) -> Ratio<T> {
    Ratio::new(int(n), int(d))
}

pub(crate) fn from_int<T: Int>(n: T) -> Ratio<T> {
    Ratio::from_integer(n)
}

/// `base^exp` by repeated squaring.
pub(crate) fn pow<T: Int>(base: &T, exp: u32) -> T {
    num_traits::pow(base.clone(), exp as usize)
}

/// Mathematical floor as an integer (rounds toward negative infinity).
pub(crate) fn floor<T: Int>(q: &Ratio<T>) -> T {
    q.numer().div_floor(q.denom())
}

/// `q - floor(q)`, always in `[0, 1)`.
pub(crate) fn frac_part<T: Int>(q: &Ratio<T>) -> Ratio<T> {
    q - from_int(floor(q))
}

pub(crate) fn is_unit_interval<T: Int>(q: &Ratio<T>) -> bool {
    !q.is_negative() && *q < Ratio::one()
}
