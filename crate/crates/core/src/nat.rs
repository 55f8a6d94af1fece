//! Unsigned integer abstraction shared by every algorithm in the crate.
//!
//! All windmill arithmetic is written against [`Natural`], so the same code
//! runs over machine words (`u64`, `u128`) for speed and over [`BigUint`] when
//! the inputs are unbounded. Callers choosing a fixed-width type are
//! responsible for picking one wide enough for `x² + 4yz`.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::{BigUint, ToBigUint};
use num_integer::{Integer, Roots};
use num_traits::{FromPrimitive, ToPrimitive, Unsigned};

/// A nonnegative integer type usable as the scalar of windmill triples.
pub trait Natural:
    Clone
    + Ord
    + Hash
    + Debug
    + Display
    + Integer
    + Unsigned
    + Roots
    + FromPrimitive
    + ToPrimitive
    + ToBigUint
    + Send
    + Sync
    + 'static
{
    /// Lifts a small constant into the type.
    fn from_small(v: u32) -> Self {
        Self::from_u32(v).expect("every Natural holds u32 constants")
    }
}

impl<T> Natural for T where
    T: Clone
        + Ord
        + Hash
        + Debug
        + Display
        + Integer
        + Unsigned
        + Roots
        + FromPrimitive
        + ToPrimitive
        + ToBigUint
        + Send
        + Sync
        + 'static
{
}

/// `⌊√n⌋`.
pub fn isqrt<T: Natural>(n: &T) -> T {
    n.sqrt()
}

/// True iff `n = k²` for some natural `k`.
pub fn is_square<T: Natural>(n: &T) -> bool {
    let r = n.sqrt();
    r.clone() * r == *n
}

/// `n³` as a step budget, saturating at `u64::MAX`.
pub fn cube_cap<T: Natural>(n: &T) -> u64 {
    n.to_u128()
        .and_then(|v| v.checked_mul(v))
        .and_then(|v2| v2.checked_mul(n.to_u128()?))
        .map_or(u64::MAX, |v| v.min(u64::MAX as u128) as u64)
}

/// Converts to `BigUint`; infallible for every unsigned type.
pub fn to_big<T: Natural>(n: &T) -> BigUint {
    n.to_biguint().expect("unsigned values convert to BigUint")
}
