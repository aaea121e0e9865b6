//! Integer scalar abstraction and small exact-arithmetic helpers.
//!
//! Every quantity in this crate is an exact integer or an exact rational;
//! no code path touches floating point. The numeric kernels are generic
//! over [`Scalar`] so they run unchanged on `i64`, `i128`, or a big-integer
//! type; the crate-root aliases [`Int`] and [`Rat`] fix the defaults.

use std::fmt;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, FromPrimitive, NumAssign, Signed};

/// Signed integer scalar the exact computations are generic over.
///
/// Blanket-implemented for anything with the right arithmetic: the built-in
/// signed integers (whose checked operations catch overflow) and arbitrary
/// precision integers (whose checked operations never fail).
pub trait Scalar:
    Integer
    + Signed
    + NumAssign
    + CheckedAdd
    + CheckedMul
    + FromPrimitive
    + Clone
    + fmt::Debug
    + fmt::Display
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + NumAssign
        + CheckedAdd
        + CheckedMul
        + FromPrimitive
        + Clone
        + fmt::Debug
        + fmt::Display
{
}

/// Default concrete scalar.
pub type Int = i64;

/// Exact rational over [`Int`].
pub type Rat = num_rational::Ratio<Int>;

/// Lift a small literal into any scalar.
pub(crate) fn small<T: Scalar>(n: i64) -> T {
    T::from_i64(n).expect("small literal fits in every scalar")
}

/// 3^c, or `None` if the scalar overflows.
pub fn pow3<T: Scalar>(c: u32) -> Option<T> {
    let three = small::<T>(3);
    let mut acc = T::one();
    for _ in 0..c {
        acc = acc.checked_mul(&three)?;
    }
    Some(acc)
}

/// Serde adapter rendering an exact rational as `{"num": n, "den": d}`.
pub mod rat_serde {
    use super::Rat;
    use serde::ser::SerializeStruct;
    use serde::Serializer;

    /// Serialize a [`Rat`] as a numerator/denominator pair.
    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        let mut out = s.serialize_struct("Rat", 2)?;
        out.serialize_field("num", r.numer())?;
        out.serialize_field("den", r.denom())?;
        out.end()
    }
}

/// Inverse of `x` modulo `m`, in `[0, m)`, when `gcd(x, m) = 1`.
///
/// `m` must be positive; `x` may be any representative of its class.
pub fn mod_inverse<T: Scalar>(x: &T, m: &T) -> Option<T> {
    if *m <= T::zero() {
        return None;
    }
    if m.is_one() {
        return Some(T::zero());
    }
    let g = x.extended_gcd(m);
    if !g.gcd.is_one() {
        return None;
    }
    Some(g.x.mod_floor(m))
}
