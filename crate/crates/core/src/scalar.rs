//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// The ground field: arbitrary-precision rationals, always in lowest terms
/// with a positive denominator.
pub type Scalar = BigRational;

/// Commutative ring operations needed by the generic multilinear evaluators.
///
/// Implemented for [`Scalar`] and for [`crate::PolyScalar`].
pub trait Ring:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + std::fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + Send
        + Sync
{
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `num/den` reduced. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `p`, `-p` or `p/q`, rejecting zero or negative denominators and
/// fractions not in lowest terms.
pub fn parse_reduced(text: &str) -> Option<Scalar> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = match den {
        Some(d) => {
            if d.starts_with('+') || d.starts_with('-') {
                return None;
            }
            d.parse().ok()?
        }
        None => BigInt::one(),
    };
    if den <= BigInt::zero() {
        return None;
    }
    let value = Scalar::new(num.clone(), den.clone());
    if value.numer() != &num || value.denom() != &den {
        return None;
    }
    Some(value)
}

/// Canonical text: `p` for integers, `p/q` otherwise.
pub fn format(value: &Scalar) -> String {
    value.to_string()
}

pub fn vec_add<T: Ring>(a: &[T], b: &[T]) -> Vec<T> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn vec_sub<T: Ring>(a: &[T], b: &[T]) -> Vec<T> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn vec_scale<T: Ring>(c: &T, a: &[T]) -> Vec<T> {
    a.iter().map(|x| c.clone() * x.clone()).collect()
}

/// In-place `acc += c * a`.
pub fn vec_axpy<T: Ring>(acc: &mut [T], c: &T, a: &[T]) {
    for (slot, x) in acc.iter_mut().zip(a) {
        if !x.is_zero() {
            *slot = slot.clone() + c.clone() * x.clone();
        }
    }
}

pub fn vec_zero<T: Ring>(n: usize) -> Vec<T> {
    vec![T::zero(); n]
}

pub fn basis<T: Ring>(n: usize, i: usize) -> Vec<T> {
    let mut v = vec_zero(n);
    v[i] = T::one();
    v
}

pub fn is_zero_vec<T: Ring>(a: &[T]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Sum of several vectors of equal length.
pub fn vec_sum<T: Ring>(n: usize, parts: &[Vec<T>]) -> Vec<T> {
    let mut acc = vec_zero(n);
    for p in parts {
        vec_axpy(&mut acc, &T::one(), p);
    }
    acc
}
