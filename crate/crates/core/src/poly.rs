//! Univariate polynomials in the deformation parameter `s`.

use crate::scalar::Scalar;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Highest degree any computation in this crate produces is 4; products are
/// capped at this bound.
pub const MAX_DEGREE: usize = 6;

/// `c₀ + c₁ s + … + c_d s^d` with trailing zero coefficients trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyScalar {
    coeffs: Vec<Scalar>,
}

impl PolyScalar {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        assert!(
            coeffs.len() <= MAX_DEGREE + 1,
            "polynomial degree {} exceeds cap {MAX_DEGREE}",
            coeffs.len() - 1
        );
        PolyScalar { coeffs }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    /// `c · s^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `a + b s + c s²`.
    pub fn quadratic(a: &Scalar, b: &Scalar, c: &Scalar) -> Self {
        Self::new(vec![a.clone(), b.clone(), c.clone()])
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `s^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn eval(&self, at: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * at + c)
    }
}

impl fmt::Debug for PolyScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PolyScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})s")?,
                _ => write!(f, "({c})s^{k}")?,
            }
        }
        Ok(())
    }
}

impl From<Scalar> for PolyScalar {
    fn from(c: Scalar) -> Self {
        PolyScalar::constant(c)
    }
}

impl Add for PolyScalar {
    type Output = PolyScalar;
    fn add(self, rhs: PolyScalar) -> PolyScalar {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (slot, c) in long.iter_mut().zip(short) {
            *slot += c;
        }
        PolyScalar::new(long)
    }
}

impl Neg for PolyScalar {
    type Output = PolyScalar;
    fn neg(self) -> PolyScalar {
        PolyScalar {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for PolyScalar {
    type Output = PolyScalar;
    fn sub(self, rhs: PolyScalar) -> PolyScalar {
        self + (-rhs)
    }
}

impl Mul for PolyScalar {
    type Output = PolyScalar;
    fn mul(self, rhs: PolyScalar) -> PolyScalar {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return PolyScalar::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PolyScalar::new(out)
    }
}

impl Zero for PolyScalar {
    fn zero() -> Self {
        PolyScalar { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for PolyScalar {
    fn one() -> Self {
        PolyScalar::constant(Scalar::one())
    }
}
