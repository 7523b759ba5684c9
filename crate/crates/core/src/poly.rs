//! Exact univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer-coefficient polynomial in canonical form: coefficients ascend by
/// power of x, the top coefficient is nonzero, and the zero polynomial is the
/// empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> IntPolynomial {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> IntPolynomial {
        IntPolynomial::constant(BigInt::one())
    }

    /// The monomial x.
    pub fn x() -> IntPolynomial {
        IntPolynomial::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> IntPolynomial {
        IntPolynomial::from_coeffs(vec![c])
    }

    /// Build from ascending-power coefficients, trimming top zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> IntPolynomial {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Convenience constructor from machine integers (ascending powers).
    pub fn from_ints(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending-power coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Multiply by x^k.
    pub fn mul_x_pow(&self, k: usize) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn pow(&self, exp: usize) -> IntPolynomial {
        let mut acc = IntPolynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation in double precision.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Largest power of x dividing the polynomial; `None` for zero.
    pub fn trailing_zero_count(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

impl fmt::Display for IntPolynomial {
    /// Space-separated ascending coefficients, e.g. `-1 0 1` for x^2 - 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for c in &self.coeffs {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// True when every coefficient fits in f64 without overflow.
pub(crate) fn coeffs_fit_f64(p: &IntPolynomial) -> bool {
    p.coeffs().iter().all(|c| c.abs() < BigInt::from(2u8).pow(1023))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let p = IntPolynomial::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p, IntPolynomial::from_ints(&[1, 2]));

        let z = IntPolynomial::from_ints(&[0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn arithmetic() {
        let a = IntPolynomial::from_ints(&[-1, 0, 1]); // x^2 - 1
        let b = IntPolynomial::from_ints(&[0, 1]); // x
        assert_eq!(&a * &b, IntPolynomial::from_ints(&[0, -1, 0, 1]));
        assert_eq!(&a + &b, IntPolynomial::from_ints(&[-1, 1, 1]));
        assert_eq!(&a - &a, IntPolynomial::zero());
        assert_eq!(-&b, IntPolynomial::from_ints(&[0, -1]));
        assert_eq!(a.pow(2), IntPolynomial::from_ints(&[1, 0, -2, 0, 1]));
        assert_eq!(b.mul_x_pow(3), IntPolynomial::from_ints(&[0, 0, 0, 0, 1]));
    }

    #[test]
    fn display_and_eval() {
        let a = IntPolynomial::from_ints(&[-1, 0, 1]);
        assert_eq!(a.to_string(), "-1 0 1");
        assert_eq!(a.eval_f64(3.0), 8.0);
        assert_eq!(a.trailing_zero_count(), Some(0));
        assert_eq!(IntPolynomial::from_ints(&[0, 0, 2]).trailing_zero_count(), Some(2));
        assert_eq!(IntPolynomial::zero().trailing_zero_count(), None);
    }
}
