//! Dense univariate polynomials over the integers.
//!
//! Coefficients are arbitrary-precision and stored in ascending degree order.
//! The zero polynomial is represented by an empty coefficient vector; every
//! other value keeps a nonzero leading coefficient.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// A polynomial with `BigInt` coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Failure modes of exact division in `Z[x]`.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PolyDivError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    /// The quotient does not exist in `Z[x]`; the remainder at the point the
    /// division stopped is carried as a certificate.
    #[error("not divisible; remainder {remainder}")]
    NotDivisible { remainder: IntPolynomial },
}

impl IntPolynomial {
    /// Builds a polynomial from ascending coefficients, trimming leading zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * x^degree`.
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        IntPolynomial { coeffs }
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    /// The linear factor `x - r`.
    pub fn x_minus(r: &BigInt) -> Self {
        Self::new(vec![-r.clone(), BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k) - other.coeff(k));
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut result = Self::one();
        for _ in 0..exp {
            result = result.mul(self);
        }
        result
    }

    /// Substitutes `inner` for the variable: `self(inner(x))`, by Horner.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut result = Self::zero();
        for c in self.coeffs.iter().rev() {
            result = result.mul(inner);
            result = result.add(&Self::constant(c.clone()));
        }
        result
    }

    /// Exact evaluation at an integer point, by Horner.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact division in `Z[x]`: returns `q` with `self = q * den` or the
    /// remainder certificate showing no such `q` exists.
    ///
    /// Long division stops as soon as a leading-coefficient division fails in
    /// the integers, so divisibility over the rationals with a non-integral
    /// quotient is also reported as not divisible.
    pub fn exact_div(&self, den: &Self) -> Result<Self, PolyDivError> {
        let den_deg = den.degree().ok_or(PolyDivError::ZeroDivisor)?;
        let den_lead = den.leading_coeff().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = vec![BigInt::zero(); (self.coeffs.len().max(den_deg + 1)) - den_deg];
        while let Some(rem_deg) = rem.degree() {
            if rem_deg < den_deg {
                break;
            }
            let lead = rem.leading_coeff().expect("nonzero remainder");
            let (q, r) = num_integer::div_rem(lead.clone(), den_lead.clone());
            if !r.is_zero() {
                return Err(PolyDivError::NotDivisible { remainder: rem });
            }
            let shift = rem_deg - den_deg;
            quot[shift] = q.clone();
            let term = Self::monomial(q, shift);
            rem = rem.sub(&term.mul(den));
        }
        if rem.is_zero() {
            Ok(Self::new(quot))
        } else {
            Err(PolyDivError::NotDivisible { remainder: rem })
        }
    }

    /// Divides by `x - r` when `r` is a root; `None` otherwise.
    pub fn div_by_root(&self, r: &BigInt) -> Option<Self> {
        let deg = self.degree()?;
        if deg == 0 {
            return None;
        }
        let mut quot = vec![BigInt::zero(); deg];
        let mut carry = BigInt::zero();
        for k in (0..deg).rev() {
            carry = &self.coeffs[k + 1] + r * &carry;
            quot[k] = carry.clone();
        }
        let rem = &self.coeffs[0] + r * &carry;
        if rem.is_zero() {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    /// Coefficients as decimal strings, ascending degree.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// JSON form `{"coeffs": [...]}` with an optional `factored` display.
    pub fn to_json(&self, factored: Option<String>) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        obj.insert("coeffs".into(), self.coeff_strings().into());
        if let Some(f) = factored {
            obj.insert("factored".into(), f.into());
        }
        serde_json::Value::Object(obj)
    }
}

/// Expands a product of polynomial powers.
pub fn poly_product_power(factors: &[(IntPolynomial, usize)]) -> IntPolynomial {
    let mut result = IntPolynomial::one();
    for (base, exp) in factors {
        result = result.mul(&base.pow(*exp));
    }
    result
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && k > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}
