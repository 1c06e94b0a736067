//! Gaussian integers `a + bi` with arbitrary-precision components.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GaussianInt { re, im }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        Self::new(BigInt::from(re), BigInt::from(im))
    }

    pub fn zero() -> Self {
        Self::new(BigInt::zero(), BigInt::zero())
    }

    pub fn one() -> Self {
        Self::new(BigInt::one(), BigInt::zero())
    }

    pub fn i() -> Self {
        Self::new(BigInt::zero(), BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.re, -&self.im)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.re + &other.re, &self.im + &other.im)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.re - &other.re, &self.im - &other.im)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }

    /// The norm `a^2 + b^2`.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Exact quotient `self / div`; `None` when the quotient is not a
    /// Gaussian integer or the divisor is zero.
    pub fn exact_div(&self, div: &Self) -> Option<Self> {
        if div.is_zero() {
            return None;
        }
        let num = self.mul(&div.conj());
        let den = div.norm();
        let (qr, rr) = num_integer::div_rem(num.re, den.clone());
        let (qi, ri) = num_integer::div_rem(num.im, den);
        if rr.is_zero() && ri.is_zero() {
            Some(Self::new(qr, qi))
        } else {
            None
        }
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}
