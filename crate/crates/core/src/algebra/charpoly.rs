//! Exact characteristic polynomials by evaluation and interpolation.
//!
//! `det(tI - M)` is evaluated at `order + 1` integer points with fraction-free
//! Bareiss elimination, then the unique interpolating polynomial is recovered
//! over the rationals and checked to be integral and monic. All arithmetic is
//! arbitrary precision; there is no floating point anywhere on this path.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gaussian::GaussianInt;
use super::matrix::{GaussianMatrix, IntMatrix, MatrixError};
use super::poly::IntPolynomial;

/// Ring operations needed by Bareiss elimination. Division is only invoked
/// where the algorithm guarantees exactness.
trait BareissEntry: Clone {
    fn b_zero() -> Self;
    fn b_one() -> Self;
    fn b_is_zero(&self) -> bool;
    fn b_mul(&self, other: &Self) -> Self;
    fn b_sub(&self, other: &Self) -> Self;
    fn b_neg(&self) -> Self;
    fn b_exact_div(&self, other: &Self) -> Self;
}

impl BareissEntry for BigInt {
    fn b_zero() -> Self {
        BigInt::zero()
    }
    fn b_one() -> Self {
        BigInt::one()
    }
    fn b_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn b_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn b_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn b_neg(&self) -> Self {
        -self
    }
    fn b_exact_div(&self, other: &Self) -> Self {
        let (q, r) = num_integer::div_rem(self.clone(), other.clone());
        debug_assert!(r.is_zero(), "Bareiss division must be exact");
        q
    }
}

impl BareissEntry for GaussianInt {
    fn b_zero() -> Self {
        GaussianInt::zero()
    }
    fn b_one() -> Self {
        GaussianInt::one()
    }
    fn b_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn b_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn b_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn b_neg(&self) -> Self {
        self.neg()
    }
    fn b_exact_div(&self, other: &Self) -> Self {
        self.exact_div(other)
            .expect("Bareiss division must be exact")
    }
}

/// Fraction-free determinant with row pivoting. Intermediate values stay in
/// the ring; every division is by the previous pivot and is exact.
fn det_bareiss<T: BareissEntry>(mut a: Vec<T>, n: usize) -> T {
    if n == 0 {
        return T::b_one();
    }
    let mut negate = false;
    let mut prev = T::b_one();
    for k in 0..n - 1 {
        if a[k * n + k].b_is_zero() {
            match (k + 1..n).find(|&r| !a[r * n + k].b_is_zero()) {
                Some(r) => {
                    for c in 0..n {
                        a.swap(k * n + c, r * n + c);
                    }
                    negate = !negate;
                }
                None => return T::b_zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i * n + j]
                    .b_mul(&a[k * n + k])
                    .b_sub(&a[i * n + k].b_mul(&a[k * n + j]));
                a[i * n + j] = num.b_exact_div(&prev);
            }
        }
        prev = a[k * n + k].clone();
    }
    let det = a[n * n - 1].clone();
    if negate {
        det.b_neg()
    } else {
        det
    }
}

pub fn det_exact(m: &IntMatrix) -> BigInt {
    let n = m.order();
    let entries: Vec<BigInt> = (0..n)
        .flat_map(|i| (0..n).map(move |j| m.get(i, j).clone()))
        .collect();
    det_bareiss(entries, n)
}

/// Evaluation points `0, 1, -1, 2, -2, ...`.
fn eval_points(count: usize) -> Vec<BigInt> {
    (0..count)
        .map(|j| {
            if j == 0 {
                BigInt::zero()
            } else if j % 2 == 1 {
                BigInt::from((j as i64 + 1) / 2)
            } else {
                BigInt::from(-(j as i64) / 2)
            }
        })
        .collect()
}

/// Newton interpolation through `(xs[i], ys[i])`, expanded to monomial
/// coefficients over the rationals.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Vec<BigRational> {
    let n = xs.len();
    let mut diffs: Vec<BigRational> = ys
        .iter()
        .map(|y| BigRational::from_integer(y.clone()))
        .collect();
    // diffs[i] becomes the divided difference f[x_0..x_i].
    for level in 1..n {
        for i in (level..n).rev() {
            let span = BigRational::from_integer(&xs[i] - &xs[i - level]);
            diffs[i] = (&diffs[i] - &diffs[i - 1]) / span;
        }
    }
    // Horner expansion of the Newton form: p <- p * (x - x_i) + d_i.
    let mut coeffs = vec![BigRational::zero(); n];
    coeffs[0] = diffs[n - 1].clone();
    for i in (0..n - 1).rev() {
        let xi = BigRational::from_integer(xs[i].clone());
        for k in (1..n).rev() {
            coeffs[k] = coeffs[k - 1].clone() - &coeffs[k] * &xi;
        }
        coeffs[0] = &diffs[i] - &coeffs[0] * &xi;
    }
    coeffs
}

fn rationals_to_int_poly(coeffs: Vec<BigRational>) -> IntPolynomial {
    let ints: Vec<BigInt> = coeffs
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "interpolated coefficient is not integral");
            c.to_integer()
        })
        .collect();
    IntPolynomial::new(ints)
}

/// Characteristic polynomial `det(xI - M)` of an integer matrix, monic of
/// degree `order`.
pub fn charpoly_exact(m: &IntMatrix) -> IntPolynomial {
    let n = m.order();
    let points = eval_points(n + 1);
    let values: Vec<BigInt> = points
        .iter()
        .map(|t| {
            let entries: Vec<BigInt> = (0..n)
                .flat_map(|i| {
                    (0..n).map(move |j| {
                        if i == j {
                            t - m.get(i, j)
                        } else {
                            -m.get(i, j)
                        }
                    })
                })
                .collect();
            det_bareiss(entries, n)
        })
        .collect();
    let poly = rationals_to_int_poly(interpolate(&points, &values));
    assert!(
        n == 0 && poly.is_monic() || poly.degree() == Some(n) && poly.is_monic(),
        "characteristic polynomial must be monic of matrix order"
    );
    poly
}

/// Characteristic polynomial of a Hermitian Gaussian-integer matrix. The
/// input is rejected if it is not Hermitian; every computed determinant is
/// checked to have zero imaginary part, so the result is a real integer
/// polynomial.
pub fn charpoly_hermitian_exact(m: &GaussianMatrix) -> Result<IntPolynomial, MatrixError> {
    m.check_hermitian()?;
    let n = m.order();
    let points = eval_points(n + 1);
    let values: Vec<BigInt> = points
        .iter()
        .map(|t| {
            let entries: Vec<GaussianInt> = (0..n)
                .flat_map(|i| {
                    (0..n).map(move |j| {
                        let e = m.get(i, j).neg();
                        if i == j {
                            e.add(&GaussianInt::new(t.clone(), BigInt::zero()))
                        } else {
                            e
                        }
                    })
                })
                .collect();
            let det = det_bareiss(entries, n);
            assert!(
                det.is_real(),
                "determinant of a Hermitian pencil must be real"
            );
            det.re
        })
        .collect();
    let poly = rationals_to_int_poly(interpolate(&points, &values));
    assert!(
        n == 0 && poly.is_monic() || poly.degree() == Some(n) && poly.is_monic(),
        "characteristic polynomial must be monic of matrix order"
    );
    Ok(poly)
}
