//! Dense square matrices over the integers and the Gaussian integers.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::gaussian::GaussianInt;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("entry count {found} does not fill a {order}x{order} matrix")]
    ShapeMismatch { order: usize, found: usize },
    #[error("matrix is not Hermitian at ({row},{col})")]
    NotHermitian { row: usize, col: usize },
}

/// A square integer matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(order: usize) -> Self {
        IntMatrix {
            order,
            entries: vec![BigInt::zero(); order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zero(order);
        for i in 0..order {
            *m.get_mut(i, i) = BigInt::from(1);
        }
        m
    }

    pub fn from_entries(order: usize, entries: Vec<BigInt>) -> Result<Self, MatrixError> {
        if entries.len() != order * order {
            return Err(MatrixError::ShapeMismatch {
                order,
                found: entries.len(),
            });
        }
        Ok(IntMatrix { order, entries })
    }

    pub fn from_rows_i64(rows: &[&[i64]]) -> Result<Self, MatrixError> {
        let order = rows.len();
        let entries: Vec<BigInt> = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| BigInt::from(v)))
            .collect();
        Self::from_entries(order, entries)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.order + col]
    }

    pub fn get_mut(&mut self, row: usize, col: usize) -> &mut BigInt {
        &mut self.entries[row * self.order + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigInt) {
        self.entries[row * self.order + col] = value;
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.order);
        for i in 0..self.order {
            for j in 0..self.order {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "order mismatch");
        IntMatrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "order mismatch");
        IntMatrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "order mismatch");
        let n = self.order;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    *out.get_mut(i, j) += a * b;
                }
            }
        }
        out
    }

    pub fn trace(&self) -> BigInt {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// JSON array of rows, each entry a decimal string.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (0..self.order)
            .map(|i| {
                (0..self.order)
                    .map(|j| serde_json::Value::from(self.get(i, j).to_string()))
                    .collect::<Vec<_>>()
                    .into()
            })
            .collect();
        rows.into()
    }
}

/// A square Gaussian-integer matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianMatrix {
    order: usize,
    entries: Vec<GaussianInt>,
}

impl GaussianMatrix {
    pub fn zero(order: usize) -> Self {
        GaussianMatrix {
            order,
            entries: vec![GaussianInt::zero(); order * order],
        }
    }

    pub fn from_entries(order: usize, entries: Vec<GaussianInt>) -> Result<Self, MatrixError> {
        if entries.len() != order * order {
            return Err(MatrixError::ShapeMismatch {
                order,
                found: entries.len(),
            });
        }
        Ok(GaussianMatrix { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> &GaussianInt {
        &self.entries[row * self.order + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: GaussianInt) {
        self.entries[row * self.order + col] = value;
    }

    /// Checks `M = conj(M)^T`, returning the first offending position.
    pub fn check_hermitian(&self) -> Result<(), MatrixError> {
        for i in 0..self.order {
            for j in 0..=i {
                if *self.get(i, j) != self.get(j, i).conj() {
                    return Err(MatrixError::NotHermitian { row: i, col: j });
                }
            }
        }
        Ok(())
    }

    /// JSON array of rows; each entry is a `[re, im]` pair of decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (0..self.order)
            .map(|i| {
                (0..self.order)
                    .map(|j| {
                        let e = self.get(i, j);
                        serde_json::Value::from(vec![e.re.to_string(), e.im.to_string()])
                    })
                    .collect::<Vec<_>>()
                    .into()
            })
            .collect();
        rows.into()
    }
}
