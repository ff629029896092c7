//! Exact integer linear algebra: fraction-free determinants and Cramer
//! solves, plus small rational helpers used by the certificate machinery.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumericsError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("{len} entries do not fill a {rows}x{cols} matrix")]
    BadShape { rows: usize, cols: usize, len: usize },
    #[error("right-hand side has length {len}, expected {rows}")]
    BadRhs { rows: usize, len: usize },
    #[error("matrix is singular")]
    Singular,
}

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, NumericsError> {
        if entries.len() != rows * cols {
            return Err(NumericsError::BadShape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(IntegerMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, NumericsError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(NumericsError::BadShape {
                rows: r,
                cols: c,
                len: bad.len(),
            });
        }
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| BigInt::from(x)))
            .collect();
        IntegerMatrix::new(r, c, entries)
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::one();
        }
        IntegerMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    /// Returns a copy with column `j` replaced by `col`.
    pub fn with_column(&self, j: usize, col: &[BigInt]) -> Result<Self, NumericsError> {
        if col.len() != self.rows {
            return Err(NumericsError::BadRhs {
                rows: self.rows,
                len: col.len(),
            });
        }
        let mut m = self.clone();
        for i in 0..self.rows {
            m.entries[i * self.cols + j] = col[i].clone();
        }
        Ok(m)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination. Every
    /// intermediate division is exact, so no rationals appear.
    pub fn determinant(&self) -> Result<BigInt, NumericsError> {
        if self.rows != self.cols {
            return Err(NumericsError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| self.entries[i * n..(i + 1) * n].to_vec())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        Ok(sign * m[n - 1][n - 1].clone())
    }

    /// Solves `A x = b` for square nonsingular `A` via Cramer's rule.
    /// Returns the exact rational solution and `det A`.
    pub fn solve_cramer(&self, b: &[BigInt]) -> Result<(Vec<BigRational>, BigInt), NumericsError> {
        if self.rows != self.cols {
            return Err(NumericsError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if b.len() != self.rows {
            return Err(NumericsError::BadRhs {
                rows: self.rows,
                len: b.len(),
            });
        }
        let det = self.determinant()?;
        if det.is_zero() {
            return Err(NumericsError::Singular);
        }
        let mut solution = Vec::with_capacity(self.cols);
        for j in 0..self.cols {
            let det_j = self.with_column(j, b)?.determinant()?;
            solution.push(BigRational::new(det_j, det.clone()));
        }
        Ok((solution, det))
    }
}

/// Least common multiple of the (positive, canonical) denominators.
/// The empty sequence yields 1.
pub fn lcm_denominators(values: &[BigRational]) -> BigInt {
    values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Smallest integer `>= sqrt(x)`.
pub fn ceil_sqrt(x: &BigInt) -> BigInt {
    assert!(!x.is_negative(), "ceil_sqrt needs a non-negative argument");
    let r = x.sqrt();
    if &(&r * &r) == x {
        r
    } else {
        r + 1
    }
}
