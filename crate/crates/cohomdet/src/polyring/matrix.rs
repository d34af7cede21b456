//! Dense matrices over `Z` and over the polynomial ring.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::IntPoly;
use super::PolyError;

/// A dense integer matrix with at least one row and one column.
///
/// Used for bases of the underlying free modules, unimodular transition
/// matrices, and the matrices realizing induced maps on dual variables.
/// Entries are machine integers; all uses in this crate stay far below the
/// `i64` range, and products are computed through `i128` as a guard.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<i64>) -> Result<Self, PolyError> {
        if rows == 0 || cols == 0 {
            return Err(PolyError::DimensionMismatch(
                "matrix dimensions must be positive".into(),
            ));
        }
        if entries.len() != rows * cols {
            return Err(PolyError::DimensionMismatch(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from a list of equal-length rows.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self, PolyError> {
        if rows.is_empty() {
            return Err(PolyError::DimensionMismatch(
                "matrix must have at least one row".into(),
            ));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(PolyError::DimensionMismatch(
                "matrix rows have unequal lengths".into(),
            ));
        }
        IntMatrix::new(rows.len(), cols, rows.into_iter().flatten().collect())
    }

    /// The `n x n` identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        IntMatrix::new(n, n, entries).expect("identity dimensions are positive")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at (row, col), zero-based.
    pub fn entry(&self, row: usize, col: usize) -> i64 {
        assert!(row < self.rows && col < self.cols, "index out of range");
        self.entries[row * self.cols + col]
    }

    /// One row as a slice.
    pub fn row(&self, row: usize) -> &[i64] {
        assert!(row < self.rows, "row index out of range");
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut entries = vec![0; self.rows * self.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                entries[j * self.rows + i] = self.entry(i, j);
            }
        }
        IntMatrix::new(self.cols, self.rows, entries).expect("transpose keeps dimensions")
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, PolyError> {
        if self.cols != other.rows {
            return Err(PolyError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: i128 = 0;
                for k in 0..self.cols {
                    acc += i128::from(self.entry(i, k)) * i128::from(other.entry(k, j));
                }
                entries.push(i64::try_from(acc).expect("integer matrix product overflowed i64"));
            }
        }
        IntMatrix::new(self.rows, other.cols, entries)
    }

    /// Exact determinant via fraction-free elimination over `BigInt`.
    pub fn det(&self) -> Result<BigInt, PolyError> {
        if !self.is_square() {
            return Err(PolyError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut work: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(self.entry(i, j))).collect())
            .collect();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n.saturating_sub(1) {
            if work[k][k].is_zero() {
                match (k + 1..n).find(|&r| !work[r][k].is_zero()) {
                    Some(r) => {
                        work.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &work[i][j] * &work[k][k] - &work[i][k] * &work[k][j];
                    work[i][j] = num / &prev;
                }
                work[i][k] = BigInt::zero();
            }
            prev = work[k][k].clone();
        }
        let det = work[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }

    /// True when the determinant is `+1` or `-1`.
    pub fn is_unimodular(&self) -> bool {
        matches!(self.det(), Ok(d) if d.abs().is_one())
    }

    /// Inverse of a unimodular matrix, computed from the adjugate.
    ///
    /// The inverse of a unimodular integer matrix is again an integer matrix,
    /// which is exactly why basis transitions in this crate are restricted to
    /// unimodular matrices.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix, PolyError> {
        let det = self.det()?;
        if !det.abs().is_one() {
            return Err(PolyError::NotUnimodular(det));
        }
        let n = self.rows;
        if n == 1 {
            // det is +-1, and the single entry equals the determinant.
            return IntMatrix::new(1, 1, vec![self.entry(0, 0)]);
        }
        let det_sign: i64 = if det.is_one() { 1 } else { -1 };
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                let minor = self.strike(j, i)?.det()?;
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                let cof = minor * BigInt::from(sign * det_sign);
                entries[i * n + j] =
                    i64::try_from(&cof).expect("adjugate entry overflowed i64");
            }
        }
        IntMatrix::new(n, n, entries)
    }

    /// A copy with row `row` and column `col` removed.
    pub fn strike(&self, row: usize, col: usize) -> Result<IntMatrix, PolyError> {
        if self.rows < 2 || self.cols < 2 {
            return Err(PolyError::DimensionMismatch(
                "cannot strike a row and column from a 1xN or Nx1 matrix".into(),
            ));
        }
        assert!(row < self.rows && col < self.cols, "index out of range");
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in 0..self.rows {
            if i == row {
                continue;
            }
            for j in 0..self.cols {
                if j != col {
                    entries.push(self.entry(i, j));
                }
            }
        }
        IntMatrix::new(self.rows - 1, self.cols - 1, entries)
    }

    /// Rows as owned vectors (the JSON representation).
    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

impl TryFrom<Vec<Vec<i64>>> for IntMatrix {
    type Error = PolyError;

    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self, Self::Error> {
        IntMatrix::from_rows(rows)
    }
}

impl From<IntMatrix> for Vec<Vec<i64>> {
    fn from(m: IntMatrix) -> Self {
        m.to_rows()
    }
}

/// A dense matrix over the polynomial ring `Z[a1..an]`.
///
/// All entries share one ambient variable count. The determinant is computed
/// by fraction-free (Bareiss) elimination: every division performed is exact
/// in the ring, so the result is the exact determinant with no rational
/// arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    num_vars: usize,
    entries: Vec<IntPoly>,
}

impl PolyMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(
        rows: usize,
        cols: usize,
        num_vars: usize,
        entries: Vec<IntPoly>,
    ) -> Result<Self, PolyError> {
        if rows == 0 || cols == 0 {
            return Err(PolyError::DimensionMismatch(
                "matrix dimensions must be positive".into(),
            ));
        }
        if entries.len() != rows * cols {
            return Err(PolyError::DimensionMismatch(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|p| p.num_vars() != num_vars) {
            return Err(PolyError::DimensionMismatch(format!(
                "entry has {} variables, expected {num_vars}",
                bad.num_vars()
            )));
        }
        Ok(PolyMatrix {
            rows,
            cols,
            num_vars,
            entries,
        })
    }

    /// Builds a matrix by evaluating `f(row, col)`.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        num_vars: usize,
        mut f: impl FnMut(usize, usize) -> IntPoly,
    ) -> Result<Self, PolyError> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix::new(rows, cols, num_vars, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn entry(&self, row: usize, col: usize) -> &IntPoly {
        assert!(row < self.rows && col < self.cols, "index out of range");
        &self.entries[row * self.cols + col]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(IntPoly::is_zero)
    }

    /// A copy with one column removed.
    pub fn strike_col(&self, col: usize) -> Result<PolyMatrix, PolyError> {
        if self.cols < 2 {
            return Err(PolyError::DimensionMismatch(
                "cannot strike the only column".into(),
            ));
        }
        assert!(col < self.cols, "column index out of range");
        let entries = self
            .entries
            .chunks(self.cols)
            .flat_map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, p)| p.clone())
            })
            .collect();
        PolyMatrix::new(self.rows, self.cols - 1, self.num_vars, entries)
    }

    /// A copy with one row and one column removed.
    pub fn strike(&self, row: usize, col: usize) -> Result<PolyMatrix, PolyError> {
        if self.rows < 2 || self.cols < 2 {
            return Err(PolyError::DimensionMismatch(
                "cannot strike a row and column from a 1xN or Nx1 matrix".into(),
            ));
        }
        assert!(row < self.rows && col < self.cols, "index out of range");
        let entries = self
            .entries
            .chunks(self.cols)
            .enumerate()
            .filter(|&(i, _)| i != row)
            .flat_map(|(_, r)| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, p)| p.clone())
            })
            .collect();
        PolyMatrix::new(self.rows - 1, self.cols - 1, self.num_vars, entries)
    }

    /// Swaps two rows in place.
    pub fn swap_rows(&mut self, r1: usize, r2: usize) {
        assert!(r1 < self.rows && r2 < self.rows, "row index out of range");
        if r1 == r2 {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(r1 * self.cols + j, r2 * self.cols + j);
        }
    }

    /// Left multiplication by an integer matrix: `P * self`.
    pub fn int_mul_left(&self, p: &IntMatrix) -> Result<PolyMatrix, PolyError> {
        if p.cols() != self.rows {
            return Err(PolyError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                p.rows(),
                p.cols(),
                self.rows,
                self.cols
            )));
        }
        PolyMatrix::from_fn(p.rows(), self.cols, self.num_vars, |i, j| {
            let mut acc = IntPoly::zero(self.num_vars);
            for k in 0..self.rows {
                let c = p.entry(i, k);
                if c != 0 {
                    acc += &self.entry(k, j).scaled(c);
                }
            }
            acc
        })
    }

    /// Right multiplication by an integer matrix: `self * Q`.
    pub fn int_mul_right(&self, q: &IntMatrix) -> Result<PolyMatrix, PolyError> {
        if self.cols != q.rows() {
            return Err(PolyError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.cols,
                q.rows(),
                q.cols()
            )));
        }
        PolyMatrix::from_fn(self.rows, q.cols(), self.num_vars, |i, j| {
            let mut acc = IntPoly::zero(self.num_vars);
            for k in 0..self.cols {
                let c = q.entry(k, j);
                if c != 0 {
                    acc += &self.entry(i, k).scaled(c);
                }
            }
            acc
        })
    }

    /// Applies a linear variable substitution to every entry.
    pub fn substitute_linear(&self, map: &IntMatrix) -> Result<PolyMatrix, PolyError> {
        let entries = self
            .entries
            .iter()
            .map(|p| p.substitute_linear(map))
            .collect::<Result<Vec<_>, _>>()?;
        PolyMatrix::new(self.rows, self.cols, map.cols(), entries)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Every interior division is by the previous pivot and is exact by
    /// Sylvester's identity, so the computation stays inside `Z[a1..an]`.
    /// Row swaps are tracked and flip the sign.
    pub fn det(&self) -> Result<IntPoly, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut work: Vec<Vec<IntPoly>> = self
            .entries
            .chunks(self.cols)
            .map(|row| row.to_vec())
            .collect();
        let mut negate = false;
        let mut prev = IntPoly::one(self.num_vars);
        for k in 0..n.saturating_sub(1) {
            if work[k][k].is_zero() {
                match (k + 1..n).find(|&r| !work[r][k].is_zero()) {
                    Some(r) => {
                        work.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(IntPoly::zero(self.num_vars)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&work[i][j] * &work[k][k]) - &(&work[i][k] * &work[k][j]);
                    work[i][j] = num
                        .exact_div(&prev)
                        .expect("fraction-free elimination divides exactly");
                }
                work[i][k] = IntPoly::zero(self.num_vars);
            }
            prev = work[k][k].clone();
        }
        let det = work[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }
}
