use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense row-major matrix of `f64`.
///
/// Everything in this crate works on tiny matrices (at most a few dozen
/// rows), so the kernel favors portability and bit-stable arithmetic over
/// throughput: plain loops, no blocking, no external BLAS.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::usage("matrix dimensions must be at least 1x1"));
        }
        if data.len() != rows * cols {
            return Err(Error::usage(format!(
                "matrix data length {} does not match {}x{}",
                data.len(),
                rows,
                cols
            )));
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::usage("matrix entries must be finite"));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::usage("matrix needs at least one row"));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::usage("rows have inconsistent lengths"));
        }
        Matrix::new(rows.len(), cols, rows.concat())
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

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn matmul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::usage(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.set(i, j, out.get(i, j) + a * rhs.get(k, j));
                }
            }
        }
        Ok(out)
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    /// Largest absolute entry of `self - rhs`; matrices must have equal shape.
    pub fn max_abs_diff(&self, rhs: &Matrix) -> f64 {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        self.data
            .iter()
            .zip(&rhs.data)
            .fold(0.0, |acc, (a, b)| acc.max((a - b).abs()))
    }

    pub fn trace(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Determinant via LU with partial pivoting.
    ///
    /// Row multipliers are formed before the row updates, so a row that is
    /// bit-identical to the pivot row is annihilated exactly (multiplier
    /// `1.0`, subtraction cancels bitwise). Gram matrices of tuples with a
    /// repeated vector therefore get determinant exactly `0`.
    pub fn det(&self) -> Result<f64> {
        if !self.is_square() {
            return Err(Error::usage(format!(
                "determinant needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut sign = 1.0_f64;
        let mut det = 1.0_f64;
        for k in 0..n {
            // partial pivot: largest |a[i][k]|, i >= k
            let mut p = k;
            let mut best = a.get(k, k).abs();
            for i in (k + 1)..n {
                let v = a.get(i, k).abs();
                if v > best {
                    best = v;
                    p = i;
                }
            }
            if best == 0.0 {
                return Ok(0.0);
            }
            if p != k {
                for j in 0..n {
                    let tmp = a.get(k, j);
                    a.set(k, j, a.get(p, j));
                    a.set(p, j, tmp);
                }
                sign = -sign;
            }
            let pivot = a.get(k, k);
            det *= pivot;
            for i in (k + 1)..n {
                let mult = a.get(i, k) / pivot;
                if mult == 0.0 {
                    continue;
                }
                a.set(i, k, 0.0);
                for j in (k + 1)..n {
                    a.set(i, j, a.get(i, j) - mult * a.get(k, j));
                }
            }
        }
        Ok(sign * det)
    }
}

/// Square root of the determinant of a symmetric positive semidefinite
/// (Gram) matrix, computed by diagonally pivoted Cholesky-style elimination.
///
/// The product of pivots equals `det(G)` (the symmetric permutation has
/// determinant one), so the result is `det(G)^{1/2}` without ever forming
/// a possibly-negative determinant. Pivots in `[-1e-12*scale, 0]` are
/// clamped to zero and short-circuit the result to `0`, where `scale` is
/// the largest diagonal entry; this is the rank-deficiency threshold used
/// across the crate. A pivot below `-1e-12*scale` means the input was not
/// a Gram matrix.
pub fn gram_det_sqrt(g: &Matrix) -> Result<f64> {
    if !g.is_square() {
        return Err(Error::usage("Gram matrix must be square"));
    }
    let n = g.rows();
    let scale = (0..n).map(|i| g.get(i, i)).fold(0.0_f64, f64::max);
    let sym_tol = 1e-12 * scale.max(1.0);
    for i in 0..n {
        for j in (i + 1)..n {
            if (g.get(i, j) - g.get(j, i)).abs() > sym_tol {
                return Err(Error::usage(format!(
                    "matrix is not symmetric: |G[{i}][{j}] - G[{j}][{i}]| = {:e}",
                    (g.get(i, j) - g.get(j, i)).abs()
                )));
            }
        }
    }
    let clamp = 1e-12 * scale;
    let mut a = g.clone();
    let mut prod = 1.0_f64;
    for k in 0..n {
        // pivot on the largest remaining diagonal entry
        let mut p = k;
        let mut best = a.get(k, k);
        for i in (k + 1)..n {
            if a.get(i, i) > best {
                best = a.get(i, i);
                p = i;
            }
        }
        if p != k {
            for j in 0..n {
                let tmp = a.get(k, j);
                a.set(k, j, a.get(p, j));
                a.set(p, j, tmp);
            }
            for i in 0..n {
                let tmp = a.get(i, k);
                a.set(i, k, a.get(i, p));
                a.set(i, p, tmp);
            }
        }
        let pivot = a.get(k, k);
        if pivot < -clamp {
            return Err(Error::InvalidGram { pivot, tol: clamp });
        }
        if pivot <= 0.0 {
            return Ok(0.0);
        }
        prod *= pivot;
        for i in (k + 1)..n {
            let mult = a.get(i, k) / pivot;
            if mult == 0.0 {
                continue;
            }
            for j in (k + 1)..n {
                a.set(i, j, a.get(i, j) - mult * a.get(k, j));
            }
        }
    }
    Ok(prod.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_identity() {
        assert_eq!(Matrix::identity(3).det().unwrap(), 1.0);
    }

    #[test]
    fn det_2x2_by_cofactor() {
        let m = Matrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 2.0]]).unwrap();
        assert_eq!(m.det().unwrap(), 1.0);
    }

    #[test]
    fn det_singular_dependent_rows() {
        let m = Matrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap();
        assert!(m.det().unwrap().abs() <= 1e-12);
    }

    #[test]
    fn det_rejects_non_square() {
        let m = Matrix::zeros(2, 3);
        assert!(matches!(m.det(), Err(Error::Usage(_))));
    }

    #[test]
    fn gram_det_sqrt_identity() {
        assert_eq!(gram_det_sqrt(&Matrix::identity(2)).unwrap(), 1.0);
    }

    #[test]
    fn gram_det_sqrt_hand_example() {
        let g = Matrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 2.0]]).unwrap();
        assert!((gram_det_sqrt(&g).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn gram_det_sqrt_rank_deficient_is_exactly_zero() {
        let g = Matrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        assert_eq!(gram_det_sqrt(&g).unwrap(), 0.0);
    }

    #[test]
    fn gram_det_sqrt_rejects_indefinite() {
        let g = Matrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap();
        assert!(matches!(gram_det_sqrt(&g), Err(Error::InvalidGram { .. })));
    }

    #[test]
    fn gram_det_sqrt_rejects_asymmetric() {
        let g = Matrix::from_rows(&[vec![1.0, 0.5], vec![0.2, 1.0]]).unwrap();
        assert!(matches!(gram_det_sqrt(&g), Err(Error::Usage(_))));
    }

    #[test]
    fn matmul_shapes_checked() {
        let a = Matrix::zeros(2, 3);
        let b = Matrix::zeros(2, 3);
        assert!(a.matmul(&b).is_err());
        assert!(a.matmul(&b.transpose()).is_ok());
    }
}
