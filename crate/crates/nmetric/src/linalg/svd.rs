use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Thin singular value decomposition `M = U * diag(sigma) * V^T`.
#[derive(Debug, Clone)]
pub struct SvdResult {
    /// Nonincreasing, nonnegative singular values (`min(rows, cols)` of them).
    pub singular_values: Vec<f64>,
    /// `rows x k` matrix with orthonormal columns.
    pub left_factors: Matrix,
    /// `cols x k` matrix with orthonormal columns.
    pub right_factors: Matrix,
}

impl SvdResult {
    /// `U * diag(sigma) * V^T`, for reconstruction checks.
    pub fn reconstruct(&self) -> Matrix {
        let k = self.singular_values.len();
        let mut scaled = self.left_factors.clone();
        for j in 0..k {
            for i in 0..scaled.rows() {
                scaled.set(i, j, scaled.get(i, j) * self.singular_values[j]);
            }
        }
        scaled
            .matmul(&self.right_factors.transpose())
            .expect("shape")
    }
}

const MAX_SWEEPS: usize = 60;
const ROTATION_TOL: f64 = 1e-14;

/// One-sided Jacobi SVD for small dense matrices (`min(rows, cols) <= 64`).
///
/// Rotates column pairs of `M` until every pair is orthogonal to relative
/// accuracy `1e-14`; the column norms are then the singular values. For
/// `rows < cols` the transpose is factored and the factors are swapped.
pub fn svd_small(m: &Matrix) -> Result<SvdResult> {
    if m.rows().min(m.cols()) > 64 {
        return Err(Error::usage(format!(
            "svd_small is limited to min(rows, cols) <= 64, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if m.rows() < m.cols() {
        let t = svd_small(&m.transpose())?;
        return Ok(SvdResult {
            singular_values: t.singular_values,
            left_factors: t.right_factors,
            right_factors: t.left_factors,
        });
    }

    let rows = m.rows();
    let k = m.cols();
    let mut a = m.clone();
    let mut v = Matrix::identity(k);

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..k {
            for q in (p + 1)..k {
                let mut alpha = 0.0; // <a_p, a_p>
                let mut beta = 0.0; // <a_q, a_q>
                let mut gamma = 0.0; // <a_p, a_q>
                for i in 0..rows {
                    let ap = a.get(i, p);
                    let aq = a.get(i, q);
                    alpha += ap * ap;
                    beta += aq * aq;
                    gamma += ap * aq;
                }
                if gamma.abs() <= ROTATION_TOL * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for i in 0..rows {
                    let ap = a.get(i, p);
                    let aq = a.get(i, q);
                    a.set(i, p, c * ap - s * aq);
                    a.set(i, q, s * ap + c * aq);
                }
                for i in 0..k {
                    let vp = v.get(i, p);
                    let vq = v.get(i, q);
                    v.set(i, p, c * vp - s * vq);
                    v.set(i, q, s * vp + c * vq);
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NumericalFailure(format!(
            "Jacobi SVD did not converge in {MAX_SWEEPS} sweeps"
        )));
    }

    // Column norms are the singular values; sort them nonincreasing.
    let mut order: Vec<usize> = (0..k).collect();
    let norms: Vec<f64> = (0..k)
        .map(|j| (0..rows).map(|i| a.get(i, j).powi(2)).sum::<f64>().sqrt())
        .collect();
    order.sort_by(|&x, &y| norms[y].partial_cmp(&norms[x]).unwrap());

    let mut sigma = Vec::with_capacity(k);
    let mut u = Matrix::zeros(rows, k);
    let mut right = Matrix::zeros(k, k);
    for (out, &j) in order.iter().enumerate() {
        sigma.push(norms[j]);
        for i in 0..k {
            right.set(i, out, v.get(i, j));
        }
        if norms[j] > 0.0 {
            for i in 0..rows {
                u.set(i, out, a.get(i, j) / norms[j]);
            }
        }
    }
    fill_null_columns(&mut u, &sigma);

    Ok(SvdResult {
        singular_values: sigma,
        left_factors: u,
        right_factors: right,
    })
}

/// Replaces the columns belonging to zero singular values with an
/// orthonormal completion, so `U^T U = I` holds even for rank-deficient
/// input.
fn fill_null_columns(u: &mut Matrix, sigma: &[f64]) {
    let rows = u.rows();
    for (j, &s) in sigma.iter().enumerate() {
        if s > 0.0 {
            continue;
        }
        // Gram-Schmidt a standard basis vector against the existing columns.
        'candidates: for e in 0..rows {
            let mut col = vec![0.0; rows];
            col[e] = 1.0;
            for _ in 0..2 {
                for prev in 0..u.cols() {
                    if prev == j || (sigma[prev] == 0.0 && prev > j) {
                        continue;
                    }
                    let dot: f64 = (0..rows).map(|i| col[i] * u.get(i, prev)).sum();
                    for i in 0..rows {
                        col[i] -= dot * u.get(i, prev);
                    }
                }
            }
            let norm = col.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 1e-6 {
                for i in 0..rows {
                    u.set(i, j, col[i] / norm);
                }
                break 'candidates;
            }
        }
    }
}
