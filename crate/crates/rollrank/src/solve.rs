//! Dense direct solvers for the unlabeled-block system.
//!
//! The blocks here are small (a legislature is ~100 rows), so plain O(n^3)
//! factorizations are more than enough. Cholesky is tried first since the
//! unlabeled block is symmetric positive definite whenever every unlabeled
//! vertex couples to the rest of the graph; partially pivoted LU is the
//! fallback when a non-positive pivot shows up.

use ndarray::{Array1, Array2};

/// Solve `a x = b` for symmetric positive definite `a` via an LL^T
/// factorization. Returns `None` on a non-positive pivot.
pub(crate) fn cholesky_solve(a: &Array2<f64>, b: &Array1<f64>) -> Option<Array1<f64>> {
    let n = a.nrows();
    debug_assert_eq!(a.ncols(), n);
    debug_assert_eq!(b.len(), n);

    // Lower-triangular factor, built column by column.
    let mut l = Array2::<f64>::zeros((n, n));
    for j in 0..n {
        let mut diag = a[[j, j]];
        for k in 0..j {
            diag -= l[[j, k]] * l[[j, k]];
        }
        if diag <= 0.0 || !diag.is_finite() {
            return None;
        }
        let root = diag.sqrt();
        l[[j, j]] = root;
        for i in (j + 1)..n {
            let mut s = a[[i, j]];
            for k in 0..j {
                s -= l[[i, k]] * l[[j, k]];
            }
            l[[i, j]] = s / root;
        }
    }

    // Forward substitution: L y = b.
    let mut y = Array1::<f64>::zeros(n);
    for i in 0..n {
        let mut s = b[i];
        for k in 0..i {
            s -= l[[i, k]] * y[k];
        }
        y[i] = s / l[[i, i]];
    }
    // Back substitution: L^T x = y.
    let mut x = Array1::<f64>::zeros(n);
    for i in (0..n).rev() {
        let mut s = y[i];
        for k in (i + 1)..n {
            s -= l[[k, i]] * x[k];
        }
        x[i] = s / l[[i, i]];
    }
    Some(x)
}

/// Solve `a x = b` by LU factorization with partial pivoting. Returns `None`
/// when a pivot is negligible relative to the matrix scale (singular system).
pub(crate) fn lu_solve(a: &Array2<f64>, b: &Array1<f64>) -> Option<Array1<f64>> {
    let n = a.nrows();
    debug_assert_eq!(a.ncols(), n);
    debug_assert_eq!(b.len(), n);

    let mut lu = a.clone();
    let mut rhs = b.clone();
    let scale = lu.iter().fold(0.0f64, |acc, &v| acc.max(v.abs()));
    let tol = scale * n as f64 * f64::EPSILON;

    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r, &s| lu[[r, col]].abs().total_cmp(&lu[[s, col]].abs()))
            .unwrap();
        let pivot = lu[[pivot_row, col]];
        if !pivot.is_finite() || pivot.abs() <= tol {
            return None;
        }
        if pivot_row != col {
            for j in 0..n {
                lu.swap([pivot_row, j], [col, j]);
            }
            rhs.swap(pivot_row, col);
        }
        for row in (col + 1)..n {
            let factor = lu[[row, col]] / pivot;
            lu[[row, col]] = factor;
            for j in (col + 1)..n {
                let sub = factor * lu[[col, j]];
                lu[[row, j]] -= sub;
            }
            rhs[row] -= factor * rhs[col];
        }
    }

    let mut x = Array1::<f64>::zeros(n);
    for i in (0..n).rev() {
        let mut s = rhs[i];
        for k in (i + 1)..n {
            s -= lu[[i, k]] * x[k];
        }
        x[i] = s / lu[[i, i]];
    }
    Some(x)
}
