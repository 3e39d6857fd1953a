//! Direct solve for small symmetric positive definite systems.

use crate::error::{Error, Result};
use crate::numkit::DenseMatrix;

/// Relative symmetry tolerance and pivot floor from the reproducibility
/// contract: a pivot below 1e-12 times the largest diagonal entry is treated
/// as not SPD rather than silently regularized.
const SYMMETRY_TOL: f64 = 1e-12;
const PIVOT_FLOOR: f64 = 1e-12;
const MAX_DIM: usize = 512;

/// Solve `g * x = rhs` for SPD `g` (r x r, r <= 512) via Cholesky.
///
/// The residual satisfies ||g x - rhs||_F <= 1e-10 ||rhs||_F for systems with
/// moderate conditioning; badly conditioned inputs fail the pivot floor.
pub fn solve_spd(g: &DenseMatrix, rhs: &DenseMatrix) -> Result<DenseMatrix> {
    let n = g.rows();
    if g.cols() != n {
        return Err(Error::DimensionMismatch {
            op: "solve_spd",
            expected: "square matrix".into(),
            found: format!("{:?}", g.shape()),
        });
    }
    if n > MAX_DIM {
        return Err(Error::InvalidParam(format!(
            "solve_spd limited to {MAX_DIM} x {MAX_DIM}, got {n}"
        )));
    }
    if rhs.rows() != n {
        return Err(Error::DimensionMismatch {
            op: "solve_spd",
            expected: format!("rhs with {n} rows"),
            found: format!("{}", rhs.rows()),
        });
    }
    let scale = g.max_abs().max(f64::MIN_POSITIVE);
    for i in 0..n {
        for j in (i + 1)..n {
            let diff = (g.get(i, j) - g.get(j, i)).abs();
            if diff > SYMMETRY_TOL * scale {
                return Err(Error::NotSymmetric { i, j, diff });
            }
        }
    }

    let chol = cholesky(g)?;

    // Solve L y = rhs, then L^T x = y, column by column.
    let k = rhs.cols();
    let mut x = DenseMatrix::zeros(n, k);
    let mut y = vec![0.0; n];
    for col in 0..k {
        for i in 0..n {
            let mut acc = rhs.get(i, col);
            for j in 0..i {
                acc -= chol.get(i, j) * y[j];
            }
            y[i] = acc / chol.get(i, i);
        }
        for i in (0..n).rev() {
            let mut acc = y[i];
            for j in (i + 1)..n {
                acc -= chol.get(j, i) * x.get(j, col);
            }
            x.set(i, col, acc / chol.get(i, i));
        }
    }
    Ok(x)
}

/// Lower-triangular Cholesky factor, rejecting pivots below the floor.
fn cholesky(g: &DenseMatrix) -> Result<DenseMatrix> {
    let n = g.rows();
    let mut max_diag = 0.0f64;
    for i in 0..n {
        max_diag = max_diag.max(g.get(i, i).abs());
    }
    let floor = PIVOT_FLOOR * max_diag.max(f64::MIN_POSITIVE);
    let mut l = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let mut acc = g.get(i, j);
            for k in 0..j {
                acc -= l.get(i, k) * l.get(j, k);
            }
            if i == j {
                if acc <= floor {
                    return Err(Error::NotSpd {
                        pivot: acc,
                        floor,
                        index: i,
                    });
                }
                l.set(i, j, acc.sqrt());
            } else {
                l.set(i, j, acc / l.get(j, j));
            }
        }
    }
    Ok(l)
}
