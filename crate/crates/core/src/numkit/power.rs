//! Power iteration for the dominant eigenvalue of a symmetric operator.

use crate::numkit::rng::{Purpose, SeededRng, StreamKey};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerIterationResult {
    /// Rayleigh-quotient estimate of the dominant (largest magnitude) eigenvalue.
    pub eigenvalue: f64,
    /// True if successive Rayleigh quotients got within tolerance, false if
    /// the iteration budget ran out first.
    pub converged: bool,
    pub iterations: usize,
}

/// Estimate the dominant eigenvalue of a symmetric linear operator given as a
/// matrix-vector callback. Non-convergence is reported in the result, never
/// raised. The start vector comes from a fixed internal stream, so results
/// are reproducible.
pub fn power_iteration<F>(
    mut apply: F,
    dim: usize,
    iters: usize,
    tol: f64,
) -> PowerIterationResult
where
    F: FnMut(&[f64]) -> Vec<f64>,
{
    assert!(dim >= 1, "operator dimension must be at least 1");
    let mut rng = SeededRng::new(0x9E37_79B9_7F4A_7C15, StreamKey::tagged(Purpose::Probe));
    let mut v: Vec<f64> = (0..dim).map(|_| rng.next_gaussian()).collect();
    normalize(&mut v);

    let mut eigenvalue = 0.0;
    let mut prev = f64::INFINITY;
    for it in 1..=iters {
        let mut w = apply(&v);
        debug_assert_eq!(w.len(), dim);
        eigenvalue = dot(&v, &w);
        let norm_w = dot(&w, &w).sqrt();
        if norm_w == 0.0 {
            // operator annihilates the iterate; eigenvalue 0 is exact
            return PowerIterationResult {
                eigenvalue: 0.0,
                converged: true,
                iterations: it,
            };
        }
        for x in w.iter_mut() {
            *x /= norm_w;
        }
        v = w;
        if (eigenvalue - prev).abs() < tol {
            return PowerIterationResult {
                eigenvalue,
                converged: true,
                iterations: it,
            };
        }
        prev = eigenvalue;
    }
    PowerIterationResult {
        eigenvalue,
        converged: false,
        iterations: iters,
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b.iter()).map(|(&x, &y)| x * y).sum()
}

fn normalize(v: &mut [f64]) {
    let n = dot(v, v).sqrt();
    if n > 0.0 {
        for x in v.iter_mut() {
            *x /= n;
        }
    } else {
        v[0] = 1.0;
    }
}

/// Convenience wrapper applying a dense symmetric matrix.
pub fn power_iteration_matrix(
    m: &crate::numkit::DenseMatrix,
    iters: usize,
    tol: f64,
) -> PowerIterationResult {
    let n = m.rows();
    power_iteration(
        |v| {
            let mut out = vec![0.0; n];
            for i in 0..n {
                let row = m.row(i);
                out[i] = row.iter().zip(v.iter()).map(|(&a, &b)| a * b).sum();
            }
            out
        },
        n,
        iters,
        tol,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkit::rng::{Purpose, SeededRng, StreamKey};
    use crate::numkit::DenseMatrix;

    #[test]
    fn diagonal_spectrum() {
        let m = DenseMatrix::from_data(2, 2, vec![3.0, 0.0, 0.0, 1.0]).unwrap();
        let r = power_iteration_matrix(&m, 200, 1e-12);
        assert!(r.converged);
        assert!((r.eigenvalue - 3.0).abs() < 1e-9, "{}", r.eigenvalue);
    }

    #[test]
    fn symmetric_two_by_two() {
        let m = DenseMatrix::from_data(2, 2, vec![2.0, 1.0, 1.0, 2.0]).unwrap();
        let r = power_iteration_matrix(&m, 200, 1e-12);
        assert!((r.eigenvalue - 3.0).abs() < 1e-9);
    }

    #[test]
    fn matches_dense_eigensolve_oracle() {
        for seed in 0..10u64 {
            let mut rng = SeededRng::new(seed, StreamKey::tagged(Purpose::Probe));
            let a = rng.gaussian_matrix(16, 16, 1.0);
            let sym = a.add(&a.transpose()).unwrap().scale(0.5);
            // shift to make the dominant eigenvalue the largest positive one
            let shifted = sym.add(&DenseMatrix::identity(16).scale(20.0)).unwrap();
            let r = power_iteration_matrix(&shifted, 5000, 1e-13);

            let na = nalgebra::DMatrix::from_fn(16, 16, |i, j| shifted.get(i, j));
            let oracle = na
                .symmetric_eigen()
                .eigenvalues
                .iter()
                .cloned()
                .fold(f64::NEG_INFINITY, f64::max);
            assert!(
                (r.eigenvalue - oracle).abs() <= 1e-6 * oracle.abs(),
                "seed {seed}: power {} vs oracle {oracle}",
                r.eigenvalue
            );
        }
    }

    #[test]
    fn zero_operator_converges_to_zero() {
        let r = power_iteration(|v| vec![0.0; v.len()], 4, 100, 1e-10);
        assert!(r.converged);
        assert_eq!(r.eigenvalue, 0.0);
    }

    #[test]
    fn non_convergence_reported_not_thrown() {
        // two eigenvalues of equal magnitude and opposite sign never settle
        let m = DenseMatrix::from_data(2, 2, vec![0.0, 1.0, 1.0, 0.0]).unwrap();
        let r = power_iteration_matrix(&m, 3, 1e-15);
        assert!(!r.converged);
        assert_eq!(r.iterations, 3);
    }
}
