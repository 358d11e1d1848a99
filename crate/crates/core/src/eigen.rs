//! Symmetric eigendecomposition by cyclic Jacobi rotations.
//!
//! The matrices in this crate are tiny (d up to a few dozen), where Jacobi
//! is robust and accurate to machine precision without any external solver.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

/// Relative asymmetry accepted before a matrix is rejected as non-symmetric.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Off-diagonal Frobenius mass threshold, relative to the input Frobenius norm.
const CONVERGENCE_TOL: f64 = 1e-14;

/// Hard cap on cyclic sweeps before the solver reports failure.
const MAX_SWEEPS: usize = 100;

/// Full spectrum of a symmetric matrix.
#[derive(Debug, Clone)]
pub struct EigenResult {
    /// Eigenvalues in ascending order.
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors, stored as columns matching `eigenvalues`.
    pub eigenvectors: DenseMatrix,
}

impl EigenResult {
    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }

    /// Spectral norm of the decomposed matrix: largest |eigenvalue|.
    pub fn max_abs(&self) -> f64 {
        self.min().abs().max(self.max().abs())
    }
}

fn off_diagonal_mass(a: &DenseMatrix) -> f64 {
    let d = a.rows();
    let mut sum = 0.0;
    for i in 0..d {
        for j in 0..d {
            if i != j {
                let x = a.get(i, j);
                sum += x * x;
            }
        }
    }
    sum.sqrt()
}

/// Eigendecomposition of a symmetric matrix via cyclic Jacobi iteration.
///
/// The input must be square, finite, and symmetric within [`SYMMETRY_TOL`]
/// relative to its largest entry; it is symmetrized exactly before iterating.
/// Iteration stops once the off-diagonal Frobenius mass drops below
/// `1e-14 * ||m||_F`, with a hard cap of 100 sweeps.
pub fn sym_eigen(m: &DenseMatrix) -> Result<EigenResult> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    if !m.is_symmetric_within(SYMMETRY_TOL) {
        return Err(Error::NotSymmetric {
            asymmetry: m.max_asymmetry(),
        });
    }

    let d = m.rows();
    let mut a = m.symmetric_part();
    let mut v = DenseMatrix::identity(d);
    let target = CONVERGENCE_TOL * m.frobenius_norm();

    if d > 1 && off_diagonal_mass(&a) > target {
        let mut converged = false;
        for _ in 0..MAX_SWEEPS {
            for p in 0..d - 1 {
                for q in p + 1..d {
                    rotate(&mut a, &mut v, p, q);
                }
            }
            if off_diagonal_mass(&a) <= target {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
        }
    }

    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| a.get(i, i).total_cmp(&a.get(j, j)));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a.get(i, i)).collect();
    let mut eigenvectors = DenseMatrix::zeros(d, d);
    for (col, &src) in order.iter().enumerate() {
        for row in 0..d {
            eigenvectors.set(row, col, v.get(row, src));
        }
    }
    Ok(EigenResult {
        eigenvalues,
        eigenvectors,
    })
}

/// One Jacobi rotation zeroing `a[p][q]`, accumulated into `v`.
fn rotate(a: &mut DenseMatrix, v: &mut DenseMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    if apq == 0.0 {
        return;
    }
    let d = a.rows();
    let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
    // Smaller-magnitude root of t^2 + 2 t theta - 1 = 0 for stability.
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);

    let app = a.get(p, p);
    let aqq = a.get(q, q);
    a.set(p, p, app - t * apq);
    a.set(q, q, aqq + t * apq);
    a.set(p, q, 0.0);
    a.set(q, p, 0.0);

    for r in 0..d {
        if r != p && r != q {
            let arp = a.get(r, p);
            let arq = a.get(r, q);
            let new_rp = arp - s * (arq + tau * arp);
            let new_rq = arq + s * (arp - tau * arq);
            a.set(r, p, new_rp);
            a.set(p, r, new_rp);
            a.set(r, q, new_rq);
            a.set(q, r, new_rq);
        }
    }
    for r in 0..d {
        let vrp = v.get(r, p);
        let vrq = v.get(r, q);
        v.set(r, p, c * vrp - s * vrq);
        v.set(r, q, s * vrp + c * vrq);
    }
}

/// Smallest eigenvalue of a symmetric matrix.
pub fn min_eigenvalue(m: &DenseMatrix) -> Result<f64> {
    Ok(sym_eigen(m)?.min())
}

/// PSD test: `min eigenvalue >= -tol * max(1, ||m||)`.
pub fn is_psd(m: &DenseMatrix, tol: f64) -> Result<bool> {
    let eigen = sym_eigen(m)?;
    Ok(eigen.min() >= -tol * eigen.max_abs().max(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_unit_spectrum() {
        let result = sym_eigen(&DenseMatrix::identity(3)).unwrap();
        assert_eq!(result.eigenvalues, vec![1.0, 1.0, 1.0]);
    }

    #[test]
    fn diagonal_spectrum_is_sorted() {
        let result = sym_eigen(&DenseMatrix::diagonal(&[3.0, 1.0, 2.0])).unwrap();
        assert_eq!(result.eigenvalues, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn hand_computed_two_by_two() {
        // [[2,1],[1,2]] has characteristic polynomial (2-l)^2 - 1, roots 1 and 3.
        let m = DenseMatrix::from_rows(&[&[2.0, 1.0], &[1.0, 2.0]]).unwrap();
        let result = sym_eigen(&m).unwrap();
        assert!((result.eigenvalues[0] - 1.0).abs() < 1e-14);
        assert!((result.eigenvalues[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_non_symmetric_and_non_square() {
        let m = DenseMatrix::from_rows(&[&[1.0, 2.0], &[0.0, 1.0]]).unwrap();
        assert!(matches!(sym_eigen(&m), Err(Error::NotSymmetric { .. })));
        let r = DenseMatrix::zeros(2, 3);
        assert!(matches!(sym_eigen(&r), Err(Error::NonSquare { .. })));
    }

    #[test]
    fn min_eigenvalue_examples() {
        assert_eq!(min_eigenvalue(&DenseMatrix::identity(4)).unwrap(), 1.0);
        assert_eq!(
            min_eigenvalue(&DenseMatrix::diagonal(&[-1.0, 4.0])).unwrap(),
            -1.0
        );
        let m = DenseMatrix::from_rows(&[&[2.0, 1.0], &[1.0, 2.0]]).unwrap();
        assert!((min_eigenvalue(&m).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn is_psd_examples() {
        assert!(is_psd(&DenseMatrix::identity(3), 1e-10).unwrap());
        assert!(!is_psd(&DenseMatrix::diagonal(&[1.0, -1e-3]), 1e-10).unwrap());
    }

    #[test]
    fn reconstruction_and_orthonormality() {
        // Deterministic pseudo-random symmetric matrix.
        let d = 12;
        let mut data = vec![0.0; d * d];
        let mut state = 41u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        for i in 0..d {
            for j in 0..=i {
                let x = next();
                data[i * d + j] = x;
                data[j * d + i] = x;
            }
        }
        let m = DenseMatrix::new(d, d, data).unwrap();
        let result = sym_eigen(&m).unwrap();

        let q = &result.eigenvectors;
        let qtq = q.transpose().matmul(q);
        assert!(qtq.max_abs_diff(&DenseMatrix::identity(d)) < 1e-12);

        let lambda = DenseMatrix::diagonal(&result.eigenvalues);
        let reconstructed = q.matmul(&lambda).matmul(&q.transpose());
        assert!(reconstructed.max_abs_diff(&m) < 1e-12 * (1.0 + m.max_abs()));

        for (col, &lam) in result.eigenvalues.iter().enumerate() {
            let v: Vec<f64> = (0..d).map(|r| q.get(r, col)).collect();
            let mv = m.matvec(&v);
            let worst = mv
                .iter()
                .zip(&v)
                .fold(0.0f64, |acc, (a, b)| acc.max((a - lam * b).abs()));
            assert!(worst < 1e-10 * (1.0 + result.max_abs()));
        }
    }
}
