//! Spectral norm and numerical radius.

use crate::eigen::sym_eigen;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

/// Smallest grid accepted by [`numerical_radius`].
pub const MIN_RADIUS_GRID: usize = 64;

/// Default angular grid used by the numerical radius search.
pub const DEFAULT_RADIUS_GRID: usize = 2048;

/// Gram matrix over the smaller side. The orientation is chosen the same way
/// for a matrix and its transpose, so `spectral_norm(m) == spectral_norm(m^T)`
/// holds exactly, not just to rounding.
fn canonical_gram(m: &DenseMatrix) -> DenseMatrix {
    if m.rows() < m.cols() {
        return row_gram(m);
    }
    if m.rows() > m.cols() {
        return column_gram(m);
    }
    let t = m.transpose();
    let by_lex = m
        .data()
        .iter()
        .zip(t.data())
        .map(|(a, b)| a.total_cmp(b))
        .find(|ord| ord.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal);
    if by_lex.is_le() {
        column_gram(m)
    } else {
        column_gram(&t)
    }
}

/// `m^T m`, filled symmetrically from column dot products.
fn column_gram(m: &DenseMatrix) -> DenseMatrix {
    let (r, c) = (m.rows(), m.cols());
    let mut g = DenseMatrix::zeros(c, c);
    for i in 0..c {
        for j in i..c {
            let mut dot = 0.0;
            for k in 0..r {
                dot += m.get(k, i) * m.get(k, j);
            }
            g.set(i, j, dot);
            g.set(j, i, dot);
        }
    }
    g
}

/// `m m^T`, filled symmetrically from row dot products.
fn row_gram(m: &DenseMatrix) -> DenseMatrix {
    let (r, c) = (m.rows(), m.cols());
    let mut g = DenseMatrix::zeros(r, r);
    for i in 0..r {
        for j in i..r {
            let mut dot = 0.0;
            for k in 0..c {
                dot += m.get(i, k) * m.get(j, k);
            }
            g.set(i, j, dot);
            g.set(j, i, dot);
        }
    }
    g
}

/// Spectral norm of a rectangular real matrix: the square root of the largest
/// eigenvalue of the smaller Gram matrix.
pub fn spectral_norm(m: &DenseMatrix) -> Result<f64> {
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let gram = canonical_gram(m);
    let top = sym_eigen(&gram)?.max();
    Ok(top.max(0.0).sqrt())
}

/// Norm of the Hermitian matrix `re + i*im` (`re` symmetric, `im`
/// skew-symmetric), via the largest absolute eigenvalue of the real symmetric
/// embedding `[[re, -im], [im, re]]`.
fn hermitian_norm(re: &DenseMatrix, im: &DenseMatrix) -> Result<f64> {
    let d = re.rows();
    let mut embedded = DenseMatrix::zeros(2 * d, 2 * d);
    for i in 0..d {
        for j in 0..d {
            let r = re.get(i, j);
            let w = im.get(i, j);
            embedded.set(i, j, r);
            embedded.set(d + i, d + j, r);
            embedded.set(i, d + j, -w);
            embedded.set(d + i, j, w);
        }
    }
    Ok(sym_eigen(&embedded)?.max_abs())
}

/// Numerical radius `w(m) = sup_theta ||cos(theta) (m+m^T)/2 + i sin(theta)
/// (m-m^T)/2||`, evaluated on a uniform theta grid and refined around the best
/// point by golden-section search to interval width 1e-10.
///
/// For a real matrix the objective is pi-periodic and even, so the search runs
/// over `[0, pi/2]`. The result always lies in `[||m||/2, ||m||]`.
pub fn numerical_radius(m: &DenseMatrix, grid: usize) -> Result<f64> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    if grid < MIN_RADIUS_GRID {
        return Err(Error::IndexOutOfRange {
            value: grid,
            min: MIN_RADIUS_GRID,
            max: usize::MAX,
        });
    }

    let sym = m.symmetric_part();
    let skew = m.skew_part();
    let objective = |theta: f64| -> Result<f64> {
        hermitian_norm(&sym.scale(theta.cos()), &skew.scale(theta.sin()))
    };

    let half_pi = std::f64::consts::FRAC_PI_2;
    let step = half_pi / (grid - 1) as f64;
    let mut best_index = 0;
    let mut best = f64::NEG_INFINITY;
    for k in 0..grid {
        let value = objective(k as f64 * step)?;
        if value > best {
            best = value;
            best_index = k;
        }
    }

    // Golden-section refinement on the bracket one grid cell to each side.
    let mut lo = (best_index as f64 - 1.0).max(0.0) * step;
    let mut hi = ((best_index + 1) as f64 * step).min(half_pi);
    let inv_phi = (5.0f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = objective(x1)?;
    let mut f2 = objective(x2)?;
    while hi - lo > 1e-10 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = objective(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = objective(x1)?;
        }
        best = best.max(f1.max(f2));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_matrix_has_zero_norm() {
        assert_eq!(spectral_norm(&DenseMatrix::zeros(3, 3)).unwrap(), 0.0);
    }

    #[test]
    fn diagonal_norm_is_max_abs() {
        let m = DenseMatrix::diagonal(&[-5.0, 2.0]);
        assert!((spectral_norm(&m).unwrap() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn nilpotent_shift_norm() {
        // Gram matrix of [[0,1],[0,0]] is diag(0,1), so the norm is 1.
        let m = DenseMatrix::from_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert!((spectral_norm(&m).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn transpose_norm_is_bitwise_equal() {
        let m = DenseMatrix::from_rows(&[
            &[0.3, -1.7, 2.2],
            &[0.9, 0.04, -0.6],
            &[1.1, 0.5, -0.2],
        ])
        .unwrap();
        assert_eq!(
            spectral_norm(&m).unwrap(),
            spectral_norm(&m.transpose()).unwrap()
        );
        let rect = DenseMatrix::from_rows(&[&[1.0, 2.0, 3.0], &[-4.0, 0.5, 0.1]]).unwrap();
        assert_eq!(
            spectral_norm(&rect).unwrap(),
            spectral_norm(&rect.transpose()).unwrap()
        );
    }

    #[test]
    fn radius_of_symmetric_psd_equals_norm() {
        let m = DenseMatrix::from_rows(&[&[2.0, 1.0], &[1.0, 2.0]]).unwrap();
        let w = numerical_radius(&m, DEFAULT_RADIUS_GRID).unwrap();
        let norm = spectral_norm(&m).unwrap();
        assert!((w - norm).abs() < 1e-9);
    }

    #[test]
    fn radius_of_nilpotent_shift_is_half() {
        // Independent oracle: sup |v^H M v| over complex unit vectors. For the
        // shift, v^H M v = conj(v0) v1, maximized at |v0| = |v1| = 1/sqrt(2).
        let m = DenseMatrix::from_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        let mut brute = 0.0f64;
        let samples = 4096;
        for i in 0..samples {
            let a = std::f64::consts::PI * (i as f64) / samples as f64;
            for j in 0..64 {
                let phase = 2.0 * std::f64::consts::PI * (j as f64) / 64.0;
                // v = (cos a, sin a * e^{i phase}); |v^H M v| = cos a sin a.
                let value = (a.cos() * a.sin() * phase.cos()).abs().max(
                    (a.cos() * a.sin() * phase.sin()).abs(),
                );
                brute = brute.max(value);
            }
        }
        let w = numerical_radius(&m, DEFAULT_RADIUS_GRID).unwrap();
        assert!((w - 0.5).abs() < 1e-9);
        assert!((w - brute).abs() < 1e-3);
    }

    #[test]
    fn radius_respects_norm_sandwich() {
        let m = DenseMatrix::from_rows(&[&[0.1, 0.9, -0.4], &[0.2, -0.3, 1.4], &[0.0, 0.7, 0.5]])
            .unwrap();
        let w = numerical_radius(&m, DEFAULT_RADIUS_GRID).unwrap();
        let norm = spectral_norm(&m).unwrap();
        assert!(w <= norm + 1e-8);
        assert!(w >= norm / 2.0 - 1e-8);
    }

    #[test]
    fn radius_rejects_small_grid() {
        let m = DenseMatrix::identity(2);
        assert!(numerical_radius(&m, 16).is_err());
    }
}
