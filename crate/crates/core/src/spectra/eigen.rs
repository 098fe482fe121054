use super::{Spectrum, SpectrumError};
use crate::matrix::SymMatrix;

/// Default off-diagonal convergence threshold, relative to the Frobenius norm.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// All eigenvalues of `m` by cyclic Jacobi rotations.
pub fn eigenvalues(m: &SymMatrix, tol: f64) -> Result<Spectrum, SpectrumError> {
    jacobi_eigenvalues(&m.to_f64(), m.dim(), tol).map(Spectrum::new)
}

/// Cyclic Jacobi on a dense symmetric row-major `n x n` matrix.
///
/// Sweeps the upper triangle in row-major order, rotating away every entry
/// larger than `tol * ||A||_F`, until a sweep finds nothing to rotate. Gives
/// up after `100 * n^2` rotations. The result is unsorted.
pub fn jacobi_eigenvalues(a: &[f64], n: usize, tol: f64) -> Result<Vec<f64>, SpectrumError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(SpectrumError::InvalidTolerance(tol));
    }
    assert_eq!(a.len(), n * n, "matrix must be n x n");
    let mut a = a.to_vec();
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = tol * norm;
    let cap = 100 * n * n;
    let mut rotations = 0;

    loop {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= threshold {
                    continue;
                }
                if rotations == cap {
                    return Err(SpectrumError::NoConvergence { rotations });
                }
                rotations += 1;
                rotated = true;

                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (kp, kq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * kp - s * kq;
                    a[k * n + q] = s * kp + c * kq;
                }
                for k in 0..n {
                    let (pk, qk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * pk - s * qk;
                    a[q * n + k] = s * pk + c * qk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
        if !rotated {
            break;
        }
    }
    Ok((0..n).map(|i| a[i * n + i]).collect())
}
