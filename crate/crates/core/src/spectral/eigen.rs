use nalgebra::{DMatrix, SymmetricEigen};

use super::HermitianMatrix;
use crate::error::{MayerError, Result};

const MAX_SWEEPS: usize = 100;

/// Which eigensolver to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EigenSolver {
    /// Cyclic Jacobi on the real symmetric embedding.
    Jacobi,
    /// Householder tridiagonalization and implicit QR on the Hermitian matrix.
    Dense,
    /// Jacobi up to [`JACOBI_MAX_ORDER`], dense beyond.
    #[default]
    Auto,
}

/// Largest order [`EigenSolver::Auto`] hands to Jacobi.
pub const JACOBI_MAX_ORDER: usize = 128;

/// Ascending eigenvalues of a Hermitian matrix by cyclic Jacobi.
///
/// `H = A + iB` is embedded as the real symmetric `[[A, −B], [B, A]]`, whose spectrum is that
/// of `H` with every eigenvalue doubled. Rotations sweep until the off-diagonal Frobenius
/// norm drops below `1e-12 ‖H‖`; the doubled eigenvalues are then paired and averaged.
pub fn hermitian_eigenvalues(h: &HermitianMatrix) -> Result<Vec<f64>> {
    let m = h.matrix();
    let n = m.nrows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let size = 2 * n;
    let mut a = vec![0.0f64; size * size];
    for i in 0..n {
        for j in 0..n {
            let z = m[(i, j)];
            a[i * size + j] = z.re;
            a[(i + n) * size + j + n] = z.re;
            a[i * size + j + n] = -z.im;
            a[(i + n) * size + j] = z.im;
        }
    }
    let norm = h.frobenius_norm();
    let threshold = 1e-12 * norm;
    let mut sweeps = 0;
    loop {
        let off: f64 = (0..size)
            .flat_map(|i| (0..size).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * size + j] * a[i * size + j])
            .sum::<f64>()
            .sqrt();
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(MayerError::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..size {
            for q in p + 1..size {
                let apq = a[p * size + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * size + q] - a[p * size + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..size {
                    let akp = a[k * size + p];
                    let akq = a[k * size + q];
                    a[k * size + p] = c * akp - s * akq;
                    a[k * size + q] = s * akp + c * akq;
                }
                for k in 0..size {
                    let apk = a[p * size + k];
                    let aqk = a[q * size + k];
                    a[p * size + k] = c * apk - s * aqk;
                    a[q * size + k] = s * apk + c * aqk;
                }
                a[p * size + q] = 0.0;
                a[q * size + p] = 0.0;
            }
        }
    }
    let mut diag: Vec<f64> = (0..size).map(|i| a[i * size + i]).collect();
    diag.sort_by(f64::total_cmp);
    let pair_tol = 1e-6 * norm.max(1.0);
    diag.chunks(2)
        .map(|pair| {
            if (pair[1] - pair[0]).abs() > pair_tol {
                Err(MayerError::NumericalDegeneracy(pair[0], pair[1]))
            } else {
                Ok(0.5 * (pair[0] + pair[1]))
            }
        })
        .collect()
}

/// Ascending eigenvalues by the dense Hermitian solver.
pub fn dense_eigenvalues(h: &HermitianMatrix) -> Vec<f64> {
    if h.order() == 0 {
        return Vec::new();
    }
    let m: DMatrix<_> = h.matrix().clone();
    let mut eig: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    eig.sort_by(f64::total_cmp);
    eig
}

/// Ascending eigenvalues with the chosen solver.
pub fn eigenvalues_with(h: &HermitianMatrix, solver: EigenSolver) -> Result<Vec<f64>> {
    match solver {
        EigenSolver::Jacobi => hermitian_eigenvalues(h),
        EigenSolver::Dense => Ok(dense_eigenvalues(h)),
        EigenSolver::Auto if h.order() <= JACOBI_MAX_ORDER => hermitian_eigenvalues(h),
        EigenSolver::Auto => Ok(dense_eigenvalues(h)),
    }
}
