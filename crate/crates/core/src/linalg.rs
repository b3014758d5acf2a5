//! Internal dense linear-algebra helpers.
//!
//! The only matrix exponentials this crate ever needs are of anti-Hermitian
//! generators `G = z L+ - conj(z) L-`, so `iG` is Hermitian and
//! `exp(G) = V exp(-i diag(theta)) V^H` from a single Hermitian
//! eigendecomposition. This route is exactly unitary in floating point (up
//! to the accuracy of the eigenvectors), which downstream convergence checks
//! rely on.

use ndarray::{Array1, Array2, ShapeBuilder};
use ndarray_linalg::{Eigh, UPLO};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Largest entry of `H V - V diag(theta)`: how far the columns of `V` are
/// from being eigenvectors of `H`.
fn eigenpair_residual(h: &Array2<C64>, theta: &Array1<f64>, v: &Array2<C64>) -> f64 {
    let hv = h.dot(v);
    let mut worst = 0.0f64;
    for k in 0..v.ncols() {
        for r in 0..v.nrows() {
            worst = worst.max((hv[[r, k]] - v[[r, k]] * theta[k]).norm());
        }
    }
    worst
}

/// `exp(G)` for anti-Hermitian `G` via eigendecomposition of `iG`.
pub(crate) fn expm_antihermitian(g: &Array2<C64>) -> Result<Array2<C64>> {
    let n = g.nrows();
    let i = C64::new(0.0, 1.0);
    // The LAPACK backend consumes column-major data; hand it an F-order copy
    // so the eigenvectors come back for this matrix rather than for its
    // transpose (for complex Hermitian input the two differ by conjugation).
    let mut h = Array2::<C64>::zeros((n, n).f());
    h.assign(&g.mapv(|v| i * v));
    let (theta, mut v) = h
        .eigh(UPLO::Lower)
        .map_err(|e| Error::Convergence(format!("hermitian eigendecomposition failed: {e}")))?;
    // Guard against a layout/backend change reintroducing the transpose swap:
    // conjugating the basis converts between the two readings.
    let scale = h.iter().fold(1.0f64, |acc, x| acc.max(x.norm()));
    if eigenpair_residual(&h, &theta, &v) > 1e-8 * scale * n as f64 {
        v = v.mapv(|x| x.conj());
        if eigenpair_residual(&h, &theta, &v) > 1e-8 * scale * n as f64 {
            return Err(Error::Convergence(
                "eigendecomposition returned an inconsistent eigenbasis".into(),
            ));
        }
    }
    // exp(G) = exp(-i H) = V exp(-i theta) V^H
    let phases: Array1<C64> = theta.mapv(|t| (-i * t).exp());
    let mut scaled = v.clone();
    for (mut col, ph) in scaled.columns_mut().into_iter().zip(phases.iter()) {
        col.mapv_inplace(|x| x * ph);
    }
    Ok(scaled.dot(&v.t().mapv(|x: C64| x.conj())))
}

/// `exp(z L+ - conj(z) L-)` for a representation's ladder pair.
pub(crate) fn ladder_exponential(
    lp: &Array2<C64>,
    lm: &Array2<C64>,
    z: C64,
) -> Result<Array2<C64>> {
    let gen = lp.mapv(|v| z * v) - lm.mapv(|v| z.conj() * v);
    expm_antihermitian(&gen)
}

/// Kronecker product of a 2x2 with an arbitrary square matrix, ordering the
/// composite index as `q * dim + k` (two-level system first).
pub(crate) fn kron2(a: &Array2<C64>, b: &Array2<C64>) -> Array2<C64> {
    let dim = b.nrows();
    Array2::from_shape_fn((2 * dim, 2 * dim), |(r, c)| {
        a[[r / dim, c / dim]] * b[[r % dim, c % dim]]
    })
}

/// Largest entry magnitude.
#[cfg(test)]
pub(crate) fn max_abs(m: &Array2<C64>) -> f64 {
    m.iter().fold(0.0f64, |acc, v| acc.max(v.norm()))
}

/// Largest entry magnitude over the leading `block x block` corner.
pub(crate) fn max_abs_block(m: &Array2<C64>, block: usize) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..block {
        for j in 0..block {
            worst = worst.max(m[[i, j]].norm());
        }
    }
    worst
}
