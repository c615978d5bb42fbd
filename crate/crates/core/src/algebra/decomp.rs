//! SVD-backed routines: numerical rank and stationary vectors of linear maps.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::ComplexMatrix;
use crate::error::{Error, Result};

/// Singular values in descending order.
pub fn singular_values(m: &ComplexMatrix) -> Vec<f64> {
    if m.rows() == 0 || m.cols() == 0 {
        return Vec::new();
    }
    let mut s: Vec<f64> = m.to_nalgebra().singular_values().iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Number of singular values strictly above `tol`.
///
/// With `tol = None` the threshold is `max(rows, cols) · σ_max · 2⁻⁵⁰`.
pub fn numerical_rank(m: &ComplexMatrix, tol: Option<f64>) -> usize {
    let s = singular_values(m);
    let Some(&smax) = s.first() else {
        return 0;
    };
    let tol = tol.unwrap_or_else(|| m.rows().max(m.cols()) as f64 * smax * 2f64.powi(-50));
    s.iter().filter(|&&x| x > tol).count()
}

/// Spectral projection of `start` onto the eigenvalue-1 eigenspace of `l`.
///
/// The right and left kernels of `l − I` are read off one SVD (singular values
/// `≤ tol`); the returned vector is `R (W†R)⁻¹ W† start` together with the
/// kernel dimension. Fails when `l` has no eigenvalue 1 within `tol`.
/// A `start` that `l` already fixes to rounding precision is returned as is.
pub(crate) fn project_onto_fixed_space(
    l: &ComplexMatrix,
    start: &[Complex64],
    tol: f64,
) -> Result<(Vec<Complex64>, usize)> {
    let n = l.rows();
    if !l.is_square() || start.len() != n || n == 0 {
        return Err(Error::Dimension(format!(
            "fixed point of a {}x{} map from a vector of length {}",
            l.rows(),
            l.cols(),
            start.len()
        )));
    }
    let a = (l - &ComplexMatrix::identity(n)).to_nalgebra();
    let svd = a.svd(true, true);
    let u = svd.u.expect("requested U");
    let v_t = svd.v_t.expect("requested V^T");

    let kernel: Vec<usize> = (0..n).filter(|&k| svd.singular_values[k] <= tol).collect();
    if kernel.is_empty() {
        let gap = svd.singular_values.iter().copied().fold(f64::INFINITY, f64::min);
        return Err(Error::NoFixedPoint { gap, tolerance: tol });
    }
    let k = kernel.len();
    // Right null vectors are the conjugated rows of V†, left null vectors the columns of U.
    let right = DMatrix::from_fn(n, k, |i, c| v_t[(kernel[c], i)].conj());
    let left = DMatrix::from_fn(n, k, |i, c| u[(i, kernel[c])]);
    let gram = left.adjoint() * &right;
    let gram_inv = gram
        .try_inverse()
        .ok_or_else(|| Error::Construction("degenerate fixed-point space (eigenvalue 1 is not semisimple)".into()))?;
    let x = nalgebra::DVector::from_column_slice(start);
    let lx = l.to_nalgebra() * &x;
    let scale = x.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if (&lx - &x).iter().all(|z| z.norm() <= 4.0 * f64::EPSILON * n as f64 * scale) {
        return Ok((start.to_vec(), k));
    }
    let projected = &right * (gram_inv * (left.adjoint() * x));
    Ok((projected.iter().copied().collect(), k))
}
