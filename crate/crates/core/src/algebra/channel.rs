//! Operator-sum maps `ρ ↦ Σᵢ Kᵢ ρ Kᵢ†` and their superoperator matrices.
//!
//! Superoperators act on column-stacked density matrices:
//! `vec(ρ)[i + j·d] = ρᵢⱼ`, so a single Kraus operator `K` becomes `K̄ ⊗ K`.

use num_complex::Complex64;

use super::decomp::project_onto_fixed_space;
use super::{ComplexMatrix, DensityMatrix, Tolerances};
use crate::error::{Error, Result};

/// `Σᵢ Kᵢ ρ Kᵢ†`, symmetrized as `(M + M†)/2`.
///
/// `rho` is expected to be Hermitian (possibly unnormalized); an empty Kraus
/// list is the zero map.
pub fn apply_kraus(kraus: &[ComplexMatrix], rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    let d = rho.rows();
    for k in kraus {
        if k.cols() != d || k.rows() != d || !rho.is_square() {
            return Err(Error::Dimension(format!(
                "Kraus operator {}x{} on state {}x{}",
                k.rows(),
                k.cols(),
                rho.rows(),
                rho.cols()
            )));
        }
    }
    let zero = Complex64::new(0.0, 0.0);
    let r = rho.entries();
    let mut out = vec![zero; d * d];
    let mut k_rho = vec![zero; d * d];
    for k in kraus {
        let k = k.entries();
        k_rho.fill(zero);
        for i in 0..d {
            for a in 0..d {
                let x = k[i * d + a];
                if x != zero {
                    for b in 0..d {
                        k_rho[i * d + b] += x * r[a * d + b];
                    }
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                let mut acc = zero;
                for b in 0..d {
                    acc += k_rho[i * d + b] * k[j * d + b].conj();
                }
                out[i * d + j] += acc;
            }
        }
    }
    for i in 0..d {
        out[i * d + i].im = 0.0;
        for j in i + 1..d {
            let m = (out[i * d + j] + out[j * d + i].conj()) * 0.5;
            out[i * d + j] = m;
            out[j * d + i] = m.conj();
        }
    }
    Ok(ComplexMatrix::from_raw(d, d, out))
}

/// `Σᵢ Kᵢ† Kᵢ`, the effect of an operation.
pub fn effect<'a>(kraus: impl IntoIterator<Item = &'a ComplexMatrix>, dim: usize) -> Result<ComplexMatrix> {
    let mut acc = ComplexMatrix::zeros(dim, dim);
    for k in kraus {
        if k.shape() != (dim, dim) {
            return Err(Error::Dimension(format!(
                "Kraus operator {}x{} in a {dim}-dimensional model",
                k.rows(),
                k.cols()
            )));
        }
        acc = &acc + &k.adjoint().matmul(k)?;
    }
    Ok(acc)
}

/// The `d²×d²` matrix `L = Σ K̄ ⊗ K` of the map generated by all given Kraus
/// operators, so that `L·vec(ρ) = vec(Σ K ρ K†)`.
pub fn transfer_matrix<'a>(kraus: impl IntoIterator<Item = &'a ComplexMatrix>) -> Result<ComplexMatrix> {
    let mut acc: Option<ComplexMatrix> = None;
    let mut dim = None;
    for k in kraus {
        if !k.is_square() {
            return Err(Error::Dimension(format!("non-square Kraus operator {}x{}", k.rows(), k.cols())));
        }
        match dim {
            None => dim = Some(k.rows()),
            Some(d) if d != k.rows() => {
                return Err(Error::Dimension(format!(
                    "mixed Kraus dimensions {d} and {}",
                    k.rows()
                )))
            }
            _ => {}
        }
        let term = k.conj().kron(k);
        acc = Some(match acc {
            None => term,
            Some(a) => &a + &term,
        });
    }
    acc.ok_or_else(|| Error::Dimension("no Kraus operators".into()))
}

/// A stationary state together with whether it is the only one.
#[derive(Clone, Debug, PartialEq)]
pub struct Stationary<T> {
    pub state: T,
    pub unique: bool,
}

/// Stationary state of a trace-preserving superoperator given as its transfer
/// matrix.
///
/// When the eigenvalue-1 eigenspace has dimension above one, the result is
/// the projection of `𝕀/d` onto it (renormalized) and `unique` is false.
pub fn fixed_point(transfer: &ComplexMatrix) -> Result<Stationary<DensityMatrix>> {
    fixed_point_with(transfer, &Tolerances::DEFAULT)
}

pub fn fixed_point_with(transfer: &ComplexMatrix, tol: &Tolerances) -> Result<Stationary<DensityMatrix>> {
    let n = transfer.rows();
    let d = (n as f64).sqrt().round() as usize;
    if d * d != n || !transfer.is_square() {
        return Err(Error::Dimension(format!(
            "{}x{} is not a superoperator on a square space",
            transfer.rows(),
            transfer.cols()
        )));
    }
    let start = DensityMatrix::maximally_mixed(d).matrix().vectorize();
    let (v, kernel) = project_onto_fixed_space(transfer, &start, tol.fixed_point)?;
    let m = ComplexMatrix::unvectorize(&v, d)?;
    let state = DensityMatrix::normalized(&m)?;
    Ok(Stationary { state, unique: kernel == 1 })
}

/// Applies a transfer matrix to a density matrix through its vectorization.
pub fn apply_transfer(transfer: &ComplexMatrix, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    let v: Vec<Complex64> = transfer.apply_to_vector(&rho.vectorize())?;
    ComplexMatrix::unvectorize(&v, rho.rows())
}
