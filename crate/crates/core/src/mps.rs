//! Sequential readout of translationally invariant matrix product states.
//!
//! The bond space (dimension `D`) is the hidden system. Each step attaches a
//! fresh physical site, couples it through the isometry
//! `V = Σ V^i_{αβ} |α, i⟩⟨β|` and measures it with projectors `{P_s}`. The
//! resulting HQMM has Kraus operators `K_s^i = Σⱼ ⟨i|P_s|j⟩ V^j`, one per
//! physical basis state `i`. The final boundary vector plays no role.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::algebra::{effect, projective_defects, ComplexMatrix, DensityMatrix, Tolerances};
use crate::alphabet::Alphabet;
use crate::cluster::MeasurementBasis;
use crate::error::{Error, Result};
use crate::quantum::HqmmModel;
use crate::validate::Diagnostics;

#[derive(Clone, Debug, PartialEq)]
pub struct MpsModel {
    bond_dim: usize,
    tensors: Vec<ComplexMatrix>,
    alphabet: Alphabet,
    projectors: Vec<ComplexMatrix>,
    initial: Option<DensityMatrix>,
}

impl MpsModel {
    /// Validated constructor. `tensors[i]` is the `D×D` block `V^i`;
    /// `projectors[s]` acts on the physical space of dimension
    /// `tensors.len()`.
    pub fn new(
        tensors: Vec<ComplexMatrix>,
        alphabet: Alphabet,
        projectors: Vec<ComplexMatrix>,
        initial: Option<DensityMatrix>,
    ) -> Result<Self> {
        let m = Self::from_parts(tensors, alphabet, projectors, initial)?;
        m.validate().into_result()?;
        Ok(m)
    }

    /// Checks tensor shapes only.
    pub fn from_parts(
        tensors: Vec<ComplexMatrix>,
        alphabet: Alphabet,
        projectors: Vec<ComplexMatrix>,
        initial: Option<DensityMatrix>,
    ) -> Result<Self> {
        let Some(first) = tensors.first() else {
            return Err(Error::Dimension("no MPS tensors".into()));
        };
        let bond_dim = first.rows();
        for (i, v) in tensors.iter().enumerate() {
            if v.shape() != (bond_dim, bond_dim) {
                return Err(Error::Dimension(format!(
                    "V^{i} is {}x{}, expected {bond_dim}x{bond_dim}",
                    v.rows(),
                    v.cols()
                )));
            }
        }
        if let Some(rho) = &initial {
            if rho.dim() != bond_dim {
                return Err(Error::Dimension(format!("initial bond state of dimension {}", rho.dim())));
            }
        }
        Ok(Self {
            bond_dim,
            tensors,
            alphabet,
            projectors,
            initial,
        })
    }

    /// Isometry condition `Σᵢ V^i† V^i = 𝕀_D` and a complete orthogonal set
    /// of projectors on the physical space.
    pub fn validate(&self) -> Diagnostics {
        let tol = Tolerances::DEFAULT;
        let mut diag = Diagnostics::new();
        let e = effect(&self.tensors, self.bond_dim).expect("shapes checked at construction");
        let defect = e.max_abs_diff(&ComplexMatrix::identity(self.bond_dim));
        if defect > tol.completeness {
            diag.push(
                "isometry",
                format!("sum of V^i† V^i differs from the identity by {defect:e}"),
            );
        }
        for (loc, msg) in projective_defects(&self.projectors, &self.alphabet, self.phys_dim(), tol.operator) {
            diag.push(loc, msg);
        }
        diag
    }

    pub fn bond_dim(&self) -> usize {
        self.bond_dim
    }

    pub fn phys_dim(&self) -> usize {
        self.tensors.len()
    }

    pub fn tensors(&self) -> &[ComplexMatrix] {
        &self.tensors
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn projectors(&self) -> &[ComplexMatrix] {
        &self.projectors
    }

    pub fn initial(&self) -> Option<&DensityMatrix> {
        self.initial.as_ref()
    }

    /// The isometry as a `dD×D` matrix with rows indexed by `α·d + i`.
    pub fn isometry(&self) -> ComplexMatrix {
        let (big_d, d) = (self.bond_dim, self.phys_dim());
        ComplexMatrix::from_fn(big_d * d, big_d, |row, beta| self.tensors[row % d][(row / d, beta)])
    }
}

/// HQMM of dimension `D` with `K_s^i = Σⱼ ⟨i|P_s|j⟩ V^j`.
pub fn mps_to_hqmm(m: &MpsModel) -> Result<HqmmModel> {
    m.validate().into_result()?;
    let d = m.phys_dim();
    let ops = m
        .projectors
        .iter()
        .map(|p| {
            (0..d)
                .map(|i| {
                    let mut k = ComplexMatrix::zeros(m.bond_dim, m.bond_dim);
                    for (j, v) in m.tensors.iter().enumerate() {
                        let w = p[(i, j)];
                        if w != Complex64::new(0.0, 0.0) {
                            k = &k + &v.scale_complex(w);
                        }
                    }
                    k
                })
                .collect()
        })
        .collect();
    HqmmModel::new(m.alphabet.clone(), m.bond_dim, ops, m.initial.clone())
}

/// `D = 2` MPS of the 1D cluster state read out in `basis`:
/// `V^j = (|0⟩⟨j| + |1⟩⟨j| Z)/√2`, starting from `|+⟩⟨+|` on the bond.
pub fn cluster_mps(basis: MeasurementBasis) -> MpsModel {
    let r = FRAC_1_SQRT_2;
    let v0 = ComplexMatrix::from_real_rows(&[&[r, 0.0], &[r, 0.0]]).expect("2x2");
    let v1 = ComplexMatrix::from_real_rows(&[&[0.0, r], &[0.0, -r]]).expect("2x2");
    let projectors = vec![basis.projector(0), basis.projector(1)];
    MpsModel::new(vec![v0, v1], Alphabet::numbered(2), projectors, Some(DensityMatrix::plus(2)))
        .expect("cluster MPS is an isometry")
}
