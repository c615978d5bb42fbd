//! Sequential MPS readout simulated directly on bond ⊗ physical space and
//! compared with the reduced HQMM.

mod common;

use common::*;
use hqmm::algebra::Complex64;
use hqmm::analysis::enumerate_distribution;
use hqmm::mps::{cluster_mps, mps_to_hqmm};
use hqmm::cluster::{cluster_kraus, MeasurementBasis};
use hqmm::{ComplexMatrix, DensityMatrix, MpsModel};
use proptest::prelude::*;

/// Unitary on bond ⊗ physical (physical index fastest) whose columns
/// `β·d + 0` are the isometry.
fn unitary_extension(m: &MpsModel) -> ComplexMatrix {
    let (big_d, d) = (m.bond_dim(), m.phys_dim());
    let n = big_d * d;
    let w = m.isometry();
    let mut cols: Vec<Vec<Complex64>> = (0..big_d).map(|b| (0..n).map(|a| w[(a, b)]).collect()).collect();
    for e in 0..n {
        cols.push((0..n).map(|a| Complex64::new(if a == e { 1.0 } else { 0.0 }, 0.0)).collect());
    }
    let basis = orthonormalize(cols);
    assert_eq!(basis.len(), n);
    // Place isometry columns at β·d and fill the rest in order.
    let mut order = vec![usize::MAX; n];
    for b in 0..big_d {
        order[b * d] = b;
    }
    let mut next = big_d;
    for slot in order.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    ComplexMatrix::from_fn(n, n, |a, c| basis[order[c]][a])
}

fn dilated_word_probability(m: &MpsModel, u: &ComplexMatrix, word: &[usize]) -> f64 {
    let (big_d, d) = (m.bond_dim(), m.phys_dim());
    let mut rho = m.initial().unwrap().matrix().clone();
    for &s in word {
        let mut zero = ComplexMatrix::zeros(d, d);
        zero[(0, 0)] = Complex64::new(1.0, 0.0);
        let joint = rho.kron(&zero);
        let evolved = &(u * &joint) * &u.adjoint();
        let proj = ComplexMatrix::identity(big_d).kron(&m.projectors()[s]);
        let measured = &(&proj * &evolved) * &proj;
        rho = ComplexMatrix::from_fn(big_d, big_d, |a, b| (0..d).map(|i| measured[(a * d + i, b * d + i)]).sum());
    }
    rho.trace().re
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reduction_matches_dilation(seed in any::<u64>(), big_d in 1usize..=3, d in 1usize..=3, k_raw in 1usize..=3) {
        let mut r = rng(seed);
        let m = random_mps(&mut r, big_d, d, k_raw.min(d));
        let q = mps_to_hqmm(&m).unwrap();
        prop_assert_eq!(q.dim(), big_d);
        let u = unitary_extension(&m);
        let gram = &u.adjoint() * &u;
        prop_assert!(gram.max_abs_diff(&ComplexMatrix::identity(big_d * d)) < 1e-12);
        for w in q.alphabet().words_up_to(4) {
            let a = q.word_probability(&w, None).unwrap();
            let b = dilated_word_probability(&m, &u, &w);
            prop_assert!((a - b).abs() < 1e-10, "{w:?}: {a} vs {b}");
        }
    }

    #[test]
    fn reduced_distributions_are_normalized(seed in any::<u64>(), big_d in 1usize..=3, d in 1usize..=3, k_raw in 1usize..=3) {
        let m = random_mps(&mut rng(seed), big_d, d, k_raw.min(d));
        let q = mps_to_hqmm(&m).unwrap();
        prop_assert!(q.validate().is_empty());
        for n in 0..=5 {
            let dist = enumerate_distribution(&q, n, None).unwrap();
            prop_assert!((dist.total() - 1.0).abs() < 1e-10);
        }
    }
}

#[test]
fn cluster_mps_matches_readout_from_the_stationary_state() {
    for (phi, xi) in [(0.3, 0.0), (1.1, 2.0), (2.5, 4.0)] {
        let basis = MeasurementBasis::new(phi, xi);
        let q = mps_to_hqmm(&cluster_mps(basis)).unwrap();
        let k = cluster_kraus(basis);
        let mixed = DensityMatrix::maximally_mixed(2);
        for w in q.alphabet().words_up_to(5) {
            let a = q.word_probability(&w, Some(&mixed)).unwrap();
            let b = k.word_probability(&w, None).unwrap();
            assert!((a - b).abs() < 1e-10);
        }
    }
}
