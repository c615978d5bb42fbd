#![allow(dead_code)]

use hqmm::algebra::Complex64;
use hqmm::{Alphabet, ComplexMatrix, DensityMatrix, HmmModel, HqmmModel, MpsModel};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Column-stochastic total split over `k` symbols, with roughly a third of
/// the entries zeroed.
pub fn random_hmm(rng: &mut TestRng, d: usize, k: usize) -> HmmModel {
    let mut t = vec![vec![vec![0.0; d]; d]; k];
    for j in 0..d {
        let mut w: Vec<f64> = (0..d * k)
            .map(|_| if rng.random_bool(0.35) { 0.0 } else { rng.random::<f64>() })
            .collect();
        if w.iter().all(|&x| x == 0.0) {
            w[rng.random_range(0..d * k)] = 1.0;
        }
        let total: f64 = w.iter().sum();
        for (idx, x) in w.iter().enumerate() {
            t[idx / d][idx % d][j] = x / total;
        }
    }
    let mats = t
        .iter()
        .map(|m| {
            let rows: Vec<&[f64]> = m.iter().map(|r| r.as_slice()).collect();
            ComplexMatrix::from_real_rows(&rows).unwrap()
        })
        .collect();
    HmmModel::new(Alphabet::numbered(k), mats, None).unwrap()
}

/// Deterministic and reversible: one permutation per symbol, emission
/// probabilities summing to one per state.
pub fn random_reversible_hmm(rng: &mut TestRng, d: usize, k: usize) -> HmmModel {
    let mut weights = vec![vec![0.0; d]; k];
    for j in 0..d {
        let w: Vec<f64> = (0..k).map(|_| rng.random::<f64>() + 0.05).collect();
        let total: f64 = w.iter().sum();
        for s in 0..k {
            weights[s][j] = w[s] / total;
        }
    }
    let mats = (0..k)
        .map(|s| {
            let mut perm: Vec<usize> = (0..d).collect();
            for i in (1..d).rev() {
                perm.swap(i, rng.random_range(0..=i));
            }
            ComplexMatrix::from_fn(d, d, |i, j| Complex64::new(if perm[j] == i { weights[s][j] } else { 0.0 }, 0.0))
        })
        .collect();
    HmmModel::new(Alphabet::numbered(k), mats, None).unwrap()
}

pub fn gaussian(rng: &mut TestRng) -> Complex64 {
    // Box-Muller pair as real and imaginary parts.
    let u1: f64 = 1.0 - rng.random::<f64>();
    let u2: f64 = rng.random();
    let r = (-2.0 * u1.ln()).sqrt();
    let t = std::f64::consts::TAU * u2;
    Complex64::new(r * t.cos(), r * t.sin())
}

fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Gram–Schmidt of `vectors` in order, dropping dependent ones.
pub fn orthonormalize(vectors: Vec<Vec<Complex64>>) -> Vec<Vec<Complex64>> {
    let mut basis: Vec<Vec<Complex64>> = Vec::new();
    for mut v in vectors {
        for _ in 0..2 {
            for b in &basis {
                let c = inner(b, &v);
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= c * y;
                }
            }
        }
        let n = inner(&v, &v).re.sqrt();
        if n > 1e-8 {
            v.iter_mut().for_each(|x| *x /= n);
            basis.push(v);
        }
    }
    basis
}

/// `rows × cols` matrix with orthonormal columns.
pub fn random_isometry(rng: &mut TestRng, rows: usize, cols: usize) -> ComplexMatrix {
    loop {
        let cands = (0..cols).map(|_| (0..rows).map(|_| gaussian(rng)).collect()).collect();
        let b = orthonormalize(cands);
        if b.len() == cols {
            return ComplexMatrix::from_fn(rows, cols, |i, j| b[j][i]);
        }
    }
}

pub fn random_unitary(rng: &mut TestRng, n: usize) -> ComplexMatrix {
    random_isometry(rng, n, n)
}

pub fn random_density(rng: &mut TestRng, d: usize) -> DensityMatrix {
    let g = ComplexMatrix::from_fn(d, d, |_, _| gaussian(rng));
    DensityMatrix::normalized(&(&g * &g.adjoint())).unwrap()
}

/// Complete orthogonal projectors: the columns of a random unitary split into
/// `k` nonempty groups.
pub fn random_projectors(rng: &mut TestRng, n: usize, k: usize) -> Vec<ComplexMatrix> {
    assert!(k >= 1 && k <= n);
    let u = random_unitary(rng, n);
    let mut group: Vec<usize> = (0..n).map(|i| if i < k { i } else { rng.random_range(0..k) }).collect();
    for i in (1..n).rev() {
        group.swap(i, rng.random_range(0..=i));
    }
    (0..k)
        .map(|g| {
            ComplexMatrix::from_fn(n, n, |a, b| {
                (0..n).filter(|&c| group[c] == g).map(|c| u[(a, c)] * u[(b, c)].conj()).sum()
            })
        })
        .collect()
}

/// `k` symbols with `r` Kraus operators each, cut from one random isometry.
pub fn random_hqmm(rng: &mut TestRng, d: usize, k: usize, r: usize) -> HqmmModel {
    let v = random_isometry(rng, k * r * d, d);
    let ops = (0..k)
        .map(|s| {
            (0..r)
                .map(|i| ComplexMatrix::from_fn(d, d, |a, b| v[((s * r + i) * d + a, b)]))
                .collect()
        })
        .collect();
    HqmmModel::new(Alphabet::numbered(k), d, ops, None).unwrap()
}

/// Bond dimension `big_d`, physical dimension `d`, `k ≤ d` outcomes and a
/// random initial bond state.
pub fn random_mps(r: &mut TestRng, big_d: usize, d: usize, k: usize) -> MpsModel {
    let w = random_isometry(r, big_d * d, big_d);
    let tensors = (0..d)
        .map(|i| ComplexMatrix::from_fn(big_d, big_d, |a, b| w[(a * d + i, b)]))
        .collect();
    let p = random_projectors(r, d, k);
    let rho = random_density(r, big_d);
    MpsModel::new(tensors, Alphabet::numbered(k), p, Some(rho)).unwrap()
}
