//! Reference models used by the unit tests.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::algebra::ComplexMatrix;
use crate::alphabet::Alphabet;
use crate::classical::HmmModel;
use crate::quantum::{vn_generator, HqmmModel};

pub fn even_process() -> HmmModel {
    HmmModel::from_real(&[&[&[0.5, 0.0], &[0.0, 0.0]], &[&[0.0, 1.0], &[0.5, 0.0]]]).unwrap()
}

pub fn even_process_vn() -> HqmmModel {
    let s = FRAC_1_SQRT_2;
    let p0 = ComplexMatrix::real_diagonal(&[1.0, 0.0, 0.0]);
    let p1 = ComplexMatrix::real_diagonal(&[0.0, 1.0, 1.0]);
    let u = ComplexMatrix::from_real_rows(&[&[s, 0.0, -s], &[s, 0.0, s], &[0.0, -1.0, 0.0]]).unwrap();
    vn_generator(&[p0, p1], &u, Alphabet::numbered(2)).unwrap()
}

/// States in the order U, D, R, L.
pub fn four_state() -> HmmModel {
    let (h, q) = (0.5, 0.25);
    let z = [0.0; 4];
    HmmModel::from_real(&[
        &[&[h, 0.0, q, q], &z, &z, &z],
        &[&z, &[0.0, h, q, q], &z, &z],
        &[&z, &z, &[q, q, h, 0.0], &z],
        &[&z, &z, &z, &[q, q, 0.0, h]],
    ])
    .unwrap()
}

pub fn two_state_hqmm() -> HqmmModel {
    let r = FRAC_1_SQRT_2;
    let proj = |v: [f64; 2]| {
        ComplexMatrix::from_real_rows(&[&[v[0] * v[0], v[0] * v[1]], &[v[1] * v[0], v[1] * v[1]]])
            .unwrap()
            .scale(r)
    };
    let ops = [[1.0, 0.0], [0.0, 1.0], [r, r], [r, -r]].map(|v| vec![proj(v)]).to_vec();
    HqmmModel::new(Alphabet::numbered(4), 2, ops, None).unwrap()
}
