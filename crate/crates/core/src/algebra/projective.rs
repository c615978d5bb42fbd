use super::ComplexMatrix;
use crate::alphabet::Alphabet;

/// Defects of a projective measurement `{P_s}` on a `d`-dimensional space, as
/// `(location, message)` pairs: shape, Hermiticity, idempotence, pairwise
/// orthogonality and completeness, each within `tol`.
pub(crate) fn projective_defects(projectors: &[ComplexMatrix], alphabet: &Alphabet, d: usize, tol: f64) -> Vec<(String, String)> {
    let mut out = Vec::new();
    if projectors.len() != alphabet.len() {
        out.push((
            "projectors".to_string(),
            format!("{} projectors for {} symbols", projectors.len(), alphabet.len()),
        ));
        return out;
    }
    let mut sum = ComplexMatrix::zeros(d, d);
    for (s, p) in projectors.iter().enumerate() {
        let loc = format!("P_{}", alphabet.name(s));
        if p.shape() != (d, d) {
            out.push((loc, format!("is {}x{}, expected {d}x{d}", p.rows(), p.cols())));
            return out;
        }
        let herm = p.hermiticity_defect();
        if herm > tol {
            out.push((loc.clone(), format!("is not Hermitian (defect {herm:e})")));
        }
        let idem = (p * p).max_abs_diff(p);
        if idem > tol {
            out.push((loc.clone(), format!("is not idempotent (defect {idem:e})")));
        }
        for (r, q) in projectors.iter().enumerate().take(s) {
            let overlap = (p * q).max_abs();
            if overlap > tol {
                out.push((
                    loc.clone(),
                    format!("is not orthogonal to P_{} (overlap {overlap:e})", alphabet.name(r)),
                ));
            }
        }
        sum = &sum + p;
    }
    let completeness = sum.max_abs_diff(&ComplexMatrix::identity(d));
    if completeness > tol {
        out.push(("projectors".to_string(), format!("do not sum to the identity (defect {completeness:e})")));
    }
    out
}
