/// Every numerical threshold used by the crate, in one place.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// `‖M − M†‖_max` allowed for a density matrix.
    pub hermitian: f64,
    /// `|tr ρ − 1|` allowed for a density matrix.
    pub trace: f64,
    /// Most negative eigenvalue accepted for a density matrix.
    pub positivity: f64,
    /// `|Σ p − 1|` allowed for a probability vector or a stochastic column.
    pub probability_sum: f64,
    /// `‖Σ K†K − 𝕀‖_max` allowed for a stochastic quantum operation.
    pub completeness: f64,
    /// Singular values of `L − I` at or below this span the fixed-point space.
    pub fixed_point: f64,
    /// Entries at or below this magnitude count as zero in structural checks.
    pub zero_entry: f64,
    /// Outcomes with probability at or below this are impossible.
    pub impossible: f64,
    /// Traces below `-negative_probability` are reported as invalid models
    /// instead of being clamped.
    pub negative_probability: f64,
    /// Projector, idempotence, orthogonality and unitarity checks.
    pub operator: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        hermitian: 1e-10,
        trace: 1e-10,
        positivity: 1e-10,
        probability_sum: 1e-12,
        completeness: 1e-10,
        fixed_point: 1e-8,
        zero_entry: 1e-14,
        impossible: 1e-14,
        negative_probability: 1e-8,
        operator: 1e-10,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
