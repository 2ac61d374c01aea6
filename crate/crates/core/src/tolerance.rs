/// Numerical thresholds used throughout the crate.
///
/// Every check that turns an exact algebraic statement into a floating point
/// comparison reads its threshold from here.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Max |G - I| for a set of states to count as orthonormal.
    pub orthonormality: f64,
    /// Max |P^2 - P| for a projector.
    pub idempotence: f64,
    /// Max |M - M^H| accepted by the eigensolver.
    pub hermiticity: f64,
    /// Relative residual bound of the eigensolver.
    pub eig_residual: f64,
    /// Two local vectors are the same ray when |<u|v>| >= 1 - ray.
    pub ray: f64,
    /// Minimum partial-transpose eigenvalue still counted as PPT.
    pub ppt: f64,
    /// Eigenvalues above `range_cutoff * lambda_max` belong to the range.
    pub range_cutoff: f64,
    /// Product overlap below `1 - upb_margin` certifies unextendibility.
    pub upb_margin: f64,
    /// Product overlap at or above `1 - extendible` exhibits a product state.
    pub extendible: f64,
    /// Projection residual for a vector to lie inside a subspace.
    pub inside_residual: f64,
    /// Bound on the product of projection weights for a state to lie outside a split.
    pub outside_weight: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        orthonormality: 1e-10,
        idempotence: 1e-10,
        hermiticity: 1e-10,
        eig_residual: 1e-8,
        ray: 1e-8,
        ppt: 1e-10,
        range_cutoff: 1e-9,
        upb_margin: 1e-3,
        extendible: 1e-8,
        inside_residual: 1e-10,
        outside_weight: 1e-20,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
