use thiserror::Error;

/// Errors produced by constructors, solvers and geometry operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The matrix deviates from `M = M†` by more than the allowed tolerance.
    #[error("matrix is not Hermitian (max |M - M†| = {0:e})")]
    NotHermitian(f64),
    /// The Jacobi eigensolver exhausted its sweep budget.
    #[error("eigensolver did not converge within {0} sweeps")]
    NoConvergence(usize),
    /// A rotation axis must be a unit vector.
    #[error("rotation axis is not a unit vector (norm = {0})")]
    NonUnitAxis(f64),
    /// A direction argument must be a unit vector.
    #[error("direction is not a unit vector (norm = {0})")]
    NonUnitDirection(f64),
    /// A kinematic-plane direction may not have a j-axis component.
    #[error("direction leaves the i-k plane (j component = {0:e})")]
    OffPlane(f64),
    /// A unit-vector field of a state failed its norm check.
    #[error("{name} is not a unit vector (norm = {norm})")]
    NonUnitVector { name: &'static str, norm: f64 },
    /// Transformation parameters must satisfy ω = -ωᵀ.
    #[error("parameter matrix is not antisymmetric (max |ω + ωᵀ| = {0:e})")]
    NotAntisymmetric(f64),
    /// Speeds must satisfy |v| < 1 in natural units.
    #[error("speed out of range: |v| = {0} (must be < 1)")]
    SpeedOutOfRange(f64),
    /// The direction of a zero velocity is undefined.
    #[error("velocity is zero: direction undefined, pick s freely at rest")]
    ZeroVelocity,
    /// The operation needs a nonzero momentum.
    #[error("momentum is zero")]
    ZeroMomentum,
    /// The state sits on a quadrant boundary (rest or light-speed axis).
    #[error("state lies on a quadrant boundary axis")]
    OnAxis,
    /// A state vector must be normalized.
    #[error("state is not normalized (norm = {0})")]
    NotNormalized(f64),
    /// Mass must be strictly positive.
    #[error("mass must be positive (got {0})")]
    NonPositiveMass(f64),
    /// A kinematic-plane rotation drove the state onto the light-speed
    /// boundary, where the momentum diverges.
    #[error("rotation reaches the light-speed boundary (cos theta' = {0:e})")]
    LightSpeedSingularity(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
