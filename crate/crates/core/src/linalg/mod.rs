//! Fixed-size complex and real linear algebra: the numeric substrate for
//! the operator algebra and the plane-wave solver.

mod complex;
mod eigen;
mod expm;
mod real;

pub use complex::{
    c64, expectation_unchecked, kron_state, tensor_product, CMatrix, CMatrix2, CMatrix3,
    CMatrix4, CVector, CVector2, CVector3, CVector4, C_I, C_ONE, C_ZERO, PHASE_EPS,
};
pub use eigen::{frobenius_diff, hermitian_eigensystem, spectral_projector, EigenPair};
pub use expm::{matrix_exponential, matrix_exponential_real4, rodrigues_rotation, su2_exponential};
pub use real::{Matrix3, Matrix4, Vector3};
