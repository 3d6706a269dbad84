//! Velocity-space kinematics of relativistic pointlike particles and the
//! matching plane-wave Dirac solutions.
//!
//! The classical side describes a free particle by a pair of unit
//! vectors: `r` in the i-k kinematic plane, carrying the signed speed
//! and the proper-time rate, and `s`, carrying the direction of motion.
//! Speed changes are rotations of `r`; direction changes are rotations
//! of `s`; the energy is the velocity-linear form E = ẋ·p + τ̇·m.
//!
//! The quantum side maps the two unit vectors onto two independent Pauli
//! algebras (ρ for speed, σ for direction), which assembles the Dirac
//! matrices as α_i = ρ1 ⊗ σ_i and β = ρ3 ⊗ I and factorizes every
//! plane-wave eigenstate of α·p + βm into a helicity eigenstate in
//! σ-space and a kinematic-plane eigenstate in ρ-space. Bloch vectors of
//! the factor states recover the classical pair exactly, negative-energy
//! solutions land on the reversed-proper-time branch, and boosts act as
//! plain rotations in the kinematic plane.
//!
//! Modules:
//! - [`linalg`]: fixed-size complex/real matrices, tensor products, a
//!   Jacobi eigensolver and matrix exponentials.
//! - [`algebra`]: Pauli, Dirac, gamma and spin-1 matrices; Lorentz
//!   generators and both spinor and vector representations.
//! - [`kinematics`]: the classical (r, s) states, the kinematic
//!   constraint, branch construction, rotations, helicity, quadrants.
//! - [`dirac`]: the factorized plane-wave solver, expectation values,
//!   Bloch geometry, the classical correspondence and rotation-as-boost.
//! - [`verify`]: the seeded, reproducible suite of numerical checks.

pub mod algebra;
pub mod dirac;
pub mod error;
pub mod kinematics;
pub mod linalg;
pub mod verify;

pub use algebra::{DiracSet, LorentzParameters, PauliTriple, Spin1Triple};
pub use dirac::{BlochVector, PlaneWaveSolution, Sign};
pub use error::{Error, Result};
pub use kinematics::{Branch, KinematicState, ParticleParameters, QuadrantClass};
pub use linalg::{
    CMatrix2, CMatrix3, CMatrix4, CVector2, CVector3, CVector4, Matrix3, Matrix4, Vector3,
};
pub use verify::{run_all_checks, SplitMix64, VerificationReport};
