//! Pauli, Dirac and spin-1 operator sets, Lorentz generators and the
//! spinor/vector representations built from them.
//!
//! Conventions: metric signature (+,-,-,-); gamma matrices carry upper
//! indices; generators are S^{μν} = (i/4)[γ^μ, γ^ν]; transformation
//! parameters are an antisymmetric ω_{μν} with ω_{12} = θ for a rotation
//! about k by θ and ω_{01} = η for a boost along i with rapidity η.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{
    c64, matrix_exponential, matrix_exponential_real4, tensor_product, CMatrix2, CMatrix3,
    CMatrix4, CVector2, CVector3, Matrix4, Vector3, C_I, C_ONE, C_ZERO,
};

/// The three Pauli matrices in the standard representation (σ3 diagonal).
#[derive(Clone, Copy, Debug)]
pub struct PauliTriple {
    pub matrices: [CMatrix2; 3],
}

impl PauliTriple {
    /// σ·n for a real 3-vector n.
    pub fn dot(&self, n: &Vector3) -> CMatrix2 {
        let mut out = self.matrices[0].scaled(c64(n[0], 0.0));
        out = out + self.matrices[1].scaled(c64(n[1], 0.0));
        out + self.matrices[2].scaled(c64(n[2], 0.0))
    }
}

/// Standard Pauli matrices.
pub fn build_pauli() -> PauliTriple {
    let sigma1 = CMatrix2::new([[C_ZERO, C_ONE], [C_ONE, C_ZERO]]);
    let sigma2 = CMatrix2::new([[C_ZERO, c64(0.0, -1.0)], [C_I, C_ZERO]]);
    let sigma3 = CMatrix2::diagonal([C_ONE, c64(-1.0, 0.0)]);
    PauliTriple {
        matrices: [sigma1, sigma2, sigma3],
    }
}

/// Dirac matrices in the standard representation: α_i = ρ1 ⊗ σ_i,
/// β = ρ3 ⊗ I, γ^0 = β, γ^i = γ^0 α_i.
#[derive(Clone, Debug)]
pub struct DiracSet {
    pub alpha: [CMatrix4; 3],
    pub beta: CMatrix4,
    pub gamma: [CMatrix4; 4],
}

impl DiracSet {
    /// α·p for a real momentum vector.
    pub fn alpha_dot(&self, p: &Vector3) -> CMatrix4 {
        let mut out = self.alpha[0].scaled(c64(p[0], 0.0));
        out = out + self.alpha[1].scaled(c64(p[1], 0.0));
        out + self.alpha[2].scaled(c64(p[2], 0.0))
    }
}

/// Builds the Dirac set from tensor products of the two Pauli triples.
pub fn build_dirac() -> DiracSet {
    let pauli = build_pauli();
    let id2 = CMatrix2::identity();
    let rho1 = pauli.matrices[0];
    let rho3 = pauli.matrices[2];

    let alpha = [
        tensor_product(&rho1, &pauli.matrices[0]),
        tensor_product(&rho1, &pauli.matrices[1]),
        tensor_product(&rho1, &pauli.matrices[2]),
    ];
    let beta = tensor_product(&rho3, &id2);
    let gamma = [beta, beta * alpha[0], beta * alpha[1], beta * alpha[2]];
    DiracSet { alpha, beta, gamma }
}

/// Max-entry residual of the anticommutation relations
/// {α_i, α_j} = 2δ_ij over all 16 pairs, with α_4 ≡ β.
pub fn check_clifford(set: &DiracSet) -> f64 {
    let ops = [set.alpha[0], set.alpha[1], set.alpha[2], set.beta];
    let mut residual = 0.0f64;
    for (i, a) in ops.iter().enumerate() {
        for (j, b) in ops.iter().enumerate() {
            let expect = if i == j {
                CMatrix4::identity().scaled(c64(2.0, 0.0))
            } else {
                CMatrix4::zeros()
            };
            residual = residual.max(a.anticommutator(b).max_diff(&expect));
        }
    }
    residual
}

/// Antisymmetric transformation parameters ω_{μν}.
#[derive(Clone, Copy, Debug)]
pub struct LorentzParameters {
    omega: Matrix4,
}

impl LorentzParameters {
    pub fn zero() -> Self {
        LorentzParameters {
            omega: Matrix4::zeros(),
        }
    }

    /// Validates antisymmetry within 1e-14.
    pub fn from_omega(omega: Matrix4) -> Result<Self> {
        let defect = omega.antisymmetry_residual();
        if defect > 1e-14 {
            return Err(Error::NotAntisymmetric(defect));
        }
        Ok(LorentzParameters { omega })
    }

    /// Spatial rotation about a unit axis. The axis components fill the
    /// spatial block: ω_{12} = θ·n_3 and cyclic, so that the vector
    /// representation reproduces the Rodrigues rotation.
    pub fn rotation(axis: &Vector3, angle: f64) -> Result<Self> {
        let n = axis.norm();
        if (n - 1.0).abs() > 1e-12 {
            return Err(Error::NonUnitAxis(n));
        }
        let mut omega = Matrix4::zeros();
        omega.0[1][2] = angle * axis[2];
        omega.0[2][1] = -angle * axis[2];
        omega.0[2][3] = angle * axis[0];
        omega.0[3][2] = -angle * axis[0];
        omega.0[3][1] = angle * axis[1];
        omega.0[1][3] = -angle * axis[1];
        Ok(LorentzParameters { omega })
    }

    /// Boost along a unit direction: ω_{0i} = η·d_i.
    pub fn boost(direction: &Vector3, rapidity: f64) -> Result<Self> {
        let n = direction.norm();
        if (n - 1.0).abs() > 1e-12 {
            return Err(Error::NonUnitDirection(n));
        }
        let mut omega = Matrix4::zeros();
        for i in 0..3 {
            omega.0[0][i + 1] = rapidity * direction[i];
            omega.0[i + 1][0] = -rapidity * direction[i];
        }
        Ok(LorentzParameters { omega })
    }

    pub fn omega(&self) -> &Matrix4 {
        &self.omega
    }

    pub fn negated(&self) -> Self {
        let mut omega = Matrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                omega.0[i][j] = -self.omega.0[i][j];
            }
        }
        LorentzParameters { omega }
    }
}

/// Generator S^{μν} = (i/4)[γ^μ, γ^ν].
pub fn spin_generator(mu: usize, nu: usize, set: &DiracSet) -> CMatrix4 {
    set.gamma[mu]
        .commutator(&set.gamma[nu])
        .scaled(c64(0.0, 0.25))
}

/// Spinor representation Λ_{1/2} = exp(-(i/2) Σ_{μν} ω_{μν} S^{μν}).
pub fn spinor_lorentz(params: &LorentzParameters, set: &DiracSet) -> CMatrix4 {
    let mut generator = CMatrix4::zeros();
    for mu in 0..4 {
        for nu in 0..4 {
            let w = params.omega().0[mu][nu];
            if w != 0.0 {
                generator = generator + spin_generator(mu, nu, set).scaled(c64(w, 0.0));
            }
        }
    }
    matrix_exponential(&generator.scaled(c64(0.0, -0.5)))
}

/// Vector representation Λ^μ_ν = [exp(G)]^μ_ν with G^μ_ν = g^{μρ} ω_{ρν}.
pub fn vector_lorentz(params: &LorentzParameters) -> Matrix4 {
    let generator = Matrix4::minkowski() * *params.omega();
    matrix_exponential_real4(&generator)
}

/// Max-entry residual of Λ½⁻¹ γ^μ Λ½ = Λ^μ_ν γ^ν over all four gammas.
/// Both sides are computed independently: the left from the spinor
/// exponential, the right from the vector exponential.
pub fn check_gamma_transformation(params: &LorentzParameters, set: &DiracSet) -> f64 {
    let lambda_half = spinor_lorentz(params, set);
    let lambda_half_inv = spinor_lorentz(&params.negated(), set);
    let lambda_vec = vector_lorentz(params);

    let mut residual = 0.0f64;
    for mu in 0..4 {
        let left = lambda_half_inv * set.gamma[mu] * lambda_half;
        let mut right = CMatrix4::zeros();
        for nu in 0..4 {
            right = right + set.gamma[nu].scaled(c64(lambda_vec[(mu, nu)], 0.0));
        }
        residual = residual.max(left.max_diff(&right));
    }
    residual
}

/// Angular-momentum matrices for j = 1 in the J_3 eigenbasis.
#[derive(Clone, Copy, Debug)]
pub struct Spin1Triple {
    pub matrices: [CMatrix3; 3],
}

/// Standard j = 1 matrices from the ladder-operator construction.
pub fn build_spin1() -> Spin1Triple {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let j1 = CMatrix3::new([
        [C_ZERO, c64(s, 0.0), C_ZERO],
        [c64(s, 0.0), C_ZERO, c64(s, 0.0)],
        [C_ZERO, c64(s, 0.0), C_ZERO],
    ]);
    let j2 = CMatrix3::new([
        [C_ZERO, c64(0.0, -s), C_ZERO],
        [c64(0.0, s), C_ZERO, c64(0.0, -s)],
        [C_ZERO, c64(0.0, s), C_ZERO],
    ]);
    let j3 = CMatrix3::diagonal([C_ONE, C_ZERO, c64(-1.0, 0.0)]);
    Spin1Triple {
        matrices: [j1, j2, j3],
    }
}

/// A unit 3-state whose J_1 and J_3 expectation values both vanish: the
/// m = 0 eigenstate of J_3. No 2-state analogue exists, because Pauli
/// expectation values satisfy Σ_i ⟨σ_i⟩² = 1.
pub fn spin1_zero_velocity_state() -> CVector3 {
    CVector3::basis(1)
}

/// Pauli expectation values (⟨σ1⟩, ⟨σ2⟩, ⟨σ3⟩) of a 2-state; for unit
/// states the result is a unit vector (purity relation).
pub fn pauli_expectations(state: &CVector2) -> Vector3 {
    let cross: Complex64 = state[0].conj() * state[1];
    Vector3::new(
        2.0 * cross.re,
        2.0 * cross.im,
        state[0].norm_sqr() - state[1].norm_sqr(),
    )
}
