//! Plane-wave eigenstates of the free Dirac Hamiltonian, built by the
//! factorized route: helicity eigenstates in the direction (s) space and
//! kinematic-plane eigenstates in the speed (r) space, combined as a
//! Kronecker product with the r factor outermost. The same ordering makes
//! α_i = ρ1 ⊗ σ_i and β = ρ3 ⊗ I, so every solver output is an exact
//! eigenvector of α·p + βm.

use crate::algebra::{build_dirac, build_pauli, pauli_expectations};
use crate::error::{Error, Result};
use crate::kinematics::{KinematicState, ParticleParameters, QuadrantClass};
use crate::linalg::{
    c64, kron_state, rodrigues_rotation, su2_exponential, CMatrix2, CMatrix4, CVector2, CVector4,
    Vector3,
};

/// Unit-direction tolerance for eigenstate constructors.
const DIRECTION_TOL: f64 = 1e-12;
/// Hermiticity / normalization tolerance for expectation values.
const EXPECTATION_TOL: f64 = 1e-12;
/// |cos θ'| below this counts as hitting the light-speed boundary.
const SINGULARITY_EPS: f64 = 1e-9;

/// A two-valued sign label (helicity or energy branch).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn as_i32(self) -> i32 {
        self.value() as i32
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// One plane-wave Dirac eigenstate for a definite momentum. The
/// oscillatory phase factors are carried symbolically by the stored
/// (energy, p) pair; the state itself is the constant 4-spinor
/// psi = zeta ⊗ eta.
#[derive(Clone, Copy, Debug)]
pub struct PlaneWaveSolution {
    pub p: Vector3,
    pub m: f64,
    /// Eigenvalue of σ·p̂ on the eta factor.
    pub helicity_sign: Sign,
    /// Sign of the energy eigenvalue.
    pub energy_sign: Sign,
    /// Signed energy; |energy| = √(p² + m²).
    pub energy: f64,
    /// Direction-space (σ) factor state.
    pub eta: CVector2,
    /// Speed-space (ρ) factor state.
    pub zeta: CVector2,
    /// Full 4-spinor, zeta ⊗ eta.
    pub psi: CVector4,
}

/// Pauli expectation values of a 2-state; unit norm for pure states.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochVector(pub Vector3);

impl BlochVector {
    /// Polar angle in the i-k plane, measured from the k axis,
    /// in (-π, π].
    pub fn polar_angle(&self) -> f64 {
        self.0[0].atan2(self.0[2])
    }
}

/// The free Dirac Hamiltonian α·p + βm.
pub fn hamiltonian(p: &Vector3, m: f64) -> CMatrix4 {
    let set = build_dirac();
    set.alpha_dot(p) + set.beta.scaled(c64(m, 0.0))
}

/// Eigenstates of σ·p̂ in closed form from the spherical angles of the
/// unit direction, phase-fixed.
pub fn helicity_eigenstate(p_hat: &Vector3, sign: Sign) -> Result<CVector2> {
    let n = p_hat.norm();
    if (n - 1.0).abs() > DIRECTION_TOL {
        return Err(Error::NonUnitDirection(n));
    }
    let theta = p_hat[2].clamp(-1.0, 1.0).acos();
    let phi = if p_hat[0] == 0.0 && p_hat[1] == 0.0 {
        0.0
    } else {
        p_hat[1].atan2(p_hat[0])
    };
    let (half_sin, half_cos) = (theta / 2.0).sin_cos();
    let phase = c64(phi.cos(), phi.sin());
    let state = match sign {
        Sign::Plus => CVector2::new([c64(half_cos, 0.0), phase * half_sin]),
        Sign::Minus => CVector2::new([c64(half_sin, 0.0), -phase * half_cos]),
    };
    Ok(state.fix_phase())
}

/// The two kinematic-plane unit vectors (±p, 0, m)/√(p² + m²) whose
/// ρ-space eigenstates are the speed factors of the four solutions.
pub fn s_vectors(p_mag: f64, m: f64) -> (Vector3, Vector3) {
    assert!(m > 0.0, "mass must be positive");
    assert!(p_mag >= 0.0, "momentum magnitude must be non-negative");
    let e = (p_mag * p_mag + m * m).sqrt();
    (
        Vector3::new(p_mag / e, 0.0, m / e),
        Vector3::new(-p_mag / e, 0.0, m / e),
    )
}

/// Eigenstate of direction·ρ for a unit direction in the i-k plane:
/// (cos θ/2, sin θ/2) for the +1 branch with θ the polar angle, and the
/// orthogonal state for the -1 branch. The Bloch vector of the result is
/// ±direction.
pub fn r_eigenstate(direction: &Vector3, energy_sign: Sign) -> Result<CVector2> {
    let n = direction.norm();
    if (n - 1.0).abs() > DIRECTION_TOL {
        return Err(Error::NonUnitDirection(n));
    }
    if direction[1].abs() > DIRECTION_TOL {
        return Err(Error::OffPlane(direction[1]));
    }
    let theta = direction[0].atan2(direction[2]);
    let (half_sin, half_cos) = (theta / 2.0).sin_cos();
    let state = match energy_sign {
        Sign::Plus => CVector2::from_reals([half_cos, half_sin]),
        Sign::Minus => CVector2::from_reals([-half_sin, half_cos]),
    };
    Ok(state.fix_phase())
}

/// The four plane-wave solutions for a nonzero momentum, ordered
/// (E+, h+), (E+, h-), (E-, h+), (E-, h-). Each is an exact eigenvector
/// of the Hamiltonian; the four are mutually orthonormal.
pub fn solve_plane_wave(params: &ParticleParameters) -> Result<Vec<PlaneWaveSolution>> {
    let p_mag = params.momentum_magnitude();
    if p_mag == 0.0 {
        return Err(Error::ZeroMomentum);
    }
    let p_hat = params.p.normalized();
    let e_abs = params.dispersion_energy();
    let (s_plus, s_minus) = s_vectors(p_mag, params.m);

    let mut out = Vec::with_capacity(4);
    for energy_sign in [Sign::Plus, Sign::Minus] {
        for helicity_sign in [Sign::Plus, Sign::Minus] {
            let eta = helicity_eigenstate(&p_hat, helicity_sign)?;
            let s_dir = match helicity_sign {
                Sign::Plus => s_plus,
                Sign::Minus => s_minus,
            };
            let zeta = r_eigenstate(&s_dir, energy_sign)?;
            out.push(PlaneWaveSolution {
                p: params.p,
                m: params.m,
                helicity_sign,
                energy_sign,
                energy: energy_sign.value() * e_abs,
                eta,
                zeta,
                psi: kron_state(&zeta, &eta),
            });
        }
    }
    Ok(out)
}

/// The four rest solutions: eigenstates of β with energies ±m, spin
/// quantized along k, ordered (E+, up), (E+, down), (E-, up), (E-, down).
pub fn solve_rest(m: f64) -> Vec<PlaneWaveSolution> {
    assert!(m > 0.0, "mass must be positive");
    let mut out = Vec::with_capacity(4);
    for energy_sign in [Sign::Plus, Sign::Minus] {
        for spin in [Sign::Plus, Sign::Minus] {
            let eta = match spin {
                Sign::Plus => CVector2::basis(0),
                Sign::Minus => CVector2::basis(1),
            };
            let zeta = match energy_sign {
                Sign::Plus => CVector2::basis(0),
                Sign::Minus => CVector2::basis(1),
            };
            out.push(PlaneWaveSolution {
                p: Vector3::ZERO,
                m,
                helicity_sign: spin,
                energy_sign,
                energy: energy_sign.value() * m,
                eta,
                zeta,
                psi: kron_state(&zeta, &eta),
            });
        }
    }
    out
}

/// Real expectation value ⟨psi|operator|psi⟩ of a Hermitian operator on
/// a unit state.
pub fn expectation(operator: &CMatrix4, psi: &CVector4) -> Result<f64> {
    let asym = operator.hermiticity_residual();
    if asym > EXPECTATION_TOL {
        return Err(Error::NotHermitian(asym));
    }
    let norm = psi.norm();
    if (norm - 1.0).abs() > EXPECTATION_TOL {
        return Err(Error::NotNormalized(norm));
    }
    let value = psi.inner(&operator.mul_vec(psi));
    assert!(
        value.im.abs() < 1e-12,
        "expectation of a Hermitian operator must be real"
    );
    Ok(value.re)
}

/// Expectation values of the three α matrices on a 4-spinor.
pub fn alpha_expectations(psi: &CVector4) -> Result<Vector3> {
    let set = build_dirac();
    Ok(Vector3::new(
        expectation(&set.alpha[0], psi)?,
        expectation(&set.alpha[1], psi)?,
        expectation(&set.alpha[2], psi)?,
    ))
}

/// Expectation value of β on a 4-spinor.
pub fn beta_expectation(psi: &CVector4) -> Result<f64> {
    expectation(&build_dirac().beta, psi)
}

/// Bloch vector (⟨σ1⟩, ⟨σ2⟩, ⟨σ3⟩) of a unit 2-state.
pub fn bloch_vector(state: &CVector2) -> Result<BlochVector> {
    let norm = state.norm();
    if (norm - 1.0).abs() > EXPECTATION_TOL {
        return Err(Error::NotNormalized(norm));
    }
    Ok(BlochVector(pauli_expectations(state)))
}

/// Maps a solution back to its classical state: r is the Bloch vector of
/// the speed factor, s the Bloch vector of the direction factor.
pub fn classical_correspondence(sol: &PlaneWaveSolution) -> KinematicState {
    let r = bloch_vector(&sol.zeta)
        .expect("zeta is unit by construction")
        .0;
    let s = bloch_vector(&sol.eta)
        .expect("eta is unit by construction")
        .0;
    KinematicState::new(r, s).expect("factor Bloch vectors are unit and in-plane")
}

/// Quadrant a solution's classical image lands in, keyed on the signs of
/// its kinematic-plane Bloch vector ℰ·s_h = (ℰ·h·p, 0, ℰ·m)/√(p² + m²).
pub fn predicted_quadrant(helicity_sign: Sign, energy_sign: Sign) -> QuadrantClass {
    match (helicity_sign, energy_sign) {
        (Sign::Plus, Sign::Plus) => QuadrantClass::ParticleUp,
        (Sign::Minus, Sign::Plus) => QuadrantClass::ParticleDown,
        (Sign::Plus, Sign::Minus) => QuadrantClass::AntiparticleDown,
        (Sign::Minus, Sign::Minus) => QuadrantClass::AntiparticleUp,
    }
}

/// Max-entry residual of γ^0(γ^0 E - γ·p - m) = E - H, the momentum-space
/// equality of the covariant and Hamiltonian forms of the wave operator.
/// Both sides are assembled independently; the identity is exact.
pub fn lagrangian_identity_residual(p: &Vector3, e: f64, m: f64) -> f64 {
    let set = build_dirac();
    let mut inner = set.gamma[0].scaled(c64(e, 0.0)) - CMatrix4::identity().scaled(c64(m, 0.0));
    for i in 0..3 {
        inner = inner - set.gamma[i + 1].scaled(c64(p[i], 0.0));
    }
    let left = set.gamma[0] * inner;
    let right = CMatrix4::identity().scaled(c64(e, 0.0)) - hamiltonian(p, m);
    left.max_diff(&right)
}

/// Max-entry residual of D† ρ_i D = R_ij ρ_j over i, where D is the SU(2)
/// rotation and R the matching 3D rotation for the same axis and angle.
pub fn rotation_conjugation_residual(axis: &Vector3, angle: f64) -> Result<f64> {
    let d = su2_exponential(axis, angle)?;
    let r = rodrigues_rotation(axis, angle)?;
    let pauli = build_pauli();
    let mut residual = 0.0f64;
    for i in 0..3 {
        let left = d.adjoint() * pauli.matrices[i] * d;
        let mut right = CMatrix2::zeros();
        for j in 0..3 {
            right = right + pauli.matrices[j].scaled(c64(r[(i, j)], 0.0));
        }
        residual = residual.max(left.max_diff(&right));
    }
    Ok(residual)
}

/// Boosts a solution by rotating its speed factor in the kinematic plane
/// by `phi`, leaving the direction factor fixed. The momentum modulus
/// follows the rotated Bloch angle θ' as |p'| = m·|tan θ'| along the spin
/// quantization axis; the energy sign flips when θ' crosses the
/// light-speed boundary, where the rotation is singular.
pub fn boost_via_rotation(sol: &PlaneWaveSolution, phi: f64) -> Result<PlaneWaveSolution> {
    let h = sol.helicity_sign;
    // Spin quantization axis: the momentum direction, or for rest states
    // the axis recovered from the direction factor.
    let axis = if sol.p.norm() > 0.0 {
        sol.p.normalized()
    } else {
        (bloch_vector(&sol.eta)?.0 * h.value()).normalized()
    };

    let rotation = su2_exponential(&Vector3::J, phi).expect("j is a unit axis");
    let zeta = rotation.mul_vec(&sol.zeta).fix_phase();
    let bloch = bloch_vector(&zeta)?.0;
    let cos_theta = bloch[2];
    if cos_theta.abs() < SINGULARITY_EPS {
        return Err(Error::LightSpeedSingularity(cos_theta));
    }

    let p_signed = h.value() * sol.m * (bloch[0] / cos_theta);
    let energy_sign = if cos_theta > 0.0 { Sign::Plus } else { Sign::Minus };
    let e_abs = (p_signed * p_signed + sol.m * sol.m).sqrt();
    let helicity_sign = if p_signed < 0.0 { h.flip() } else { h };

    Ok(PlaneWaveSolution {
        p: axis * p_signed,
        m: sol.m,
        helicity_sign,
        energy_sign,
        energy: energy_sign.value() * e_abs,
        eta: sol.eta,
        zeta,
        psi: kron_state(&zeta, &sol.eta),
    })
}
