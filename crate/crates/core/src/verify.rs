//! Named numerical checks covering every invariant in the crate, runnable
//! as one reproducible suite.
//!
//! Randomness comes from [`SplitMix64`], a fixed, platform-independent
//! generator, so a given seed always produces byte-identical reports.
//! Each check draws from its own stream (seed mixed with the check name),
//! making results independent of check ordering.

use std::f64::consts::PI;

use crate::algebra::{
    build_dirac, build_spin1, check_clifford, check_gamma_transformation, pauli_expectations,
    spin1_zero_velocity_state, spinor_lorentz, vector_lorentz, LorentzParameters,
};
use crate::dirac::{
    alpha_expectations, beta_expectation, boost_via_rotation, classical_correspondence,
    hamiltonian, lagrangian_identity_residual, predicted_quadrant, rotation_conjugation_residual,
    solve_plane_wave, Sign,
};
use crate::kinematics::{
    check_constraint, classify_quadrant, energy, from_momentum, from_velocity, helicity,
    momentum, proper_time_speed, rotate_r, rotate_s, velocity, Branch, KinematicState,
    ParticleParameters,
};
use crate::linalg::{
    c64, expectation_unchecked, frobenius_diff, hermitian_eigensystem, rodrigues_rotation,
    spectral_projector, su2_exponential, tensor_product, CMatrix, CMatrix2, CMatrix4, CVector,
    CVector2, Vector3,
};

/// SplitMix64 (Steele, Lea & Flood): state advances by the golden-ratio
/// increment 0x9E3779B97F4A7C15 and each output is finalized with two
/// xor-shift-multiply rounds. Doubles take the top 53 bits into [0, 1).
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform double in [0, 1).
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Uniform direction on the unit sphere.
    pub fn unit_vector(&mut self) -> Vector3 {
        let z = self.range(-1.0, 1.0);
        let phi = self.range(0.0, 2.0 * PI);
        let r = (1.0 - z * z).sqrt();
        Vector3::new(r * phi.cos(), r * phi.sin(), z)
    }

    /// Random unit 2-state with a uniform-in-box amplitude draw.
    pub fn unit_state2(&mut self) -> CVector2 {
        loop {
            let v = CVector2::new([
                c64(self.range(-1.0, 1.0), self.range(-1.0, 1.0)),
                c64(self.range(-1.0, 1.0), self.range(-1.0, 1.0)),
            ]);
            if v.norm() > 1e-3 {
                return v.normalized();
            }
        }
    }

    /// Random complex 2x2 matrix with entries in the unit box.
    pub fn matrix2(&mut self) -> CMatrix2 {
        let mut m = CMatrix2::zeros();
        for i in 0..2 {
            for j in 0..2 {
                m.set(i, j, c64(self.range(-1.0, 1.0), self.range(-1.0, 1.0)));
            }
        }
        m
    }

    /// Random Hermitian matrix of dimension N.
    pub fn hermitian<const N: usize>(&mut self) -> CMatrix<N> {
        let mut m = CMatrix::<N>::zeros();
        for i in 0..N {
            for j in 0..N {
                m.set(i, j, c64(self.range(-2.0, 2.0), self.range(-2.0, 2.0)));
            }
        }
        (m + m.adjoint()).scaled(c64(0.5, 0.0))
    }

    /// Random particle parameters: |p| in [0.01, 10], m in [0.1, 10].
    pub fn particle(&mut self) -> ParticleParameters {
        let p = self.unit_vector() * self.range(0.01, 10.0);
        ParticleParameters::new(p, self.range(0.1, 10.0)).expect("positive mass")
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub check_name: &'static str,
    pub draws: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

struct CheckSpec {
    name: &'static str,
    tolerance: f64,
    /// Deterministic checks ignore the draw count and report one draw.
    randomized: bool,
    run: fn(&mut SplitMix64, usize) -> f64,
}

const CHECKS: &[CheckSpec] = &[
    CheckSpec {
        name: "antiparticle-beta-negative",
        tolerance: 0.0,
        randomized: true,
        run: check_antiparticle_beta,
    },
    CheckSpec {
        name: "boost-composition",
        tolerance: 1e-10,
        randomized: true,
        run: check_boost_composition,
    },
    CheckSpec {
        name: "boost-momentum-law",
        tolerance: 1e-10,
        randomized: true,
        run: check_boost_momentum_law,
    },
    CheckSpec {
        name: "breit-correspondence",
        tolerance: 1e-10,
        randomized: true,
        run: check_breit_correspondence,
    },
    CheckSpec {
        name: "breit-dispersion",
        tolerance: 1e-12,
        randomized: true,
        run: check_breit_dispersion,
    },
    CheckSpec {
        name: "clifford-anticommutation",
        tolerance: 1e-15,
        randomized: false,
        run: check_clifford_suite,
    },
    CheckSpec {
        name: "correspondence-roundtrip",
        tolerance: 1e-10,
        randomized: true,
        run: check_correspondence_roundtrip,
    },
    CheckSpec {
        name: "eigen-reconstruction",
        tolerance: 1e-10,
        randomized: true,
        run: check_eigen_reconstruction,
    },
    CheckSpec {
        name: "expectation-purity",
        tolerance: 1e-10,
        randomized: true,
        run: check_expectation_purity,
    },
    CheckSpec {
        name: "gamma-transformation",
        tolerance: 1e-10,
        randomized: true,
        run: check_gamma_suite,
    },
    CheckSpec {
        name: "helicity-branches",
        tolerance: 1e-12,
        randomized: true,
        run: check_helicity_branches,
    },
    CheckSpec {
        name: "helicity-commutation",
        tolerance: 1e-14,
        randomized: true,
        run: check_helicity_commutation,
    },
    CheckSpec {
        name: "kinematic-constraint",
        tolerance: 1e-12,
        randomized: true,
        run: check_kinematic_constraint,
    },
    CheckSpec {
        name: "kronecker-mixed-product",
        tolerance: 1e-12,
        randomized: true,
        run: check_kron_mixed_product,
    },
    CheckSpec {
        name: "lagrangian-identity",
        tolerance: 1e-14,
        randomized: true,
        run: check_lagrangian_identity,
    },
    CheckSpec {
        name: "lorentz-rotation-unitarity",
        tolerance: 1e-12,
        randomized: true,
        run: check_rotation_unitarity,
    },
    CheckSpec {
        name: "pauli-purity",
        tolerance: 1e-12,
        randomized: true,
        run: check_pauli_purity,
    },
    CheckSpec {
        name: "quadrant-classification",
        tolerance: 1.0,
        randomized: true,
        run: check_quadrant_classification,
    },
    CheckSpec {
        name: "rodrigues-isometry",
        tolerance: 1e-12,
        randomized: true,
        run: check_rodrigues_isometry,
    },
    CheckSpec {
        name: "rotate-r-inverse",
        tolerance: 1e-12,
        randomized: true,
        run: check_rotate_r_inverse,
    },
    CheckSpec {
        name: "rotate-s-preserves-speed",
        tolerance: 1e-15,
        randomized: true,
        run: check_rotate_s_preserves,
    },
    CheckSpec {
        name: "rotation-conjugation",
        tolerance: 1e-12,
        randomized: true,
        run: check_rotation_conjugation,
    },
    CheckSpec {
        name: "solver-eigen-residual",
        tolerance: 1e-10,
        randomized: true,
        run: check_solver_eigen_residual,
    },
    CheckSpec {
        name: "solver-oracle-projectors",
        tolerance: 1e-9,
        randomized: true,
        run: check_solver_oracle_projectors,
    },
    CheckSpec {
        name: "spin1-zero-velocity",
        tolerance: 1e-14,
        randomized: false,
        run: check_spin1_zero_velocity,
    },
    CheckSpec {
        name: "spinor-composition",
        tolerance: 1e-12,
        randomized: true,
        run: check_spinor_composition,
    },
    CheckSpec {
        name: "su2-composition",
        tolerance: 1e-12,
        randomized: true,
        run: check_su2_composition,
    },
    CheckSpec {
        name: "velocity-two-valuedness",
        tolerance: 1e-12,
        randomized: true,
        run: check_velocity_two_valuedness,
    },
];

/// Runs every named check with `draws` random draws each. Reports come
/// back sorted by check name. A tolerance override replaces every
/// check's own tolerance (useful for forcing failures).
pub fn run_all_checks(
    seed: u64,
    draws: usize,
    tolerance_override: Option<f64>,
) -> Vec<VerificationReport> {
    assert!(draws >= 1, "draw count must be at least 1");
    CHECKS
        .iter()
        .map(|spec| {
            let mut rng = SplitMix64::new(seed ^ fnv1a(spec.name));
            let used_draws = if spec.randomized { draws } else { 1 };
            let max_residual = (spec.run)(&mut rng, used_draws);
            let tolerance = tolerance_override.unwrap_or(spec.tolerance);
            VerificationReport {
                check_name: spec.name,
                draws: used_draws,
                max_residual,
                tolerance,
                passed: max_residual < tolerance,
            }
        })
        .collect()
}

/// FNV-1a hash of the check name, used to give each check its own stream.
fn fnv1a(name: &str) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x1_0000_01b3);
    }
    h
}

fn random_kinematic_state(rng: &mut SplitMix64) -> KinematicState {
    let theta = rng.range(-PI, PI);
    KinematicState::from_angle(theta, rng.unit_vector()).expect("valid by construction")
}

fn check_kron_mixed_product(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let (a, b, c, d) = (rng.matrix2(), rng.matrix2(), rng.matrix2(), rng.matrix2());
        let left = tensor_product(&a, &b) * tensor_product(&c, &d);
        let right = tensor_product(&(a * c), &(b * d));
        worst = worst.max(left.max_diff(&right));
    }
    worst
}

fn reconstruction_residual<const N: usize>(rng: &mut SplitMix64) -> f64 {
    let m = rng.hermitian::<N>();
    let pairs = hermitian_eigensystem(&m, 1e-10).expect("random Hermitian input");
    let mut rebuilt = CMatrix::<N>::zeros();
    for pair in &pairs {
        rebuilt = rebuilt + pair.vector.projector().scaled(c64(pair.value, 0.0));
    }
    rebuilt.max_diff(&m)
}

fn check_eigen_reconstruction(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        worst = worst.max(reconstruction_residual::<2>(rng));
        worst = worst.max(reconstruction_residual::<3>(rng));
        worst = worst.max(reconstruction_residual::<4>(rng));
    }
    worst
}

fn check_su2_composition(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let axis = rng.unit_vector();
        let (t1, t2) = (rng.range(-PI, PI), rng.range(-PI, PI));
        let composed = su2_exponential(&axis, t1).unwrap() * su2_exponential(&axis, t2).unwrap();
        let direct = su2_exponential(&axis, t1 + t2).unwrap();
        worst = worst.max(composed.max_diff(&direct));
    }
    worst
}

fn check_rodrigues_isometry(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let r = rodrigues_rotation(&rng.unit_vector(), rng.range(-2.0 * PI, 2.0 * PI)).unwrap();
        let v = rng.unit_vector() * rng.range(0.0, 10.0);
        worst = worst.max((r.mul_vec(&v).norm() - v.norm()).abs());
    }
    worst
}

fn check_clifford_suite(_rng: &mut SplitMix64, _draws: usize) -> f64 {
    check_clifford(&build_dirac())
}

fn check_rotation_unitarity(rng: &mut SplitMix64, draws: usize) -> f64 {
    let set = build_dirac();
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let params = LorentzParameters::rotation(&rng.unit_vector(), rng.range(-PI, PI)).unwrap();
        worst = worst.max(spinor_lorentz(&params, &set).unitarity_residual());
        let lambda = vector_lorentz(&params);
        // Spatial block orthogonal, time row and column untouched.
        let mut spatial = crate::linalg::Matrix3::zeros();
        for i in 0..3 {
            for j in 0..3 {
                spatial.0[i][j] = lambda[(i + 1, j + 1)];
            }
            worst = worst.max(lambda[(0, i + 1)].abs());
            worst = worst.max(lambda[(i + 1, 0)].abs());
        }
        worst = worst.max((lambda[(0, 0)] - 1.0).abs());
        worst = worst.max(spatial.orthogonality_residual());
    }
    worst
}

fn check_gamma_suite(rng: &mut SplitMix64, draws: usize) -> f64 {
    let set = build_dirac();
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let rot = LorentzParameters::rotation(&rng.unit_vector(), rng.range(-PI, PI)).unwrap();
        worst = worst.max(check_gamma_transformation(&rot, &set));
        let boost = LorentzParameters::boost(&rng.unit_vector(), rng.range(-3.0, 3.0)).unwrap();
        worst = worst.max(check_gamma_transformation(&boost, &set));
    }
    worst
}

fn check_pauli_purity(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let b = pauli_expectations(&rng.unit_state2());
        worst = worst.max((b.dot(&b) - 1.0).abs());
    }
    worst
}

fn check_spinor_composition(rng: &mut SplitMix64, draws: usize) -> f64 {
    let set = build_dirac();
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let axis = rng.unit_vector();
        let (a1, a2) = (rng.range(-PI, PI), rng.range(-PI, PI));
        let rot = spinor_lorentz(&LorentzParameters::rotation(&axis, a1).unwrap(), &set)
            * spinor_lorentz(&LorentzParameters::rotation(&axis, a2).unwrap(), &set);
        let rot_direct =
            spinor_lorentz(&LorentzParameters::rotation(&axis, a1 + a2).unwrap(), &set);
        worst = worst.max(rot.max_diff(&rot_direct));

        let (e1, e2) = (rng.range(-1.5, 1.5), rng.range(-1.5, 1.5));
        let boost = spinor_lorentz(&LorentzParameters::boost(&axis, e1).unwrap(), &set)
            * spinor_lorentz(&LorentzParameters::boost(&axis, e2).unwrap(), &set);
        let boost_direct =
            spinor_lorentz(&LorentzParameters::boost(&axis, e1 + e2).unwrap(), &set);
        worst = worst.max(boost.max_diff(&boost_direct));
    }
    worst
}

fn check_kinematic_constraint(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        worst = worst.max(check_constraint(&random_kinematic_state(rng)));
    }
    worst
}

fn check_breit_dispersion(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let params = rng.particle();
        let expect = params.dispersion_energy();
        for branch in [Branch::Up, Branch::Down] {
            let state = from_momentum(&params, branch);
            worst = worst.max((energy(&state, &params) - expect).abs());
        }
    }
    worst
}

fn check_velocity_two_valuedness(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let v = rng.unit_vector() * rng.range(1e-3, 0.999);
        for branch in [Branch::Up, Branch::Down] {
            let state = from_velocity(&v, branch).unwrap();
            worst = worst.max(velocity(&state).max_diff(&v));
        }
    }
    worst
}

fn check_helicity_branches(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let v = rng.unit_vector() * rng.range(1e-3, 0.999);
        let up = from_velocity(&v, Branch::Up).unwrap();
        let down = from_velocity(&v, Branch::Down).unwrap();
        worst = worst.max((helicity(&up, &v).unwrap() - 1.0).abs());
        worst = worst.max((helicity(&down, &v).unwrap() + 1.0).abs());
    }
    worst
}

fn check_rotate_r_inverse(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let state = random_kinematic_state(rng);
        let angle = rng.range(-2.0 * PI, 2.0 * PI);
        let back = rotate_r(&rotate_r(&state, angle), -angle);
        worst = worst.max(back.r().max_diff(state.r()));
    }
    worst
}

fn check_rotate_s_preserves(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let state = random_kinematic_state(rng);
        let rotated = rotate_s(&state, &rng.unit_vector(), rng.range(-PI, PI)).unwrap();
        worst = worst.max((proper_time_speed(&rotated) - proper_time_speed(&state)).abs());
        worst = worst.max((velocity(&rotated).norm() - velocity(&state).norm()).abs());
    }
    worst
}

fn check_solver_eigen_residual(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let params = rng.particle();
        let h = hamiltonian(&params.p, params.m);
        for sol in solve_plane_wave(&params).unwrap() {
            let residual = h.mul_vec(&sol.psi) - sol.psi.scaled(c64(sol.energy, 0.0));
            worst = worst.max(CVector::zero().max_diff(&residual));
        }
    }
    worst
}

fn check_breit_correspondence(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let params = rng.particle();
        for sol in solve_plane_wave(&params).unwrap() {
            let alpha = alpha_expectations(&sol.psi).unwrap();
            let beta = beta_expectation(&sol.psi).unwrap();
            worst = worst.max(alpha.max_diff(&(params.p * (1.0 / sol.energy))));
            worst = worst.max((beta - params.m / sol.energy).abs());
        }
    }
    worst
}

fn check_expectation_purity(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let params = rng.particle();
        for sol in solve_plane_wave(&params).unwrap() {
            let alpha = alpha_expectations(&sol.psi).unwrap();
            let beta = beta_expectation(&sol.psi).unwrap();
            worst = worst.max((alpha.dot(&alpha) + beta * beta - 1.0).abs());
        }
    }
    worst
}

fn check_solver_oracle_projectors(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let params = rng.particle();
        let sols = solve_plane_wave(&params).unwrap();
        let h = hamiltonian(&params.p, params.m);
        let pairs = hermitian_eigensystem(&h, 1e-10).expect("Hamiltonian is Hermitian");
        for sign in [Sign::Plus, Sign::Minus] {
            let from_solver = sols
                .iter()
                .filter(|s| s.energy_sign == sign)
                .fold(CMatrix4::zeros(), |acc, s| acc + s.psi.projector());
            let from_oracle = spectral_projector(&pairs, |v| match sign {
                Sign::Plus => v > 0.0,
                Sign::Minus => v < 0.0,
            });
            worst = worst.max(frobenius_diff(&from_solver, &from_oracle));
        }
    }
    worst
}

fn check_helicity_commutation(rng: &mut SplitMix64, draws: usize) -> f64 {
    let pauli = crate::algebra::build_pauli();
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let params = rng.particle();
        let h = hamiltonian(&params.p, params.m);
        let helicity_op =
            tensor_product(&CMatrix2::identity(), &pauli.dot(&params.p.normalized()));
        worst = worst.max(h.commutator(&helicity_op).max_abs() / h.max_abs().max(1.0));
    }
    worst
}

fn check_correspondence_roundtrip(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let params = rng.particle();
        let sols = solve_plane_wave(&params).unwrap();
        for (sol, branch) in [(&sols[0], Branch::Up), (&sols[1], Branch::Down)] {
            let quantum = classical_correspondence(sol);
            let classical = from_momentum(&params, branch);
            worst = worst.max(quantum.r().max_diff(classical.r()));
            worst = worst.max(quantum.s().max_diff(classical.s()));
        }
    }
    worst
}

fn check_quadrant_classification(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut misclassified = 0usize;
    for _ in 0..draws {
        let params = rng.particle();
        for sol in solve_plane_wave(&params).unwrap() {
            let state = classical_correspondence(&sol);
            let got = classify_quadrant(&state).expect("off-axis for nonzero p and m");
            if got != predicted_quadrant(sol.helicity_sign, sol.energy_sign) {
                misclassified += 1;
            }
        }
    }
    misclassified as f64
}

fn check_antiparticle_beta(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..draws {
        let params = rng.particle();
        for sol in solve_plane_wave(&params)
            .unwrap()
            .iter()
            .filter(|s| s.energy_sign == Sign::Minus)
        {
            worst = worst.max(beta_expectation(&sol.psi).unwrap());
        }
    }
    worst
}

/// Momentum deviation relative to the momentum scale. Near the
/// light-speed guard the modulus grows like m/|cos θ'| and tan amplifies
/// rounding by 1/cos²θ', so an absolute comparison is ill-posed there.
fn momentum_residual(got: &Vector3, expect: &Vector3) -> f64 {
    got.max_diff(expect) / expect.norm().max(1.0)
}

fn check_boost_composition(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = 0.0f64;
    let mut done = 0usize;
    while done < draws {
        let params = rng.particle();
        let sols = solve_plane_wave(&params).unwrap();
        let sol = &sols[(rng.next_u64() % 2) as usize];
        let theta = classical_correspondence(sol).r()[0].asin();
        let (phi1, phi2) = (rng.range(-1.2, 1.2), rng.range(-1.2, 1.2));
        // Stay clear of the light-speed boundary at every stage.
        let clear = [theta + phi1, theta + phi1 + phi2]
            .iter()
            .all(|t| t.cos().abs() > 1e-3);
        if !clear {
            continue;
        }
        let stepwise = boost_via_rotation(&boost_via_rotation(sol, phi1).unwrap(), phi2).unwrap();
        let direct = boost_via_rotation(sol, phi1 + phi2).unwrap();
        worst = worst.max(momentum_residual(&stepwise.p, &direct.p));
        worst = worst.max((stepwise.energy - direct.energy).abs() / direct.energy.abs().max(1.0));
        worst = worst.max(stepwise.psi.max_diff(&direct.psi));
        // Inverting the rotation restores the original solution.
        let inverted = boost_via_rotation(&boost_via_rotation(sol, phi1).unwrap(), -phi1).unwrap();
        worst = worst.max(momentum_residual(&inverted.p, &sol.p));
        worst = worst.max(inverted.psi.max_diff(&sol.psi));
        done += 1;
    }
    worst
}

fn check_boost_momentum_law(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = 0.0f64;
    let mut done = 0usize;
    while done < draws {
        let params = rng.particle();
        let sols = solve_plane_wave(&params).unwrap();
        // Positive-energy, positive-helicity: θ' = θ + φ directly.
        let sol = &sols[0];
        let theta = classical_correspondence(sol).r()[0].asin();
        let phi = rng.range(-1.2, 1.2);
        if (theta + phi).cos().abs() <= 1e-3 {
            continue;
        }
        let boosted = boost_via_rotation(sol, phi).unwrap();
        let p_hat = params.p.normalized();
        let expect = p_hat * (params.m * (theta + phi).tan());
        worst = worst.max(momentum_residual(&boosted.p, &expect));
        // The kinematics route: extract the momentum from the classical
        // image of the boosted solution.
        let extracted = momentum(&classical_correspondence(&boosted), params.m);
        worst = worst.max(momentum_residual(&boosted.p, &extracted));
        done += 1;
    }
    worst
}

fn check_rotation_conjugation(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let axis = rng.unit_vector();
        let angle = rng.range(-2.0 * PI, 2.0 * PI);
        worst = worst.max(rotation_conjugation_residual(&axis, angle).unwrap());
    }
    worst
}

fn check_lagrangian_identity(rng: &mut SplitMix64, draws: usize) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let p = rng.unit_vector() * rng.range(0.0, 10.0);
        let e = rng.range(-10.0, 10.0);
        let m = rng.range(0.1, 10.0);
        worst = worst.max(lagrangian_identity_residual(&p, e, m));
    }
    worst
}

fn check_spin1_zero_velocity(_rng: &mut SplitMix64, _draws: usize) -> f64 {
    let spin1 = build_spin1();
    let state = spin1_zero_velocity_state();
    let j1 = expectation_unchecked(&spin1.matrices[0], &state).abs();
    let j3 = expectation_unchecked(&spin1.matrices[2], &state).abs();
    j1.max(j3)
}
