//! Acceptance suite: one test per release criterion. Each test prints a
//! single pass/fail line with the measured residual (visible with
//! `cargo test --test acceptance -- --nocapture`).

use std::time::{Duration, Instant};

use diracgeo::algebra::{
    build_dirac, build_spin1, check_clifford, check_gamma_transformation, pauli_expectations,
    spin1_zero_velocity_state, LorentzParameters,
};
use diracgeo::dirac::{
    alpha_expectations, beta_expectation, boost_via_rotation, classical_correspondence,
    hamiltonian, lagrangian_identity_residual, predicted_quadrant, rotation_conjugation_residual,
    solve_plane_wave, Sign,
};
use diracgeo::kinematics::{classify_quadrant, momentum};
use diracgeo::linalg::{
    c64, expectation_unchecked, frobenius_diff, hermitian_eigensystem, spectral_projector,
    CMatrix4,
};
use diracgeo::verify::SplitMix64;

const SEED: u64 = 0xD1AC;

struct Criterion {
    name: &'static str,
    tolerance: f64,
    budget: Option<Duration>,
}

impl Criterion {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Criterion {
            name,
            tolerance,
            budget: None,
        }
    }

    fn with_budget(name: &'static str, tolerance: f64, budget: Duration) -> Self {
        Criterion {
            name,
            tolerance,
            budget: Some(budget),
        }
    }

    /// Asserts the residual and optional runtime, then prints the line.
    fn conclude(self, residual: f64, elapsed: Duration) {
        let ok = residual < self.tolerance && self.budget.map_or(true, |b| elapsed <= b);
        println!(
            "{} {}: max residual {:.3e} (tolerance {:.0e}, {:.1} ms)",
            if ok { "PASS" } else { "FAIL" },
            self.name,
            residual,
            self.tolerance,
            elapsed.as_secs_f64() * 1e3,
        );
        assert!(
            residual < self.tolerance,
            "{}: residual {:e} exceeds tolerance {:e}",
            self.name,
            residual,
            self.tolerance
        );
        if let Some(budget) = self.budget {
            assert!(
                elapsed <= budget,
                "{}: took {:?}, budget {:?}",
                self.name,
                elapsed,
                budget
            );
        }
    }
}

#[test]
fn clifford_suite() {
    let criterion = Criterion::with_budget(
        "clifford-suite (16 anticommutator pairs)",
        1e-14,
        Duration::from_millis(100),
    );
    let start = Instant::now();
    let residual = check_clifford(&build_dirac());
    criterion.conclude(residual, start.elapsed());
}

#[test]
fn dispersion_suite() {
    let criterion = Criterion::with_budget(
        "dispersion-suite (200 draws, doubly degenerate +-sqrt(p^2+m^2))",
        1e-10,
        Duration::from_secs(1),
    );
    let mut rng = SplitMix64::new(SEED ^ 1);
    let start = Instant::now();
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let params = rng.particle();
        let e = params.dispersion_energy();
        let pairs = hermitian_eigensystem(&hamiltonian(&params.p, params.m), 1e-10).unwrap();
        for (pair, expect) in pairs.iter().zip([-e, -e, e, e]) {
            worst = worst.max((pair.value - expect).abs());
        }
    }
    criterion.conclude(worst, start.elapsed());
}

#[test]
fn breit_correspondence() {
    let criterion = Criterion::new(
        "breit-correspondence (alpha = p/E, beta = m/E, purity; 200 draws)",
        1e-10,
    );
    let mut rng = SplitMix64::new(SEED ^ 2);
    let start = Instant::now();
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let params = rng.particle();
        for sol in solve_plane_wave(&params).unwrap() {
            let alpha = alpha_expectations(&sol.psi).unwrap();
            let beta = beta_expectation(&sol.psi).unwrap();
            worst = worst.max(alpha.max_diff(&(params.p * (1.0 / sol.energy))));
            worst = worst.max((beta - params.m / sol.energy).abs());
            worst = worst.max((alpha.dot(&alpha) + beta * beta - 1.0).abs());
        }
    }
    criterion.conclude(worst, start.elapsed());
}

#[test]
fn factorized_solver_vs_oracle() {
    let criterion = Criterion::with_budget(
        "factorized-solver-vs-oracle (projector Frobenius; 100 draws)",
        1e-9,
        Duration::from_secs(2),
    );
    let mut rng = SplitMix64::new(SEED ^ 3);
    let start = Instant::now();
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let params = rng.particle();
        let sols = solve_plane_wave(&params).unwrap();
        let pairs = hermitian_eigensystem(&hamiltonian(&params.p, params.m), 1e-10).unwrap();
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
    criterion.conclude(worst, start.elapsed());
}

#[test]
fn rotation_conjugation() {
    let criterion = Criterion::new("rotation-conjugation (100 random axes/angles)", 1e-12);
    let mut rng = SplitMix64::new(SEED ^ 4);
    let start = Instant::now();
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let axis = rng.unit_vector();
        let angle = rng.range(-2.0 * std::f64::consts::PI, 2.0 * std::f64::consts::PI);
        worst = worst.max(rotation_conjugation_residual(&axis, angle).unwrap());
    }
    criterion.conclude(worst, start.elapsed());
}

#[test]
fn gamma_transformation() {
    let criterion = Criterion::new(
        "gamma-transformation (100 boosts |rapidity| <= 3 and rotations |angle| <= pi)",
        1e-10,
    );
    let mut rng = SplitMix64::new(SEED ^ 5);
    let set = build_dirac();
    let start = Instant::now();
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let rot = LorentzParameters::rotation(
            &rng.unit_vector(),
            rng.range(-std::f64::consts::PI, std::f64::consts::PI),
        )
        .unwrap();
        worst = worst.max(check_gamma_transformation(&rot, &set));
        let boost = LorentzParameters::boost(&rng.unit_vector(), rng.range(-3.0, 3.0)).unwrap();
        worst = worst.max(check_gamma_transformation(&boost, &set));
    }
    criterion.conclude(worst, start.elapsed());
}

#[test]
fn lagrangian_identity() {
    let criterion = Criterion::new("lagrangian-identity (100 random (p, E, m))", 1e-14);
    let mut rng = SplitMix64::new(SEED ^ 6);
    let start = Instant::now();
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let p = rng.unit_vector() * rng.range(0.0, 10.0);
        let e = rng.range(-10.0, 10.0);
        let m = rng.range(0.1, 10.0);
        worst = worst.max(lagrangian_identity_residual(&p, e, m));
    }
    criterion.conclude(worst, start.elapsed());
}

#[test]
fn geometry_quadrants() {
    let criterion = Criterion::new(
        "geometry-quadrants (100 draws, zero misclassifications, beta < 0 on antiparticles)",
        1.0,
    );
    let mut rng = SplitMix64::new(SEED ^ 7);
    let start = Instant::now();
    let mut failures = 0usize;
    for _ in 0..100 {
        let params = rng.particle();
        for sol in solve_plane_wave(&params).unwrap() {
            let state = classical_correspondence(&sol);
            let got = classify_quadrant(&state).unwrap();
            if got != predicted_quadrant(sol.helicity_sign, sol.energy_sign) {
                failures += 1;
            }
            if sol.energy_sign == Sign::Minus && beta_expectation(&sol.psi).unwrap() >= 0.0 {
                failures += 1;
            }
        }
    }
    criterion.conclude(failures as f64, start.elapsed());
}

#[test]
fn boost_rotation() {
    let criterion = Criterion::new(
        "boost-rotation (additive composition, exact inversion, p' = m tan(theta + phi); 100 draws)",
        1e-10,
    );
    let mut rng = SplitMix64::new(SEED ^ 8);
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut done = 0usize;
    while done < 100 {
        let params = rng.particle();
        let sols = solve_plane_wave(&params).unwrap();
        let sol = &sols[0];
        let theta = classical_correspondence(sol).r()[0].asin();
        let (phi1, phi2) = (rng.range(-1.2, 1.2), rng.range(-1.2, 1.2));
        let clear = [theta + phi1, theta + phi1 + phi2]
            .iter()
            .all(|t| t.cos().abs() > 1e-3);
        if !clear {
            continue;
        }

        // Momentum and energy deviations are measured relative to their
        // scale: tan amplifies rounding by 1/cos²θ' near the guard, so the
        // comparison is only well-posed scale-relative there.
        let stepwise = boost_via_rotation(&boost_via_rotation(sol, phi1).unwrap(), phi2).unwrap();
        let direct = boost_via_rotation(sol, phi1 + phi2).unwrap();
        let p_scale = direct.p.norm().max(1.0);
        worst = worst.max(stepwise.p.max_diff(&direct.p) / p_scale);
        worst = worst.max((stepwise.energy - direct.energy).abs() / direct.energy.abs().max(1.0));
        worst = worst.max(stepwise.psi.max_diff(&direct.psi));

        let inverted = boost_via_rotation(&boost_via_rotation(sol, phi1).unwrap(), -phi1).unwrap();
        worst = worst.max(inverted.p.max_diff(&sol.p) / sol.p.norm().max(1.0));
        worst = worst.max(inverted.psi.max_diff(&sol.psi));
        worst = worst.max((inverted.energy - sol.energy).abs() / sol.energy.abs().max(1.0));

        let expect = params.p.normalized() * (params.m * (theta + phi1 + phi2).tan());
        worst = worst.max(direct.p.max_diff(&expect) / p_scale);
        let extracted = momentum(&classical_correspondence(&direct), params.m);
        worst = worst.max(direct.p.max_diff(&extracted) / p_scale);
        done += 1;
    }
    criterion.conclude(worst, start.elapsed());
}

#[test]
fn spin1_counterexample() {
    let criterion = Criterion::new(
        "spin1-counterexample (<J1> = <J3> = 0 at 1e-14; 500-draw qubit purity at 1e-12)",
        1e-12,
    );
    let mut rng = SplitMix64::new(SEED ^ 9);
    let start = Instant::now();

    let spin1 = build_spin1();
    let state = spin1_zero_velocity_state();
    let j1 = expectation_unchecked(&spin1.matrices[0], &state).abs();
    let j3 = expectation_unchecked(&spin1.matrices[2], &state).abs();
    assert!(
        j1 < 1e-14 && j3 < 1e-14,
        "3-state expectations must vanish: <J1> = {j1:e}, <J3> = {j3:e}"
    );

    // No 2-state analogue: the Pauli vector of every unit 2-state has
    // unit length, so its components cannot all vanish.
    let mut worst = j1.max(j3);
    for _ in 0..500 {
        let b = pauli_expectations(&rng.unit_state2());
        worst = worst.max((b.dot(&b) - 1.0).abs());
    }
    criterion.conclude(worst, start.elapsed());
}

#[test]
fn full_verification_suite_passes() {
    // The CLI-facing check suite agrees with the criteria above.
    let reports = diracgeo::run_all_checks(42, 100, None);
    for report in &reports {
        println!(
            "{} verify::{}: max residual {:.3e} (tolerance {:.0e}, {} draws)",
            if report.passed { "PASS" } else { "FAIL" },
            report.check_name,
            report.max_residual,
            report.tolerance,
            report.draws,
        );
        assert!(report.passed, "{} failed", report.check_name);
    }
}

#[test]
fn frozen_example_solution() {
    // The positive-energy, positive-helicity solution for p = k, m = 1 is
    // (cos pi/8, 0, sin pi/8, 0) with E = sqrt(2).
    let params = diracgeo::ParticleParameters::new(diracgeo::Vector3::K, 1.0).unwrap();
    let sols = solve_plane_wave(&params).unwrap();
    let expect = diracgeo::CVector4::new([
        c64(std::f64::consts::FRAC_PI_8.cos(), 0.0),
        c64(0.0, 0.0),
        c64(std::f64::consts::FRAC_PI_8.sin(), 0.0),
        c64(0.0, 0.0),
    ]);
    assert!(sols[0].psi.max_diff(&expect) < 1e-15);
    assert!((sols[0].energy - std::f64::consts::SQRT_2).abs() < 1e-15);
}
