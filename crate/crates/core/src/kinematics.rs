//! Classical velocity-space states.
//!
//! A motion state is a pair of unit vectors: `r` in the i-k kinematic
//! plane carrying the signed speed and the proper-time rate, and `s`
//! carrying the direction of motion. Speed changes are rotations of `r`
//! about the j axis; direction changes are arbitrary rotations of `s`.

use crate::error::{Error, Result};
use crate::linalg::{rodrigues_rotation, Vector3};

/// Unit-norm tolerance for state constructors.
const UNIT_TOL: f64 = 1e-12;
/// Components smaller than this count as lying on a quadrant axis.
const AXIS_EPS: f64 = 1e-12;

/// Which of the two degenerate states describes a given velocity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// s along the direction of motion (helicity +1).
    Up,
    /// s opposite to the direction of motion (helicity -1).
    Down,
}

/// Kinematic-plane quadrant labels. Quadrants are keyed on the signs of
/// (r_1, r_3): the sign of r_3 separates the particle branch from the
/// antiparticle branch, the sign of r_1 carries the spin label.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadrantClass {
    /// First quadrant: r_1 > 0, r_3 > 0.
    ParticleUp,
    /// Second quadrant: r_1 > 0, r_3 < 0.
    AntiparticleUp,
    /// Third quadrant: r_1 < 0, r_3 < 0.
    AntiparticleDown,
    /// Fourth quadrant: r_1 < 0, r_3 > 0.
    ParticleDown,
}

impl QuadrantClass {
    pub fn label(&self) -> &'static str {
        match self {
            QuadrantClass::ParticleUp => "particle-up",
            QuadrantClass::AntiparticleUp => "antiparticle-up",
            QuadrantClass::AntiparticleDown => "antiparticle-down",
            QuadrantClass::ParticleDown => "particle-down",
        }
    }
}

/// Classical motion state: the unit-vector pair (r, s).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KinematicState {
    r: Vector3,
    s: Vector3,
}

impl KinematicState {
    /// Requires |r| = |s| = 1 within 1e-12 and r_2 = 0 exactly.
    pub fn new(r: Vector3, s: Vector3) -> Result<Self> {
        if r[1] != 0.0 {
            return Err(Error::OffPlane(r[1]));
        }
        if !r.is_unit(UNIT_TOL) {
            return Err(Error::NonUnitVector {
                name: "r",
                norm: r.norm(),
            });
        }
        if !s.is_unit(UNIT_TOL) {
            return Err(Error::NonUnitVector {
                name: "s",
                norm: s.norm(),
            });
        }
        Ok(KinematicState { r, s })
    }

    /// r = (sin θ, 0, cos θ) for a kinematic angle θ from the k axis.
    pub fn from_angle(theta: f64, s: Vector3) -> Result<Self> {
        let (sin, cos) = theta.sin_cos();
        KinematicState::new(Vector3::new(sin, 0.0, cos), s)
    }

    pub fn r(&self) -> &Vector3 {
        &self.r
    }

    pub fn s(&self) -> &Vector3 {
        &self.s
    }
}

/// The particle velocity ẋ = r_1 · s.
pub fn velocity(state: &KinematicState) -> Vector3 {
    *state.s() * state.r()[0]
}

/// The proper-time speed τ̇ = r_3: the rate of the comoving clock
/// relative to the frame clock. Negative on the antiparticle branch.
pub fn proper_time_speed(state: &KinematicState) -> f64 {
    state.r()[2]
}

/// Residual of the kinematic constraint ẋ² + τ̇² = 1.
pub fn check_constraint(state: &KinematicState) -> f64 {
    let v = velocity(state);
    (v.dot(&v) + proper_time_speed(state).powi(2) - 1.0).abs()
}

/// Momentum and mass of a free particle, natural units (c = 1).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParticleParameters {
    pub p: Vector3,
    pub m: f64,
}

impl ParticleParameters {
    pub fn new(p: Vector3, m: f64) -> Result<Self> {
        if !(m > 0.0) {
            return Err(Error::NonPositiveMass(m));
        }
        Ok(ParticleParameters { p, m })
    }

    pub fn momentum_magnitude(&self) -> f64 {
        self.p.norm()
    }

    /// Dispersion energy √(p² + m²).
    pub fn dispersion_energy(&self) -> f64 {
        (self.p.dot(&self.p) + self.m * self.m).sqrt()
    }
}

/// The velocity-linear energy formula E = ẋ·p + τ̇·m.
///
/// This evaluates the formula for any state; only states consistent with
/// (p, m) reproduce the dispersion energy √(p² + m²).
pub fn energy(state: &KinematicState, params: &ParticleParameters) -> f64 {
    velocity(state).dot(&params.p) + proper_time_speed(state) * params.m
}

/// Builds the state for a given velocity on the requested branch. Both
/// branches realize the same velocity: Up takes s along the motion with
/// r = (sin θ, 0, cos θ), θ = arcsin |v|; Down takes s opposite with the
/// angle negated.
pub fn from_velocity(v: &Vector3, branch: Branch) -> Result<KinematicState> {
    let speed = v.norm();
    if speed >= 1.0 {
        return Err(Error::SpeedOutOfRange(speed));
    }
    if speed == 0.0 {
        return Err(Error::ZeroVelocity);
    }
    let theta = speed.asin();
    let d = v.normalized();
    match branch {
        Branch::Up => KinematicState::from_angle(theta, d),
        Branch::Down => KinematicState::from_angle(-theta, -d),
    }
}

/// Builds the state carrying velocity p/E for E = √(p² + m²). Zero
/// momentum maps to the rest state with s = ±k by branch convention.
pub fn from_momentum(params: &ParticleParameters, branch: Branch) -> KinematicState {
    let e = params.dispersion_energy();
    let p = params.p;
    if p.norm() == 0.0 {
        let s = match branch {
            Branch::Up => Vector3::K,
            Branch::Down => -Vector3::K,
        };
        return KinematicState::new(Vector3::K, s).expect("rest state is valid");
    }
    from_velocity(&(p * (1.0 / e)), branch).expect("sub-luminal velocity for m > 0")
}

/// Momentum carried by a consistent state of mass `m`: p = m (r_1/r_3) s.
pub fn momentum(state: &KinematicState, m: f64) -> Vector3 {
    *state.s() * (m * state.r()[0] / state.r()[2])
}

/// Rotates the direction vector s about an arbitrary unit axis; r (and
/// with it speed and proper-time rate) is untouched.
pub fn rotate_s(state: &KinematicState, axis: &Vector3, angle: f64) -> Result<KinematicState> {
    let rot = rodrigues_rotation(axis, angle)?;
    Ok(KinematicState {
        r: *state.r(),
        s: rot.mul_vec(state.s()),
    })
}

/// Rotates r in the kinematic plane (about the j axis); this changes the
/// speed modulus and can cross onto the antiparticle branch. r_2 stays
/// exactly zero.
pub fn rotate_r(state: &KinematicState, angle: f64) -> KinematicState {
    let rot = rodrigues_rotation(&Vector3::J, angle).expect("j is a unit axis");
    KinematicState {
        r: rot.mul_vec(state.r()),
        s: *state.s(),
    }
}

/// Helicity h = (s·p)/|p| of the state against a momentum direction.
pub fn helicity(state: &KinematicState, p: &Vector3) -> Result<f64> {
    let norm = p.norm();
    if norm == 0.0 {
        return Err(Error::ZeroMomentum);
    }
    Ok(state.s().dot(p) / norm)
}

/// Quadrant of (r_1, r_3); boundary states (rest or light speed) are
/// rejected as on-axis.
pub fn classify_quadrant(state: &KinematicState) -> Result<QuadrantClass> {
    let r1 = state.r()[0];
    let r3 = state.r()[2];
    if r1.abs() <= AXIS_EPS || r3.abs() <= AXIS_EPS {
        return Err(Error::OnAxis);
    }
    Ok(match (r1 > 0.0, r3 > 0.0) {
        (true, true) => QuadrantClass::ParticleUp,
        (true, false) => QuadrantClass::AntiparticleUp,
        (false, false) => QuadrantClass::AntiparticleDown,
        (false, true) => QuadrantClass::ParticleDown,
    })
}
