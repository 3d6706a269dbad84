//! Matrix exponentials and rotation constructors.

use super::complex::{c64, CMatrix, CMatrix2};
use super::real::{Matrix3, Matrix4, Vector3};
use crate::error::{Error, Result};

/// Unit-axis tolerance shared by the rotation constructors.
const AXIS_TOL: f64 = 1e-12;

/// Matrix exponential by scaling-and-squaring over a truncated Taylor
/// series. Converges for any finite input; the scaled series is summed to
/// machine precision.
pub fn matrix_exponential<const N: usize>(m: &CMatrix<N>) -> CMatrix<N> {
    // Scale so the series argument has max entry below 1/2.
    let norm = m.max_abs();
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scaled = m.scaled(c64(0.5f64.powi(squarings as i32), 0.0));

    let mut sum = CMatrix::<N>::identity();
    let mut term = CMatrix::<N>::identity();
    for k in 1..=32 {
        term = (term * scaled).scaled(c64(1.0 / k as f64, 0.0));
        sum = sum + term;
        if term.max_abs() <= f64::EPSILON * sum.max_abs() {
            break;
        }
    }

    let mut out = sum;
    for _ in 0..squarings {
        out = out * out;
    }
    out
}

/// SU(2) rotation exp(-i σ·axis angle/2) in closed form:
/// cos(angle/2)·I - i·sin(angle/2)·(axis·σ).
pub fn su2_exponential(axis: &Vector3, angle: f64) -> Result<CMatrix2> {
    let n = axis.norm();
    if (n - 1.0).abs() > AXIS_TOL {
        return Err(Error::NonUnitAxis(n));
    }
    let (half_sin, half_cos) = (angle / 2.0).sin_cos();
    let (x, y, z) = (axis[0], axis[1], axis[2]);
    // -i sin(θ/2) (xσ1 + yσ2 + zσ3) + cos(θ/2) I, written out entrywise.
    Ok(CMatrix2::new([
        [
            c64(half_cos, -half_sin * z),
            c64(-half_sin * y, -half_sin * x),
        ],
        [
            c64(half_sin * y, -half_sin * x),
            c64(half_cos, half_sin * z),
        ],
    ]))
}

/// Proper 3D rotation about a unit axis via the Rodrigues formula
/// R = I + sinθ·K + (1 - cosθ)·K² with K the cross-product matrix.
pub fn rodrigues_rotation(axis: &Vector3, angle: f64) -> Result<Matrix3> {
    let n = axis.norm();
    if (n - 1.0).abs() > AXIS_TOL {
        return Err(Error::NonUnitAxis(n));
    }
    let (sin, cos) = angle.sin_cos();
    let one_minus = 1.0 - cos;
    let (x, y, z) = (axis[0], axis[1], axis[2]);
    Ok(Matrix3([
        [
            cos + x * x * one_minus,
            x * y * one_minus - z * sin,
            x * z * one_minus + y * sin,
        ],
        [
            y * x * one_minus + z * sin,
            cos + y * y * one_minus,
            y * z * one_minus - x * sin,
        ],
        [
            z * x * one_minus - y * sin,
            z * y * one_minus + x * sin,
            cos + z * z * one_minus,
        ],
    ]))
}

/// Exponential of a real 4x4 matrix, via the complex series.
pub fn matrix_exponential_real4(m: &Matrix4) -> Matrix4 {
    let mc = CMatrix::<4>::from_reals(m.0);
    let e = matrix_exponential(&mc);
    let mut out = Matrix4::zeros();
    for i in 0..4 {
        for j in 0..4 {
            out.0[i][j] = e.get(i, j).re;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::complex::{CMatrix4, C_ONE, C_ZERO};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    #[test]
    fn exp_of_zero_is_identity() {
        assert_eq!(
            matrix_exponential(&CMatrix4::zeros()),
            CMatrix4::identity()
        );
    }

    #[test]
    fn exp_of_diagonal_exponentiates_entries() {
        let m = CMatrix4::diagonal([c64(0.3, 0.0), c64(-1.5, 0.0), c64(0.0, 2.0), C_ZERO]);
        let e = matrix_exponential(&m);
        let expect = CMatrix4::diagonal([
            c64(0.3f64.exp(), 0.0),
            c64((-1.5f64).exp(), 0.0),
            c64(2.0f64.cos(), 2.0f64.sin()),
            C_ONE,
        ]);
        assert!(e.max_diff(&expect) < 1e-14);
    }

    #[test]
    fn truncation_is_converged_against_term_doubling() {
        // Re-summing with twice the term budget must not move the result.
        let m = CMatrix2::new([[c64(0.4, 1.1), c64(-2.0, 0.3)], [c64(0.7, -0.2), c64(1.3, 0.8)]]);
        let e = matrix_exponential(&m);
        // Brute-force long Taylor sum without scaling as the refinement.
        let mut sum = CMatrix2::identity();
        let mut term = CMatrix2::identity();
        for k in 1..=80 {
            term = (term * m).scaled(c64(1.0 / k as f64, 0.0));
            sum = sum + term;
        }
        assert!(e.max_diff(&sum) / sum.max_abs() < 1e-12);
    }

    #[test]
    fn su2_angle_zero_is_identity() {
        let u = su2_exponential(&Vector3::I, 0.0).unwrap();
        assert!(u.max_diff(&CMatrix2::identity()) < 1e-15);
    }

    #[test]
    fn su2_full_turn_is_minus_identity() {
        let u = su2_exponential(&Vector3::J, 2.0 * PI).unwrap();
        assert!(u.max_diff(&CMatrix2::identity().scaled(c64(-1.0, 0.0))) < 1e-15);
    }

    #[test]
    fn su2_quarter_turn_about_k_is_diagonal_phase() {
        let u = su2_exponential(&Vector3::K, FRAC_PI_2).unwrap();
        let expect = CMatrix2::diagonal([
            c64(FRAC_PI_4.cos(), -FRAC_PI_4.sin()),
            c64(FRAC_PI_4.cos(), FRAC_PI_4.sin()),
        ]);
        assert!(u.max_diff(&expect) < 1e-15);
    }

    #[test]
    fn su2_is_special_unitary() {
        let axis = Vector3::new(2.0, -1.0, 0.5).normalized();
        let u = su2_exponential(&axis, 1.234).unwrap();
        assert!(u.unitarity_residual() < 1e-13);
        assert!((u.det2() - C_ONE).norm() < 1e-13);
    }

    #[test]
    fn su2_rejects_non_unit_axis() {
        assert!(matches!(
            su2_exponential(&Vector3::new(0.0, 0.0, 2.0), 1.0),
            Err(Error::NonUnitAxis(_))
        ));
    }

    #[test]
    fn rodrigues_angle_zero_is_identity() {
        let r = rodrigues_rotation(&Vector3::K, 0.0).unwrap();
        assert!(r.max_diff(&Matrix3::identity()) < 1e-15);
    }

    #[test]
    fn rodrigues_quarter_turn_about_k_sends_i_to_j() {
        let r = rodrigues_rotation(&Vector3::K, FRAC_PI_2).unwrap();
        assert!(r.mul_vec(&Vector3::I).max_diff(&Vector3::J) < 1e-15);
    }

    #[test]
    fn rodrigues_body_diagonal_permutes_axes() {
        // A third of a turn about (1,1,1)/√3 cycles i → j; checked by the
        // permutation action frozen from a direct matrix multiply.
        let axis = Vector3::new(1.0, 1.0, 1.0).normalized();
        let r = rodrigues_rotation(&axis, 2.0 * PI / 3.0).unwrap();
        assert!(r.mul_vec(&Vector3::I).max_diff(&Vector3::J) < 1e-15);
        assert!(r.mul_vec(&Vector3::J).max_diff(&Vector3::K) < 1e-15);
        assert!(r.mul_vec(&Vector3::K).max_diff(&Vector3::I) < 1e-15);
    }

    #[test]
    fn rodrigues_is_proper_rotation() {
        let axis = Vector3::new(-0.3, 1.2, 0.4).normalized();
        let r = rodrigues_rotation(&axis, 2.4).unwrap();
        assert!(r.orthogonality_residual() < 1e-12);
        assert!((r.det() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn series_matches_su2_closed_form_on_embedded_generator() {
        // exp(-i π (ρ2 ⊗ I)/2) against su2_exponential(j, π) ⊗ I.
        use crate::linalg::complex::tensor_product;
        let rho2 = CMatrix2::new([[C_ZERO, c64(0.0, -1.0)], [c64(0.0, 1.0), C_ZERO]]);
        let generator = tensor_product(&rho2, &CMatrix2::identity()).scaled(c64(0.0, -PI / 2.0));
        let series = matrix_exponential(&generator);
        let closed = tensor_product(
            &su2_exponential(&Vector3::J, PI).unwrap(),
            &CMatrix2::identity(),
        );
        assert!(series.max_diff(&closed) < 1e-12);
    }
}
