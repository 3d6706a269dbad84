//! Cyclic Jacobi eigensolver for small Hermitian matrices.
//!
//! Serves as the independent numerical route against which every
//! closed-form eigenstate construction in this crate is checked.

use num_complex::Complex64;

use super::complex::{c64, CMatrix, CVector, C_ZERO};
use crate::error::{Error, Result};

/// Sweep budget; a 4x4 Hermitian matrix converges in a handful of sweeps.
const MAX_SWEEPS: usize = 100;

/// One eigenvalue with its unit eigenvector.
#[derive(Clone, Copy, Debug)]
pub struct EigenPair<const N: usize> {
    pub value: f64,
    pub vector: CVector<N>,
}

/// Diagonalizes a Hermitian matrix by cyclic Jacobi rotations.
///
/// `tol` bounds the accepted deviation from `M = M†`. Eigenvalues are
/// returned ascending; eigenvectors are orthonormal and phase-fixed.
/// Within a degenerate cluster the basis is an arbitrary orthonormal one,
/// so comparisons there must go through projectors.
pub fn hermitian_eigensystem<const N: usize>(
    m: &CMatrix<N>,
    tol: f64,
) -> Result<Vec<EigenPair<N>>> {
    let asym = m.hermiticity_residual();
    if asym > tol {
        return Err(Error::NotHermitian(asym));
    }

    // Work on the Hermitian average to kill the sub-tolerance asymmetry.
    let mut a = (*m + m.adjoint()).scaled(c64(0.5, 0.0));
    let mut v = CMatrix::<N>::identity();

    let scale = a.max_abs().max(1.0);
    let stop = f64::EPSILON * scale;

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if max_off_diagonal(&a) <= stop {
            converged = true;
            break;
        }
        for p in 0..N - 1 {
            for q in p + 1..N {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged && max_off_diagonal(&a) > stop {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }

    let mut pairs: Vec<EigenPair<N>> = (0..N)
        .map(|k| EigenPair {
            value: a.get(k, k).re,
            vector: column(&v, k).fix_phase(),
        })
        .collect();
    pairs.sort_by(|x, y| x.value.total_cmp(&y.value));
    Ok(pairs)
}

fn max_off_diagonal<const N: usize>(a: &CMatrix<N>) -> f64 {
    let mut r = 0.0f64;
    for p in 0..N - 1 {
        for q in p + 1..N {
            r = r.max(a.get(p, q).norm());
        }
    }
    r
}

fn column<const N: usize>(m: &CMatrix<N>, k: usize) -> CVector<N> {
    let mut out = [C_ZERO; N];
    for (i, o) in out.iter_mut().enumerate() {
        *o = m.get(i, k);
    }
    CVector::new(out)
}

/// Annihilates a[p][q] with the unitary plane rotation U = D·G, where
/// D = diag(1, e^{-iφ}) strips the phase of a[p][q] and G is the classic
/// real Jacobi rotation for the resulting symmetric 2x2 block.
fn rotate<const N: usize>(a: &mut CMatrix<N>, v: &mut CMatrix<N>, p: usize, q: usize) {
    let apq = a.get(p, q);
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r; // e^{iφ}

    let tau = (a.get(q, q).re - a.get(p, p).re) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // Column operations: U acts on (p, q) columns; U has entries
    // U_pp = c, U_pq = s, U_qp = -s·e^{-iφ}, U_qq = c·e^{-iφ}.
    let upp = c64(c, 0.0);
    let upq = c64(s, 0.0);
    let uqp = -phase.conj() * s;
    let uqq = phase.conj() * c;

    apply_right(a, p, q, upp, upq, uqp, uqq);
    apply_left_adjoint(a, p, q, upp, upq, uqp, uqq);
    apply_right(v, p, q, upp, upq, uqp, uqq);

    // The rotation zeroes the (p, q) element exactly in exact arithmetic.
    a.set(p, q, C_ZERO);
    a.set(q, p, C_ZERO);
}

/// M ← M·U where U differs from the identity only in columns p and q.
fn apply_right<const N: usize>(
    m: &mut CMatrix<N>,
    p: usize,
    q: usize,
    upp: Complex64,
    upq: Complex64,
    uqp: Complex64,
    uqq: Complex64,
) {
    for i in 0..N {
        let mip = m.get(i, p);
        let miq = m.get(i, q);
        m.set(i, p, mip * upp + miq * uqp);
        m.set(i, q, mip * upq + miq * uqq);
    }
}

/// M ← U†·M where U differs from the identity only in columns p and q.
fn apply_left_adjoint<const N: usize>(
    m: &mut CMatrix<N>,
    p: usize,
    q: usize,
    upp: Complex64,
    upq: Complex64,
    uqp: Complex64,
    uqq: Complex64,
) {
    for j in 0..N {
        let mpj = m.get(p, j);
        let mqj = m.get(q, j);
        m.set(p, j, upp.conj() * mpj + uqp.conj() * mqj);
        m.set(q, j, upq.conj() * mpj + uqq.conj() * mqj);
    }
}

/// Spectral projector Σ v_k v_k† over the pairs selected by `keep`.
pub fn spectral_projector<const N: usize>(
    pairs: &[EigenPair<N>],
    keep: impl Fn(f64) -> bool,
) -> CMatrix<N> {
    let mut proj = CMatrix::<N>::zeros();
    for pair in pairs.iter().filter(|p| keep(p.value)) {
        proj = proj + pair.vector.projector();
    }
    proj
}

/// Frobenius norm of the difference of two matrices.
pub fn frobenius_diff<const N: usize>(a: &CMatrix<N>, b: &CMatrix<N>) -> f64 {
    let mut acc = 0.0;
    for i in 0..N {
        for j in 0..N {
            acc += (a.get(i, j) - b.get(i, j)).norm_sqr();
        }
    }
    acc.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::C_ONE;

    const SQRT_2: f64 = std::f64::consts::SQRT_2;

    fn reconstruct<const N: usize>(pairs: &[EigenPair<N>]) -> CMatrix<N> {
        let mut m = CMatrix::<N>::zeros();
        for pair in pairs {
            m = m + pair.vector.projector().scaled(c64(pair.value, 0.0));
        }
        m
    }

    #[test]
    fn diagonal_input_returns_sorted_basis() {
        let m = CMatrix::diagonal([c64(-1.0, 0.0), C_ONE]);
        let pairs = hermitian_eigensystem(&m, 1e-12).unwrap();
        assert_eq!(pairs[0].value, -1.0);
        assert_eq!(pairs[1].value, 1.0);
        assert!(pairs[0].vector.max_diff(&CVector::basis(0)) < 1e-15);
        assert!(pairs[1].vector.max_diff(&CVector::basis(1)) < 1e-15);
    }

    #[test]
    fn sigma_x_eigensystem_matches_hand_computation() {
        // Characteristic polynomial λ² - 1 = 0; vectors (1, ∓1)/√2.
        let m = CMatrix::new([[C_ZERO, C_ONE], [C_ONE, C_ZERO]]);
        let pairs = hermitian_eigensystem(&m, 1e-12).unwrap();
        assert!((pairs[0].value + 1.0).abs() < 1e-14);
        assert!((pairs[1].value - 1.0).abs() < 1e-14);
        let minus = CVector::from_reals([1.0 / SQRT_2, -1.0 / SQRT_2]);
        let plus = CVector::from_reals([1.0 / SQRT_2, 1.0 / SQRT_2]);
        assert!(pairs[0].vector.max_diff(&minus) < 1e-14);
        assert!(pairs[1].vector.max_diff(&plus) < 1e-14);
    }

    #[test]
    fn complex_hermitian_3x3_reconstructs() {
        let m = CMatrix::new([
            [c64(2.0, 0.0), c64(0.5, -1.0), c64(0.0, 0.3)],
            [c64(0.5, 1.0), c64(-1.0, 0.0), c64(2.0, 0.0)],
            [c64(0.0, -0.3), c64(2.0, 0.0), c64(0.5, 0.0)],
        ]);
        let pairs = hermitian_eigensystem(&m, 1e-12).unwrap();
        assert!(reconstruct(&pairs).max_diff(&m) < 1e-13);
        for pair in &pairs {
            let residual = m.mul_vec(&pair.vector) - pair.vector.scaled(c64(pair.value, 0.0));
            assert!(CVector::zero().max_diff(&residual) < 1e-13);
        }
    }

    #[test]
    fn rejects_non_hermitian_input() {
        let m = CMatrix::new([[C_ZERO, C_ONE], [C_ZERO, C_ZERO]]);
        assert!(matches!(
            hermitian_eigensystem(&m, 1e-12),
            Err(Error::NotHermitian(_))
        ));
    }

    #[test]
    fn eigenvectors_are_orthonormal() {
        let m = CMatrix::new([
            [c64(1.0, 0.0), c64(0.2, 0.7), c64(-0.3, 0.1), c64(0.0, 0.0)],
            [c64(0.2, -0.7), c64(-2.0, 0.0), c64(1.0, 0.0), c64(0.4, -0.2)],
            [c64(-0.3, -0.1), c64(1.0, 0.0), c64(0.5, 0.0), c64(0.0, 1.0)],
            [c64(0.0, 0.0), c64(0.4, 0.2), c64(0.0, -1.0), c64(3.0, 0.0)],
        ]);
        let pairs = hermitian_eigensystem(&m, 1e-12).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let g = pairs[i].vector.inner(&pairs[j].vector);
                let expect = if i == j { C_ONE } else { C_ZERO };
                assert!((g - expect).norm() < 1e-12);
            }
        }
    }
}
