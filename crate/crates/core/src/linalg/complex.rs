//! Fixed-size complex vectors and matrices (dimensions 2, 3, 4).

use std::ops::{Add, Index, Mul, Neg, Sub};

use num_complex::Complex64;

/// Components below this modulus are skipped when fixing the global phase.
pub const PHASE_EPS: f64 = 1e-9;

pub const C_ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
pub const C_ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };
pub const C_I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Shorthand complex constructor.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Complex column vector of fixed dimension `N`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CVector<const N: usize> {
    data: [Complex64; N],
}

pub type CVector2 = CVector<2>;
pub type CVector3 = CVector<3>;
pub type CVector4 = CVector<4>;

impl<const N: usize> CVector<N> {
    /// Panics on non-finite components.
    pub fn new(data: [Complex64; N]) -> Self {
        assert!(
            data.iter().all(|c| c.re.is_finite() && c.im.is_finite()),
            "non-finite vector component"
        );
        CVector { data }
    }

    pub fn zero() -> Self {
        CVector { data: [C_ZERO; N] }
    }

    /// Standard basis vector e_k.
    pub fn basis(k: usize) -> Self {
        let mut v = Self::zero();
        v.data[k] = C_ONE;
        v
    }

    pub fn from_reals(data: [f64; N]) -> Self {
        let mut out = Self::zero();
        for (o, r) in out.data.iter_mut().zip(data.iter()) {
            *o = c64(*r, 0.0);
        }
        out
    }

    pub fn as_array(&self) -> &[Complex64; N] {
        &self.data
    }

    /// Hermitian inner product ⟨self|other⟩ (conjugate-linear in `self`).
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Unit vector along `self`; the result norm is within 1e-14 of one.
    pub fn normalized(&self) -> Self {
        let n = self.norm();
        assert!(n > 0.0, "cannot normalize the zero vector");
        self.scaled(c64(1.0 / n, 0.0))
    }

    pub fn scaled(&self, s: Complex64) -> Self {
        let mut out = *self;
        for c in out.data.iter_mut() {
            *c *= s;
        }
        out
    }

    /// Rotates the global phase so the first component with modulus above
    /// `PHASE_EPS` becomes real and non-negative. Makes states comparable
    /// component by component.
    pub fn fix_phase(&self) -> Self {
        for c in self.data.iter() {
            let m = c.norm();
            if m > PHASE_EPS {
                return self.scaled(c.conj() / m);
            }
        }
        *self
    }

    pub fn max_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Outer product |self⟩⟨self| as an N x N matrix.
    pub fn projector(&self) -> CMatrix<N> {
        let mut out = CMatrix::zeros();
        for i in 0..N {
            for j in 0..N {
                out.data[i][j] = self.data[i] * self.data[j].conj();
            }
        }
        out
    }
}

impl<const N: usize> Index<usize> for CVector<N> {
    type Output = Complex64;
    fn index(&self, i: usize) -> &Complex64 {
        &self.data[i]
    }
}

impl<const N: usize> Add for CVector<N> {
    type Output = CVector<N>;
    fn add(self, rhs: CVector<N>) -> CVector<N> {
        let mut out = self;
        for (o, r) in out.data.iter_mut().zip(rhs.data.iter()) {
            *o += r;
        }
        out
    }
}

impl<const N: usize> Sub for CVector<N> {
    type Output = CVector<N>;
    fn sub(self, rhs: CVector<N>) -> CVector<N> {
        let mut out = self;
        for (o, r) in out.data.iter_mut().zip(rhs.data.iter()) {
            *o -= r;
        }
        out
    }
}

impl<const N: usize> Neg for CVector<N> {
    type Output = CVector<N>;
    fn neg(self) -> CVector<N> {
        self.scaled(c64(-1.0, 0.0))
    }
}

/// Complex square matrix of fixed dimension `N`, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CMatrix<const N: usize> {
    data: [[Complex64; N]; N],
}

pub type CMatrix2 = CMatrix<2>;
pub type CMatrix3 = CMatrix<3>;
pub type CMatrix4 = CMatrix<4>;

impl<const N: usize> CMatrix<N> {
    /// Panics on non-finite entries.
    pub fn new(data: [[Complex64; N]; N]) -> Self {
        assert!(
            data.iter()
                .flatten()
                .all(|c| c.re.is_finite() && c.im.is_finite()),
            "non-finite matrix entry"
        );
        CMatrix { data }
    }

    pub fn zeros() -> Self {
        CMatrix {
            data: [[C_ZERO; N]; N],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.data[i][i] = C_ONE;
        }
        m
    }

    pub fn from_reals(data: [[f64; N]; N]) -> Self {
        let mut out = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                out.data[i][j] = c64(data[i][j], 0.0);
            }
        }
        out
    }

    pub fn diagonal(entries: [Complex64; N]) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.data[i][i] = entries[i];
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i][j] = v;
    }

    /// Conjugate transpose M†.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                out.data[i][j] = self.data[j][i].conj();
            }
        }
        out
    }

    pub fn scaled(&self, s: Complex64) -> Self {
        let mut out = *self;
        for row in out.data.iter_mut() {
            for c in row.iter_mut() {
                *c *= s;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &CVector<N>) -> CVector<N> {
        let mut out = CVector::zero();
        for i in 0..N {
            let mut acc = C_ZERO;
            for j in 0..N {
                acc += self.data[i][j] * v[j];
            }
            out.data[i] = acc;
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..N).map(|i| self.data[i][i]).sum()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data
            .iter()
            .flatten()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    pub fn max_diff(&self, other: &Self) -> f64 {
        let mut r = 0.0f64;
        for i in 0..N {
            for j in 0..N {
                r = r.max((self.data[i][j] - other.data[i][j]).norm());
            }
        }
        r
    }

    /// Max-entry deviation from M = M†.
    pub fn hermiticity_residual(&self) -> f64 {
        self.max_diff(&self.adjoint())
    }

    /// Max-entry deviation of M†M from the identity.
    pub fn unitarity_residual(&self) -> f64 {
        (self.adjoint() * *self).max_diff(&Self::identity())
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }

    pub fn det2(&self) -> Complex64 {
        assert!(N == 2, "det2 is defined for 2x2 matrices");
        self.data[0][0] * self.data[1][1] - self.data[0][1] * self.data[1][0]
    }
}

impl<const N: usize> Index<(usize, usize)> for CMatrix<N> {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i][j]
    }
}

impl<const N: usize> Add for CMatrix<N> {
    type Output = CMatrix<N>;
    fn add(self, rhs: CMatrix<N>) -> CMatrix<N> {
        let mut out = self;
        for i in 0..N {
            for j in 0..N {
                out.data[i][j] += rhs.data[i][j];
            }
        }
        out
    }
}

impl<const N: usize> Sub for CMatrix<N> {
    type Output = CMatrix<N>;
    fn sub(self, rhs: CMatrix<N>) -> CMatrix<N> {
        let mut out = self;
        for i in 0..N {
            for j in 0..N {
                out.data[i][j] -= rhs.data[i][j];
            }
        }
        out
    }
}

impl<const N: usize> Mul for CMatrix<N> {
    type Output = CMatrix<N>;
    fn mul(self, rhs: CMatrix<N>) -> CMatrix<N> {
        let mut out = CMatrix::zeros();
        for i in 0..N {
            for j in 0..N {
                let mut acc = C_ZERO;
                for (k, rhs_row) in rhs.data.iter().enumerate() {
                    acc += self.data[i][k] * rhs_row[j];
                }
                out.data[i][j] = acc;
            }
        }
        out
    }
}

/// Kronecker product a ⊗ b of two 2x2 matrices: block (i, j) is a[i][j]·b.
pub fn tensor_product(a: &CMatrix2, b: &CMatrix2) -> CMatrix4 {
    let mut out = CMatrix::zeros();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out.data[2 * i + k][2 * j + l] = a.data[i][j] * b.data[k][l];
                }
            }
        }
    }
    out
}

/// Kronecker product u ⊗ v of two 2-states: component (2i + j) is u_i·v_j.
pub fn kron_state(u: &CVector2, v: &CVector2) -> CVector4 {
    let mut out = CVector::zero();
    for i in 0..2 {
        for j in 0..2 {
            out.data[2 * i + j] = u[i] * v[j];
        }
    }
    out
}

/// Real expectation value ⟨v|M|v⟩ of a Hermitian matrix; the caller is
/// responsible for Hermiticity, the imaginary part is discarded.
pub fn expectation_unchecked<const N: usize>(m: &CMatrix<N>, v: &CVector<N>) -> f64 {
    v.inner(&m.mul_vec(v)).re
}
