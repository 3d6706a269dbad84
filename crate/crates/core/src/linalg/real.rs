//! Real 3-vectors and small real matrices.

use std::ops::{Add, Index, Mul, Neg, Sub};

/// Real 3-vector, components indexed 0..3 along the i, j, k axes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vector3(pub [f64; 3]);

impl Vector3 {
    pub const ZERO: Vector3 = Vector3([0.0, 0.0, 0.0]);
    /// Unit vector along the i axis.
    pub const I: Vector3 = Vector3([1.0, 0.0, 0.0]);
    /// Unit vector along the j axis.
    pub const J: Vector3 = Vector3([0.0, 1.0, 0.0]);
    /// Unit vector along the k axis.
    pub const K: Vector3 = Vector3([0.0, 0.0, 1.0]);

    pub fn new(x: f64, y: f64, z: f64) -> Self {
        let v = Vector3([x, y, z]);
        assert!(v.0.iter().all(|c| c.is_finite()), "non-finite vector component");
        v
    }

    pub fn dot(&self, other: &Vector3) -> f64 {
        self.0[0] * other.0[0] + self.0[1] * other.0[1] + self.0[2] * other.0[2]
    }

    pub fn cross(&self, other: &Vector3) -> Vector3 {
        Vector3([
            self.0[1] * other.0[2] - self.0[2] * other.0[1],
            self.0[2] * other.0[0] - self.0[0] * other.0[2],
            self.0[0] * other.0[1] - self.0[1] * other.0[0],
        ])
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Unit vector in the same direction. Panics on the zero vector.
    pub fn normalized(&self) -> Vector3 {
        let n = self.norm();
        assert!(n > 0.0, "cannot normalize the zero vector");
        *self * (1.0 / n)
    }

    pub fn is_unit(&self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    pub fn max_diff(&self, other: &Vector3) -> f64 {
        (0..3).map(|i| (self.0[i] - other.0[i]).abs()).fold(0.0, f64::max)
    }
}

impl Index<usize> for Vector3 {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add for Vector3 {
    type Output = Vector3;
    fn add(self, rhs: Vector3) -> Vector3 {
        Vector3([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2]])
    }
}

impl Sub for Vector3 {
    type Output = Vector3;
    fn sub(self, rhs: Vector3) -> Vector3 {
        Vector3([self.0[0] - rhs.0[0], self.0[1] - rhs.0[1], self.0[2] - rhs.0[2]])
    }
}

impl Neg for Vector3 {
    type Output = Vector3;
    fn neg(self) -> Vector3 {
        Vector3([-self.0[0], -self.0[1], -self.0[2]])
    }
}

impl Mul<f64> for Vector3 {
    type Output = Vector3;
    fn mul(self, s: f64) -> Vector3 {
        Vector3([self.0[0] * s, self.0[1] * s, self.0[2] * s])
    }
}

/// Real 3x3 matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix3(pub [[f64; 3]; 3]);

impl Matrix3 {
    pub fn identity() -> Self {
        Matrix3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    }

    pub fn zeros() -> Self {
        Matrix3([[0.0; 3]; 3])
    }

    pub fn transpose(&self) -> Matrix3 {
        let mut out = Matrix3::zeros();
        for i in 0..3 {
            for j in 0..3 {
                out.0[i][j] = self.0[j][i];
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &Vector3) -> Vector3 {
        let mut out = [0.0; 3];
        for (i, row) in self.0.iter().enumerate() {
            out[i] = row[0] * v.0[0] + row[1] * v.0[1] + row[2] * v.0[2];
        }
        Vector3(out)
    }

    pub fn det(&self) -> f64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Max-entry deviation of RᵀR from the identity.
    pub fn orthogonality_residual(&self) -> f64 {
        let p = self.transpose() * *self;
        let mut r = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 1.0 } else { 0.0 };
                r = r.max((p.0[i][j] - expect).abs());
            }
        }
        r
    }

    pub fn max_diff(&self, other: &Matrix3) -> f64 {
        let mut r = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                r = r.max((self.0[i][j] - other.0[i][j]).abs());
            }
        }
        r
    }
}

impl Mul for Matrix3 {
    type Output = Matrix3;
    fn mul(self, rhs: Matrix3) -> Matrix3 {
        let mut out = Matrix3::zeros();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = 0.0;
                for (k, rhs_row) in rhs.0.iter().enumerate() {
                    acc += self.0[i][k] * rhs_row[j];
                }
                out.0[i][j] = acc;
            }
        }
        out
    }
}

impl Index<(usize, usize)> for Matrix3 {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.0[i][j]
    }
}

/// Real 4x4 matrix, row-major, index 0 is the time component.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix4(pub [[f64; 4]; 4]);

impl Matrix4 {
    pub fn identity() -> Self {
        let mut m = Matrix4::zeros();
        for i in 0..4 {
            m.0[i][i] = 1.0;
        }
        m
    }

    pub fn zeros() -> Self {
        Matrix4([[0.0; 4]; 4])
    }

    /// Minkowski metric diag(+1, -1, -1, -1).
    pub fn minkowski() -> Self {
        let mut m = Matrix4::zeros();
        m.0[0][0] = 1.0;
        for i in 1..4 {
            m.0[i][i] = -1.0;
        }
        m
    }

    pub fn transpose(&self) -> Matrix4 {
        let mut out = Matrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = self.0[j][i];
            }
        }
        out
    }

    /// Max-entry antisymmetry defect |m + mᵀ|.
    pub fn antisymmetry_residual(&self) -> f64 {
        let mut r = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                r = r.max((self.0[i][j] + self.0[j][i]).abs());
            }
        }
        r
    }

    pub fn max_diff(&self, other: &Matrix4) -> f64 {
        let mut r = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                r = r.max((self.0[i][j] - other.0[i][j]).abs());
            }
        }
        r
    }
}

impl Mul for Matrix4 {
    type Output = Matrix4;
    fn mul(self, rhs: Matrix4) -> Matrix4 {
        let mut out = Matrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = 0.0;
                for (k, rhs_row) in rhs.0.iter().enumerate() {
                    acc += self.0[i][k] * rhs_row[j];
                }
                out.0[i][j] = acc;
            }
        }
        out
    }
}

impl Index<(usize, usize)> for Matrix4 {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.0[i][j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_follows_right_hand_rule() {
        assert_eq!(Vector3::I.cross(&Vector3::J), Vector3::K);
        assert_eq!(Vector3::J.cross(&Vector3::K), Vector3::I);
        assert_eq!(Vector3::K.cross(&Vector3::I), Vector3::J);
    }

    #[test]
    fn matrix3_identity_is_neutral() {
        let m = Matrix3([[1.0, 2.0, 3.0], [4.0, 5.0, 6.0], [7.0, 8.0, 9.0]]);
        assert_eq!(Matrix3::identity() * m, m);
        assert_eq!(m * Matrix3::identity(), m);
    }

    #[test]
    fn minkowski_squares_to_identity() {
        let g = Matrix4::minkowski();
        assert_eq!(g * g, Matrix4::identity());
    }
}
