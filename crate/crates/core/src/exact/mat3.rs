use std::ops::Mul;

use super::Scalar;

pub type Vec3<T> = [T; 3];

pub fn dot3<T: Scalar>(a: &Vec3<T>, b: &Vec3<T>) -> T {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

pub fn cross3<T: Scalar>(a: &Vec3<T>, b: &Vec3<T>) -> Vec3<T> {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

/// Row-major 3x3 matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat3<T> {
    pub rows: [[T; 3]; 3],
}

impl<T: Scalar> Mat3<T> {
    pub fn new(rows: [[T; 3]; 3]) -> Self {
        Self { rows }
    }

    pub fn identity() -> Self {
        let o = T::one;
        let z = T::zero;
        Self::new([[o(), z(), z()], [z(), o(), z()], [z(), z(), o()]])
    }

    pub fn from_columns(c0: Vec3<T>, c1: Vec3<T>, c2: Vec3<T>) -> Self {
        let [a0, a1, a2] = c0;
        let [b0, b1, b2] = c1;
        let [d0, d1, d2] = c2;
        Self::new([[a0, b0, d0], [a1, b1, d1], [a2, b2, d2]])
    }

    pub fn column(&self, j: usize) -> Vec3<T> {
        [self.rows[0][j].clone(), self.rows[1][j].clone(), self.rows[2][j].clone()]
    }

    pub fn transpose(&self) -> Self {
        Self::from_columns(self.rows[0].clone(), self.rows[1].clone(), self.rows[2].clone())
    }

    pub fn apply(&self, v: &Vec3<T>) -> Vec3<T> {
        [dot3(&self.rows[0], v), dot3(&self.rows[1], v), dot3(&self.rows[2], v)]
    }

    pub fn matmul(&self, other: &Self) -> Self {
        let cols = [other.column(0), other.column(1), other.column(2)];
        let row = |i: usize| -> [T; 3] {
            [dot3(&self.rows[i], &cols[0]), dot3(&self.rows[i], &cols[1]), dot3(&self.rows[i], &cols[2])]
        };
        Self::new([row(0), row(1), row(2)])
    }

    pub fn det(&self) -> T {
        dot3(&self.rows[0], &cross3(&self.rows[1], &self.rows[2]))
    }

    /// `M^T M == I`, compared with `==` (exact for exact scalars).
    pub fn is_orthogonal(&self) -> bool {
        self.transpose().matmul(self) == Self::identity()
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> Mat3<U> {
        let r = |i: usize| [f(&self.rows[i][0]), f(&self.rows[i][1]), f(&self.rows[i][2])];
        Mat3 { rows: [r(0), r(1), r(2)] }
    }
}

impl<T: Scalar> Mul for &Mat3<T> {
    type Output = Mat3<T>;
    fn mul(self, rhs: Self) -> Mat3<T> {
        self.matmul(rhs)
    }
}
