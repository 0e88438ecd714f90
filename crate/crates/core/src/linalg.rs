//! Dense complex linear algebra: Gaussian elimination with partial pivoting
//! and a small 3×3 matrix type for interpolation maps.

use alloc::vec::Vec;
use core::ops::{Index, IndexMut, Mul};

use crate::error::{Error, Result};
use crate::Complex;

/// Relative pivot threshold: a pivot below `PIVOT_TOL * max_row_norm` is singular.
pub const PIVOT_TOL: f64 = 1e-12;

/// Row-major dense square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<Complex>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseMatrix { n, data: alloc::vec![Complex::new(0.0, 0.0); n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn mul_vec(&self, x: &[Complex]) -> Vec<Complex> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| {
                let row = &self.data[i * self.n..(i + 1) * self.n];
                row.iter().zip(x).map(|(a, b)| a * b).sum()
            })
            .collect()
    }

    /// Solves `A x = b` in place by Gaussian elimination with partial pivoting.
    ///
    /// Consumes the matrix; `b` is overwritten with the solution.
    pub fn solve_in_place(mut self, b: &mut [Complex]) -> Result<()> {
        let n = self.n;
        assert_eq!(b.len(), n);
        let max_row_norm =
            (0..n).map(|i| self.data[i * n..(i + 1) * n].iter().map(|z| z.norm()).sum::<f64>()).fold(0.0_f64, f64::max);
        let threshold = PIVOT_TOL * max_row_norm;

        for k in 0..n {
            let (p, pivot_mag) = (k..n).map(|i| (i, self.data[i * n + k].norm())).fold((k, -1.0), |best, cur| {
                if cur.1 > best.1 {
                    cur
                } else {
                    best
                }
            });
            if !(pivot_mag >= threshold) || pivot_mag == 0.0 {
                return Err(Error::SingularSystem { pivot: pivot_mag.max(0.0) });
            }
            if p != k {
                for j in 0..n {
                    self.data.swap(k * n + j, p * n + j);
                }
                b.swap(k, p);
            }
            let pivot = self.data[k * n + k];
            for i in k + 1..n {
                let factor = self.data[i * n + k] / pivot;
                if factor == Complex::new(0.0, 0.0) {
                    continue;
                }
                self.data[i * n + k] = Complex::new(0.0, 0.0);
                for j in k + 1..n {
                    let upper = self.data[k * n + j];
                    self.data[i * n + j] -= factor * upper;
                }
                let bk = b[k];
                b[i] -= factor * bk;
            }
        }
        for k in (0..n).rev() {
            let mut acc = b[k];
            for j in k + 1..n {
                acc -= self.data[k * n + j] * b[j];
            }
            b[k] = acc / self.data[k * n + k];
        }
        if b.iter().any(|z| !crate::is_finite(*z)) {
            return Err(Error::NonFinite("linear solve"));
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = Complex;
    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex {
        &mut self.data[i * self.n + j]
    }
}

pub type Vec3 = [Complex; 3];

/// 3×3 complex matrix acting on boundary voltage triples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat3(pub [[Complex; 3]; 3]);

impl Mat3 {
    pub fn identity() -> Self {
        let o = Complex::new(0.0, 0.0);
        let i = Complex::new(1.0, 0.0);
        Mat3([[i, o, o], [o, i, o], [o, o, i]])
    }

    pub fn from_real(rows: [[f64; 3]; 3]) -> Self {
        Mat3(rows.map(|row| row.map(|x| Complex::new(x, 0.0))))
    }

    pub fn from_columns(cols: [Vec3; 3]) -> Self {
        let mut m = [[Complex::new(0.0, 0.0); 3]; 3];
        for (j, col) in cols.iter().enumerate() {
            for i in 0..3 {
                m[i][j] = col[i];
            }
        }
        Mat3(m)
    }

    pub fn diag(d: Vec3) -> Self {
        let mut m = Mat3([[Complex::new(0.0, 0.0); 3]; 3]);
        for i in 0..3 {
            m.0[i][i] = d[i];
        }
        m
    }

    pub fn apply(&self, v: Vec3) -> Vec3 {
        core::array::from_fn(|i| (0..3).map(|j| self.0[i][j] * v[j]).sum())
    }

    pub fn row_sums(&self) -> Vec3 {
        self.0.map(|row| row.iter().sum())
    }

    /// Largest `|row sum - 1|`; zero for an exactly row-stochastic matrix.
    pub fn stochastic_defect(&self) -> f64 {
        self.row_sums().iter().map(|s| (s - Complex::new(1.0, 0.0)).norm()).fold(0.0, f64::max)
    }

    /// Induced ∞-norm (max absolute row sum).
    pub fn norm_inf(&self) -> f64 {
        self.0.iter().map(|row| row.iter().map(|z| z.norm()).sum::<f64>()).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> Complex {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    pub fn det(&self) -> Complex {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Sum of the principal 2×2 minors (second coefficient of the characteristic polynomial).
    pub fn principal_minor_sum(&self) -> Complex {
        let m = &self.0;
        (m[0][0] * m[1][1] - m[0][1] * m[1][0])
            + (m[0][0] * m[2][2] - m[0][2] * m[2][0])
            + (m[1][1] * m[2][2] - m[1][2] * m[2][1])
    }

    pub fn inverse(&self) -> Option<Mat3> {
        let det = self.det();
        if det.norm() == 0.0 {
            return None;
        }
        let m = &self.0;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        let adj = [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ];
        Some(Mat3(adj.map(|row| row.map(|z| z / det))))
    }

    /// Max entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Mat3) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        worst
    }
}

impl Mul for Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: Mat3) -> Mat3 {
        Mat3(core::array::from_fn(|i| core::array::from_fn(|j| (0..3).map(|k| self.0[i][k] * rhs.0[k][j]).sum())))
    }
}

pub(crate) fn max_norm(v: &[Complex]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
