use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{shape, Error, Result};
use crate::scalar::{format_scalar, int, random_scalar, Scalar};
use crate::vector::{forward_owned, Vector};

/// Dense row-major matrix. As a linear map it acts on column vectors, so
/// entry `(i, j)` is the `i`-th coordinate of the image of the `j`-th basis
/// vector. As an element of `V ⊗ W` entry `(i, j)` is the coefficient of
/// `e_i ⊗ f_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(shape("ragged matrix rows"));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let grid = rows.iter().map(|row| row.iter().map(|&x| int(x)).collect()).collect();
        Self::from_rows(grid).expect("ragged literal")
    }

    pub fn from_columns(cols: &[Vector]) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vector::len);
        if cols.iter().any(|v| v.len() != r) {
            return Err(shape("columns of unequal length"));
        }
        Ok(Self::from_fn(r, c, |i, j| cols[j][i].clone()))
    }

    pub fn random<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Self {
        Self::from_fn(rows, cols, |_, _| random_scalar(rng))
    }

    /// Matrix with integer entries drawn uniformly from `lo..=hi`.
    pub fn random_int<R: Rng + ?Sized>(rows: usize, cols: usize, lo: i64, hi: i64, rng: &mut R) -> Self {
        Self::from_fn(rows, cols, |_, _| int(rng.gen_range(lo..=hi)))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector::from_vec(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::from_vec((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).into_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix apply: dimension mismatch");
        Vector::from_vec(
            (0..self.rows)
                .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
                .collect(),
        )
    }

    pub fn try_apply(&self, v: &Vector) -> Result<Vector> {
        if self.cols != v.len() {
            return Err(shape(format!("{}x{} matrix applied to length {}", self.rows, self.cols, v.len())));
        }
        Ok(self.apply(v))
    }

    /// Bilinear pairing `uᵀ M v`.
    pub fn pair(&self, u: &Vector, v: &Vector) -> Scalar {
        u.dot(&self.apply(v))
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // First nonzero entry at or below `row` is the pivot.
            let Some(p) = (row..m.rows).find(|&i| !m[(i, col)].is_zero()) else { continue };
            m.swap_rows(row, p);
            let inv = m[(row, col)].recip();
            for j in 0..m.cols {
                let v = &m[(row, j)] * &inv;
                m[(row, j)] = v;
            }
            for i in 0..m.rows {
                if i != row && !m[(i, col)].is_zero() {
                    let f = m[(i, col)].clone();
                    for j in 0..m.cols {
                        let v = &m[(i, j)] - &(&f * &m[(row, j)]);
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(shape(format!("inverse of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular(format!("rank {} < {}", self.rank(), n)));
        }
        Ok(Self::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Solves `self · x = b` for square invertible `self`.
    pub fn solve(&self, b: &Vector) -> Result<Vector> {
        Ok(self.inverse()?.apply(b))
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(shape("hstack: row counts differ"));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        }))
    }

    /// Block-diagonal `diag(self, other)`.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        Self::from_fn(self.rows + other.rows, self.cols + other.cols, |i, j| {
            match (i < self.rows, j < self.cols) {
                (true, true) => self[(i, j)].clone(),
                (false, false) => other[(i - self.rows, j - self.cols)].clone(),
                _ => Scalar::zero(),
            }
        })
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows.start + i, cols.start + j)].clone())
    }

    /// Lexicographically first nonzero entry.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.data.iter().position(|x| !x.is_zero()).map(|p| (p / self.cols, p % self.cols))
    }
}

/// `(f ⊗ g) r` for `r ∈ V ⊗ W` stored as a coefficient matrix: `f r gᵀ`.
pub fn tensor_apply(f: &Matrix, g: &Matrix, r: &Matrix) -> Matrix {
    &(f * r) * &g.transpose()
}

/// The dual map: `⟨φ*(w*), v⟩ = ⟨w*, φ(v)⟩`, i.e. the transpose.
pub fn matrix_transpose_dual(phi: &Matrix) -> Matrix {
    phi.transpose()
}

/// The flip `σ(u ⊗ v) = v ⊗ u` on a square coefficient matrix.
pub fn permute_tensor2(r: &Matrix) -> Result<Matrix> {
    if !r.is_square() {
        return Err(shape(format!("σ needs a square element, got {}x{}", r.rows, r.cols)));
    }
    Ok(r.transpose())
}

/// Linear combination `Σ x_i M_i` of a family of matrices indexed by a basis.
pub fn combine(maps: &[Matrix], x: &Vector) -> Matrix {
    assert_eq!(maps.len(), x.len(), "combine: coefficient count mismatch");
    assert!(!maps.is_empty(), "combine: empty family has no shape");
    let mut acc = Matrix::zeros(maps[0].rows, maps[0].cols);
    for (m, c) in maps.iter().zip(x.iter()) {
        if !c.is_zero() {
            acc = &acc + &m.scale(c);
        }
    }
    acc
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix add: shape mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sub: shape mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix mul: inner dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl Neg for Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        -&self
    }
}

forward_owned!(Add, add, Matrix);
forward_owned!(Sub, sub, Matrix);
forward_owned!(Mul, mul, Matrix);

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|j| format_scalar(&self[(i, j)])).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_i64(&[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(3));
        assert_eq!(&inv * &m, Matrix::identity(3));
    }

    #[test]
    fn singular_detected_exactly() {
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(matches!(m.inverse(), Err(Error::Singular(_))));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn tensor_apply_matches_elementwise_definition() {
        // (f ⊗ g)(e_0 ⊗ e_1) = f e_0 ⊗ g e_1
        let f = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let g = Matrix::from_i64(&[&[0, 1], &[5, -1]]);
        let r = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let out = tensor_apply(&f, &g, &r);
        let fe0 = f.column(0);
        let ge1 = g.column(1);
        assert_eq!(out, Matrix::from_fn(2, 2, |i, j| &fe0[i] * &ge1[j]));
    }

    #[test]
    fn transpose_dual_pairing() {
        let m = Matrix::from_fn(3, 3, |i, j| frac((i * 3 + j) as i64 - 4, (j + 1) as i64));
        let d = matrix_transpose_dual(&m);
        for i in 0..3 {
            for j in 0..3 {
                // ⟨M* e_j*, e_i⟩ = ⟨e_j*, M e_i⟩
                let lhs = d.apply(&Vector::basis(3, j))[i].clone();
                let rhs = m.apply(&Vector::basis(3, i))[j].clone();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
