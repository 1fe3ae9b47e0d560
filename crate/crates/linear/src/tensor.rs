use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_traits::Zero;
use rand::Rng;

use crate::error::{shape, Result};
use crate::matrix::Matrix;
use crate::scalar::{format_scalar, int, random_scalar, Scalar};
use crate::vector::{forward_owned, Vector};

/// Dense rank-3 array `t[i][j][k]`. Serves both as structure constants
/// (`e_i • e_j = Σ_k c[i][j][k] e_k`) and as an element of `U ⊗ V ⊗ W`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dims: [usize; 3],
    data: Vec<Scalar>,
}

/// Slot permutations of `A ⊗ A ⊗ A` used by the tensor calculus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Perm3 {
    /// `x ⊗ y ⊗ z ↦ z ⊗ y ⊗ x`
    Sigma13,
    /// `x ⊗ y ⊗ z ↦ z ⊗ x ⊗ y`, the cyclic shift of every factor one slot
    /// to the right.
    Cycle123,
}

impl Perm3 {
    /// Destination slot of each source slot.
    pub fn destinations(self) -> [usize; 3] {
        match self {
            Perm3::Sigma13 => [2, 1, 0],
            Perm3::Cycle123 => [1, 2, 0],
        }
    }
}

impl Tensor3 {
    pub fn zeros(d0: usize, d1: usize, d2: usize) -> Self {
        Tensor3 { dims: [d0, d1, d2], data: vec![Scalar::zero(); d0 * d1 * d2] }
    }

    pub fn cubic(n: usize) -> Self {
        Self::zeros(n, n, n)
    }

    pub fn from_fn(dims: [usize; 3], mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(dims.iter().product());
        for i in 0..dims[0] {
            for j in 0..dims[1] {
                for k in 0..dims[2] {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 { dims, data }
    }

    /// Builds from nested `[i][j][k]` arrays; every level must be rectangular.
    pub fn from_nested(v: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let d0 = v.len();
        let d1 = v.first().map_or(0, Vec::len);
        let d2 = v.first().and_then(|m| m.first()).map_or(0, Vec::len);
        if v.iter().any(|m| m.len() != d1 || m.iter().any(|r| r.len() != d2)) {
            return Err(shape("ragged rank-3 array"));
        }
        Ok(Tensor3 { dims: [d0, d1, d2], data: v.into_iter().flatten().flatten().collect() })
    }

    pub fn from_i64_nested(v: &[&[&[i64]]]) -> Self {
        let nested = v
            .iter()
            .map(|m| m.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .collect();
        Self::from_nested(nested).expect("ragged literal")
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dims[0])
            .map(|i| (0..self.dims[1]).map(|j| (0..self.dims[2]).map(|k| self[(i, j, k)].clone()).collect()).collect())
            .collect()
    }

    /// Stacks matrices as the slices `t[i][·][·]`.
    pub fn from_slices(slices: &[Matrix]) -> Result<Self> {
        let (r, c) = slices.first().map_or((0, 0), |m| (m.rows(), m.cols()));
        if slices.iter().any(|m| m.rows() != r || m.cols() != c) {
            return Err(shape("slices of unequal shape"));
        }
        Ok(Self::from_fn([slices.len(), r, c], |i, j, k| slices[i][(j, k)].clone()))
    }

    pub fn random<R: Rng + ?Sized>(dims: [usize; 3], rng: &mut R) -> Self {
        Self::from_fn(dims, |_, _, _| random_scalar(rng))
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn is_cubic(&self) -> bool {
        self.dims[0] == self.dims[1] && self.dims[1] == self.dims[2]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < self.dims[0] && j < self.dims[1] && k < self.dims[2]);
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    /// The matrix `t[i][·][·]`.
    pub fn slice(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dims[1], self.dims[2], |j, k| self[(i, j, k)].clone())
    }

    pub fn slices(&self) -> Vec<Matrix> {
        (0..self.dims[0]).map(|i| self.slice(i)).collect()
    }

    /// `Σ_i v_i t[i][·][·]`
    pub fn contract_first(&self, v: &Vector) -> Matrix {
        assert_eq!(v.len(), self.dims[0], "contract_first: length mismatch");
        Matrix::from_fn(self.dims[1], self.dims[2], |j, k| {
            (0..self.dims[0]).filter(|&i| !v[i].is_zero()).map(|i| &v[i] * &self[(i, j, k)]).sum()
        })
    }

    /// Moves the factor in source slot `p` to slot `dest[p]`.
    pub fn move_slots(&self, dest: [usize; 3]) -> Tensor3 {
        let mut out_dims = [0; 3];
        for p in 0..3 {
            out_dims[dest[p]] = self.dims[p];
        }
        let mut out = Tensor3::zeros(out_dims[0], out_dims[1], out_dims[2]);
        for i in 0..self.dims[0] {
            for j in 0..self.dims[1] {
                for k in 0..self.dims[2] {
                    let src = [i, j, k];
                    let mut idx = [0; 3];
                    for p in 0..3 {
                        idx[dest[p]] = src[p];
                    }
                    out[(idx[0], idx[1], idx[2])] = self[(i, j, k)].clone();
                }
            }
        }
        out
    }

    /// `(f ⊗ g ⊗ h) t`
    pub fn apply_each(&self, f: &Matrix, g: &Matrix, h: &Matrix) -> Tensor3 {
        self.apply_slot(0, f).apply_slot(1, g).apply_slot(2, h)
    }

    /// Applies `f` to the factor in one slot, leaving the others fixed.
    pub fn apply_slot(&self, slot: usize, f: &Matrix) -> Tensor3 {
        assert_eq!(f.cols(), self.dims[slot], "apply_slot: dimension mismatch");
        let mut dims = self.dims;
        dims[slot] = f.rows();
        Tensor3::from_fn(dims, |a, b, c| {
            let out = [a, b, c];
            let mut acc = Scalar::zero();
            for m in 0..self.dims[slot] {
                let coeff = &f[(out[slot], m)];
                if coeff.is_zero() {
                    continue;
                }
                let mut src = out;
                src[slot] = m;
                acc += coeff * &self[(src[0], src[1], src[2])];
            }
            acc
        })
    }

    pub fn scale(&self, s: &Scalar) -> Tensor3 {
        Tensor3 { dims: self.dims, data: self.data.iter().map(|x| x * s).collect() }
    }

    /// Lexicographically first nonzero entry.
    pub fn first_nonzero(&self) -> Option<(usize, usize, usize)> {
        self.data.iter().position(|x| !x.is_zero()).map(|p| {
            let k = p % self.dims[2];
            let j = (p / self.dims[2]) % self.dims[1];
            (p / (self.dims[1] * self.dims[2]), j, k)
        })
    }

    /// Scalar `Σ t[i][j][k] a_i b_j c_k`.
    pub fn evaluate(&self, a: &Vector, b: &Vector, c: &Vector) -> Scalar {
        let mut acc = Scalar::zero();
        for i in 0..self.dims[0] {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..self.dims[1] {
                if b[j].is_zero() {
                    continue;
                }
                let ab = &a[i] * &b[j];
                for k in 0..self.dims[2] {
                    let t = &self[(i, j, k)];
                    if !t.is_zero() {
                        acc += &ab * t * &c[k];
                    }
                }
            }
        }
        acc
    }
}

/// Evaluates the bilinear product with structure constants `c`:
/// `(x • y)_k = Σ_{i,j} x_i y_j c[i][j][k]`.
pub fn contract_product(c: &Tensor3, x: &Vector, y: &Vector) -> Result<Vector> {
    if x.len() != c.dims[0] || y.len() != c.dims[1] {
        return Err(shape(format!(
            "product with extents {:?} applied to lengths {} and {}",
            c.dims,
            x.len(),
            y.len()
        )));
    }
    Ok(product(c, x, y))
}

/// Unchecked `contract_product` for internal use on validated shapes.
pub fn product(c: &Tensor3, x: &Vector, y: &Vector) -> Vector {
    let [n0, n1, n2] = c.dims;
    let mut out = vec![Scalar::zero(); n2];
    for i in 0..n0 {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..n1 {
            if y[j].is_zero() {
                continue;
            }
            let xy = &x[i] * &y[j];
            for (k, o) in out.iter_mut().enumerate() {
                let ck = &c[(i, j, k)];
                if !ck.is_zero() {
                    *o += &xy * ck;
                }
            }
        }
    }
    Vector::from_vec(out)
}

/// Slot permutation of a cubical element of `A ⊗ A ⊗ A`.
pub fn permute3(t: &Tensor3, perm: Perm3) -> Result<Tensor3> {
    if !t.is_cubic() {
        return Err(shape(format!("slot permutation needs cubical extents, got {:?}", t.dims)));
    }
    Ok(t.move_slots(perm.destinations()))
}

impl Index<(usize, usize, usize)> for Tensor3 {
    type Output = Scalar;
    fn index(&self, (i, j, k): (usize, usize, usize)) -> &Scalar {
        &self.data[self.offset(i, j, k)]
    }
}

impl IndexMut<(usize, usize, usize)> for Tensor3 {
    fn index_mut(&mut self, (i, j, k): (usize, usize, usize)) -> &mut Scalar {
        let o = self.offset(i, j, k);
        &mut self.data[o]
    }
}

impl Add for &Tensor3 {
    type Output = Tensor3;
    fn add(self, rhs: &Tensor3) -> Tensor3 {
        assert_eq!(self.dims, rhs.dims, "tensor add: shape mismatch");
        Tensor3 { dims: self.dims, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Tensor3 {
    type Output = Tensor3;
    fn sub(self, rhs: &Tensor3) -> Tensor3 {
        assert_eq!(self.dims, rhs.dims, "tensor sub: shape mismatch");
        Tensor3 { dims: self.dims, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Tensor3 {
    type Output = Tensor3;
    fn neg(self) -> Tensor3 {
        Tensor3 { dims: self.dims, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl Neg for Tensor3 {
    type Output = Tensor3;
    fn neg(self) -> Tensor3 {
        -&self
    }
}

forward_owned!(Add, add, Tensor3);
forward_owned!(Sub, sub, Tensor3);

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let slices: Vec<String> = (0..self.dims[0]).map(|i| format!("{:?}", self.slice(i))).collect();
        write!(f, "Tensor3{:?}{{{}}}", self.dims, slices.join(", "))?;
        let _ = format_scalar;
        Ok(())
    }
}
