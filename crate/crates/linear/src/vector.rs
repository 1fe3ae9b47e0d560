use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::Zero;
use rand::Rng;

use crate::scalar::{int, random_scalar, Scalar};

/// Coordinates of an element in a space with a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![Scalar::zero(); n])
    }

    /// The `i`-th standard basis vector of an `n`-dimensional space.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = int(1);
        v
    }

    pub fn from_vec(v: Vec<Scalar>) -> Self {
        Vector(v)
    }

    pub fn from_i64(v: &[i64]) -> Self {
        Vector(v.iter().map(|&x| int(x)).collect())
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        Vector((0..n).map(|_| random_scalar(rng)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Scalar> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.0.iter()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Vector(self.0.iter().map(|x| x * s).collect())
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        assert_eq!(self.len(), other.len(), "dot: length mismatch");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Concatenation, used for direct sums `A ⊕ V` with the A-block first.
    pub fn concat(&self, other: &Vector) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Vector(v)
    }

    pub fn slice(&self, start: usize, end: usize) -> Self {
        Vector(self.0[start..end].to_vec())
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Scalar {
        &mut self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector add: length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector sub: length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Vector> for &Scalar {
    type Output = Vector;
    fn mul(self, rhs: &Vector) -> Vector {
        rhs.scale(self)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident, $t:ty) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                $tr::$m(&self, &rhs)
            }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                $tr::$m(&self, rhs)
            }
        }
        impl $tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                $tr::$m(self, &rhs)
            }
        }
    };
}
pub(crate) use forward_owned;

forward_owned!(Add, add, Vector);
forward_owned!(Sub, sub, Vector);

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        -&self
    }
}
