use antiflex_linear::{product, Error, Matrix, Result, Tensor3, Vector};

fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

fn check_cubic(name: &str, c: &Tensor3, n: usize) -> Result<()> {
    if c.dims() != [n, n, n] {
        return Err(Error::Shape(format!("{name} has extents {:?}, expected cubic of size {n}", c.dims())));
    }
    Ok(())
}

/// Structure constants in the basis given by the columns of `p`.
pub fn change_basis(c: &Tensor3, p: &Matrix) -> Result<Tensor3> {
    let inv = p.inverse()?;
    if c.dims() != [p.rows(); 3] {
        return Err(Error::Shape(format!("basis change of size {} on tensor {:?}", p.rows(), c.dims())));
    }
    let pt = p.transpose();
    Ok(c.apply_each(&pt, &pt, &inv))
}

/// Left multiplication `L(x)`: the matrix of `y ↦ x • y`.
pub fn left_mul(c: &Tensor3, x: &Vector) -> Matrix {
    let n = c.dims()[1];
    let m = c.dims()[2];
    Matrix::from_fn(m, n, |k, j| (0..x.len()).map(|i| &x[i] * &c[(i, j, k)]).sum())
}

/// Right multiplication `R(x)`: the matrix of `y ↦ y • x`.
pub fn right_mul(c: &Tensor3, x: &Vector) -> Matrix {
    let n = c.dims()[0];
    let m = c.dims()[2];
    Matrix::from_fn(m, n, |k, i| (0..x.len()).map(|j| &x[j] * &c[(i, j, k)]).sum())
}

/// Structure constants of the opposite product `x •ᵒᵖ y = y • x`.
pub fn opposite(c: &Tensor3) -> Tensor3 {
    c.move_slots([1, 0, 2])
}

/// A finite-dimensional algebra `(A, ∗)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub dimension: usize,
    pub basis_names: Vec<String>,
    pub product: Tensor3,
}

impl Algebra {
    pub fn new(product: Tensor3) -> Result<Self> {
        let n = product.dims()[0];
        Self::with_names(product, default_names(n))
    }

    pub fn with_names(product: Tensor3, basis_names: Vec<String>) -> Result<Self> {
        let n = basis_names.len();
        if n == 0 {
            return Err(Error::Shape("dimension must be positive".into()));
        }
        check_cubic("product", &product, n)?;
        Ok(Algebra { dimension: n, basis_names, product })
    }

    pub fn zero(n: usize) -> Self {
        Self::new(Tensor3::cubic(n)).expect("cubic by construction")
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        product(&self.product, x, y)
    }

    pub fn left(&self, x: &Vector) -> Matrix {
        left_mul(&self.product, x)
    }

    pub fn right(&self, x: &Vector) -> Matrix {
        right_mul(&self.product, x)
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.dimension, i)
    }

    pub fn change_basis(&self, p: &Matrix) -> Result<Algebra> {
        Algebra::new(change_basis(&self.product, p)?)
    }

    /// The associator `(x,y,z) = (x∗y)∗z − x∗(y∗z)`.
    pub fn triple(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        self.mul(&self.mul(x, y), z) - self.mul(x, &self.mul(y, z))
    }
}

/// A pre-anti-flexible candidate `(A, ≺, ≻)`; `x·y = x≺y + x≻y` is derived.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreAlgebra {
    pub dimension: usize,
    pub basis_names: Vec<String>,
    pub prec: Tensor3,
    pub succ: Tensor3,
}

impl PreAlgebra {
    pub fn new(prec: Tensor3, succ: Tensor3) -> Result<Self> {
        let n = prec.dims()[0];
        Self::with_names(prec, succ, default_names(n))
    }

    pub fn with_names(prec: Tensor3, succ: Tensor3, basis_names: Vec<String>) -> Result<Self> {
        let n = basis_names.len();
        if n == 0 {
            return Err(Error::Shape("dimension must be positive".into()));
        }
        check_cubic("≺", &prec, n)?;
        check_cubic("≻", &succ, n)?;
        Ok(PreAlgebra { dimension: n, basis_names, prec, succ })
    }

    pub fn zero(n: usize) -> Self {
        Self::new(Tensor3::cubic(n), Tensor3::cubic(n)).expect("cubic by construction")
    }

    pub fn dot(&self) -> Tensor3 {
        &self.prec + &self.succ
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.dimension, i)
    }

    pub fn prec_mul(&self, x: &Vector, y: &Vector) -> Vector {
        product(&self.prec, x, y)
    }

    pub fn succ_mul(&self, x: &Vector, y: &Vector) -> Vector {
        product(&self.succ, x, y)
    }

    pub fn dot_mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.prec_mul(x, y) + self.succ_mul(x, y)
    }

    pub fn l_prec(&self, x: &Vector) -> Matrix {
        left_mul(&self.prec, x)
    }

    pub fn r_prec(&self, x: &Vector) -> Matrix {
        right_mul(&self.prec, x)
    }

    pub fn l_succ(&self, x: &Vector) -> Matrix {
        left_mul(&self.succ, x)
    }

    pub fn r_succ(&self, x: &Vector) -> Matrix {
        right_mul(&self.succ, x)
    }

    pub fn l_dot(&self, x: &Vector) -> Matrix {
        self.l_prec(x) + self.l_succ(x)
    }

    pub fn r_dot(&self, x: &Vector) -> Matrix {
        self.r_prec(x) + self.r_succ(x)
    }

    pub fn change_basis(&self, p: &Matrix) -> Result<PreAlgebra> {
        PreAlgebra::new(change_basis(&self.prec, p)?, change_basis(&self.succ, p)?)
    }

    /// The opposite pre-algebra `x ≺ᵒᵖ y = y ≻ x`, `x ≻ᵒᵖ y = y ≺ x`.
    pub fn opposite(&self) -> PreAlgebra {
        PreAlgebra {
            dimension: self.dimension,
            basis_names: self.basis_names.clone(),
            prec: opposite(&self.succ),
            succ: opposite(&self.prec),
        }
    }
}

/// The underlying anti-flexible algebra `aF(A)` with `x·y = x≺y + x≻y`.
pub fn underlying_algebra(palg: &PreAlgebra) -> Algebra {
    Algebra { dimension: palg.dimension, basis_names: palg.basis_names.clone(), product: palg.dot() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PreTripleKind {
    /// `(x,y,z)_m = (x≻y)≺z − x≻(y≺z)`
    M,
    /// `(x,y,z)_l = (x·y)≻z − x≻(y≻z)`
    L,
    /// `(x,y,z)_r = (x≺y)≺z − x≺(y·z)`
    R,
}

pub fn triple(alg: &Algebra, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
    for v in [x, y, z] {
        if v.len() != alg.dimension {
            return Err(Error::Shape(format!("element of length {} in dimension {}", v.len(), alg.dimension)));
        }
    }
    Ok(alg.triple(x, y, z))
}

pub fn pre_triple(palg: &PreAlgebra, x: &Vector, y: &Vector, z: &Vector, kind: PreTripleKind) -> Result<Vector> {
    for v in [x, y, z] {
        if v.len() != palg.dimension {
            return Err(Error::Shape(format!("element of length {} in dimension {}", v.len(), palg.dimension)));
        }
    }
    Ok(pre_triple_unchecked(palg, x, y, z, kind))
}

pub(crate) fn pre_triple_unchecked(palg: &PreAlgebra, x: &Vector, y: &Vector, z: &Vector, kind: PreTripleKind) -> Vector {
    match kind {
        PreTripleKind::M => palg.prec_mul(&palg.succ_mul(x, y), z) - palg.succ_mul(x, &palg.prec_mul(y, z)),
        PreTripleKind::L => palg.succ_mul(&palg.dot_mul(x, y), z) - palg.succ_mul(x, &palg.succ_mul(y, z)),
        PreTripleKind::R => palg.prec_mul(&palg.prec_mul(x, y), z) - palg.prec_mul(x, &palg.dot_mul(y, z)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use antiflex_linear::int;

    #[test]
    fn left_and_right_multiplication_agree_with_product() {
        let c = Tensor3::from_fn([2, 2, 2], |i, j, k| int((i as i64 + 2 * j as i64) * (k as i64 + 1) - 1));
        let alg = Algebra::new(c).unwrap();
        let x = Vector::from_i64(&[2, -1]);
        let y = Vector::from_i64(&[1, 3]);
        assert_eq!(alg.left(&x).apply(&y), alg.mul(&x, &y));
        assert_eq!(alg.right(&y).apply(&x), alg.mul(&x, &y));
    }

    #[test]
    fn rejects_noncubic_constants() {
        assert!(Algebra::new(Tensor3::zeros(2, 2, 3)).is_err());
        assert!(PreAlgebra::new(Tensor3::cubic(2), Tensor3::cubic(3)).is_err());
    }

    #[test]
    fn triple_on_nonassociative_product_matches_two_step_expansion() {
        // e1*e1 = e2, e1*e2 = e1; everything else zero
        let mut c = Tensor3::cubic(2);
        c[(0, 0, 1)] = int(1);
        c[(0, 1, 0)] = int(1);
        let alg = Algebra::new(c).unwrap();
        let (e1, e2) = (alg.basis(0), alg.basis(1));
        // (e1*e1)*e2 = e2*e2 = 0 and e1*(e1*e2) = e1*e1 = e2
        assert_eq!(triple(&alg, &e1, &e1, &e2).unwrap(), Vector::from_i64(&[0, -1]));
    }
}
