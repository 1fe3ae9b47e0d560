//! An element `r ∈ A⊗A` read as a map `A* → A` through
//! `⟨r(u*), v*⟩ = ⟨r, u*⊗v*⟩`, the bilinear form of its inverse, and the
//! equivalent forms of the Yang-Baxter equation built from them.

use antiflex_algebra::{run_identities, underlying_algebra, CheckReport, Identity, PreAlgebra, WitnessMode};
use antiflex_linear::{Error, Matrix, Result, Tensor3, Vector};
use antiflex_representation::{transform_unchecked, DerivedBimodule, PreBimodule, Transform};

use crate::o_operator::OOperator;

fn check_square(palg: &PreAlgebra, r: &Matrix) -> Result<()> {
    let n = palg.dimension;
    if r.rows() != n || r.cols() != n {
        return Err(Error::Shape(format!("r is {}x{}, algebra has dimension {n}", r.rows(), r.cols())));
    }
    Ok(())
}

fn require_symmetric(r: &Matrix) -> Result<()> {
    if r != &r.transpose() {
        return Err(Error::Precondition("r is not symmetric".into()));
    }
    Ok(())
}

/// The matrix of `r: A* → A`; the coefficient matrix acts by its first index.
pub fn r_as_map(r: &Matrix) -> Matrix {
    r.transpose()
}

/// `𝔅(x, y) = ⟨r⁻¹(x), y⟩` as the matrix `B` with `𝔅(x, y) = xᵀBy`.
pub fn form_from_r(r: &Matrix) -> Result<Matrix> {
    require_symmetric(r)?;
    let inv = r_as_map(r).inverse().map_err(|_| Error::Singular("r is degenerate".into()))?;
    Ok(inv.transpose())
}

pub fn two_cocycle_identity<'a>(palg: &'a PreAlgebra, b: &'a Matrix) -> Identity<'a> {
    Identity::new("𝔅(x·y, z) = 𝔅(y, z≺x) + 𝔅(x, y≻z)", vec![palg.dimension; 3], move |v: &[Vector]| {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        vec![b.pair(&palg.dot_mul(x, y), z) - b.pair(y, &palg.prec_mul(z, x)) - b.pair(x, &palg.succ_mul(y, z))]
    })
}

pub fn check_two_cocycle(palg: &PreAlgebra, b: &Matrix) -> Result<CheckReport> {
    check_square(palg, b)?;
    Ok(run_identities("2-cocycle", &[two_cocycle_identity(palg, b)], WitnessMode::First))
}

/// `r(a)·r(b) = r(R*_≺(r(a))b + L*_≻(r(b))a)` over pairs of dual vectors.
pub fn operator_form_identity<'a>(palg: &'a PreAlgebra, r: &'a Matrix) -> Identity<'a> {
    let m = r_as_map(r);
    Identity::new("r(a)·r(b) = r(R*_≺(r(a))b + L*_≻(r(b))a)", vec![palg.dimension; 2], move |v: &[Vector]| {
        let (a, b) = (&v[0], &v[1]);
        let (ra, rb) = (m.apply(a), m.apply(b));
        let inner = &palg.r_prec(&ra).transpose().apply(b) + &palg.l_succ(&rb).transpose().apply(a);
        (&palg.dot_mul(&ra, &rb) - &m.apply(&inner)).into_vec()
    })
}

pub fn operator_form_check(palg: &PreAlgebra, r: &Matrix) -> Result<CheckReport> {
    check_square(palg, r)?;
    require_symmetric(r)?;
    Ok(run_identities("operator form", &[operator_form_identity(palg, r)], WitnessMode::First))
}

/// `r: A* → A` as a candidate O-operator of `aF(A)` for `(R*_≺, L*_≻, A*)`.
pub fn o_operator_of_r(palg: &PreAlgebra, r: &Matrix) -> Result<OOperator> {
    check_square(palg, r)?;
    let DerivedBimodule::Af(bm) = transform_unchecked(&PreBimodule::regular(palg), Transform::AfDualOuter) else {
        unreachable!("the dual outer transform yields an anti-flexible bimodule")
    };
    debug_assert_eq!(bm.base, underlying_algebra(palg));
    OOperator::new(bm, r_as_map(r))
}

/// `a≺b = L*_≻(r(b))a`, `a≻b = R*_≺(r(a))b` on `A*`.
pub fn o_operator_dual_structure(palg: &PreAlgebra, r: &Matrix) -> Result<PreAlgebra> {
    Ok(crate::o_operator::induced_pre_from_o_operator(&o_operator_of_r(palg, r)?))
}

/// Which pairings characterize the compatible structure on `A`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CompatibleForm {
    /// `𝔅(x≺′y, z) = 𝔅(x, y≻z)` and `𝔅(x≻′y, z) = 𝔅(y, z≺x)`.
    #[default]
    Derived,
    /// `𝔅(x≺′y, z) = 𝔅(x, y·z)` and `𝔅(x≻′y, z) = 𝔅(y, z·x)`.
    Underlying,
}

/// `x≺′y = r(L*_≻(y)r⁻¹(x))`, `x≻′y = r(R*_≺(x)r⁻¹(y))`.
pub fn compatible_structure_on_a(palg: &PreAlgebra, r: &Matrix) -> Result<PreAlgebra> {
    check_square(palg, r)?;
    require_symmetric(r)?;
    let m = r_as_map(r);
    let inv = m.inverse().map_err(|_| Error::Singular("r is degenerate".into()))?;
    let rep = antiflex_coboundary::check_pafybe(palg, r)?.report;
    if let Some(w) = rep.witness {
        return Err(Error::Precondition(format!("r is not a solution: {w}")));
    }
    let n = palg.dimension;
    let e = |i| palg.basis(i);
    let prec_cols: Vec<Vec<Vector>> =
        (0..n).map(|i| (0..n).map(|j| m.apply(&palg.l_succ(&e(j)).transpose().apply(&inv.apply(&e(i))))).collect()).collect();
    let succ_cols: Vec<Vec<Vector>> =
        (0..n).map(|i| (0..n).map(|j| m.apply(&palg.r_prec(&e(i)).transpose().apply(&inv.apply(&e(j))))).collect()).collect();
    let prec = Tensor3::from_fn([n; 3], |i, j, k| prec_cols[i][j][k].clone());
    let succ = Tensor3::from_fn([n; 3], |i, j, k| succ_cols[i][j][k].clone());
    PreAlgebra::with_names(prec, succ, palg.basis_names.clone())
}

/// The pairings relating the compatible structure `primed` to `palg` through `𝔅`.
pub fn compatible_form_identities<'a>(
    palg: &'a PreAlgebra,
    primed: &'a PreAlgebra,
    b: &'a Matrix,
    form: CompatibleForm,
) -> Vec<Identity<'a>> {
    let n = palg.dimension;
    let (inner_prec, inner_succ): (fn(&PreAlgebra, &Vector, &Vector) -> Vector, fn(&PreAlgebra, &Vector, &Vector) -> Vector) =
        match form {
            CompatibleForm::Derived => (PreAlgebra::succ_mul, PreAlgebra::prec_mul),
            CompatibleForm::Underlying => (PreAlgebra::dot_mul, PreAlgebra::dot_mul),
        };
    vec![
        Identity::new("𝔅(x≺′y, z) = 𝔅(x, y∘z)", vec![n; 3], move |v: &[Vector]| {
            vec![b.pair(&primed.prec_mul(&v[0], &v[1]), &v[2]) - b.pair(&v[0], &inner_prec(palg, &v[1], &v[2]))]
        }),
        Identity::new("𝔅(x≻′y, z) = 𝔅(y, z∘x)", vec![n; 3], move |v: &[Vector]| {
            vec![b.pair(&primed.succ_mul(&v[0], &v[1]), &v[2]) - b.pair(&v[1], &inner_succ(palg, &v[2], &v[0]))]
        }),
    ]
}

pub fn check_compatible_structure(palg: &PreAlgebra, primed: &PreAlgebra, b: &Matrix, form: CompatibleForm) -> CheckReport {
    run_identities("compatible structure", &compatible_form_identities(palg, primed, b, form), WitnessMode::First)
}

#[cfg(test)]
mod tests {
    use super::*;
    use antiflex_linear::int;

    #[test]
    fn map_of_an_elementary_tensor() {
        // r = e_0⊗e_1: r(e_0*) = e_1, r(e_1*) = 0
        let r = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let m = r_as_map(&r);
        assert_eq!(m.apply(&Vector::basis(2, 0)), Vector::basis(2, 1));
        assert!(m.apply(&Vector::basis(2, 1)).is_zero());
    }

    #[test]
    fn form_is_the_inverse_pairing() {
        let r = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let b = form_from_r(&r).unwrap();
        assert_eq!(&b * &r, Matrix::identity(2));
        assert!(matches!(form_from_r(&Matrix::from_i64(&[&[1, 1], &[1, 1]])), Err(Error::Singular(_))));
        assert!(matches!(form_from_r(&Matrix::from_i64(&[&[1, 1], &[0, 1]])), Err(Error::Precondition(_))));
    }

    #[test]
    fn identity_form_on_zero_algebra_is_a_cocycle() {
        let palg = PreAlgebra::zero(3);
        let b = form_from_r(&Matrix::identity(3)).unwrap();
        assert!(check_two_cocycle(&palg, &b).unwrap().passed);
        assert!(operator_form_check(&palg, &Matrix::identity(3)).unwrap().passed);
        let primed = compatible_structure_on_a(&palg, &Matrix::identity(3)).unwrap();
        assert!(primed.prec.is_zero() && primed.succ.is_zero());
        assert_eq!(b[(0, 0)], int(1));
    }
}
