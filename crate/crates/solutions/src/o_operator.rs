//! O-operators of anti-flexible algebras and the symmetric solutions they
//! produce.

use antiflex_algebra::{check_pre, run_identities, CheckReport, Identity, PreAlgebra, WitnessMode};
use antiflex_linear::{Error, Matrix, Result, Tensor3, Vector};
use antiflex_representation::{
    check_af_bimodule, dual_reduced_double, eval, semidirect_pre, transform_unchecked, transpose_all, zero_family,
    AfBimodule, DerivedBimodule, PreBimodule, Transform,
};

/// A map `T: V → A` together with the bimodule `(l, r, V)` it relates to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OOperator {
    pub bimodule: AfBimodule,
    pub t: Matrix,
}

impl OOperator {
    pub fn new(bimodule: AfBimodule, t: Matrix) -> Result<Self> {
        if t.rows() != bimodule.base.dimension || t.cols() != bimodule.space_dim {
            return Err(Error::Shape(format!(
                "T is {}x{}, expected {}x{}",
                t.rows(),
                t.cols(),
                bimodule.base.dimension,
                bimodule.space_dim
            )));
        }
        Ok(OOperator { bimodule, t })
    }

    /// `id: A → A` for the bimodule `(L_≻, R_≺, A)` of the underlying algebra.
    pub fn regular(palg: &PreAlgebra) -> Self {
        let DerivedBimodule::Af(bimodule) = transform_unchecked(&PreBimodule::regular(palg), Transform::AfOuter) else {
            unreachable!("the outer transform yields an anti-flexible bimodule")
        };
        OOperator { bimodule, t: Matrix::identity(palg.dimension) }
    }

    fn l(&self, x: &Vector) -> Matrix {
        eval(&self.bimodule.l, x)
    }

    fn r(&self, x: &Vector) -> Matrix {
        eval(&self.bimodule.r, x)
    }

    pub fn is_injective(&self) -> bool {
        self.t.rank() == self.t.cols()
    }
}

pub fn o_operator_identity(oo: &OOperator) -> Identity<'_> {
    Identity::new("T(u)·T(v) = T(l(T(u))v + r(T(v))u)", vec![oo.bimodule.space_dim; 2], move |v: &[Vector]| {
        let (u, w) = (&v[0], &v[1]);
        let (tu, tw) = (oo.t.apply(u), oo.t.apply(w));
        let lhs = oo.bimodule.base.mul(&tu, &tw);
        let rhs = oo.t.apply(&(&oo.l(&tu).apply(w) + &oo.r(&tw).apply(u)));
        (&lhs - &rhs).into_vec()
    })
}

pub fn check_o_operator(oo: &OOperator) -> Result<CheckReport> {
    if let Some(w) = check_af_bimodule(&oo.bimodule).witness {
        return Err(Error::Precondition(format!("not a bimodule: {w}")));
    }
    Ok(run_identities("O-operator", &[o_operator_identity(oo)], WitnessMode::First))
}

/// The pre-structure on `V`: `u≻v = l(T(u))v`, `u≺v = r(T(v))u`.
pub fn induced_pre_from_o_operator(oo: &OOperator) -> PreAlgebra {
    let m = oo.bimodule.space_dim;
    let basis = |i| Vector::basis(m, i);
    let ls: Vec<Matrix> = (0..m).map(|i| oo.l(&oo.t.apply(&basis(i)))).collect();
    let rs: Vec<Matrix> = (0..m).map(|i| oo.r(&oo.t.apply(&basis(i)))).collect();
    let succ = Tensor3::from_fn([m; 3], |i, j, k| ls[i][(k, j)].clone());
    let prec = Tensor3::from_fn([m; 3], |i, j, k| rs[j][(k, i)].clone());
    PreAlgebra::new(prec, succ).expect("cubic by construction")
}

/// `Σᵢ (e_i⊗e_i* + e_i*⊗e_i)` on `A ⊕ A*`: the block matrix `[[0, I], [I, 0]]`.
pub fn canonical_r(n: usize) -> Matrix {
    Matrix::from_fn(2 * n, 2 * n, |i, j| if i + n == j || j + n == i { antiflex_linear::one() } else { antiflex_linear::zero() })
}

/// `A ⋉_{R*_≺,0,0,L*_≻} A*` and the canonical symmetric solution in it.
pub fn canonical_solution(palg: &PreAlgebra) -> Result<(PreAlgebra, Matrix)> {
    if let Some(w) = check_pre(palg).witness {
        return Err(Error::Precondition(format!("algebra is not pre-anti-flexible: {w}")));
    }
    Ok((dual_reduced_double(palg), canonical_r(palg.dimension)))
}

/// `r = T + σT` in `T(V) ⋉_{r*,0,0,l*} V*`, with `T(V)` carrying
/// `T(u)≻T(v) = T(l(T(u))v)`, `T(u)≺T(v) = T(r(T(v))u)` in the basis
/// `T(v_1), …, T(v_m)`. `T` must be an injective O-operator.
pub fn solution_from_o_operator(oo: &OOperator) -> Result<(PreAlgebra, Matrix)> {
    if !oo.is_injective() {
        return Err(Error::Precondition(format!("T has rank {} on a space of dimension {}", oo.t.rank(), oo.t.cols())));
    }
    if let Some(w) = check_o_operator(oo)?.witness {
        return Err(Error::Precondition(format!("T is not an O-operator: {w}")));
    }
    let image = induced_pre_from_o_operator(oo);
    let m = oo.bimodule.space_dim;
    let act = |f: &dyn Fn(&Vector) -> Matrix| transpose_all(&(0..m).map(|i| f(&oo.t.apply(&Vector::basis(m, i)))).collect::<Vec<_>>());
    let bm = PreBimodule::new(
        image.clone(),
        m,
        act(&|x| oo.r(x)),
        zero_family(m, m, m),
        zero_family(m, m, m),
        act(&|x| oo.l(x)),
    )?;
    let mut double = semidirect_pre(&bm);
    for i in 0..m {
        double.basis_names[i] = format!("T(v{})", i + 1);
        double.basis_names[m + i] = format!("v{}*", i + 1);
    }
    Ok((double, canonical_r(m)))
}
