use antiflex_linear::{Error, Matrix, Result, Tensor3, Vector};

use crate::algebra::{opposite, Algebra, PreAlgebra};
use crate::identities::{anti_flexibility, associativity};
use crate::check::{run_identities, Identity, WitnessMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivedKind {
    /// `x∘y = x≻y − y≺x`
    LieAdmissible,
    /// `[x,y] = x·y − y·x`
    Commutator,
}

pub fn derived_products(palg: &PreAlgebra, kind: DerivedKind) -> Algebra {
    let product = match kind {
        DerivedKind::LieAdmissible => &palg.succ - &opposite(&palg.prec),
        DerivedKind::Commutator => {
            let dot = palg.dot();
            &dot - &opposite(&dot)
        }
    };
    Algebra { dimension: palg.dimension, basis_names: palg.basis_names.clone(), product }
}

/// One-sided pre-structures carried by an associative algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssociativeVariant {
    /// `x≻y = x∗y`, `x≺y = 0`
    SuccLeft,
    /// `x≻y = y∗x`, `x≺y = 0`
    SuccRight,
    /// `x≺y = x∗y`, `x≻y = 0`
    PrecLeft,
    /// `x≺y = y∗x`, `x≻y = 0`
    PrecRight,
}

impl AssociativeVariant {
    pub const ALL: [AssociativeVariant; 4] = [Self::SuccLeft, Self::SuccRight, Self::PrecLeft, Self::PrecRight];

    pub fn name(self) -> &'static str {
        match self {
            Self::SuccLeft => "succ-left",
            Self::SuccRight => "succ-right",
            Self::PrecLeft => "prec-left",
            Self::PrecRight => "prec-right",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|v| v.name() == s)
    }
}

pub fn from_associative(assoc: &Algebra, variant: AssociativeVariant) -> Result<PreAlgebra> {
    if let Some(w) = run_identities("associative", &associativity(assoc), WitnessMode::First).witness {
        return Err(Error::Precondition(format!("input is not associative: {w}")));
    }
    let n = assoc.dimension;
    let c = assoc.product.clone();
    let zero = Tensor3::cubic(n);
    let (prec, succ) = match variant {
        AssociativeVariant::SuccLeft => (zero, c),
        AssociativeVariant::SuccRight => (zero, opposite(&c)),
        AssociativeVariant::PrecLeft => (c, zero),
        AssociativeVariant::PrecRight => (opposite(&c), zero),
    };
    PreAlgebra::with_names(prec, succ, assoc.basis_names.clone())
}

/// Residual of the cyclic condition `ω(x∗y,z) + ω(y∗z,x) + ω(z∗x,y)`.
pub fn cyclic_form_identity<'a>(alg: &'a Algebra, omega: &'a Matrix) -> Identity<'a> {
    let n = alg.dimension;
    Identity::new("closedness ω(x∗y,z)+ω(y∗z,x)+ω(z∗x,y) = 0", vec![n; 3], move |a: &[Vector]| {
        let (x, y, z) = (&a[0], &a[1], &a[2]);
        let s = omega.pair(&alg.mul(x, y), z) + omega.pair(&alg.mul(y, z), x) + omega.pair(&alg.mul(z, x), y);
        vec![s]
    })
}

/// Residuals of `ω(x≺y,z) = ω(x,y∗z)` and `ω(x≻y,z) = ω(y,z∗x)`.
pub fn form_compatibility_identities<'a>(palg: &'a PreAlgebra, alg: &'a Algebra, omega: &'a Matrix) -> Vec<Identity<'a>> {
    let n = palg.dimension;
    vec![
        Identity::new("ω(x≺y,z) = ω(x,y∗z)", vec![n; 3], move |a: &[Vector]| {
            vec![omega.pair(&palg.prec_mul(&a[0], &a[1]), &a[2]) - omega.pair(&a[0], &alg.mul(&a[1], &a[2]))]
        }),
        Identity::new("ω(x≻y,z) = ω(y,z∗x)", vec![n; 3], move |a: &[Vector]| {
            vec![omega.pair(&palg.succ_mul(&a[0], &a[1]), &a[2]) - omega.pair(&a[1], &alg.mul(&a[2], &a[0]))]
        }),
    ]
}

/// The pre-structure determined by a nondegenerate closed form:
/// `ω(x≺y, z) = ω(x, y∗z)` and `ω(x≻y, z) = ω(y, z∗x)`.
pub fn induce_pre_from_form(alg: &Algebra, omega: &Matrix) -> Result<PreAlgebra> {
    let n = alg.dimension;
    if omega.rows() != n || omega.cols() != n {
        return Err(Error::Shape(format!("form is {}x{}, algebra has dimension {n}", omega.rows(), omega.cols())));
    }
    if let Some(w) = run_identities("anti-flexible", &anti_flexibility(alg), WitnessMode::First).witness {
        return Err(Error::Precondition(format!("algebra is not anti-flexible: {w}")));
    }
    // ω(v, e_l) = Σ_k v_k ω(e_k, e_l), so v solves ωᵀ v = rhs.
    let solver = omega.transpose().inverse().map_err(|_| Error::Singular("the form ω is degenerate".into()))?;
    if let Some(w) = cyclic_form_identity(alg, omega).first_failure() {
        return Err(Error::Precondition(format!("ω is not closed: {w}")));
    }
    let mut prec = Tensor3::cubic(n);
    let mut succ = Tensor3::cubic(n);
    for i in 0..n {
        for j in 0..n {
            let (ei, ej) = (alg.basis(i), alg.basis(j));
            let rhs_p = Vector::from_vec((0..n).map(|l| omega.pair(&ei, &alg.mul(&ej, &alg.basis(l)))).collect());
            let rhs_s = Vector::from_vec((0..n).map(|l| omega.pair(&ej, &alg.mul(&alg.basis(l), &ei))).collect());
            let p = solver.apply(&rhs_p);
            let s = solver.apply(&rhs_s);
            for k in 0..n {
                prec[(i, j, k)] = p[k].clone();
                succ[(i, j, k)] = s[k].clone();
            }
        }
    }
    PreAlgebra::with_names(prec, succ, alg.basis_names.clone())
}
