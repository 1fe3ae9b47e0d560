//! Comultiplications and the dual products they induce.

use antiflex_algebra::{check_pre, run_identities, CheckReport, Identity, PreAlgebra, WitnessMode};
use antiflex_linear::{Error, Matrix, Result, Tensor3, Vector};

/// `Δ(e_i) = Σ_{j,k} d[i][j][k] e_j ⊗ e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comultiplication {
    pub coeffs: Tensor3,
}

impl Comultiplication {
    pub fn new(coeffs: Tensor3) -> Result<Self> {
        let n = coeffs.dims()[0];
        if n == 0 || !coeffs.is_cubic() {
            return Err(Error::Shape(format!("comultiplication must be cubic, got {:?}", coeffs.dims())));
        }
        Ok(Comultiplication { coeffs })
    }

    pub fn zero(n: usize) -> Self {
        Comultiplication { coeffs: Tensor3::cubic(n) }
    }

    /// Builds `Δ` from the images `Δ(e_i)` as coefficient matrices.
    pub fn from_images(images: &[Matrix]) -> Result<Self> {
        Self::new(Tensor3::from_slices(images)?)
    }

    pub fn dimension(&self) -> usize {
        self.coeffs.dims()[0]
    }

    /// `Δ(x)` as a coefficient matrix in `A ⊗ A`.
    pub fn apply(&self, x: &Vector) -> Matrix {
        self.coeffs.contract_first(x)
    }

    /// `σ∘Δ`.
    pub fn flipped(&self) -> Comultiplication {
        Comultiplication { coeffs: self.coeffs.move_slots([0, 2, 1]) }
    }

    /// The comultiplication `Δ(e_k)[i][j] = c[i][j][k]` whose dual is the product `c`.
    pub fn dual_of_product(c: &Tensor3) -> Comultiplication {
        Comultiplication { coeffs: c.move_slots([1, 2, 0]) }
    }

    /// The product on the dual space, `⟨a ∘ b, x⟩ = ⟨a ⊗ b, Δ(x)⟩`.
    pub fn dual_product(&self) -> Tensor3 {
        self.coeffs.move_slots([2, 0, 1])
    }

    /// `Δ` in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Comultiplication> {
        let inv = p.inverse()?;
        Comultiplication::new(self.coeffs.apply_each(&p.transpose(), &inv, &inv))
    }
}

impl std::ops::Add for &Comultiplication {
    type Output = Comultiplication;
    fn add(self, rhs: &Comultiplication) -> Comultiplication {
        Comultiplication { coeffs: &self.coeffs + &rhs.coeffs }
    }
}

fn same_dimension(dp: &Comultiplication, ds: &Comultiplication) -> Result<usize> {
    if dp.dimension() != ds.dimension() {
        return Err(Error::Shape(format!("Δ_≺ has dimension {}, Δ_≻ has {}", dp.dimension(), ds.dimension())));
    }
    Ok(dp.dimension())
}

/// `≺` and `≻` on `A*` dual to `Δ_≺` and `Δ_≻`.
pub fn dual_products_from_comult(dp: &Comultiplication, ds: &Comultiplication) -> Result<PreAlgebra> {
    same_dimension(dp, ds)?;
    PreAlgebra::new(dp.dual_product(), ds.dual_product())
}

/// `(D1 ⊗ id) M` for `M ∈ A ⊗ A`.
fn left_apply(d1: &Comultiplication, m: &Matrix) -> Tensor3 {
    let n = d1.dimension();
    Tensor3::from_fn([n; 3], |i, j, k| (0..n).map(|p| &m[(p, k)] * &d1.coeffs[(p, i, j)]).sum())
}

/// `(id ⊗ D1) M` for `M ∈ A ⊗ A`.
fn right_apply(d1: &Comultiplication, m: &Matrix) -> Tensor3 {
    let n = d1.dimension();
    Tensor3::from_fn([n; 3], |i, j, k| (0..n).map(|p| &m[(i, p)] * &d1.coeffs[(p, j, k)]).sum())
}

/// The two co-identities in `A ⊗ A ⊗ A` dual to pre-anti-flexibility of
/// `A*`, one residual per `x`.
pub fn comult_identities<'a>(dp: &'a Comultiplication, ds: &'a Comultiplication) -> Vec<Identity<'a>> {
    let n = dp.dimension();
    let dd = dp + ds;
    let (sp, ss, sd) = (dp.flipped(), ds.flipped(), dd.flipped());
    let (dd1, sp1, ss1) = (dd.clone(), sp.clone(), ss.clone());
    vec![
        Identity::new(
            "co-identity (Δ_≻⊗id)Δ_≺ − (id⊗Δ_≺)Δ_≻ = (id⊗σΔ_≻)σΔ_≺ − (σΔ_≺⊗id)σΔ_≻",
            vec![n],
            move |v: &[Vector]| {
                let x = &v[0];
                let t = &(&left_apply(ds, &dp.apply(x)) - &right_apply(dp, &ds.apply(x)))
                    - &(&right_apply(&ss1, &sp1.apply(x)) - &left_apply(&sp1, &ss1.apply(x)));
                t.entries().to_vec()
            },
        ),
        Identity::new(
            "co-identity (Δ⊗id)Δ_≻ − (id⊗Δ_≻)Δ_≻ = (id⊗σΔ_≺)σΔ_≺ − (σΔ⊗id)σΔ_≺",
            vec![n],
            move |v: &[Vector]| {
                let x = &v[0];
                let t = &(&left_apply(&dd1, &ds.apply(x)) - &right_apply(ds, &ds.apply(x)))
                    - &(&right_apply(&sp, &sp.apply(x)) - &left_apply(&sd, &sp.apply(x)));
                t.entries().to_vec()
            },
        ),
    ]
}

/// Checks that `Δ_≺, Δ_≻` induce a pre-anti-flexible structure on `A*`,
/// both through the co-identities and through the induced products. The two
/// routes must agree.
pub fn check_dual_pre_via_rmatrix(dp: &Comultiplication, ds: &Comultiplication) -> Result<CheckReport> {
    same_dimension(dp, ds)?;
    let co = run_identities("dual pre-anti-flexible (co-identities)", &comult_identities(dp, ds), WitnessMode::First);
    let direct = check_pre(&dual_products_from_comult(dp, ds)?);
    if co.passed != direct.passed {
        return Err(Error::Consistency(format!(
            "co-identities say {}, induced products say {}",
            co.passed, direct.passed
        )));
    }
    Ok(co)
}
