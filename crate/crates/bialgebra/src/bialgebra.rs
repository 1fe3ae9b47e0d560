//! Pre-anti-flexible bialgebras: verification through every equivalent
//! characterization, homomorphisms, and the dual bialgebra.

use antiflex_algebra::{check_pre, flat, run_identities, CheckReport, Identity, PreAlgebra, WitnessMode};
use antiflex_linear::{tensor_apply, Error, Matrix, Result, Vector};
use antiflex_matched_pair::{
    af_matched_full_report, dual_pair, omega_double_check, pre_matched_full_report, standard_double,
    standard_dual_matched, DualPairOrder, FirstIdentityAction, MixedTermSign,
};

use crate::comult::{check_dual_pre_via_rmatrix, dual_products_from_comult, Comultiplication};
use crate::conditions::check_bialgebra_conditions;

/// A pre-anti-flexible structure on `A` together with `Δ_≺, Δ_≻ : A → A ⊗ A`,
/// whose duals are the products of `A*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    pub palg: PreAlgebra,
    pub delta_prec: Comultiplication,
    pub delta_succ: Comultiplication,
}

impl Bialgebra {
    pub fn new(palg: PreAlgebra, delta_prec: Comultiplication, delta_succ: Comultiplication) -> Result<Self> {
        let n = palg.dimension;
        if delta_prec.dimension() != n || delta_succ.dimension() != n {
            return Err(Error::Shape(format!(
                "algebra has dimension {n}, comultiplications {} and {}",
                delta_prec.dimension(),
                delta_succ.dimension()
            )));
        }
        Ok(Bialgebra { palg, delta_prec, delta_succ })
    }

    pub fn zero(n: usize) -> Self {
        Bialgebra { palg: PreAlgebra::zero(n), delta_prec: Comultiplication::zero(n), delta_succ: Comultiplication::zero(n) }
    }

    /// Builds the candidate from a pre-structure on `A` and one on `A*`.
    pub fn from_pair(palg: PreAlgebra, palg_star: &PreAlgebra) -> Result<Self> {
        Self::new(
            palg,
            Comultiplication::dual_of_product(&palg_star.prec),
            Comultiplication::dual_of_product(&palg_star.succ),
        )
    }

    pub fn dimension(&self) -> usize {
        self.palg.dimension
    }

    /// The products on `A*`.
    pub fn dual_algebra(&self) -> PreAlgebra {
        dual_products_from_comult(&self.delta_prec, &self.delta_succ).expect("dimensions checked on construction")
    }

    /// The same bialgebra in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Bialgebra> {
        Bialgebra::new(self.palg.change_basis(p)?, self.delta_prec.change_basis(p)?, self.delta_succ.change_basis(p)?)
    }
}

/// Verdicts of the equivalent characterizations, once both `A` and `A*`
/// are known to be pre-anti-flexible.
#[derive(Clone, Debug)]
pub struct RouteReports {
    pub conditions: CheckReport,
    pub pre_matched: CheckReport,
    pub af_matched: CheckReport,
    pub omega: CheckReport,
}

impl RouteReports {
    pub fn verdicts(&self) -> [bool; 4] {
        [self.conditions.passed, self.pre_matched.passed, self.af_matched.passed, self.omega.passed]
    }
}

/// Evaluates the four characterizations without comparing them.
pub fn bialgebra_routes(b: &Bialgebra) -> Result<RouteReports> {
    let star = b.dual_algebra();
    let pm = dual_pair(&b.palg, &star, DualPairOrder::Derived)?;
    let af = standard_dual_matched(&b.palg, &star)?;
    Ok(RouteReports {
        conditions: check_bialgebra_conditions(&b.palg, &b.delta_prec, &b.delta_succ)?,
        pre_matched: pre_matched_full_report(&pm, FirstIdentityAction::Prec)?,
        af_matched: af_matched_full_report(&af, MixedTermSign::Mirrored)?,
        omega: omega_double_check(&standard_double(&b.palg, &star)?)?,
    })
}

/// Full verification. `A` and `A*` must be pre-anti-flexible; then the
/// compatibility conditions, the matched pair of pre-anti-flexible algebras,
/// the matched pair of underlying algebras and the form on the double are
/// evaluated. Disagreement between them is an [`Error::Consistency`].
pub fn verify_bialgebra(b: &Bialgebra) -> Result<CheckReport> {
    let base = check_pre(&b.palg);
    let dual = check_dual_pre_via_rmatrix(&b.delta_prec, &b.delta_succ)?;
    if !base.passed || !dual.passed {
        return Ok(CheckReport::all("bialgebra", [base, dual]));
    }
    let routes = bialgebra_routes(b)?;
    let v = routes.verdicts();
    if v.iter().any(|&p| p != v[0]) {
        return Err(Error::Consistency(format!(
            "conditions {}, pre matched pair {}, af matched pair {}, closed form {}",
            v[0], v[1], v[2], v[3]
        )));
    }
    Ok(CheckReport::all(
        "bialgebra",
        [base, dual, routes.conditions, routes.pre_matched, routes.af_matched, routes.omega],
    ))
}

/// `A*` with the products of `A` as its comultiplications. Requires a valid bialgebra.
pub fn dual_bialgebra(b: &Bialgebra) -> Result<Bialgebra> {
    if let Some(w) = verify_bialgebra(b)?.witness {
        return Err(Error::Precondition(format!("not a bialgebra: {w}")));
    }
    Ok(dual_bialgebra_unchecked(b))
}

pub fn dual_bialgebra_unchecked(b: &Bialgebra) -> Bialgebra {
    Bialgebra {
        palg: b.dual_algebra(),
        delta_prec: Comultiplication::dual_of_product(&b.palg.prec),
        delta_succ: Comultiplication::dual_of_product(&b.palg.succ),
    }
}

/// Identities of a homomorphism `ψ : A → B`.
pub fn hom_identities<'a>(psi: &'a Matrix, src: &'a Bialgebra, dst: &'a Bialgebra) -> Vec<Identity<'a>> {
    let (n, m) = (src.dimension(), dst.dimension());
    let (pa, pb) = (&src.palg, &dst.palg);
    let psi_t = psi.transpose();
    let beta = |c: &antiflex_linear::Tensor3| Comultiplication::dual_of_product(c);
    let (beta_pa, beta_sa, beta_pb, beta_sb) = (beta(&pa.prec), beta(&pa.succ), beta(&pb.prec), beta(&pb.succ));
    let psi_t2 = psi_t.clone();
    vec![
        Identity::new("ψ(x≺y) = ψ(x)≺ψ(y)", vec![n, n], move |v: &[Vector]| {
            (psi.apply(&pa.prec_mul(&v[0], &v[1])) - pb.prec_mul(&psi.apply(&v[0]), &psi.apply(&v[1]))).into_vec()
        }),
        Identity::new("ψ(x≻y) = ψ(x)≻ψ(y)", vec![n, n], move |v: &[Vector]| {
            (psi.apply(&pa.succ_mul(&v[0], &v[1])) - pb.succ_mul(&psi.apply(&v[0]), &psi.apply(&v[1]))).into_vec()
        }),
        Identity::new("(ψ⊗ψ)Δ_≺ = Δ_≺∘ψ", vec![n], move |v: &[Vector]| {
            flat(&(tensor_apply(psi, psi, &src.delta_prec.apply(&v[0])) - dst.delta_prec.apply(&psi.apply(&v[0]))))
        }),
        Identity::new("(ψ⊗ψ)Δ_≻ = Δ_≻∘ψ", vec![n], move |v: &[Vector]| {
            flat(&(tensor_apply(psi, psi, &src.delta_succ.apply(&v[0])) - dst.delta_succ.apply(&psi.apply(&v[0]))))
        }),
        Identity::new("(ψ*⊗ψ*)β_≺ = β_≺∘ψ*", vec![m], move |v: &[Vector]| {
            flat(&(tensor_apply(&psi_t, &psi_t, &beta_pb.apply(&v[0])) - beta_pa.apply(&psi_t.apply(&v[0]))))
        }),
        Identity::new("(ψ*⊗ψ*)β_≻ = β_≻∘ψ*", vec![m], move |v: &[Vector]| {
            flat(&(tensor_apply(&psi_t2, &psi_t2, &beta_sb.apply(&v[0])) - beta_sa.apply(&psi_t2.apply(&v[0]))))
        }),
    ]
}

pub fn check_bialgebra_hom(psi: &Matrix, src: &Bialgebra, dst: &Bialgebra) -> Result<CheckReport> {
    if psi.rows() != dst.dimension() || psi.cols() != src.dimension() {
        return Err(Error::Shape(format!(
            "ψ is {}x{}, expected {}x{}",
            psi.rows(),
            psi.cols(),
            dst.dimension(),
            src.dimension()
        )));
    }
    Ok(run_identities("bialgebra homomorphism", &hom_identities(psi, src, dst), WitnessMode::First))
}
