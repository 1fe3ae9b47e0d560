//! Pairing identities between the operators of `A*` and the
//! comultiplications of `A`, for `x, y ∈ A` and `a, b ∈ A*`. They follow from
//! duality alone, so they hold for every candidate, bialgebra or not.

use antiflex_algebra::{run_identities, CheckReport, Identity, PreAlgebra, WitnessMode};
use antiflex_linear::{tensor_apply, Matrix, Scalar, Vector};

use crate::bialgebra::Bialgebra;
use crate::comult::Comultiplication;

/// `⟨M, x ⊗ y⟩` for `M ∈ A* ⊗ A*`.
fn pair(m: &Matrix, x: &Vector, y: &Vector) -> Scalar {
    m.pair(x, y)
}

pub fn pairing_identities(b: &Bialgebra) -> Vec<Identity<'static>> {
    let n = b.dimension();
    let a_alg = b.palg.clone();
    let star: PreAlgebra = b.dual_algebra();
    let beta_p = Comultiplication::dual_of_product(&a_alg.prec);
    let beta_s = Comultiplication::dual_of_product(&a_alg.succ);
    let (dp, ds) = (b.delta_prec.clone(), b.delta_succ.clone());
    let dd = &dp + &ds;
    let id = Matrix::identity(n);
    let ctx = std::sync::Arc::new((a_alg, star, beta_p, beta_s, dp, ds, dd, id));
    type Ctx = (PreAlgebra, PreAlgebra, Comultiplication, Comultiplication, Comultiplication, Comultiplication, Comultiplication, Matrix);
    let mk = |label: &'static str, f: fn(&Ctx, &Vector, &Vector, &Vector, &Vector) -> Scalar| {
        let c = ctx.clone();
        Identity::new(label, vec![n; 4], move |v: &[Vector]| vec![f(&c, &v[0], &v[1], &v[2], &v[3])])
    };
    vec![
        mk("⟨β_≻(a∘b), x⊗y⟩ = ⟨a⊗b, Δ(x≻y)⟩", |c, x, y, a, b| {
            let (al, st, _, bs, _, _, dd, _) = c;
            pair(&bs.apply(&st.dot_mul(a, b)), x, y) - pair(&dd.apply(&al.succ_mul(x, y)), a, b)
        }),
        mk("⟨σβ_≺(b∘a), x⊗y⟩ = ⟨a⊗b, σΔ(y≺x)⟩", |c, x, y, a, b| {
            let (al, st, bp, _, _, _, dd, _) = c;
            pair(&bp.apply(&st.dot_mul(b, a)).transpose(), x, y) - pair(&dd.apply(&al.prec_mul(y, x)).transpose(), a, b)
        }),
        mk("⟨(R_≺(b)⊗id)β_≻(a), x⊗y⟩ = ⟨a⊗b, (R_≻(y)⊗id)Δ_≺(x)⟩", |c, x, y, a, b| {
            let (al, st, _, bs, dp, _, _, id) = c;
            pair(&tensor_apply(&st.r_prec(b), id, &bs.apply(a)), x, y)
                - pair(&tensor_apply(&al.r_succ(y), id, &dp.apply(x)), a, b)
        }),
        mk("⟨(id⊗L_∘(a))β_≻(b), x⊗y⟩ = ⟨a⊗b, (id⊗L_≻(x))Δ(y)⟩", |c, x, y, a, b| {
            let (al, st, _, bs, _, _, dd, id) = c;
            pair(&tensor_apply(id, &st.l_dot(a), &bs.apply(b)), x, y)
                - pair(&tensor_apply(id, &al.l_succ(x), &dd.apply(y)), a, b)
        }),
        mk("⟨σ(id⊗L_≻(b))β_≺(a), x⊗y⟩ = ⟨a⊗b, (L_≺(y)⊗id)σΔ_≻(x)⟩", |c, x, y, a, b| {
            let (al, st, bp, _, _, ds, _, id) = c;
            pair(&tensor_apply(id, &st.l_succ(b), &bp.apply(a)).transpose(), x, y)
                - pair(&tensor_apply(&al.l_prec(y), id, &ds.apply(x).transpose()), a, b)
        }),
        mk("⟨σ(R_∘(a)⊗id)β_≺(b), x⊗y⟩ = ⟨a⊗b, (id⊗R_≺(x))σΔ(y)⟩", |c, x, y, a, b| {
            let (al, st, bp, _, _, _, dd, id) = c;
            pair(&tensor_apply(&st.r_dot(a), id, &bp.apply(b)).transpose(), x, y)
                - pair(&tensor_apply(id, &al.r_prec(x), &dd.apply(y).transpose()), a, b)
        }),
        mk("⟨(L_≻(a)⊗id)β_≻(b), x⊗y⟩ = ⟨a⊗b, (id⊗R_≻(y))Δ_≻(x)⟩", |c, x, y, a, b| {
            let (al, st, _, bs, _, ds, _, id) = c;
            pair(&tensor_apply(&st.l_succ(a), id, &bs.apply(b)), x, y)
                - pair(&tensor_apply(id, &al.r_succ(y), &ds.apply(x)), a, b)
        }),
        mk("⟨(id⊗R_∘(a))β_≻(b), x⊗y⟩ = ⟨a⊗b, (id⊗L_≻(x))σΔ(y)⟩", |c, x, y, a, b| {
            let (al, st, _, bs, _, _, dd, id) = c;
            pair(&tensor_apply(id, &st.r_dot(a), &bs.apply(b)), x, y)
                - pair(&tensor_apply(id, &al.l_succ(x), &dd.apply(y).transpose()), a, b)
        }),
        mk("⟨σ(L_∘(b)⊗id)β_≺(a), x⊗y⟩ = ⟨a⊗b, (R_≺(x)⊗id)σΔ(y)⟩", |c, x, y, a, b| {
            let (al, st, bp, _, _, _, dd, id) = c;
            pair(&tensor_apply(&st.l_dot(b), id, &bp.apply(a)).transpose(), x, y)
                - pair(&tensor_apply(&al.r_prec(x), id, &dd.apply(y).transpose()), a, b)
        }),
        mk("⟨σ(id⊗R_≺(b))β_≺(a), x⊗y⟩ = ⟨a⊗b, (L_≺(y)⊗id)Δ_≺(x)⟩", |c, x, y, a, b| {
            let (al, st, bp, _, dp, _, _, id) = c;
            pair(&tensor_apply(id, &st.r_prec(b), &bp.apply(a)).transpose(), x, y)
                - pair(&tensor_apply(&al.l_prec(y), id, &dp.apply(x)), a, b)
        }),
    ]
}

/// Evaluates every pairing identity on all basis tuples.
pub fn check_pairing_identities(b: &Bialgebra) -> CheckReport {
    run_identities("pairing identities", &pairing_identities(b), WitnessMode::First)
}
