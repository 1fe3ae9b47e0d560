use antiflex_algebra::{check_pre, underlying_algebra, Algebra, PreAlgebra};
use antiflex_linear::{Error, Result, Tensor3};

use crate::bimodule::{
    check_pre_bimodule, negate_all, transpose_all, zero_family, AfBimodule, MapFamily, PreBimodule,
};

/// Bimodules derived from a pre-anti-flexible bimodule `(l_≻, r_≻, l_≺, r_≺, V)`.
/// Starred families are transposes acting on `V*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transform {
    /// `(l_≻, 0, 0, r_≺, V)`
    Reduced,
    /// `(r*_·, −l*_≺, −r*_≻, l*_·, V*)`; its summed actions are `(r*_≺, l*_≻)`
    DualFull,
    /// `(r*_≺, l*_≺, l*_≻, r*_≻, V*)`, the naive transposition; kept to
    /// demonstrate that it is not a bimodule in general
    DualFullNaive,
    /// `(r*_≺, 0, 0, l*_≻, V*)`
    DualReduced,
    /// `(l_·, r_·, V)` for the underlying algebra
    AfSum,
    /// `(l_≻, r_≺, V)` for the underlying algebra
    AfOuter,
    /// `(r*_·, l*_·, V*)` for the underlying algebra
    AfDualSum,
    /// `(r*_≺, l*_≻, V*)` for the underlying algebra
    AfDualOuter,
}

impl Transform {
    /// The seven transforms that always produce bimodules.
    pub const VALID: [Transform; 7] = [
        Transform::Reduced,
        Transform::DualFull,
        Transform::DualReduced,
        Transform::AfSum,
        Transform::AfOuter,
        Transform::AfDualSum,
        Transform::AfDualOuter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Transform::Reduced => "reduced",
            Transform::DualFull => "dual-full",
            Transform::DualFullNaive => "dual-full-naive",
            Transform::DualReduced => "dual-reduced",
            Transform::AfSum => "af-sum",
            Transform::AfOuter => "af-outer",
            Transform::AfDualSum => "af-dual-sum",
            Transform::AfDualOuter => "af-dual-outer",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivedBimodule {
    Af(AfBimodule),
    Pre(PreBimodule),
}

/// Applies a transform without checking the input.
pub fn transform_unchecked(bm: &PreBimodule, t: Transform) -> DerivedBimodule {
    let (n, m) = (bm.base.dimension, bm.space_dim);
    let z = || zero_family(n, m, m);
    let star = |f: &MapFamily| transpose_all(f);
    let pre = |ls, rs, lp, rp| {
        DerivedBimodule::Pre(PreBimodule {
            base: bm.base.clone(),
            space_dim: m,
            l_succ: ls,
            r_succ: rs,
            l_prec: lp,
            r_prec: rp,
        })
    };
    let af = |l, r| {
        DerivedBimodule::Af(AfBimodule { base: underlying_algebra(&bm.base), space_dim: m, l, r })
    };
    match t {
        Transform::Reduced => pre(bm.l_succ.clone(), z(), z(), bm.r_prec.clone()),
        Transform::DualFull => pre(
            star(&bm.r_dot()),
            negate_all(&star(&bm.l_prec)),
            negate_all(&star(&bm.r_succ)),
            star(&bm.l_dot()),
        ),
        Transform::DualFullNaive => pre(star(&bm.r_prec), star(&bm.l_prec), star(&bm.l_succ), star(&bm.r_succ)),
        Transform::DualReduced => pre(star(&bm.r_prec), z(), z(), star(&bm.l_succ)),
        Transform::AfSum => af(bm.l_dot(), bm.r_dot()),
        Transform::AfOuter => af(bm.l_succ.clone(), bm.r_prec.clone()),
        Transform::AfDualSum => af(star(&bm.r_dot()), star(&bm.l_dot())),
        Transform::AfDualOuter => af(star(&bm.r_prec), star(&bm.l_succ)),
    }
}

pub fn derive_bimodule(bm: &PreBimodule, t: Transform) -> Result<DerivedBimodule> {
    if let Some(w) = check_pre_bimodule(bm).witness {
        return Err(Error::Precondition(format!("input is not a pre bimodule: {w}")));
    }
    Ok(transform_unchecked(bm, t))
}

/// Block structure constants on `A ⊕ V` from a base product and two actions:
/// `x•v = left(x)v` and `u•y = right(y)u`; `V•V = 0`.
pub fn semidirect_tensor(base: &Tensor3, left: &[antiflex_linear::Matrix], right: &[antiflex_linear::Matrix], m: usize) -> Tensor3 {
    let n = base.dims()[0];
    let mut c = Tensor3::cubic(n + m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c[(i, j, k)] = base[(i, j, k)].clone();
            }
        }
        for u in 0..m {
            for k in 0..m {
                c[(i, n + u, n + k)] = left[i][(k, u)].clone();
                c[(n + u, i, n + k)] = right[i][(k, u)].clone();
            }
        }
    }
    c
}

/// `(x+u) ≺ (y+v) = x≺y + l_≺(x)v + r_≺(y)u`, and likewise for `≻`.
/// Accepts unchecked input: the result is pre-anti-flexible exactly when
/// the base is and the bimodule identities hold.
pub fn semidirect_pre(bm: &PreBimodule) -> PreAlgebra {
    let m = bm.space_dim;
    let prec = semidirect_tensor(&bm.base.prec, &bm.l_prec, &bm.r_prec, m);
    let succ = semidirect_tensor(&bm.base.succ, &bm.l_succ, &bm.r_succ, m);
    let mut names = bm.base.basis_names.clone();
    names.extend((1..=m).map(|i| format!("v{i}")));
    PreAlgebra::with_names(prec, succ, names).expect("block tensors are cubic")
}

/// `(x+u)∗(y+v) = x∗y + l(x)v + r(y)u`.
pub fn semidirect_af(bm: &AfBimodule) -> Algebra {
    let c = semidirect_tensor(&bm.base.product, &bm.l, &bm.r, bm.space_dim);
    let mut names = bm.base.basis_names.clone();
    names.extend((1..=bm.space_dim).map(|i| format!("v{i}")));
    Algebra::with_names(c, names).expect("block tensor is cubic")
}

/// `A ⋉ A*` through the dual-reduced regular bimodule `(R*_≺, 0, 0, L*_≻)`.
pub fn dual_reduced_double(palg: &PreAlgebra) -> PreAlgebra {
    let DerivedBimodule::Pre(bm) = transform_unchecked(&PreBimodule::regular(palg), Transform::DualReduced) else {
        unreachable!("dual-reduced yields a pre bimodule")
    };
    let mut d = semidirect_pre(&bm);
    let n = palg.dimension;
    for i in 0..n {
        d.basis_names[n + i] = format!("{}*", palg.basis_names[i]);
    }
    d
}

/// Whether the semidirect product is pre-anti-flexible, alongside the
/// separate verdicts on the base and the bimodule.
pub fn semidirect_verdicts(bm: &PreBimodule) -> (bool, bool, bool) {
    let semi = check_pre(&semidirect_pre(bm)).passed;
    (semi, check_pre(&bm.base).passed, check_pre_bimodule(bm).passed)
}

