//! Matched pairs of pre-anti-flexible algebras.

use antiflex_algebra::{run_identities, underlying_algebra, CheckReport, Identity, PreAlgebra, WitnessMode, check_pre};
use antiflex_linear::{Error, Matrix, Result, Vector};
use antiflex_representation::{add_all, check_pre_bimodule, eval, negate_all, transpose_all, MapFamily, PreBimodule};

use crate::af::{double_tensor, split_tensor, AfMatchedPair};

/// Two pre-anti-flexible algebras acting on each other. The `*_a` families
/// map `A → End(B)` and the `*_b` families map `B → End(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreMatchedPair {
    pub palg_a: PreAlgebra,
    pub palg_b: PreAlgebra,
    pub l_succ_a: MapFamily,
    pub r_succ_a: MapFamily,
    pub l_prec_a: MapFamily,
    pub r_prec_a: MapFamily,
    pub l_succ_b: MapFamily,
    pub r_succ_b: MapFamily,
    pub l_prec_b: MapFamily,
    pub r_prec_b: MapFamily,
}

/// Which action appears in the second term of the first identity,
/// `(l_≻B(a)x)≺y + l_?B(r_≻A(x)a)y`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FirstIdentityAction {
    /// `l_≺B`, as forced by the `≺`-component of the double.
    #[default]
    Prec,
    /// `l_≻B`.
    Succ,
}

impl PreMatchedPair {
    pub fn bimodule_a_on_b(&self) -> Result<PreBimodule> {
        PreBimodule::new(
            self.palg_a.clone(),
            self.palg_b.dimension,
            self.l_succ_a.clone(),
            self.r_succ_a.clone(),
            self.l_prec_a.clone(),
            self.r_prec_a.clone(),
        )
    }

    pub fn bimodule_b_on_a(&self) -> Result<PreBimodule> {
        PreBimodule::new(
            self.palg_b.clone(),
            self.palg_a.dimension,
            self.l_succ_b.clone(),
            self.r_succ_b.clone(),
            self.l_prec_b.clone(),
            self.r_prec_b.clone(),
        )
    }

    /// The eight families in the order
    /// `(l_≻A, r_≻A, l_≺A, r_≺A, l_≻B, r_≻B, l_≺B, r_≺B)`.
    pub fn families_mut(&mut self) -> [&mut MapFamily; 8] {
        [
            &mut self.l_succ_a,
            &mut self.r_succ_a,
            &mut self.l_prec_a,
            &mut self.r_prec_a,
            &mut self.l_succ_b,
            &mut self.r_succ_b,
            &mut self.l_prec_b,
            &mut self.r_prec_b,
        ]
    }

    /// The matched pair of underlying algebras with summed actions.
    pub fn summed(&self) -> AfMatchedPair {
        AfMatchedPair {
            alg_a: underlying_algebra(&self.palg_a),
            alg_b: underlying_algebra(&self.palg_b),
            l_a: add_all(&self.l_succ_a, &self.l_prec_a),
            r_a: add_all(&self.r_succ_a, &self.r_prec_a),
            l_b: add_all(&self.l_succ_b, &self.l_prec_b),
            r_b: add_all(&self.r_succ_b, &self.r_prec_b),
        }
    }
}

/// The ten mixed identities. Odd-looking pairs are mirror images under the
/// exchange of `A` and `B`; the first, third, fourth, seventh and ninth take
/// arguments `(x, y, a)`, the rest `(x, a, b)`.
pub fn pre_matched_identities(mp: &PreMatchedPair, first: FirstIdentityAction) -> Vec<Identity<'_>> {
    let (n, m) = (mp.palg_a.dimension, mp.palg_b.dimension);
    let (pa, pb) = (&mp.palg_a, &mp.palg_b);
    // B acting on A
    let ls = move |a: &Vector| eval(&mp.l_succ_b, a);
    let rs = move |a: &Vector| eval(&mp.r_succ_b, a);
    let lp = move |a: &Vector| eval(&mp.l_prec_b, a);
    let rp = move |a: &Vector| eval(&mp.r_prec_b, a);
    let lc = move |a: &Vector| ls(a) + lp(a);
    let rc = move |a: &Vector| rs(a) + rp(a);
    // A acting on B
    let ls_a = move |x: &Vector| eval(&mp.l_succ_a, x);
    let rs_a = move |x: &Vector| eval(&mp.r_succ_a, x);
    let lp_a = move |x: &Vector| eval(&mp.l_prec_a, x);
    let rp_a = move |x: &Vector| eval(&mp.r_prec_a, x);
    let lc_a = move |x: &Vector| ls_a(x) + lp_a(x);
    let rc_a = move |x: &Vector| rs_a(x) + rp_a(x);
    let (p_a, s_a, c_a) = (move |u: &Vector, v: &Vector| pa.prec_mul(u, v), move |u: &Vector, v: &Vector| pa.succ_mul(u, v), move |u: &Vector, v: &Vector| pa.dot_mul(u, v));
    let (p_b, s_b, c_b) = (move |u: &Vector, v: &Vector| pb.prec_mul(u, v), move |u: &Vector, v: &Vector| pb.succ_mul(u, v), move |u: &Vector, v: &Vector| pb.dot_mul(u, v));
    let xya = vec![n, n, m];
    let xab = vec![n, m, m];
    vec![
        Identity::new("pre matched 1", xya.clone(), move |v: &[Vector]| {
            let (x, y, a) = (&v[0], &v[1], &v[2]);
            let second = match first {
                FirstIdentityAction::Prec => lp(&rs_a(x).apply(a)).apply(y),
                FirstIdentityAction::Succ => ls(&rs_a(x).apply(a)).apply(y),
            };
            let e = p_a(&ls(a).apply(x), y) + second - ls(a).apply(&p_a(x, y))
                - (rp(a).apply(&s_a(y, x)) - s_a(y, &rp(a).apply(x)) - rs(&lp_a(x).apply(a)).apply(y));
            e.into_vec()
        }),
        Identity::new("pre matched 2", xab.clone(), move |v: &[Vector]| {
            let (x, a, b) = (&v[0], &v[1], &v[2]);
            let e = p_b(&ls_a(x).apply(b), a) + lp_a(&rs(b).apply(x)).apply(a) - ls_a(x).apply(&p_b(b, a))
                - (rp_a(x).apply(&s_b(a, b)) - s_b(a, &rp_a(x).apply(b)) - rs_a(&lp(b).apply(x)).apply(a));
            e.into_vec()
        }),
        Identity::new("pre matched 3", xya.clone(), move |v: &[Vector]| {
            let (x, y, a) = (&v[0], &v[1], &v[2]);
            let e = s_a(&lc(a).apply(x), y) + ls(&rc_a(x).apply(a)).apply(y) - ls(a).apply(&s_a(x, y))
                - (rp(a).apply(&p_a(y, x)) - p_a(y, &rc(a).apply(x)) - rp(&lc_a(x).apply(a)).apply(y));
            e.into_vec()
        }),
        Identity::new("pre matched 4", xya.clone(), move |v: &[Vector]| {
            let (x, y, a) = (&v[0], &v[1], &v[2]);
            let e = rs(a).apply(&c_a(x, y)) - s_a(x, &rs(a).apply(y)) - rs(&ls_a(y).apply(a)).apply(x)
                - (p_a(&lp(a).apply(y), x) + lp(&rp_a(y).apply(a)).apply(x) - lp(a).apply(&c_a(y, x)));
            e.into_vec()
        }),
        Identity::new("pre matched 5", xab.clone(), move |v: &[Vector]| {
            let (x, a, b) = (&v[0], &v[1], &v[2]);
            let e = s_b(&lc_a(x).apply(b), a) + ls_a(&rc(b).apply(x)).apply(a) - ls_a(x).apply(&s_b(b, a))
                - (rp_a(x).apply(&p_b(a, b)) - p_b(a, &rc_a(x).apply(b)) - rp_a(&lc(b).apply(x)).apply(a));
            e.into_vec()
        }),
        Identity::new("pre matched 6", xab.clone(), move |v: &[Vector]| {
            let (x, a, b) = (&v[0], &v[1], &v[2]);
            let e = rs_a(x).apply(&c_b(a, b)) - s_b(a, &rs_a(x).apply(b)) - rs_a(&ls(b).apply(x)).apply(a)
                - (p_b(&lp_a(x).apply(b), a) + lp_a(&rp(b).apply(x)).apply(a) - lp_a(x).apply(&c_b(b, a)));
            e.into_vec()
        }),
        Identity::new("pre matched 7", xya.clone(), move |v: &[Vector]| {
            let (x, y, a) = (&v[0], &v[1], &v[2]);
            let g = |x: &Vector, y: &Vector| {
                p_a(&rs(a).apply(x), y) + lp(&ls_a(x).apply(a)).apply(y)
                    - s_a(x, &lp(a).apply(y))
                    - rs(&rp_a(y).apply(a)).apply(x)
            };
            (g(x, y) - g(y, x)).into_vec()
        }),
        Identity::new("pre matched 8", xab.clone(), move |v: &[Vector]| {
            let (x, a, b) = (&v[0], &v[1], &v[2]);
            let g = |a: &Vector, b: &Vector| {
                p_b(&rs_a(x).apply(a), b) + lp_a(&ls(a).apply(x)).apply(b)
                    - s_b(a, &lp_a(x).apply(b))
                    - rs_a(&rp(b).apply(x)).apply(a)
            };
            (g(a, b) - g(b, a)).into_vec()
        }),
        Identity::new("pre matched 9", xya, move |v: &[Vector]| {
            let (x, y, a) = (&v[0], &v[1], &v[2]);
            let e = s_a(&rc(a).apply(x), y) + ls(&lc_a(x).apply(a)).apply(y)
                - s_a(x, &ls(a).apply(y))
                - rs(&rs_a(y).apply(a)).apply(x)
                - (p_a(&rp(a).apply(y), x) + lp(&lp_a(y).apply(a)).apply(x)
                    - p_a(y, &lc(a).apply(x))
                    - rp(&rc_a(x).apply(a)).apply(y));
            e.into_vec()
        }),
        Identity::new("pre matched 10", xab, move |v: &[Vector]| {
            let (x, a, b) = (&v[0], &v[1], &v[2]);
            let e = s_b(&rc_a(x).apply(a), b) + ls_a(&lc(a).apply(x)).apply(b)
                - s_b(a, &ls_a(x).apply(b))
                - rs_a(&rs(b).apply(x)).apply(a)
                - (p_b(&rp_a(x).apply(b), a) + lp_a(&lp(b).apply(x)).apply(a)
                    - p_b(b, &lc_a(x).apply(a))
                    - rp_a(&rc(a).apply(x)).apply(b));
            e.into_vec()
        }),
    ]
}

pub fn check_pre_matched_with(mp: &PreMatchedPair, first: FirstIdentityAction) -> Result<CheckReport> {
    if let Some(w) = check_pre_bimodule(&mp.bimodule_a_on_b()?).witness {
        return Err(Error::Precondition(format!("A-action on B is not a pre bimodule: {w}")));
    }
    if let Some(w) = check_pre_bimodule(&mp.bimodule_b_on_a()?).witness {
        return Err(Error::Precondition(format!("B-action on A is not a pre bimodule: {w}")));
    }
    Ok(run_identities("pre matched pair", &pre_matched_identities(mp, first), WitnessMode::First))
}

pub fn check_pre_matched(mp: &PreMatchedPair) -> Result<CheckReport> {
    check_pre_matched_with(mp, FirstIdentityAction::default())
}

/// Both algebras, both bimodules and the ten identities in one report.
pub fn pre_matched_full_report(mp: &PreMatchedPair, first: FirstIdentityAction) -> Result<CheckReport> {
    let parts = vec![
        check_pre(&mp.palg_a),
        check_pre(&mp.palg_b),
        check_pre_bimodule(&mp.bimodule_a_on_b()?),
        check_pre_bimodule(&mp.bimodule_b_on_a()?),
        run_identities("pre matched pair", &pre_matched_identities(mp, first), WitnessMode::First),
    ];
    Ok(CheckReport::all("pre matched pair (full)", parts))
}

/// The pre-anti-flexible structure on `A ⊕ B`: each of `≺`, `≻` is the
/// double of the corresponding component products and actions.
pub fn build_pre_double(mp: &PreMatchedPair) -> PreAlgebra {
    let prec = double_tensor(&mp.palg_a.prec, &mp.palg_b.prec, &mp.l_prec_a, &mp.r_prec_a, &mp.l_prec_b, &mp.r_prec_b);
    let succ = double_tensor(&mp.palg_a.succ, &mp.palg_b.succ, &mp.l_succ_a, &mp.r_succ_a, &mp.l_succ_b, &mp.r_succ_b);
    let mut names = mp.palg_a.basis_names.clone();
    names.extend(mp.palg_b.basis_names.iter().map(|s| format!("{s}'")));
    PreAlgebra::with_names(prec, succ, names).expect("double is cubic")
}

/// Placement of the dual regular actions in a dual pair.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DualPairOrder {
    /// `(l_≻, r_≻, l_≺, r_≺) = (R*_·, −L*_≺, −R*_≻, L*_·)`, whose sums are
    /// `(R*_≺, L*_≻)`.
    #[default]
    Derived,
    /// `(l_≻, r_≻, l_≺, r_≺) = (−R*_≻, −L*_≺, R*_·, L*_·)`.
    Naive,
}

fn dual_actions(p: &PreAlgebra, order: DualPairOrder) -> [MapFamily; 4] {
    let n = p.dimension;
    let fam = |f: &dyn Fn(&Vector) -> Matrix| transpose_all(&(0..n).map(|i| f(&p.basis(i))).collect::<Vec<_>>());
    let r_dot = fam(&|x| p.r_dot(x));
    let l_dot = fam(&|x| p.l_dot(x));
    let neg_l_prec = negate_all(&fam(&|x| p.l_prec(x)));
    let neg_r_succ = negate_all(&fam(&|x| p.r_succ(x)));
    match order {
        DualPairOrder::Derived => [r_dot, neg_l_prec, neg_r_succ, l_dot],
        DualPairOrder::Naive => [neg_r_succ, neg_l_prec, r_dot, l_dot],
    }
}

/// The matched pair of `A` and `A*` through dual regular actions.
pub fn dual_pair(palg_a: &PreAlgebra, palg_a_star: &PreAlgebra, order: DualPairOrder) -> Result<PreMatchedPair> {
    if palg_a.dimension != palg_a_star.dimension {
        return Err(Error::Shape("A and A* must have equal dimension".into()));
    }
    let [l_succ_a, r_succ_a, l_prec_a, r_prec_a] = dual_actions(palg_a, order);
    let [l_succ_b, r_succ_b, l_prec_b, r_prec_b] = dual_actions(palg_a_star, order);
    Ok(PreMatchedPair {
        palg_a: palg_a.clone(),
        palg_b: palg_a_star.clone(),
        l_succ_a,
        r_succ_a,
        l_prec_a,
        r_prec_a,
        l_succ_b,
        r_succ_b,
        l_prec_b,
        r_prec_b,
    })
}

/// The matched pair whose double is `palg`, split after the first `k` basis
/// vectors; both blocks must be closed under `≺` and `≻`.
pub fn split_pre(palg: &PreAlgebra, k: usize) -> Result<PreMatchedPair> {
    let (pa, pb, [l_prec_a, r_prec_a, l_prec_b, r_prec_b]) = split_tensor(&palg.prec, k)?;
    let (sa, sb, [l_succ_a, r_succ_a, l_succ_b, r_succ_b]) = split_tensor(&palg.succ, k)?;
    Ok(PreMatchedPair {
        palg_a: PreAlgebra::new(pa, sa)?,
        palg_b: PreAlgebra::new(pb, sb)?,
        l_succ_a,
        r_succ_a,
        l_prec_a,
        r_prec_a,
        l_succ_b,
        r_succ_b,
        l_prec_b,
        r_prec_b,
    })
}
