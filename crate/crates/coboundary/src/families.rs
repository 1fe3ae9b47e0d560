//! The three-slot families `M, N, P, Q, M′, N′, P′, Q′`, the term `R′(x)`,
//! and the two per-element conditions under which the coboundary
//! comultiplications induce a pre-anti-flexible structure on `A*`.

use antiflex_algebra::{Identity, PreAlgebra};
use antiflex_linear::{int, Matrix, Result, Tensor3, Vector};

use crate::rpair::RPair;
use crate::slots::{pairwise_tensor_product, Catalog, ProductOp, Slots, Term};

use ProductOp::{Dot as C, Prec as P, Succ as S};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    M,
    N,
    P,
    Q,
    MPrime,
    NPrime,
    PPrime,
    QPrime,
}

impl Family {
    pub const ALL: [Family; 8] =
        [Family::M, Family::N, Family::P, Family::Q, Family::MPrime, Family::NPrime, Family::PPrime, Family::QPrime];
}

/// The displayed formal sum of each family.
pub fn catalog(rp: &RPair, which: Family) -> Catalog {
    let (p, s) = (&rp.r_prec, &rp.r_succ);
    let c = &rp.sum();
    let t = Term::new;
    Catalog(match which {
        Family::M => vec![t(1, C, (p, "23"), (s, "12")), t(1, P, (p, "21"), (p, "13")), t(-1, S, (s, "13"), (p, "23"))],
        Family::N => vec![t(1, C, (s, "32"), (p, "21")), t(1, S, (p, "31"), (p, "23")), t(-1, P, (p, "21"), (s, "31"))],
        Family::P => vec![t(1, C, (s, "12"), (p, "23")), t(1, S, (p, "13"), (p, "21")), t(-1, P, (p, "23"), (s, "13"))],
        Family::Q => vec![t(1, C, (p, "21"), (s, "32")), t(1, P, (p, "23"), (p, "31")), t(-1, S, (s, "31"), (p, "21"))],
        Family::MPrime => vec![
            t(1, P, (s, "23"), (s, "12")),
            t(1, S, (s, "21"), (s, "13")),
            t(-1, C, (s, "13"), (s, "23")),
            t(1, S, (s, "23"), (c, "12")),
            t(1, P, (c, "21"), (s, "13")),
        ],
        Family::NPrime => vec![
            t(1, S, (s, "12"), (s, "23")),
            t(1, P, (s, "13"), (s, "21")),
            t(-1, C, (s, "23"), (s, "13")),
            t(1, P, (c, "12"), (s, "23")),
            t(1, S, (s, "13"), (c, "21")),
        ],
        Family::PPrime => vec![
            t(1, P, (p, "32"), (p, "21")),
            t(1, C, (p, "31"), (s, "23")),
            t(-1, S, (s, "21"), (p, "31")),
            t(-1, P, (c, "21"), (p, "31")),
        ],
        Family::QPrime => vec![
            t(1, S, (p, "21"), (p, "32")),
            t(1, C, (s, "23"), (p, "31")),
            t(-1, P, (p, "31"), (s, "21")),
            t(-1, S, (p, "31"), (c, "21")),
        ],
    })
}

pub fn mnpq(palg: &PreAlgebra, rp: &RPair, which: Family) -> Result<Tensor3> {
    catalog(rp, which).evaluate(palg)
}

/// `R′(x) = [(id⊗(R_≺(x)+L_≻(x))⊗id)r_{≺,32}] ≻ r_{12} − [((L_≺(x)+R_≻(x))⊗id⊗id)r_{≺,31}] ≻ r_{21}`
/// with `r = r_≺ + r_≻`. In both placements the map acts on the second factor of `r_≺`.
pub fn rprime(palg: &PreAlgebra, rp: &RPair, x: &Vector) -> Result<Tensor3> {
    let rc = rp.sum();
    let f = palg.r_prec(x) + palg.l_succ(x);
    let g = palg.l_prec(x) + palg.r_succ(x);
    let a = &rp.r_prec * &f.transpose();
    let b = &rp.r_prec * &g.transpose();
    let s = &palg.succ;
    Ok(&pairwise_tensor_product(s, &a, Slots::parse("32")?, &rc, Slots::parse("12")?)?
        - &pairwise_tensor_product(s, &b, Slots::parse("31")?, &rc, Slots::parse("21")?)?)
}

/// A factor of a correction term: `r` placed at `slots`, optionally with a
/// map applied to its first (`0`) or second (`1`) factor.
type KFactor<'a> = (&'a Matrix, &'static str, Option<(usize, Matrix)>);

fn k_term(palg: &PreAlgebra, coef: i64, op: ProductOp, a: KFactor, b: KFactor, outer: Option<(usize, Matrix)>) -> Result<Tensor3> {
    let prep = |(m, _, f): &KFactor| match f {
        None => (*m).clone(),
        Some((0, f)) => f * *m,
        Some((_, f)) => *m * &f.transpose(),
    };
    let t = pairwise_tensor_product(&op.tensor(palg), &prep(&a), Slots::parse(a.1)?, &prep(&b), Slots::parse(b.1)?)?;
    let t = match outer {
        Some((slot, f)) => t.apply_slot(slot, &f),
        None => t,
    };
    Ok(t.scale(&int(coef)))
}

/// Terms missing from the displayed second condition: with them added it
/// coincides with the second co-identity of the coboundary comultiplications.
pub fn k_correction(palg: &PreAlgebra, rp: &RPair, x: &Vector) -> Result<Tensor3> {
    let (p, s) = (&rp.r_prec, &rp.r_succ);
    let (lp, rpx, ls, rs) = (palg.l_prec(x), palg.r_prec(x), palg.l_succ(x), palg.r_succ(x));
    let all = &(&lp + &rs) + &ls;
    let terms: Vec<Tensor3> = vec![
        k_term(palg, -1, C, (s, "21", None), (p, "31", None), Some((0, rpx.clone())))?,
        k_term(palg, 1, C, (s, "21", None), (p, "31", Some((1, rpx.clone()))), None)?,
        k_term(palg, -1, P, (p, "21", None), (p, "31", None), Some((0, rpx.clone())))?,
        k_term(palg, 1, P, (p, "21", None), (p, "31", Some((1, rpx.clone()))), None)?,
        k_term(palg, 1, P, (p, "31", Some((1, ls.clone()))), (s, "21", None), None)?,
        k_term(palg, 1, S, (p, "31", Some((1, all.clone()))), (s, "21", None), None)?,
        k_term(palg, -1, C, (p, "31", None), (s, "21", None), Some((0, ls.clone())))?,
        k_term(palg, 1, S, (p, "31", Some((1, all))), (p, "21", None), None)?,
        k_term(palg, -1, S, (p, "31", None), (p, "21", None), Some((0, ls.clone())))?,
        k_term(palg, 1, P, (p, "32", Some((1, rpx.clone()))), (s, "12", None), None)?,
        k_term(palg, 1, P, (s, "12", None), (p, "32", Some((1, ls.clone()))), None)?,
        k_term(palg, -1, P, (p, "32", None), (s, "12", Some((1, &lp + &ls))), None)?,
        k_term(palg, -1, S, (s, "12", Some((1, &rpx + &rs))), (p, "32", None), None)?,
        k_term(palg, -1, S, (p, "32", Some((1, ls.clone()))), (s, "12", None), None)?,
        k_term(palg, 1, S, (s, "12", None), (p, "32", Some((1, ls.clone()))), None)?,
        k_term(palg, 1, P, (p, "12", None), (p, "32", Some((1, ls.clone()))), None)?,
        k_term(palg, -1, S, (p, "32", Some((1, ls))), (p, "12", None), None)?,
    ];
    let n = palg.dimension;
    Ok(terms.iter().fold(Tensor3::cubic(n), |acc, t| &acc + t))
}

/// Whether the second condition includes [`k_correction`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SecondConditionForm {
    #[default]
    Corrected,
    Displayed,
}

/// The families evaluated once, for reuse across basis elements.
#[derive(Clone, Debug)]
pub struct Families {
    pub values: Vec<(Family, Tensor3)>,
}

impl Families {
    pub fn compute(palg: &PreAlgebra, rp: &RPair) -> Result<Families> {
        let values = Family::ALL.iter().map(|&f| Ok((f, mnpq(palg, rp, f)?))).collect::<Result<_>>()?;
        Ok(Families { values })
    }

    pub fn get(&self, which: Family) -> &Tensor3 {
        &self.values.iter().find(|(f, _)| *f == which).expect("all families computed").1
    }
}

/// First condition at `x`:
/// `(id⊗id⊗L_≻(x))M − (R_≺(x)⊗id⊗id)N + (id⊗id⊗R_≺(x))P − (L_≻(x)⊗id⊗id)Q`.
pub fn ybe1_residual(palg: &PreAlgebra, fam: &Families, x: &Vector) -> Tensor3 {
    let (ls, rp) = (palg.l_succ(x), palg.r_prec(x));
    let a = &fam.get(Family::M).apply_slot(2, &ls) - &fam.get(Family::N).apply_slot(0, &rp);
    let b = &fam.get(Family::P).apply_slot(2, &rp) - &fam.get(Family::Q).apply_slot(0, &ls);
    &a + &b
}

/// Second condition at `x`:
/// `(id⊗id⊗L_·(x))M′ + (id⊗id⊗R_·(x))N′ + R′(x) − (R_≺(x)⊗id⊗id)P′ − (L_≻(x)⊗id⊗id)Q′`.
pub fn ybe2_residual(palg: &PreAlgebra, rp: &RPair, fam: &Families, x: &Vector, form: SecondConditionForm) -> Result<Tensor3> {
    let plus = &fam.get(Family::MPrime).apply_slot(2, &palg.l_dot(x)) + &fam.get(Family::NPrime).apply_slot(2, &palg.r_dot(x));
    let minus = &fam.get(Family::PPrime).apply_slot(0, &palg.r_prec(x)) + &fam.get(Family::QPrime).apply_slot(0, &palg.l_succ(x));
    let mut out = &(&plus + &rprime(palg, rp, x)?) - &minus;
    if form == SecondConditionForm::Corrected {
        out = &out + &k_correction(palg, rp, x)?;
    }
    Ok(out)
}

/// Both conditions as identities over `x`.
pub fn ybe_identities<'a>(palg: &'a PreAlgebra, rp: &'a RPair, fam: Families, form: SecondConditionForm) -> Vec<Identity<'a>> {
    let n = palg.dimension;
    let fam = std::sync::Arc::new(fam);
    let f1 = fam.clone();
    vec![
        Identity::new("dual structure 1: M, N, P, Q at x", vec![n], move |v: &[Vector]| {
            ybe1_residual(palg, &f1, &v[0]).entries().to_vec()
        }),
        Identity::new("dual structure 2: M′, N′, P′, Q′, R′ at x", vec![n], move |v: &[Vector]| {
            ybe2_residual(palg, rp, &fam, &v[0], form).expect("shapes checked").entries().to_vec()
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_pair_gives_zero_families() {
        let palg = &antiflex_algebra::corpus::pre_corpus()[0].1;
        let rp = RPair::zero(palg.dimension);
        let fam = Families::compute(palg, &rp).unwrap();
        assert!(fam.values.iter().all(|(_, t)| t.is_zero()));
        let x = palg.basis(0);
        assert!(rprime(palg, &rp, &x).unwrap().is_zero());
        assert!(k_correction(palg, &rp, &x).unwrap().is_zero());
    }

    #[test]
    fn families_on_one_dimensional_algebra() {
        // e≺e = a e, e≻e = b e and r_≺ = p, r_≻ = s:
        // M = (a+b)ps + ap² − bsp = a(p² + ps)
        let palg = PreAlgebra::new(Tensor3::from_i64_nested(&[&[&[2]]]), Tensor3::from_i64_nested(&[&[&[3]]])).unwrap();
        let rp = RPair::new(Matrix::from_i64(&[&[5]]), Matrix::from_i64(&[&[7]])).unwrap();
        assert_eq!(mnpq(&palg, &rp, Family::M).unwrap().entries()[0], int(2 * (25 + 35)));
    }
}
