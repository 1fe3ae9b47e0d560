//! The two one-parameter families `r_≺ = r, r_≻ = −σr` and
//! `r_≺ = −r, r_≻ = r`, with the condition sets written for each.

use antiflex_algebra::{check_pre, flat, run_identities, CheckReport, Identity, PreAlgebra, WitnessMode};
use antiflex_bialgebra::{verify_bialgebra, Bialgebra};
use antiflex_linear::{tensor_apply as t, Error, Matrix, Perm3, Result, Tensor3, Vector};

use crate::conditions::FourthConditionForm;
use crate::families::{k_correction, SecondConditionForm};
use crate::pafybe::{check_pafybe, PafybeReport};
use crate::rpair::{coboundary_bialgebra, RPair};
use crate::slots::{pairwise_tensor_product, Catalog, ProductOp, Slots, Term};

use ProductOp::{Dot as C, Prec as P, Succ as S};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialCase {
    /// `r_≺ = r, r_≻ = −σr`.
    One,
    /// `r_≺ = −r, r_≻ = r`.
    Two,
}

impl SpecialCase {
    pub fn rpair(self, r: &Matrix) -> Result<RPair> {
        match self {
            SpecialCase::One => RPair::case_one(r),
            SpecialCase::Two => RPair::case_two(r),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SpecialCase::One => "one",
            SpecialCase::Two => "two",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "one" | "1" => Some(SpecialCase::One),
            "two" | "2" => Some(SpecialCase::Two),
            _ => None,
        }
    }
}

/// Three-slot sums written directly in `r` for each case.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseFamily {
    M1,
    M1Prime,
    P1Prime,
    M2,
    M2Prime,
    P2Prime,
}

pub fn case_catalog(r: &Matrix, which: CaseFamily) -> Catalog {
    let d = &(r - &r.transpose());
    let t = Term::new;
    Catalog(match which {
        CaseFamily::M1 => vec![t(-1, C, (r, "23"), (r, "21")), t(1, P, (r, "21"), (r, "13")), t(1, S, (r, "31"), (r, "23"))],
        CaseFamily::M1Prime => vec![
            t(1, P, (r, "32"), (r, "21")),
            t(1, S, (r, "12"), (r, "31")),
            t(-1, C, (r, "31"), (r, "32")),
            t(-1, S, (r, "32"), (d, "12")),
            t(-1, P, (d, "21"), (r, "31")),
        ],
        CaseFamily::P1Prime => vec![
            t(1, P, (r, "32"), (r, "21")),
            t(-1, C, (r, "31"), (r, "32")),
            t(1, S, (r, "12"), (r, "31")),
            t(-1, P, (d, "21"), (r, "31")),
        ],
        CaseFamily::M2 => vec![t(-1, C, (r, "23"), (r, "12")), t(1, P, (r, "21"), (r, "13")), t(1, S, (r, "13"), (r, "23"))],
        CaseFamily::M2Prime => vec![t(-1, C, (r, "13"), (r, "23")), t(1, P, (r, "23"), (r, "12")), t(1, S, (r, "21"), (r, "13"))],
        CaseFamily::P2Prime => vec![t(-1, C, (r, "31"), (r, "23")), t(1, P, (r, "32"), (r, "21")), t(1, S, (r, "21"), (r, "31"))],
    })
}

/// `M` together with `σ13∘flp M`, `flp M` and `flp∘σ13∘flp M`.
struct FirstForm([Tensor3; 4]);

impl FirstForm {
    fn new(palg: &PreAlgebra, m: &Catalog) -> Result<Self> {
        let sf = m.flp().permute(Perm3::Sigma13);
        Ok(FirstForm([m.evaluate(palg)?, sf.evaluate(palg)?, m.flp().evaluate(palg)?, sf.flp().evaluate(palg)?]))
    }

    /// `((id⊗id⊗L_≻(x)) − (R_≺(x)⊗id⊗id)σ13∘flp + (id⊗id⊗R_≺(x))flp − (L_≻(x)⊗id⊗id)flp∘σ13∘flp) M`.
    fn residual(&self, palg: &PreAlgebra, x: &Vector) -> Tensor3 {
        let (ls, rp) = (palg.l_succ(x), palg.r_prec(x));
        let [m, sfm, fm, fsfm] = &self.0;
        &(&(&m.apply_slot(2, &ls) - &sfm.apply_slot(0, &rp)) + &fm.apply_slot(2, &rp)) - &fsfm.apply_slot(0, &ls)
    }
}

/// `M′, flp M′, P′, flp P′`.
struct SecondForm([Tensor3; 4]);

impl SecondForm {
    fn new(palg: &PreAlgebra, m: &Catalog, p: &Catalog) -> Result<Self> {
        Ok(SecondForm([m.evaluate(palg)?, m.flp().evaluate(palg)?, p.evaluate(palg)?, p.flp().evaluate(palg)?]))
    }

    /// `((id⊗id⊗L_·(x)) + (id⊗id⊗R_·(x))flp)M′ − ((R_≺(x)⊗id⊗id) + (L_≻(x)⊗id⊗id)flp)P′`.
    fn residual(&self, palg: &PreAlgebra, x: &Vector) -> Tensor3 {
        let [m, fm, p, fp] = &self.0;
        let plus = &m.apply_slot(2, &palg.l_dot(x)) + &fm.apply_slot(2, &palg.r_dot(x));
        let minus = &p.apply_slot(0, &palg.r_prec(x)) + &fp.apply_slot(0, &palg.l_succ(x));
        &plus - &minus
    }
}

/// `R₁′(x) = [(id⊗(R_≺(x)+L_≻(x))⊗id)r_{32}] ≻ (r_{12}−r_{21}) − [((L_≺(x)+R_≻(x))⊗id⊗id)r_{31}] ≻ (r_{21}−r_{12})`.
pub fn case_one_rprime(palg: &PreAlgebra, r: &Matrix, x: &Vector) -> Result<Tensor3> {
    let d = r - &r.transpose();
    let f = palg.r_prec(x) + palg.l_succ(x);
    let g = palg.l_prec(x) + palg.r_succ(x);
    let s = |p: &str| Slots::parse(p);
    let a = pairwise_tensor_product(&palg.succ, &(r * &f.transpose()), s("32")?, &d, s("12")?)?;
    let b = pairwise_tensor_product(&palg.succ, &(r * &g.transpose()), s("31")?, &d, s("21")?)?;
    Ok(&a - &b)
}

/// The condition sets of each case as identities, in the order they are written.
pub fn case_identities<'a>(
    palg: &'a PreAlgebra,
    r: &'a Matrix,
    case: SpecialCase,
    fourth: FourthConditionForm,
    second: SecondConditionForm,
) -> Result<Vec<Identity<'a>>> {
    let n = palg.dimension;
    if !r.is_square() || r.rows() != n {
        return Err(Error::Shape(format!("r is {}x{}, algebra has dimension {}", r.rows(), r.cols(), n)));
    }
    let id = Matrix::identity(n);
    let d = r - &r.transpose();
    let rpair = case.rpair(r)?;
    let k = move |x: &Vector| -> Tensor3 {
        match second {
            SecondConditionForm::Corrected => k_correction(palg, &rpair, x).expect("shapes checked"),
            SecondConditionForm::Displayed => Tensor3::cubic(n),
        }
    };
    Ok(match case {
        SpecialCase::One => {
            let first = FirstForm::new(palg, &case_catalog(r, CaseFamily::M1))?;
            let second_form =
                SecondForm::new(palg, &case_catalog(r, CaseFamily::M1Prime), &case_catalog(r, CaseFamily::P1Prime))?;
            let (d1, id1) = (d.clone(), id.clone());
            vec![
                Identity::new("case one: x≺y and y≻x terms on r−σr", vec![n, n], move |v: &[Vector]| {
                    let (x, y) = (&v[0], &v[1]);
                    let inner = palg.l_succ(&palg.prec_mul(x, y)) + palg.r_prec(&palg.succ_mul(y, x));
                    let outer = palg.l_succ(&palg.prec_mul(y, x)) + palg.r_prec(&palg.succ_mul(x, y));
                    flat(
                        &(t(&id1, &inner, &d1) + t(&outer, &id1, &d1)
                            - t(&palg.r_prec(y), &palg.l_succ(x), &d1)
                            - t(&palg.l_succ(y), &palg.r_prec(x), &d1)),
                    )
                }),
                Identity::new("case one: products of L_≻ and R_≺ on r−σr", vec![n, n], move |v: &[Vector]| {
                    let (x, y) = (&v[0], &v[1]);
                    let (rp_x, rp_y, ls_x, ls_y) = (palg.r_prec(x), palg.r_prec(y), palg.l_succ(x), palg.l_succ(y));
                    let first = match fourth {
                        FourthConditionForm::Paired => &rp_y,
                        FourthConditionForm::Repeated => &rp_x,
                    };
                    let neg = -d.clone();
                    flat(
                        &(t(&rp_x, first, &d) + t(&ls_x, &ls_y, &d) + t(&ls_y, &ls_x, &d) + t(&rp_y, &rp_x, &d)
                            + t(&(&(&rp_x * &ls_y) + &(&ls_x * &rp_y)), &id, &neg)
                            + t(&id, &(&(&ls_x * &rp_y) + &(&rp_x * &ls_y)), &neg)),
                    )
                }),
                Identity::new("case one: M₁ at x", vec![n], move |v: &[Vector]| first.residual(palg, &v[0]).entries().to_vec()),
                Identity::new("case one: M₁′, P₁′, R₁′ at x", vec![n], move |v: &[Vector]| {
                    let x = &v[0];
                    let rprime = case_one_rprime(palg, r, x).expect("shapes checked");
                    (&(&second_form.residual(palg, x) + &rprime) + &k(x)).entries().to_vec()
                }),
            ]
        }
        SpecialCase::Two => {
            let first = FirstForm::new(palg, &case_catalog(r, CaseFamily::M2))?;
            let second_form =
                SecondForm::new(palg, &case_catalog(r, CaseFamily::M2Prime), &case_catalog(r, CaseFamily::P2Prime))?;
            let (d1, d2, d3) = (d.clone(), d.clone(), d.clone());
            vec![
                Identity::new("case two: R_≺(y)⊗L_·(x) + L_≻(y)⊗R_·(x) on r−σr", vec![n, n], move |v: &[Vector]| {
                    let (x, y) = (&v[0], &v[1]);
                    flat(&(t(&palg.r_prec(y), &palg.l_dot(x), &d) + t(&palg.l_succ(y), &palg.r_dot(x), &d)))
                }),
                Identity::new("case two: skew part in (x, y) on r−σr", vec![n, n], move |v: &[Vector]| {
                    let (x, y) = (&v[0], &v[1]);
                    let d = &d1;
                    flat(
                        &(t(&palg.l_succ(x), &palg.l_dot(y), d) - t(&palg.r_prec(y), &palg.r_dot(x), d)
                            - t(&palg.l_succ(y), &palg.l_dot(x), d)
                            + t(&palg.r_prec(x), &palg.r_dot(y), d)),
                    )
                }),
                Identity::new("case two: R_≻(y)⊗L_≻(x) + L_≺(y)⊗R_≺(x) on r−σr", vec![n, n], move |v: &[Vector]| {
                    let (x, y) = (&v[0], &v[1]);
                    flat(&(t(&palg.r_succ(y), &palg.l_succ(x), &d2) + t(&palg.l_prec(y), &palg.r_prec(x), &d2)))
                }),
                Identity::new("case two: mixed ≺/≻ terms on r−σr", vec![n, n], move |v: &[Vector]| {
                    let (x, y) = (&v[0], &v[1]);
                    let d = &d3;
                    flat(
                        &(t(&palg.r_prec(x), &palg.r_succ(y), d)
                            + t(&palg.l_succ(x), &palg.l_prec(y), d)
                            + t(&palg.l_prec(y), &palg.l_succ(x), d)
                            + t(&palg.r_succ(y), &palg.r_prec(x), d)),
                    )
                }),
                Identity::new("case two: M₂ at x", vec![n], move |v: &[Vector]| first.residual(palg, &v[0]).entries().to_vec()),
                Identity::new("case two: M₂′, P₂′ at x", vec![n], move |v: &[Vector]| {
                    let x = &v[0];
                    (&second_form.residual(palg, x) + &k(x)).entries().to_vec()
                }),
            ]
        }
    })
}

/// The candidate bialgebra of a case with its written condition sets,
/// each reported on its own.
#[derive(Clone, Debug)]
pub struct SpecialCaseBialgebra {
    pub case: SpecialCase,
    pub rpair: RPair,
    pub bialgebra: Bialgebra,
    pub conditions: Vec<CheckReport>,
    pub pafybe: PafybeReport,
}

impl SpecialCaseBialgebra {
    pub fn conditions_hold(&self) -> bool {
        self.conditions.iter().all(|c| c.passed)
    }

    pub fn verify(&self) -> Result<CheckReport> {
        verify_bialgebra(&self.bialgebra)
    }
}

pub fn special_case_bialgebra(palg: &PreAlgebra, r: &Matrix, case: SpecialCase) -> Result<SpecialCaseBialgebra> {
    special_case_bialgebra_with(palg, r, case, FourthConditionForm::default(), SecondConditionForm::default())
}

pub fn special_case_bialgebra_with(
    palg: &PreAlgebra,
    r: &Matrix,
    case: SpecialCase,
    fourth: FourthConditionForm,
    second: SecondConditionForm,
) -> Result<SpecialCaseBialgebra> {
    let pre = check_pre(palg);
    if !pre.passed {
        return Err(Error::Precondition(format!("algebra is not pre-anti-flexible ({})", pre.failed_identity().unwrap_or("?"))));
    }
    let rpair = case.rpair(r)?;
    let bialgebra = coboundary_bialgebra(palg, &rpair)?;
    let conditions = case_identities(palg, r, case, fourth, second)?
        .iter()
        .map(|id| run_identities(&id.label, std::slice::from_ref(id), WitnessMode::First))
        .collect();
    let pafybe = check_pafybe(palg, r)?;
    Ok(SpecialCaseBialgebra { case, rpair, bialgebra, conditions, pafybe })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_names_round_trip() {
        for c in [SpecialCase::One, SpecialCase::Two] {
            assert_eq!(SpecialCase::parse(c.name()), Some(c));
        }
        assert_eq!(SpecialCase::parse("three"), None);
    }

    #[test]
    fn each_condition_is_reported() {
        let palg = &antiflex_algebra::corpus::pre_corpus()[0].1;
        let n = palg.dimension;
        let one = special_case_bialgebra(palg, &Matrix::zeros(n, n), SpecialCase::One).unwrap();
        let two = special_case_bialgebra(palg, &Matrix::zeros(n, n), SpecialCase::Two).unwrap();
        assert_eq!(one.conditions.len(), 4);
        assert_eq!(two.conditions.len(), 6);
        assert!(one.conditions_hold() && two.conditions_hold());
        assert!(case_identities(palg, &Matrix::zeros(n + 1, n + 1), SpecialCase::One, Default::default(), Default::default()).is_err());
    }

    #[test]
    fn symmetric_r_kills_the_antisymmetric_conditions() {
        let palg = &antiflex_algebra::corpus::pre_corpus()[1].1;
        let n = palg.dimension;
        let r = Matrix::from_fn(n, n, |i, j| antiflex_linear::int((i + j) as i64));
        let ids = case_identities(palg, &r, SpecialCase::Two, Default::default(), Default::default()).unwrap();
        for id in &ids[..4] {
            assert!(id.first_failure().is_none(), "{}", id.label);
        }
    }
}
