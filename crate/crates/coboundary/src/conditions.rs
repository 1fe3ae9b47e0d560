//! The coboundary form of the bialgebra compatibility conditions.

use antiflex_algebra::{check_pre, flat, run_identities, CheckReport, Identity, PreAlgebra, WitnessMode};
use antiflex_linear::{tensor_apply as t, Error, Matrix, Result, Vector};


use crate::families::{ybe_identities, Families, SecondConditionForm};
use crate::rpair::RPair;

/// Arguments of the first term `R_≺(x)⊗R_≺(·)` of the fourth condition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FourthConditionForm {
    /// `R_≺(x)⊗R_≺(y)`, matching the other paired terms.
    #[default]
    Paired,
    /// `R_≺(x)⊗R_≺(x)`.
    Repeated,
}

/// Which written form of each condition to evaluate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ConditionForms {
    pub fourth: FourthConditionForm,
    pub second_dual: SecondConditionForm,
}

/// The four compatibility conditions in terms of `r_≺, r_≻`, over pairs `(x, y)`.
pub fn coboundary_condition_identities<'a>(palg: &'a PreAlgebra, rp: &'a RPair, fourth: FourthConditionForm) -> Vec<Identity<'a>> {
    let n = palg.dimension;
    let id = Matrix::identity(n);
    let (p, s) = (&rp.r_prec, &rp.r_succ);
    let (sp, ss) = (p.transpose(), s.transpose());
    let a1 = s + &sp; // r_≻ + σr_≺
    let a2 = p + &ss; // r_≺ + σr_≻
    let sum = p + s;
    let ssum = &sp + &ss;
    let (a1b, a1c, a2b, a2c, sumb, ssumb) = (a1.clone(), a1.clone(), a2.clone(), a2.clone(), sum.clone(), ssum.clone());
    let (id3, id4) = (id.clone(), id);
    vec![
        Identity::new("coboundary 1: (R_≺(y)⊗L_·(x) + L_≻(y)⊗R_·(x))(r_≻+σr_≺)", vec![n, n], move |v: &[Vector]| {
            let (x, y) = (&v[0], &v[1]);
            flat(&(t(&palg.r_prec(y), &palg.l_dot(x), &a1) + t(&palg.l_succ(y), &palg.r_dot(x), &a1)))
        }),
        Identity::new("coboundary 2: skew part in (x, y) on r_≻+σr_≺", vec![n, n], move |v: &[Vector]| {
            let (x, y) = (&v[0], &v[1]);
            let a = &a1b;
            flat(
                &(t(&palg.l_succ(x), &palg.l_dot(y), a) - t(&palg.r_prec(y), &palg.r_dot(x), a)
                    - t(&palg.l_succ(y), &palg.l_dot(x), a)
                    + t(&palg.r_prec(x), &palg.r_dot(y), a)),
            )
        }),
        Identity::new("coboundary 3: x≺y and y≻x terms", vec![n, n], move |v: &[Vector]| {
            let (x, y) = (&v[0], &v[1]);
            let id = &id3;
            let (ls_x, rp_x) = (palg.l_succ(x), palg.r_prec(x));
            let r = t(&palg.r_succ(y), &ls_x, &a2b)
                + t(&palg.l_prec(y), &rp_x, &a2b)
                + t(&palg.r_prec(y), &ls_x, &ssum)
                + t(&palg.l_succ(y), &rp_x, &ssum)
                + t(id, &(palg.l_succ(&palg.prec_mul(x, y)) + palg.r_prec(&palg.succ_mul(y, x))), &sum)
                - t(&(palg.l_succ(&palg.prec_mul(y, x)) + palg.r_prec(&palg.succ_mul(x, y))), id, &ssum);
            flat(&r)
        }),
        Identity::new("coboundary 4: products of L_≻ and R_≺", vec![n, n], move |v: &[Vector]| {
            let (x, y) = (&v[0], &v[1]);
            let id = &id4;
            let (rp_x, rp_y, ls_x, ls_y) = (palg.r_prec(x), palg.r_prec(y), palg.l_succ(x), palg.l_succ(y));
            let first = match fourth {
                FourthConditionForm::Paired => &rp_y,
                FourthConditionForm::Repeated => &rp_x,
            };
            let r = t(&rp_x, first, &sumb) + t(&ls_x, &ls_y, &sumb)
                - t(id, &(&(&ls_x * &rp_y) + &(&rp_x * &ls_y)), &sumb)
                + t(&(&(&rp_x * &ls_y) + &(&ls_x * &rp_y)), id, &ssumb)
                - t(&ls_y, &ls_x, &ssumb)
                - t(&rp_y, &rp_x, &ssumb)
                + t(&rp_x, &palg.r_succ(y), &a1c)
                + t(&ls_x, &palg.l_prec(y), &a1c)
                - t(&palg.l_prec(y), &ls_x, &a2c)
                - t(&palg.r_succ(y), &rp_x, &a2c);
            flat(&r)
        }),
    ]
}

/// Runs the four compatibility conditions together with the two conditions
/// on the induced dual products, after checking that `A` is pre-anti-flexible.
pub fn check_coboundary_conditions(palg: &PreAlgebra, rp: &RPair) -> Result<CheckReport> {
    check_coboundary_conditions_with(palg, rp, ConditionForms::default(), WitnessMode::First)
}

pub fn check_coboundary_conditions_with(
    palg: &PreAlgebra,
    rp: &RPair,
    forms: ConditionForms,
    mode: WitnessMode,
) -> Result<CheckReport> {
    if rp.dimension() != palg.dimension {
        return Err(Error::Shape(format!("r has dimension {}, algebra {}", rp.dimension(), palg.dimension)));
    }
    let pre = check_pre(palg);
    if !pre.passed {
        return Err(Error::Precondition(format!("algebra is not pre-anti-flexible ({})", pre.failed_identity().unwrap_or("?"))));
    }
    let fam = Families::compute(palg, rp)?;
    let mut ids = coboundary_condition_identities(palg, rp, forms.fourth);
    ids.extend(ybe_identities(palg, rp, fam, forms.second_dual));
    Ok(run_identities("coboundary conditions", &ids, mode))
}
