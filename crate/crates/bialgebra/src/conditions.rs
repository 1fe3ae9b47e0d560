//! The four compatibility conditions between a pre-anti-flexible algebra and
//! a pair of comultiplications, in their `Δ`-side form.

use antiflex_algebra::{check_pre, flat, run_identities, CheckReport, Identity, PreAlgebra, WitnessMode};
use antiflex_linear::{tensor_apply, Error, Matrix, Result, Vector};

use crate::comult::Comultiplication;

/// One identity per condition, each over pairs `(x, y)` of `A`, with values in `A ⊗ A`.
pub fn bialgebra_condition_identities<'a>(
    palg: &'a PreAlgebra,
    dp: &'a Comultiplication,
    ds: &'a Comultiplication,
) -> Vec<Identity<'a>> {
    let n = palg.dimension;
    let id = Matrix::identity(n);
    let t = |f: &Matrix, g: &Matrix, m: &Matrix| tensor_apply(f, g, m);
    let (id1, id2, id3, id4) = (id.clone(), id.clone(), id.clone(), id);
    vec![
        Identity::new("compatibility 1: Δ_≻(x·y)", vec![n, n], move |v: &[Vector]| {
            let (x, y) = (&v[0], &v[1]);
            let id = &id1;
            let r = ds.apply(&palg.dot_mul(x, y))
                - t(&palg.r_prec(y), id, &ds.apply(x))
                - t(id, &palg.l_dot(x), &ds.apply(y))
                - t(id, &palg.l_succ(y), &dp.apply(x)).transpose()
                - t(&palg.r_dot(x), id, &dp.apply(y)).transpose()
                + dp.apply(&palg.dot_mul(y, x)).transpose();
            flat(&r)
        }),
        Identity::new("compatibility 3: skew part in (x, y)", vec![n, n], move |v: &[Vector]| {
            let (x, y) = (&v[0], &v[1]);
            let id = &id2;
            let h = |x: &Vector, y: &Vector| {
                (t(&palg.l_dot(y), id, &dp.apply(x)) - t(id, &palg.r_prec(y), &dp.apply(x))).transpose()
                    + t(&palg.l_succ(x), id, &ds.apply(y))
                    - t(id, &palg.r_dot(x), &ds.apply(y))
            };
            flat(&(h(x, y) - h(y, x)))
        }),
        Identity::new("compatibility 2′: Δ(x≻y)", vec![n, n], move |v: &[Vector]| {
            let (x, y) = (&v[0], &v[1]);
            let id = &id3;
            let dd = |z: &Vector| dp.apply(z) + ds.apply(z);
            let r = dd(&palg.succ_mul(x, y))
                - t(&palg.r_succ(y), id, &dp.apply(x))
                - t(id, &palg.l_succ(x), &dd(y))
                - t(&palg.l_prec(y), id, &ds.apply(x).transpose())
                - t(id, &palg.r_prec(x), &dd(y).transpose())
                + dd(&palg.prec_mul(y, x)).transpose();
            flat(&r)
        }),
        Identity::new("compatibility 4′: mixed ≺/≻ terms", vec![n, n], move |v: &[Vector]| {
            let (x, y) = (&v[0], &v[1]);
            let id = &id4;
            let dd = |z: &Vector| dp.apply(z) + ds.apply(z);
            let (rs_y, lp_y, rp_x, ls_x) = (palg.r_succ(y), palg.l_prec(y), palg.r_prec(x), palg.l_succ(x));
            let (dsx, dpx, ddy) = (ds.apply(x), dp.apply(x), dd(y));
            let r = t(id, &rs_y, &dsx) - t(&lp_y, id, &dpx) + t(&rp_x, id, &ddy.transpose())
                - t(id, &ls_x, &ddy.transpose())
                - (t(&rs_y, id, &dsx.transpose()) - t(id, &lp_y, &dpx.transpose()) + t(id, &rp_x, &ddy)
                    - t(&ls_x, id, &ddy));
            flat(&r)
        }),
    ]
}

/// The four conditions, given that `palg` is pre-anti-flexible.
pub fn check_bialgebra_conditions(palg: &PreAlgebra, dp: &Comultiplication, ds: &Comultiplication) -> Result<CheckReport> {
    if dp.dimension() != palg.dimension || ds.dimension() != palg.dimension {
        return Err(Error::Shape("comultiplications and algebra differ in dimension".into()));
    }
    if let Some(w) = check_pre(palg).witness {
        return Err(Error::Precondition(format!("A is not pre-anti-flexible: {w}")));
    }
    Ok(run_identities("bialgebra compatibility", &bialgebra_condition_identities(palg, dp, ds), WitnessMode::First))
}

#[cfg(test)]
mod tests {
    use super::*;
    use antiflex_algebra::corpus::pre_corpus;

    #[test]
    fn zero_comultiplications_satisfy_all_conditions() {
        for (_, p) in pre_corpus() {
            let z = Comultiplication::zero(p.dimension);
            assert!(check_bialgebra_conditions(&p, &z, &z).unwrap().passed);
        }
    }
}
