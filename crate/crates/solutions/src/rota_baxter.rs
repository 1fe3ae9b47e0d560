//! Rota-Baxter operators of weight zero and the pre-structures that linear
//! maps induce on an anti-flexible algebra.

use antiflex_algebra::{check_anti_flexible, run_identities, Algebra, CheckReport, Identity, PreAlgebra, WitnessMode};
use antiflex_linear::{Error, Matrix, Result, Tensor3, Vector};

fn check_map(alg: &Algebra, alpha: &Matrix) -> Result<()> {
    let n = alg.dimension;
    if alpha.rows() != n || alpha.cols() != n {
        return Err(Error::Shape(format!("map is {}x{}, algebra has dimension {n}", alpha.rows(), alpha.cols())));
    }
    Ok(())
}

fn require_anti_flexible(alg: &Algebra) -> Result<()> {
    let rep = check_anti_flexible(alg);
    match rep.witness {
        Some(w) => Err(Error::Precondition(format!("algebra is not anti-flexible: {w}"))),
        None => Ok(()),
    }
}

/// `α(x)∗α(y) − α(x∗α(y) + α(x)∗y)`
fn rb_defect(alg: &Algebra, alpha: &Matrix, x: &Vector, y: &Vector) -> Vector {
    let (ax, ay) = (alpha.apply(x), alpha.apply(y));
    &alg.mul(&ax, &ay) - &alpha.apply(&(&alg.mul(x, &ay) + &alg.mul(&ax, y)))
}

pub fn rota_baxter_identity<'a>(alg: &'a Algebra, alpha: &'a Matrix) -> Identity<'a> {
    Identity::new("α(x)∗α(y) = α(x∗α(y) + α(x)∗y)", vec![alg.dimension; 2], move |v: &[Vector]| {
        rb_defect(alg, alpha, &v[0], &v[1]).into_vec()
    })
}

pub fn check_rota_baxter(alg: &Algebra, alpha: &Matrix) -> Result<CheckReport> {
    check_map(alg, alpha)?;
    require_anti_flexible(alg)?;
    Ok(run_identities("Rota-Baxter", &[rota_baxter_identity(alg, alpha)], WitnessMode::First))
}

/// The condition under which `x≻y = α(x)∗y, x≺y = x∗α(y)` is
/// pre-anti-flexible: `D(x,y)∗z + z∗D(y,x) = 0` where `D` is the
/// Rota-Baxter defect.
pub fn generalized_rb_identity<'a>(alg: &'a Algebra, alpha: &'a Matrix) -> Identity<'a> {
    Identity::new("D(x,y)∗z + z∗D(y,x) = 0", vec![alg.dimension; 3], move |v: &[Vector]| {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        (&alg.mul(&rb_defect(alg, alpha, x, y), z) + &alg.mul(z, &rb_defect(alg, alpha, y, x))).into_vec()
    })
}

pub fn check_generalized_rb(alg: &Algebra, alpha: &Matrix) -> Result<CheckReport> {
    check_map(alg, alpha)?;
    require_anti_flexible(alg)?;
    Ok(run_identities("generalized Rota-Baxter", &[generalized_rb_identity(alg, alpha)], WitnessMode::First))
}

/// `x≻y = α(x)∗y`, `x≺y = x∗α(y)`.
pub fn induced_pre_from_map(alg: &Algebra, alpha: &Matrix) -> Result<PreAlgebra> {
    check_map(alg, alpha)?;
    let n = alg.dimension;
    let c = &alg.product;
    let a = |p: usize, i: usize| &alpha[(p, i)];
    let succ = Tensor3::from_fn([n; 3], |i, j, k| (0..n).map(|p| a(p, i) * &c[(p, j, k)]).sum());
    let prec = Tensor3::from_fn([n; 3], |i, j, k| (0..n).map(|p| a(p, j) * &c[(i, p, k)]).sum());
    PreAlgebra::with_names(prec, succ, alg.basis_names.clone())
}
