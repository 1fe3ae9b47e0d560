//! The products a symmetric `r` induces on `A*` and between `A` and `A*`,
//! assembled into a structure on `A ⊕ A*`, and the checks that this
//! assembly is consistent.

use antiflex_algebra::{run_identities, CheckReport, Identity, PreAlgebra, WitnessMode};
use antiflex_bialgebra::dual_products_from_comult;
use antiflex_coboundary::{coboundary_delta, RPair};
use antiflex_linear::{Error, Matrix, Result, Tensor3, Vector};
use antiflex_matched_pair::{build_pre_double, dual_pair, DualPairOrder};

use crate::rmap::r_as_map;

/// How the `A*` part of `x·a` is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MixedDotForm {
    /// `x·a = x·r(a) − r(R*_≺(x)a) + R*_≺(x)a`, the sum of `x≺a` and `x≻a`.
    #[default]
    Summed,
    /// `x·a = x·r(a) − R*_≺(x)a + R*_≺(x)a`, whose last two terms cancel.
    Cancelling,
}

/// A product between `A` and `A*` with values in `A ⊕ A*`:
/// `t[i][j][k]` is the `k`-th coordinate of the product of the `i`-th basis
/// vector of the first factor with the `j`-th of the second.
pub type MixedProduct = Tensor3;

/// Every product induced by `r`, on `A*` and between `A` and `A*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleProducts {
    pub palg: PreAlgebra,
    pub r: Matrix,
    pub dual_prec: Tensor3,
    pub dual_succ: Tensor3,
    pub dual_dot: Tensor3,
    pub x_prec_a: MixedProduct,
    pub x_succ_a: MixedProduct,
    pub x_dot_a: MixedProduct,
    pub a_dot_x: MixedProduct,
    pub a_prec_x: MixedProduct,
    pub a_succ_x: MixedProduct,
}

fn table(n: usize, m: usize, f: impl Fn(&Vector, &Vector) -> Vec<antiflex_linear::Scalar>) -> Tensor3 {
    let mut t = Tensor3::zeros(n, n, m);
    for i in 0..n {
        for j in 0..n {
            for (k, v) in f(&Vector::basis(n, i), &Vector::basis(n, j)).into_iter().enumerate() {
                t[(i, j, k)] = v;
            }
        }
    }
    t
}

/// `A`-part followed by `A*`-part.
fn join(a: Vector, b: Vector) -> Vec<antiflex_linear::Scalar> {
    let mut v = a.into_vec();
    v.extend(b.into_vec());
    v
}

pub fn double_products_from_r(palg: &PreAlgebra, r: &Matrix) -> Result<DoubleProducts> {
    double_products_from_r_with(palg, r, MixedDotForm::default())
}

pub fn double_products_from_r_with(palg: &PreAlgebra, r: &Matrix, form: MixedDotForm) -> Result<DoubleProducts> {
    let n = palg.dimension;
    if r.rows() != n || r.cols() != n {
        return Err(Error::Shape(format!("r is {}x{}, algebra has dimension {n}", r.rows(), r.cols())));
    }
    if r != &r.transpose() {
        return Err(Error::Precondition("r is not symmetric".into()));
    }
    let m = r_as_map(r);
    let p = palg;
    let ra = |a: &Vector| m.apply(a);
    // transposed regular operators act on A*
    let rs = |x: &Vector| p.r_succ(x).transpose();
    let rp = |x: &Vector| p.r_prec(x).transpose();
    let rd = |x: &Vector| p.r_dot(x).transpose();
    let ls = |x: &Vector| p.l_succ(x).transpose();
    let lp = |x: &Vector| p.l_prec(x).transpose();
    let ld = |x: &Vector| p.l_dot(x).transpose();
    let dual_prec = table(n, n, |a, b| (&(-&rs(&ra(a)).apply(b)) + &ld(&ra(b)).apply(a)).into_vec());
    let dual_succ = table(n, n, |a, b| (&rd(&ra(a)).apply(b) - &lp(&ra(b)).apply(a)).into_vec());
    let dual_dot = table(n, n, |a, b| (&rp(&ra(a)).apply(b) + &ls(&ra(b)).apply(a)).into_vec());
    let x_prec_a = table(n, 2 * n, |x, a| {
        let d = rs(x).apply(a);
        join(&p.prec_mul(x, &ra(a)) + &m.apply(&d), -d)
    });
    let x_succ_a = table(n, 2 * n, |x, a| {
        let d = rd(x).apply(a);
        join(&p.succ_mul(x, &ra(a)) - &m.apply(&d), d)
    });
    let x_dot_a = table(n, 2 * n, |x, a| match form {
        MixedDotForm::Summed => {
            let d = rp(x).apply(a);
            join(&p.dot_mul(x, &ra(a)) - &m.apply(&d), d)
        }
        MixedDotForm::Cancelling => join(p.dot_mul(x, &ra(a)), Vector::zeros(n)),
    });
    let a_dot_x = table(n, 2 * n, |a, x| {
        let d = ls(x).apply(a);
        join(&p.dot_mul(&ra(a), x) - &m.apply(&d), d)
    });
    let a_prec_x = table(n, 2 * n, |a, x| {
        let d = ld(x).apply(a);
        join(&p.prec_mul(&ra(a), x) - &m.apply(&d), d)
    });
    let a_succ_x = table(n, 2 * n, |a, x| {
        let d = lp(x).apply(a);
        join(&p.succ_mul(&ra(a), x) + &m.apply(&d), -d)
    });
    Ok(DoubleProducts {
        palg: palg.clone(),
        r: r.clone(),
        dual_prec,
        dual_succ,
        dual_dot,
        x_prec_a,
        x_succ_a,
        x_dot_a,
        a_dot_x,
        a_prec_x,
        a_succ_x,
    })
}

impl DoubleProducts {
    pub fn dimension(&self) -> usize {
        self.palg.dimension
    }

    /// The induced pre-structure on `A*`.
    pub fn dual_algebra(&self) -> PreAlgebra {
        PreAlgebra::new(self.dual_prec.clone(), self.dual_succ.clone()).expect("cubic by construction")
    }

    /// `A ⊕ A*` with `≺` and `≻` taken block by block from the induced products.
    pub fn assemble(&self) -> PreAlgebra {
        let n = self.dimension();
        let block = |base: &Tensor3, dual: &Tensor3, xa: &Tensor3, ax: &Tensor3| {
            let mut t = Tensor3::cubic(2 * n);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        t[(i, j, k)] = base[(i, j, k)].clone();
                        t[(n + i, n + j, n + k)] = dual[(i, j, k)].clone();
                    }
                    for k in 0..2 * n {
                        t[(i, n + j, k)] = xa[(i, j, k)].clone();
                        t[(n + i, j, k)] = ax[(i, j, k)].clone();
                    }
                }
            }
            t
        };
        let prec = block(&self.palg.prec, &self.dual_prec, &self.x_prec_a, &self.a_prec_x);
        let succ = block(&self.palg.succ, &self.dual_succ, &self.x_succ_a, &self.a_succ_x);
        PreAlgebra::new(prec, succ).expect("cubic by construction")
    }
}

/// The consistency conditions on the induced products: each `·` line is
/// the sum of its `≺` and `≻` lines, the products on `A*` are those of the
/// coboundary comultiplications with `r_≻ = r, r_≺ = −r`, the mixed
/// products are those of the double of the dual pair `(A, A*)`, and `r`
/// carries the products on `A*` to those on `A`.
///
/// The first five hold for every symmetric `r`; the last one is what
/// separates solutions from non-solutions.
pub fn double_consistency_identities(dp: &DoubleProducts) -> Result<Vec<Identity<'_>>> {
    let n = dp.dimension();
    let rp = RPair::case_two(&dp.r)?;
    let (dprec, dsucc) = coboundary_delta(&dp.palg, &rp)?;
    let coboundary = dual_products_from_comult(&dprec, &dsucc)?;
    let dual = dp.dual_algebra();
    let mp = build_pre_double(&dual_pair(&dp.palg, &dual, DualPairOrder::Derived)?);
    let assembled = dp.assemble();
    let m = r_as_map(&dp.r);
    let on_dual = dp.dual_algebra();
    let sum = |a: &Tensor3, b: &Tensor3, c: &Tensor3| (&(a + b) - c).entries().to_vec();
    let ids = vec![
        Identity::new("a·b = a≺b + a≻b", vec![], move |_| sum(&dp.dual_prec, &dp.dual_succ, &dp.dual_dot)),
        Identity::new("x·a = x≺a + x≻a", vec![], move |_| sum(&dp.x_prec_a, &dp.x_succ_a, &dp.x_dot_a)),
        Identity::new("a·x = a≺x + a≻x", vec![], move |_| sum(&dp.a_prec_x, &dp.a_succ_x, &dp.a_dot_x)),
        Identity::new("products on A* are the coboundary dual products", vec![], move |_| {
            let mut v = (&dual.prec - &coboundary.prec).entries().to_vec();
            v.extend((&dual.succ - &coboundary.succ).entries().iter().cloned());
            v
        }),
        Identity::new("assembled products are those of the double of (A, A*)", vec![2 * n, 2 * n], move |v: &[Vector]| {
            let (u, w) = (&v[0], &v[1]);
            let mut out = (&assembled.prec_mul(u, w) - &mp.prec_mul(u, w)).into_vec();
            out.extend((&assembled.succ_mul(u, w) - &mp.succ_mul(u, w)).into_vec());
            out
        }),
        Identity::new("r(a≺b) = r(a)≺r(b) and r(a≻b) = r(a)≻r(b)", vec![n, n], move |v: &[Vector]| {
            let (a, b) = (&v[0], &v[1]);
            let (ra, rb) = (m.apply(a), m.apply(b));
            let mut out = (&m.apply(&on_dual.prec_mul(a, b)) - &dp.palg.prec_mul(&ra, &rb)).into_vec();
            out.extend((&m.apply(&on_dual.succ_mul(a, b)) - &dp.palg.succ_mul(&ra, &rb)).into_vec());
            out
        }),
    ];
    Ok(ids)
}

pub fn check_double_products(dp: &DoubleProducts) -> Result<CheckReport> {
    Ok(run_identities("induced double", &double_consistency_identities(dp)?, WitnessMode::First))
}
