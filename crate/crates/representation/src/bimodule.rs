use antiflex_algebra::{flat, run_identities, Algebra, CheckReport, Identity, PreAlgebra, WitnessMode};
use antiflex_linear::{combine, Error, Matrix, Result, Vector};

/// One matrix per basis element of the base algebra; the action of a
/// general element is the corresponding linear combination.
pub type MapFamily = Vec<Matrix>;

pub fn eval(maps: &[Matrix], x: &Vector) -> Matrix {
    combine(maps, x)
}

pub fn transpose_all(maps: &[Matrix]) -> MapFamily {
    maps.iter().map(Matrix::transpose).collect()
}

pub fn negate_all(maps: &[Matrix]) -> MapFamily {
    maps.iter().map(|m| -m).collect()
}

pub fn add_all(a: &[Matrix], b: &[Matrix]) -> MapFamily {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn zero_family(count: usize, rows: usize, cols: usize) -> MapFamily {
    vec![Matrix::zeros(rows, cols); count]
}

fn check_family(name: &str, maps: &[Matrix], count: usize, dim: usize) -> Result<()> {
    if maps.len() != count {
        return Err(Error::Shape(format!("{name} has {} maps, expected {count}", maps.len())));
    }
    if let Some(m) = maps.iter().find(|m| m.rows() != dim || m.cols() != dim) {
        return Err(Error::Shape(format!("{name} contains a {}x{} map, expected {dim}x{dim}", m.rows(), m.cols())));
    }
    Ok(())
}

/// A bimodule `(l, r, V)` of an anti-flexible algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AfBimodule {
    pub base: Algebra,
    pub space_dim: usize,
    pub l: MapFamily,
    pub r: MapFamily,
}

impl AfBimodule {
    pub fn new(base: Algebra, space_dim: usize, l: MapFamily, r: MapFamily) -> Result<Self> {
        let n = base.dimension;
        check_family("l", &l, n, space_dim)?;
        check_family("r", &r, n, space_dim)?;
        Ok(AfBimodule { base, space_dim, l, r })
    }

    pub fn regular(alg: &Algebra) -> Self {
        let n = alg.dimension;
        let l = (0..n).map(|i| alg.left(&alg.basis(i))).collect();
        let r = (0..n).map(|i| alg.right(&alg.basis(i))).collect();
        AfBimodule { base: alg.clone(), space_dim: n, l, r }
    }

    pub fn zero(alg: &Algebra, space_dim: usize) -> Self {
        let n = alg.dimension;
        let z = zero_family(n, space_dim, space_dim);
        AfBimodule { base: alg.clone(), space_dim, l: z.clone(), r: z }
    }
}

/// A bimodule `(l_≻, r_≻, l_≺, r_≺, V)` of a pre-anti-flexible algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreBimodule {
    pub base: PreAlgebra,
    pub space_dim: usize,
    pub l_succ: MapFamily,
    pub r_succ: MapFamily,
    pub l_prec: MapFamily,
    pub r_prec: MapFamily,
}

impl PreBimodule {
    pub fn new(
        base: PreAlgebra,
        space_dim: usize,
        l_succ: MapFamily,
        r_succ: MapFamily,
        l_prec: MapFamily,
        r_prec: MapFamily,
    ) -> Result<Self> {
        let n = base.dimension;
        check_family("l_≻", &l_succ, n, space_dim)?;
        check_family("r_≻", &r_succ, n, space_dim)?;
        check_family("l_≺", &l_prec, n, space_dim)?;
        check_family("r_≺", &r_prec, n, space_dim)?;
        Ok(PreBimodule { base, space_dim, l_succ, r_succ, l_prec, r_prec })
    }

    /// `(L_≻, R_≻, L_≺, R_≺, A)`
    pub fn regular(palg: &PreAlgebra) -> Self {
        let n = palg.dimension;
        let fam = |f: &dyn Fn(&Vector) -> Matrix| (0..n).map(|i| f(&palg.basis(i))).collect::<Vec<_>>();
        PreBimodule {
            base: palg.clone(),
            space_dim: n,
            l_succ: fam(&|x| palg.l_succ(x)),
            r_succ: fam(&|x| palg.r_succ(x)),
            l_prec: fam(&|x| palg.l_prec(x)),
            r_prec: fam(&|x| palg.r_prec(x)),
        }
    }

    pub fn zero(palg: &PreAlgebra, space_dim: usize) -> Self {
        let z = zero_family(palg.dimension, space_dim, space_dim);
        PreBimodule {
            base: palg.clone(),
            space_dim,
            l_succ: z.clone(),
            r_succ: z.clone(),
            l_prec: z.clone(),
            r_prec: z,
        }
    }

    /// `l_· = l_≺ + l_≻`
    pub fn l_dot(&self) -> MapFamily {
        add_all(&self.l_prec, &self.l_succ)
    }

    /// `r_· = r_≺ + r_≻`
    pub fn r_dot(&self) -> MapFamily {
        add_all(&self.r_prec, &self.r_succ)
    }

    /// The four families in the order `(l_≻, r_≻, l_≺, r_≺)`.
    pub fn families(&self) -> [&MapFamily; 4] {
        [&self.l_succ, &self.r_succ, &self.l_prec, &self.r_prec]
    }

    pub fn families_mut(&mut self) -> [&mut MapFamily; 4] {
        [&mut self.l_succ, &mut self.r_succ, &mut self.l_prec, &mut self.r_prec]
    }
}

/// `l(x∗y) − l(x)l(y) = r(x)r(y) − r(y∗x)` and `[l(x), r(y)] = [l(y), r(x)]`.
pub fn af_bimodule_identities(bm: &AfBimodule) -> Vec<Identity<'_>> {
    let n = bm.base.dimension;
    let alg = &bm.base;
    let (l, r) = (&bm.l, &bm.r);
    vec![
        Identity::new("af bimodule: l(x∗y) − l(x)l(y) = r(x)r(y) − r(y∗x)", vec![n, n], move |a: &[Vector]| {
            let (x, y) = (&a[0], &a[1]);
            let lhs = eval(l, &alg.mul(x, y)) - eval(l, x) * eval(l, y);
            let rhs = eval(r, x) * eval(r, y) - eval(r, &alg.mul(y, x));
            flat(&(lhs - rhs))
        }),
        Identity::new("af bimodule: [l(x), r(y)] = [l(y), r(x)]", vec![n, n], move |a: &[Vector]| {
            let (x, y) = (&a[0], &a[1]);
            let (lx, ly, rx, ry) = (eval(l, x), eval(l, y), eval(r, x), eval(r, y));
            flat(&((&lx * &ry - &ry * &lx) - (&ly * &rx - &rx * &ly)))
        }),
    ]
}

pub fn check_af_bimodule(bm: &AfBimodule) -> CheckReport {
    run_identities("af bimodule", &af_bimodule_identities(bm), WitnessMode::First)
}

/// The five compatibility identities of a pre-anti-flexible bimodule.
pub fn pre_bimodule_identities(bm: &PreBimodule) -> Vec<Identity<'_>> {
    let n = bm.base.dimension;
    let p = &bm.base;
    let ls = move |x: &Vector| eval(&bm.l_succ, x);
    let rs = move |x: &Vector| eval(&bm.r_succ, x);
    let lp = move |x: &Vector| eval(&bm.l_prec, x);
    let rp = move |x: &Vector| eval(&bm.r_prec, x);
    let lc = move |x: &Vector| lp(x) + ls(x);
    let rc = move |x: &Vector| rp(x) + rs(x);
    let d = vec![n, n];
    vec![
        Identity::new("pre bimodule 1: [r_≺(x), l_≻(y)] = [r_≺(y), l_≻(x)]", d.clone(), move |a: &[Vector]| {
            let (x, y) = (&a[0], &a[1]);
            let e = (rp(x) * ls(y) - ls(y) * rp(x)) - (rp(y) * ls(x) - ls(x) * rp(y));
            flat(&e)
        }),
        Identity::new(
            "pre bimodule 2: l_≺(x≻y) − l_≻(x)l_≺(y) = r_≺(x)r_≻(y) − r_≻(y≺x)",
            d.clone(),
            move |a: &[Vector]| {
                let (x, y) = (&a[0], &a[1]);
                let e = (lp(&p.succ_mul(x, y)) - ls(x) * lp(y)) - (rp(x) * rs(y) - rs(&p.prec_mul(y, x)));
                flat(&e)
            },
        ),
        Identity::new(
            "pre bimodule 3: l_≻(x·y) − l_≻(x)l_≻(y) = r_≺(x)r_≺(y) − r_≺(y·x)",
            d.clone(),
            move |a: &[Vector]| {
                let (x, y) = (&a[0], &a[1]);
                let e = (ls(&p.dot_mul(x, y)) - ls(x) * ls(y)) - (rp(x) * rp(y) - rp(&p.dot_mul(y, x)));
                flat(&e)
            },
        ),
        Identity::new(
            "pre bimodule 4: r_≻(x)l_·(y) − l_≻(y)r_≻(x) = r_≺(y)l_≺(x) − l_≺(x)r_·(y)",
            d.clone(),
            move |a: &[Vector]| {
                let (x, y) = (&a[0], &a[1]);
                let e = (rs(x) * lc(y) - ls(y) * rs(x)) - (rp(y) * lp(x) - lp(x) * rc(y));
                flat(&e)
            },
        ),
        Identity::new(
            "pre bimodule 5: r_≻(x)r_·(y) − r_≻(y≻x) = l_≺(x≺y) − l_≺(x)l_·(y)",
            d,
            move |a: &[Vector]| {
                let (x, y) = (&a[0], &a[1]);
                let e = (rs(x) * rc(y) - rs(&p.succ_mul(y, x))) - (lp(&p.prec_mul(x, y)) - lp(x) * lc(y));
                flat(&e)
            },
        ),
    ]
}

pub fn check_pre_bimodule(bm: &PreBimodule) -> CheckReport {
    run_identities("pre bimodule", &pre_bimodule_identities(bm), WitnessMode::First)
}
