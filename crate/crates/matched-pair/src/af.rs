//! Matched pairs of anti-flexible algebras.

use antiflex_algebra::{check_anti_flexible, run_identities, Algebra, CheckReport, Identity, WitnessMode};
use antiflex_linear::{Error, Matrix, Result, Tensor3, Vector, Zero};
use antiflex_representation::{check_af_bimodule, eval, AfBimodule, MapFamily};

/// `(A, B, l_A, r_A, l_B, r_B)` with `l_A, r_A : A → End(B)` and
/// `l_B, r_B : B → End(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AfMatchedPair {
    pub alg_a: Algebra,
    pub alg_b: Algebra,
    pub l_a: MapFamily,
    pub r_a: MapFamily,
    pub l_b: MapFamily,
    pub r_b: MapFamily,
}

/// Reading of the mixed term `l_A(r_B(a)x)b` in the third compatibility
/// identity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MixedTermSign {
    /// Subtracted, mirroring the `l_B(r_A(x)a)y` term of the first identity.
    #[default]
    Mirrored,
    /// Added.
    Added,
}

impl AfMatchedPair {
    pub fn new(alg_a: Algebra, alg_b: Algebra, l_a: MapFamily, r_a: MapFamily, l_b: MapFamily, r_b: MapFamily) -> Result<Self> {
        let mp = AfMatchedPair { alg_a, alg_b, l_a, r_a, l_b, r_b };
        mp.bimodule_a_on_b()?;
        mp.bimodule_b_on_a()?;
        Ok(mp)
    }

    /// `(l_A, r_A, B)` as a bimodule of `A`.
    pub fn bimodule_a_on_b(&self) -> Result<AfBimodule> {
        AfBimodule::new(self.alg_a.clone(), self.alg_b.dimension, self.l_a.clone(), self.r_a.clone())
    }

    /// `(l_B, r_B, A)` as a bimodule of `B`.
    pub fn bimodule_b_on_a(&self) -> Result<AfBimodule> {
        AfBimodule::new(self.alg_b.clone(), self.alg_a.dimension, self.l_b.clone(), self.r_b.clone())
    }
}

/// The four mixed compatibility identities, with arguments `(x, y, a)` for
/// the first two and `(x, a, b)` for the last two.
pub fn af_matched_identities(mp: &AfMatchedPair, sign: MixedTermSign) -> Vec<Identity<'_>> {
    let (n, m) = (mp.alg_a.dimension, mp.alg_b.dimension);
    let (ca, cb) = (&mp.alg_a, &mp.alg_b);
    let la = move |x: &Vector| eval(&mp.l_a, x);
    let ra = move |x: &Vector| eval(&mp.r_a, x);
    let lb = move |a: &Vector| eval(&mp.l_b, a);
    let rb = move |a: &Vector| eval(&mp.r_b, a);
    let mixed_sign = sign;
    vec![
        Identity::new("af matched 1: l_B(a)(x∗y) compatibility", vec![n, n, m], move |v: &[Vector]| {
            let (x, y, a) = (&v[0], &v[1], &v[2]);
            let e = lb(a).apply(&ca.mul(x, y)) + rb(a).apply(&ca.mul(y, x))
                - rb(&la(x).apply(a)).apply(y)
                - ca.mul(y, &rb(a).apply(x))
                - lb(&ra(x).apply(a)).apply(y)
                - ca.mul(&lb(a).apply(x), y);
            e.into_vec()
        }),
        Identity::new("af matched 2: commutator compatibility on A", vec![n, n, m], move |v: &[Vector]| {
            let (x, y, a) = (&v[0], &v[1], &v[2]);
            let e = ca.mul(y, &lb(a).apply(x)) + ca.mul(&rb(a).apply(x), y)
                - ca.mul(&rb(a).apply(y), x)
                - lb(&la(y).apply(a)).apply(x)
                + rb(&ra(x).apply(a)).apply(y)
                + lb(&la(x).apply(a)).apply(y)
                - ca.mul(x, &lb(a).apply(y))
                - rb(&ra(y).apply(a)).apply(x);
            e.into_vec()
        }),
        Identity::new("af matched 3: l_A(x)(a∘b) compatibility", vec![n, m, m], move |v: &[Vector]| {
            let (x, a, b) = (&v[0], &v[1], &v[2]);
            let mixed = la(&rb(a).apply(x)).apply(b);
            let e = la(x).apply(&cb.mul(a, b)) + ra(x).apply(&cb.mul(b, a))
                - ra(&lb(a).apply(x)).apply(b)
                - cb.mul(b, &ra(x).apply(a))
                - cb.mul(&la(x).apply(a), b);
            match mixed_sign {
                MixedTermSign::Mirrored => (e - mixed).into_vec(),
                MixedTermSign::Added => (e + mixed).into_vec(),
            }
        }),
        Identity::new("af matched 4: commutator compatibility on B", vec![n, m, m], move |v: &[Vector]| {
            let (x, a, b) = (&v[0], &v[1], &v[2]);
            let e = cb.mul(b, &la(x).apply(a)) + cb.mul(&ra(x).apply(a), b)
                - cb.mul(&ra(x).apply(b), a)
                - la(&lb(b).apply(x)).apply(a)
                + ra(&rb(a).apply(x)).apply(b)
                + la(&lb(a).apply(x)).apply(b)
                - cb.mul(a, &la(x).apply(b))
                - ra(&rb(b).apply(x)).apply(a);
            e.into_vec()
        }),
    ]
}

/// Checks the four mixed identities; the component bimodules must be valid.
pub fn check_af_matched_with(mp: &AfMatchedPair, sign: MixedTermSign) -> Result<CheckReport> {
    if let Some(w) = check_af_bimodule(&mp.bimodule_a_on_b()?).witness {
        return Err(Error::Precondition(format!("(l_A, r_A, B) is not a bimodule of A: {w}")));
    }
    if let Some(w) = check_af_bimodule(&mp.bimodule_b_on_a()?).witness {
        return Err(Error::Precondition(format!("(l_B, r_B, A) is not a bimodule of B: {w}")));
    }
    Ok(run_identities("af matched pair", &af_matched_identities(mp, sign), WitnessMode::First))
}

pub fn check_af_matched(mp: &AfMatchedPair) -> Result<CheckReport> {
    check_af_matched_with(mp, MixedTermSign::default())
}

/// Every condition of the matched-pair characterization in one report:
/// both algebras anti-flexible, both bimodules, then the mixed identities.
pub fn af_matched_full_report(mp: &AfMatchedPair, sign: MixedTermSign) -> Result<CheckReport> {
    let parts = vec![
        check_anti_flexible(&mp.alg_a),
        check_anti_flexible(&mp.alg_b),
        check_af_bimodule(&mp.bimodule_a_on_b()?),
        check_af_bimodule(&mp.bimodule_b_on_a()?),
        run_identities("af matched pair", &af_matched_identities(mp, sign), WitnessMode::First),
    ];
    Ok(CheckReport::all("af matched pair (full)", parts))
}

/// Structure constants of `(x+a)⋆(y+b) = (x∗y + l_B(a)y + r_B(b)x) + (a∘b + l_A(x)b + r_A(y)a)`
/// on `A ⊕ B`, A-block first.
pub fn double_tensor(ca: &Tensor3, cb: &Tensor3, l_a: &[Matrix], r_a: &[Matrix], l_b: &[Matrix], r_b: &[Matrix]) -> Tensor3 {
    let n = ca.dims()[0];
    let m = cb.dims()[0];
    let mut d = Tensor3::cubic(n + m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                d[(i, j, k)] = ca[(i, j, k)].clone();
            }
        }
    }
    for a in 0..m {
        for b in 0..m {
            for k in 0..m {
                d[(n + a, n + b, n + k)] = cb[(a, b, k)].clone();
            }
        }
    }
    for i in 0..n {
        for a in 0..m {
            // e_i ⋆ f_a = r_B(f_a) e_i + l_A(e_i) f_a
            for k in 0..n {
                d[(i, n + a, k)] = r_b[a][(k, i)].clone();
                d[(n + a, i, k)] = l_b[a][(k, i)].clone();
            }
            // f_a ⋆ e_i = l_B(f_a) e_i + r_A(e_i) f_a
            for k in 0..m {
                d[(i, n + a, n + k)] = l_a[i][(k, a)].clone();
                d[(n + a, i, n + k)] = r_a[i][(k, a)].clone();
            }
        }
    }
    d
}

pub fn build_af_double(mp: &AfMatchedPair) -> Algebra {
    let d = double_tensor(&mp.alg_a.product, &mp.alg_b.product, &mp.l_a, &mp.r_a, &mp.l_b, &mp.r_b);
    let mut names = mp.alg_a.basis_names.clone();
    names.extend(mp.alg_b.basis_names.iter().map(|s| format!("{s}'")));
    Algebra::with_names(d, names).expect("double is cubic")
}

/// Inverse of [`double_tensor`]: reads the products and actions of a
/// decomposition `span(e_1..e_k) ⊕ span(e_{k+1}..e_N)` into two subalgebras.
pub fn split_tensor(d: &Tensor3, k: usize) -> Result<(Tensor3, Tensor3, [MapFamily; 4])> {
    let total = d.dims()[0];
    if d.dims() != [total; 3] || k == 0 || k >= total {
        return Err(Error::Shape(format!("cannot split {:?} at {k}", d.dims())));
    }
    let (n, m) = (k, total - k);
    for i in 0..total {
        for j in 0..total {
            for l in 0..total {
                let same_side = (i < n) == (j < n);
                if same_side && (i < n) != (l < n) && !d[(i, j, l)].is_zero() {
                    return Err(Error::Precondition(format!("the {} block is not a subalgebra", if i < n { "first" } else { "second" })));
                }
            }
        }
    }
    let ca = Tensor3::from_fn([n; 3], |i, j, l| d[(i, j, l)].clone());
    let cb = Tensor3::from_fn([m; 3], |a, b, c| d[(n + a, n + b, n + c)].clone());
    let l_a = (0..n).map(|i| Matrix::from_fn(m, m, |c, a| d[(i, n + a, n + c)].clone())).collect();
    let r_a = (0..n).map(|i| Matrix::from_fn(m, m, |c, a| d[(n + a, i, n + c)].clone())).collect();
    let l_b = (0..m).map(|a| Matrix::from_fn(n, n, |l, i| d[(n + a, i, l)].clone())).collect();
    let r_b = (0..m).map(|a| Matrix::from_fn(n, n, |l, i| d[(i, n + a, l)].clone())).collect();
    Ok((ca, cb, [l_a, r_a, l_b, r_b]))
}

/// The matched pair whose double is `alg`, split after the first `k` basis vectors.
pub fn split_af(alg: &Algebra, k: usize) -> Result<AfMatchedPair> {
    let (ca, cb, [l_a, r_a, l_b, r_b]) = split_tensor(&alg.product, k)?;
    Ok(AfMatchedPair { alg_a: Algebra::new(ca)?, alg_b: Algebra::new(cb)?, l_a, r_a, l_b, r_b })
}
