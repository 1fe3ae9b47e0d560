//! Pairs `(r_≺, r_≻)` in `A ⊗ A` and the comultiplications they generate.

use antiflex_algebra::{flat, Identity, PreAlgebra};
use antiflex_bialgebra::{Bialgebra, Comultiplication};
use antiflex_linear::{tensor_apply, Error, Matrix, Result, Vector};

/// Coefficient matrices of `r_≺, r_≻ ∈ A ⊗ A`, `r = Σ r[i][j] e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RPair {
    pub r_prec: Matrix,
    pub r_succ: Matrix,
}

impl RPair {
    pub fn new(r_prec: Matrix, r_succ: Matrix) -> Result<Self> {
        if !r_prec.is_square() || r_prec.rows() != r_succ.rows() || r_prec.cols() != r_succ.cols() {
            return Err(Error::Shape(format!(
                "r_≺ is {}x{}, r_≻ is {}x{}",
                r_prec.rows(),
                r_prec.cols(),
                r_succ.rows(),
                r_succ.cols()
            )));
        }
        Ok(RPair { r_prec, r_succ })
    }

    pub fn zero(n: usize) -> Self {
        RPair { r_prec: Matrix::zeros(n, n), r_succ: Matrix::zeros(n, n) }
    }

    pub fn dimension(&self) -> usize {
        self.r_prec.rows()
    }

    /// `r_≺ = r, r_≻ = −σr`.
    pub fn case_one(r: &Matrix) -> Result<Self> {
        Self::new(r.clone(), -r.transpose())
    }

    /// `r_≻ = r, r_≺ = −r`.
    pub fn case_two(r: &Matrix) -> Result<Self> {
        Self::new(-r.clone(), r.clone())
    }

    /// `r_≺ + r_≻`.
    pub fn sum(&self) -> Matrix {
        &self.r_prec + &self.r_succ
    }
}

fn check_dims(palg: &PreAlgebra, rp: &RPair) -> Result<()> {
    if rp.dimension() != palg.dimension {
        return Err(Error::Shape(format!("r has dimension {}, algebra {}", rp.dimension(), palg.dimension)));
    }
    Ok(())
}

/// `Δ_≺(x) = (id⊗L_≻(x))r_≺ + (R_·(x)⊗id)σr_≻` and
/// `Δ_≻(x) = (id⊗L_·(x))r_≻ + (R_≺(x)⊗id)σr_≺`, returned as `(Δ_≺, Δ_≻)`.
pub fn coboundary_delta(palg: &PreAlgebra, rp: &RPair) -> Result<(Comultiplication, Comultiplication)> {
    check_dims(palg, rp)?;
    let n = palg.dimension;
    let id = Matrix::identity(n);
    let (sp, ss) = (rp.r_prec.transpose(), rp.r_succ.transpose());
    let mut dp = Vec::with_capacity(n);
    let mut ds = Vec::with_capacity(n);
    for i in 0..n {
        let x = palg.basis(i);
        dp.push(tensor_apply(&id, &palg.l_succ(&x), &rp.r_prec) + tensor_apply(&palg.r_dot(&x), &id, &ss));
        ds.push(tensor_apply(&id, &palg.l_dot(&x), &rp.r_succ) + tensor_apply(&palg.r_prec(&x), &id, &sp));
    }
    Ok((Comultiplication::from_images(&dp)?, Comultiplication::from_images(&ds)?))
}

/// The candidate bialgebra `(A, A*)` with coboundary comultiplications.
pub fn coboundary_bialgebra(palg: &PreAlgebra, rp: &RPair) -> Result<Bialgebra> {
    let (dp, ds) = coboundary_delta(palg, rp)?;
    Bialgebra::new(palg.clone(), dp, ds)
}

/// Closed forms of `σΔ_≻`, `σΔ_≺`, `Δ` and `σΔ` in terms of `r_≺, r_≻`,
/// checked against the comultiplications themselves.
pub fn sigma_identities<'a>(
    palg: &'a PreAlgebra,
    rp: &'a RPair,
    dp: &'a Comultiplication,
    ds: &'a Comultiplication,
) -> Vec<Identity<'a>> {
    let n = palg.dimension;
    let id = Matrix::identity(n);
    let (sp, ss) = (rp.r_prec.transpose(), rp.r_succ.transpose());
    let closed = move |x: &Vector| {
        let t = tensor_apply;
        let sigma_succ = t(&palg.l_dot(x), &id, &ss) + t(&id, &palg.r_prec(x), &rp.r_prec);
        let sigma_prec = t(&palg.l_succ(x), &id, &sp) + t(&id, &palg.r_dot(x), &rp.r_succ);
        let delta = t(&id, &palg.l_dot(x), &rp.r_succ)
            + t(&palg.r_prec(x), &id, &sp)
            + t(&id, &palg.l_succ(x), &rp.r_prec)
            + t(&palg.r_dot(x), &id, &ss);
        [sigma_succ, sigma_prec, delta]
    };
    let closed = std::sync::Arc::new(closed);
    let (c1, c2, c3, c4) = (closed.clone(), closed.clone(), closed.clone(), closed);
    vec![
        Identity::new("σΔ_≻(x) = (L_·(x)⊗id)σr_≻ + (id⊗R_≺(x))r_≺", vec![n], move |v: &[Vector]| {
            flat(&(ds.apply(&v[0]).transpose() - c1(&v[0])[0].clone()))
        }),
        Identity::new("σΔ_≺(x) = (L_≻(x)⊗id)σr_≺ + (id⊗R_·(x))r_≻", vec![n], move |v: &[Vector]| {
            flat(&(dp.apply(&v[0]).transpose() - c2(&v[0])[1].clone()))
        }),
        Identity::new("Δ(x) = Δ_≺(x) + Δ_≻(x) expanded", vec![n], move |v: &[Vector]| {
            flat(&(dp.apply(&v[0]) + ds.apply(&v[0]) - c3(&v[0])[2].clone()))
        }),
        Identity::new("σΔ(x) expanded", vec![n], move |v: &[Vector]| {
            let [s, p, _] = c4(&v[0]);
            flat(&((dp.apply(&v[0]) + ds.apply(&v[0])).transpose() - (s + p)))
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use antiflex_algebra::run_identities;
    use antiflex_algebra::WitnessMode;

    #[test]
    fn cases_substitute_r() {
        let r = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let one = RPair::case_one(&r).unwrap();
        assert_eq!(one.r_succ, Matrix::from_i64(&[&[-1, -3], &[-2, -4]]));
        let two = RPair::case_two(&r).unwrap();
        assert!(two.sum().is_zero());
        assert!(RPair::new(Matrix::zeros(2, 2), Matrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn delta_on_one_dimensional_algebra() {
        // e≺e = 2e, e≻e = 3e, r_≺ = 5, r_≻ = 7:
        // Δ_≺(e) = 3·5 + 5·7 = 50, Δ_≻(e) = 5·7 + 2·5 = 45
        let palg = PreAlgebra::new(
            antiflex_linear::Tensor3::from_i64_nested(&[&[&[2]]]),
            antiflex_linear::Tensor3::from_i64_nested(&[&[&[3]]]),
        )
        .unwrap();
        let rp = RPair::new(Matrix::from_i64(&[&[5]]), Matrix::from_i64(&[&[7]])).unwrap();
        let (dp, ds) = coboundary_delta(&palg, &rp).unwrap();
        assert_eq!(dp.coeffs.entries()[0], antiflex_linear::int(50));
        assert_eq!(ds.coeffs.entries()[0], antiflex_linear::int(45));
        assert!(run_identities("σ", &sigma_identities(&palg, &rp, &dp, &ds), WitnessMode::First).passed);
        assert!(coboundary_delta(&PreAlgebra::zero(2), &rp).is_err());
    }
}
