//! The matched pair of `A` and `A*` and the canonical skew form on the double.

use antiflex_algebra::{
    check_anti_flexible, check_pre, cyclic_form_identity, run_identities, underlying_algebra, Algebra, CheckReport,
    PreAlgebra, WitnessMode,
};
use antiflex_linear::{int, zero, Error, Matrix, Result, Vector};
use antiflex_representation::{transpose_all, MapFamily};

use crate::af::{build_af_double, AfMatchedPair};

fn dual_family(p: &PreAlgebra, f: impl Fn(&PreAlgebra, &Vector) -> Matrix) -> MapFamily {
    transpose_all(&(0..p.dimension).map(|i| f(p, &p.basis(i))).collect::<Vec<_>>())
}

/// `(A, A*, R*_≺A, L*_≻A, R*_≺A*, L*_≻A*)` on the underlying algebras.
pub fn standard_dual_matched(palg_a: &PreAlgebra, palg_a_star: &PreAlgebra) -> Result<AfMatchedPair> {
    if palg_a.dimension != palg_a_star.dimension {
        return Err(Error::Shape(format!(
            "A has dimension {}, A* has dimension {}",
            palg_a.dimension, palg_a_star.dimension
        )));
    }
    Ok(AfMatchedPair {
        alg_a: underlying_algebra(palg_a),
        alg_b: underlying_algebra(palg_a_star),
        l_a: dual_family(palg_a, PreAlgebra::r_prec),
        r_a: dual_family(palg_a, PreAlgebra::l_succ),
        l_b: dual_family(palg_a_star, PreAlgebra::r_prec),
        r_b: dual_family(palg_a_star, PreAlgebra::l_succ),
    })
}

/// `ω(x + a, y + b) = ⟨x, b⟩ − ⟨a, y⟩` on `A ⊕ A*`.
pub fn omega(n: usize) -> Matrix {
    Matrix::from_fn(2 * n, 2 * n, |i, j| {
        if i < n && j == i + n {
            int(1)
        } else if i >= n && j + n == i {
            int(-1)
        } else {
            zero()
        }
    })
}

/// The double `A ⊕ A*` of [`standard_dual_matched`].
pub fn standard_double(palg_a: &PreAlgebra, palg_a_star: &PreAlgebra) -> Result<Algebra> {
    for (name, p) in [("A", palg_a), ("A*", palg_a_star)] {
        if let Some(w) = check_pre(p).witness {
            return Err(Error::Precondition(format!("{name} is not pre-anti-flexible: {w}")));
        }
    }
    Ok(build_af_double(&standard_dual_matched(palg_a, palg_a_star)?))
}

/// Checks `ω` on an algebra structure on `A ⊕ A*` (A-block first).
///
/// Closedness of `ω` alone holds for the double of every standard dual pair,
/// so the double is also required to be anti-flexible; together the two are
/// equivalent to the pair being matched.
pub fn omega_double_check(d: &Algebra) -> Result<CheckReport> {
    if d.dimension % 2 != 0 {
        return Err(Error::Shape(format!("A ⊕ A* must have even dimension, got {}", d.dimension)));
    }
    let w = omega(d.dimension / 2);
    let parts = vec![
        check_anti_flexible(d),
        run_identities("closed form", &[cyclic_form_identity(d, &w)], WitnessMode::First),
    ];
    Ok(CheckReport::all("ω on the double", parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use antiflex_linear::Zero;

    #[test]
    fn omega_is_skew_and_nondegenerate() {
        let w = omega(3);
        assert!((&w + &w.transpose()).is_zero());
        assert_eq!(w.rank(), 6);
        let n = 3;
        for i in 0..n {
            for j in 0..n {
                assert!(w[(i, j)].is_zero() && w[(n + i, n + j)].is_zero());
            }
        }
    }
}
