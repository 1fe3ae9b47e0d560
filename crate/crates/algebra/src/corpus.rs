//! Seed associative algebras over ℚ used throughout the tests.

use antiflex_linear::{int, Tensor3};

use crate::algebra::Algebra;
use crate::constructions::{from_associative, AssociativeVariant};
use crate::algebra::PreAlgebra;

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// ℚ itself, basis {1}.
pub fn rationals() -> Algebra {
    let mut c = Tensor3::cubic(1);
    c[(0, 0, 0)] = int(1);
    Algebra::with_names(c, names(&["1"])).unwrap()
}

/// Dual numbers ℚ[t]/(t²), basis {1, t}.
pub fn dual_numbers() -> Algebra {
    let mut c = Tensor3::cubic(2);
    c[(0, 0, 0)] = int(1);
    c[(0, 1, 1)] = int(1);
    c[(1, 0, 1)] = int(1);
    Algebra::with_names(c, names(&["1", "t"])).unwrap()
}

/// span{t, t²} inside ℚ[t]/(t³): the only nonzero product is t·t = t².
pub fn truncated_cubic() -> Algebra {
    let mut c = Tensor3::cubic(2);
    c[(0, 0, 1)] = int(1);
    Algebra::with_names(c, names(&["t", "t2"])).unwrap()
}

/// Upper-triangular 2×2 matrices, basis {e11, e12, e22}.
pub fn upper_triangular() -> Algebra {
    let mut c = Tensor3::cubic(3);
    c[(0, 0, 0)] = int(1);
    c[(0, 1, 1)] = int(1);
    c[(1, 2, 1)] = int(1);
    c[(2, 2, 2)] = int(1);
    Algebra::with_names(c, names(&["e11", "e12", "e22"])).unwrap()
}

/// All 2×2 matrices, basis e_ij at index 2i + j.
pub fn matrices_2x2() -> Algebra {
    let mut c = Tensor3::cubic(4);
    for i in 0..2 {
        for j in 0..2 {
            for l in 0..2 {
                // e_ij e_jl = e_il
                c[(2 * i + j, 2 * j + l, 2 * i + l)] = int(1);
            }
        }
    }
    Algebra::with_names(c, names(&["e11", "e12", "e21", "e22"])).unwrap()
}

/// The corpus with stable short names.
pub fn associative_corpus() -> Vec<(&'static str, Algebra)> {
    vec![
        ("q", rationals()),
        ("dual-numbers", dual_numbers()),
        ("t3", truncated_cubic()),
        ("upper-triangular", upper_triangular()),
        ("matrices-2x2", matrices_2x2()),
    ]
}

/// Every one-sided pre-structure over every corpus algebra.
pub fn pre_corpus() -> Vec<(String, PreAlgebra)> {
    let mut out = Vec::new();
    for (name, alg) in associative_corpus() {
        for v in AssociativeVariant::ALL {
            out.push((format!("{name}/{}", v.name()), from_associative(&alg, v).expect("corpus is associative")));
        }
    }
    out
}

/// Pre-corpus entries of dimension at most `max_dim`.
pub fn pre_corpus_up_to(max_dim: usize) -> Vec<(String, PreAlgebra)> {
    pre_corpus().into_iter().filter(|(_, p)| p.dimension <= max_dim).collect()
}
