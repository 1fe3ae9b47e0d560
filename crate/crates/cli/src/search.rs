//! Exhaustive searches over matrices with entries from a finite set.
//!
//! Candidates are enumerated in lexicographic order of their entries
//! (row-major, coefficients sorted ascending). Workers share the index range
//! and the results are collected in index order, so the thread count never
//! shows in the output.

use antiflex_algebra::Algebra;
use antiflex_coboundary::check_pafybe;
use antiflex_linear::{format_scalar, parse_scalar, Matrix, Scalar};
use antiflex_solutions::{check_o_operator, check_rota_baxter, OOperator};
use rayon::prelude::*;

use crate::CliError;

/// Largest search space accepted.
pub const MAX_CANDIDATES: u128 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SearchTarget {
    /// Rota-Baxter operators of an algebra
    RotaBaxter,
    /// symmetric solutions r of the pre-anti-flexible Yang-Baxter equation
    PafybeSymmetric,
    /// O-operators of an anti-flexible bimodule
    OOperator,
}

impl SearchTarget {
    pub fn name(self) -> &'static str {
        match self {
            SearchTarget::RotaBaxter => "rota-baxter",
            SearchTarget::PafybeSymmetric => "pafybe-symmetric",
            SearchTarget::OOperator => "o-operator",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub target: SearchTarget,
    pub coefficients: Vec<Scalar>,
    /// Largest subject dimension accepted.
    pub bound: usize,
    /// Recorded in reports; the enumeration itself is exhaustive.
    pub seed: u64,
}

impl SearchSpec {
    pub fn new(target: SearchTarget, coefficients: Vec<Scalar>) -> Self {
        SearchSpec { target, coefficients, bound: 3, seed: 0 }
    }
}

/// Parses `-1,0,1/2`; the set is sorted and deduplicated.
pub fn parse_coefficients(text: &str) -> Result<Vec<Scalar>, CliError> {
    let mut v = text
        .split(',')
        .map(|s| parse_scalar(s).map_err(|_| CliError::Input(format!("--coeffs: malformed scalar {s:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    v.sort();
    v.dedup();
    if v.is_empty() {
        return Err(CliError::Input("--coeffs: empty coefficient set".into()));
    }
    Ok(v)
}

pub fn format_coefficients(c: &[Scalar]) -> String {
    c.iter().map(format_scalar).collect::<Vec<_>>().join(",")
}

/// The subject of a search.
pub enum Subject<'a> {
    Algebra(&'a Algebra),
    PreAlgebra(&'a antiflex_algebra::PreAlgebra),
    OOperatorSpace(OOperator),
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub candidates: u128,
    pub found: Vec<Matrix>,
}

/// Number of free entries and the matrix they fill.
struct Layout {
    rows: usize,
    cols: usize,
    symmetric: bool,
}

impl Layout {
    fn slots(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.symmetric || i <= j {
                    v.push((i, j));
                }
            }
        }
        v
    }

    fn candidate(&self, slots: &[(usize, usize)], coeffs: &[Scalar], mut index: u64) -> Matrix {
        let q = coeffs.len() as u64;
        let mut m = Matrix::zeros(self.rows, self.cols);
        // the first slot is the most significant digit
        for &(i, j) in slots.iter().rev() {
            let c = coeffs[(index % q) as usize].clone();
            index /= q;
            if self.symmetric {
                m[(j, i)] = c.clone();
            }
            m[(i, j)] = c;
        }
        m
    }
}

/// `ANTIFLEX_THREADS` caps the worker count when set to a positive integer.
pub fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("ANTIFLEX_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Input(format!("ANTIFLEX_THREADS: expected a positive integer, got {v:?}")))?;
        b = b.num_threads(n);
    }
    b.build().map_err(|e| CliError::Internal(e.to_string()))
}

pub fn search_space(slots: usize, coefficients: usize) -> u128 {
    (0..slots).try_fold(1u128, |acc, _| acc.checked_mul(coefficients as u128)).unwrap_or(u128::MAX)
}

pub fn grid_search(spec: &SearchSpec, subject: Subject<'_>) -> Result<SearchOutcome, CliError> {
    if spec.coefficients.is_empty() {
        return Err(CliError::Input("empty coefficient set".into()));
    }
    let (layout, dims) = match (&subject, spec.target) {
        (Subject::Algebra(a), SearchTarget::RotaBaxter) => {
            (Layout { rows: a.dimension, cols: a.dimension, symmetric: false }, vec![a.dimension])
        }
        (Subject::PreAlgebra(p), SearchTarget::PafybeSymmetric) => {
            (Layout { rows: p.dimension, cols: p.dimension, symmetric: true }, vec![p.dimension])
        }
        (Subject::OOperatorSpace(oo), SearchTarget::OOperator) => {
            let (n, m) = (oo.bimodule.base.dimension, oo.bimodule.space_dim);
            (Layout { rows: n, cols: m, symmetric: false }, vec![n, m])
        }
        _ => return Err(CliError::Input(format!("the input does not fit search target {}", spec.target.name()))),
    };
    if let Some(&d) = dims.iter().find(|&&d| d > spec.bound) {
        return Err(CliError::Input(format!("dimension {d} exceeds the bound {}; raise --bound", spec.bound)));
    }
    let slots = layout.slots();
    let size = search_space(slots.len(), spec.coefficients.len());
    if size > MAX_CANDIDATES {
        return Err(CliError::Input(format!("search space has {size} candidates, more than the limit {MAX_CANDIDATES}")));
    }
    let coeffs = &spec.coefficients;
    let accept = |m: &Matrix| -> Result<bool, CliError> {
        Ok(match &subject {
            Subject::Algebra(a) => check_rota_baxter(a, m)?.passed,
            Subject::PreAlgebra(p) => check_pafybe(p, m)?.report.passed,
            Subject::OOperatorSpace(oo) => {
                let mut c = oo.clone();
                c.t = m.clone();
                check_o_operator(&c)?.passed
            }
        })
    };
    let found = thread_pool()?.install(|| {
        (0..size as u64)
            .into_par_iter()
            .map(|i| {
                let m = layout.candidate(&slots, coeffs, i);
                accept(&m).map(|ok| ok.then_some(m))
            })
            .collect::<Result<Vec<_>, CliError>>()
    })?;
    Ok(SearchOutcome { candidates: size, found: found.into_iter().flatten().collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use antiflex_algebra::corpus::truncated_cubic;
    use antiflex_linear::int;

    #[test]
    fn enumeration_is_lexicographic() {
        let layout = Layout { rows: 1, cols: 2, symmetric: false };
        let slots = layout.slots();
        let coeffs = vec![int(-1), int(0), int(1)];
        let first: Vec<Matrix> = (0..4).map(|i| layout.candidate(&slots, &coeffs, i)).collect();
        assert_eq!(first[0], Matrix::from_i64(&[&[-1, -1]]));
        assert_eq!(first[1], Matrix::from_i64(&[&[-1, 0]]));
        assert_eq!(first[3], Matrix::from_i64(&[&[0, -1]]));
    }

    #[test]
    fn square_map_is_found_on_truncated_polynomials() {
        let alg = truncated_cubic();
        let spec = SearchSpec::new(SearchTarget::RotaBaxter, parse_coefficients("-1,0,1").unwrap());
        let out = grid_search(&spec, Subject::Algebra(&alg)).unwrap();
        assert_eq!(out.candidates, 81);
        assert!(out.found.contains(&Matrix::from_i64(&[&[0, 0], &[1, 0]])));
    }

    #[test]
    fn oversized_space_is_refused() {
        let alg = antiflex_algebra::corpus::matrices_2x2();
        let mut spec = SearchSpec::new(SearchTarget::RotaBaxter, parse_coefficients("-2,-1,0,1,2,3").unwrap());
        spec.bound = 4;
        let e = grid_search(&spec, Subject::Algebra(&alg)).unwrap_err().to_string();
        assert!(e.contains("2821109907456"), "{e}");
    }

    #[test]
    fn coefficients_are_sorted_and_deduplicated() {
        assert_eq!(parse_coefficients("1,0,-1,0").unwrap(), vec![int(-1), int(0), int(1)]);
        assert!(parse_coefficients("1,a").is_err());
    }
}
