//! Multilinear identities and the basis-tuple checker shared by every
//! verifier in the workspace.

use std::fmt;

use antiflex_linear::{format_scalar, Scalar, Vector, Zero};
use rayon::prelude::*;

/// A multilinear map whose vanishing expresses an identity. Each argument
/// slot ranges over a space of the given dimension; by multilinearity the
/// identity holds everywhere iff the residual vanishes on basis tuples.
pub struct Identity<'a> {
    pub label: String,
    pub arg_dims: Vec<usize>,
    residual: Box<dyn Fn(&[Vector]) -> Vec<Scalar> + Send + Sync + 'a>,
}

impl<'a> Identity<'a> {
    pub fn new(
        label: impl Into<String>,
        arg_dims: Vec<usize>,
        residual: impl Fn(&[Vector]) -> Vec<Scalar> + Send + Sync + 'a,
    ) -> Self {
        Identity { label: label.into(), arg_dims, residual: Box::new(residual) }
    }

    pub fn residual(&self, args: &[Vector]) -> Vec<Scalar> {
        (self.residual)(args)
    }

    /// Number of basis tuples the checker visits.
    pub fn tuple_count(&self) -> usize {
        self.arg_dims.iter().product()
    }

    fn tuple(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.arg_dims.len()];
        for (slot, &d) in self.arg_dims.iter().enumerate().rev() {
            idx[slot] = flat % d;
            flat /= d;
        }
        idx
    }

    fn basis_args(&self, idx: &[usize]) -> Vec<Vector> {
        idx.iter().zip(&self.arg_dims).map(|(&i, &d)| Vector::basis(d, i)).collect()
    }

    /// Residual at the basis tuple `idx`.
    pub fn at_basis(&self, idx: &[usize]) -> Vec<Scalar> {
        self.residual(&self.basis_args(idx))
    }

    fn witness_at(&self, flat: usize) -> Option<Witness> {
        let idx = self.tuple(flat);
        let res = self.at_basis(&idx);
        let nonzero = res.iter().any(|x| !x.is_zero());
        nonzero.then(|| Witness { identity: self.label.clone(), indices: idx, residual: res })
    }

    /// First failing basis tuple in lexicographic order.
    pub fn first_failure(&self) -> Option<Witness> {
        (0..self.tuple_count()).into_par_iter().find_map_first(|flat| self.witness_at(flat))
    }

    pub fn all_failures(&self) -> Vec<Witness> {
        (0..self.tuple_count()).into_par_iter().filter_map(|flat| self.witness_at(flat)).collect()
    }
}

/// A failing basis tuple together with the nonzero residual there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub identity: String,
    pub indices: Vec<usize>,
    pub residual: Vec<Scalar>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let res: Vec<String> = self.residual.iter().map(format_scalar).collect();
        write!(f, "{} at {:?}: residual [{}]", self.identity, self.indices, res.join(", "))
    }
}

/// Outcome of a check. `passed` holds exactly when `witness` is absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub passed: bool,
    pub identity_name: String,
    pub witness: Option<Witness>,
    /// Every failing tuple, filled only when requested.
    pub all_witnesses: Vec<Witness>,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckReport { passed: true, identity_name: name.into(), witness: None, all_witnesses: Vec::new() }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Self {
        CheckReport { passed: false, identity_name: name.into(), witness: Some(witness), all_witnesses: Vec::new() }
    }

    /// Combines sub-reports in order: passes iff all pass, and the first
    /// failing sub-report supplies the witness.
    pub fn all(name: impl Into<String>, parts: impl IntoIterator<Item = CheckReport>) -> Self {
        let name = name.into();
        let mut out = CheckReport::pass(name.clone());
        for p in parts {
            if !p.passed && out.passed {
                out.passed = false;
                out.witness = p.witness.clone();
            }
            out.all_witnesses.extend(p.all_witnesses);
        }
        out
    }

    /// Label of the violated identity, if any.
    pub fn failed_identity(&self) -> Option<&str> {
        self.witness.as_ref().map(|w| w.identity.as_str())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{}: pass", self.identity_name),
            Some(w) => write!(f, "{}: fail, {}", self.identity_name, w),
        }
    }
}

/// How many witnesses a check should collect.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WitnessMode {
    #[default]
    First,
    All,
}

/// Runs identities in order; each is scanned over its basis tuples in
/// lexicographic order, and the report carries the first failure found.
pub fn run_identities(name: &str, ids: &[Identity<'_>], mode: WitnessMode) -> CheckReport {
    let mut report = CheckReport::pass(name);
    for id in ids {
        match mode {
            WitnessMode::First => {
                if let Some(w) = id.first_failure() {
                    return CheckReport::fail(name, w);
                }
            }
            WitnessMode::All => {
                let fails = id.all_failures();
                if report.passed && !fails.is_empty() {
                    report.passed = false;
                    report.witness = Some(fails[0].clone());
                }
                report.all_witnesses.extend(fails);
            }
        }
    }
    report
}

/// Flattens a matrix residual row-major.
pub fn flat(m: &antiflex_linear::Matrix) -> Vec<Scalar> {
    m.entries().to_vec()
}
