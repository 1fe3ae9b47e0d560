//! The defining identities of each algebra class, as multilinear residuals.

use antiflex_linear::{Error, Result, Vector};

use crate::algebra::{pre_triple_unchecked, Algebra, PreAlgebra, PreTripleKind};
use crate::check::{run_identities, CheckReport, Identity, WitnessMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityKind {
    Associative,
    AntiFlexible,
    PreAntiFlexible,
    Dendriform,
}

impl IdentityKind {
    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Associative => "associative",
            IdentityKind::AntiFlexible => "anti-flexible",
            IdentityKind::PreAntiFlexible => "pre-anti-flexible",
            IdentityKind::Dendriform => "dendriform",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Self::Associative, Self::AntiFlexible, Self::PreAntiFlexible, Self::Dendriform]
            .into_iter()
            .find(|k| k.name() == s)
    }
}

/// What a checker is applied to.
#[derive(Clone, Copy, Debug)]
pub enum Subject<'a> {
    Algebra(&'a Algebra),
    PreAlgebra(&'a PreAlgebra),
}

pub fn associativity(alg: &Algebra) -> Vec<Identity<'_>> {
    let n = alg.dimension;
    vec![Identity::new("associativity (x,y,z) = 0", vec![n; 3], move |a: &[Vector]| {
        alg.triple(&a[0], &a[1], &a[2]).into_vec()
    })]
}

pub fn anti_flexibility(alg: &Algebra) -> Vec<Identity<'_>> {
    let n = alg.dimension;
    vec![Identity::new("anti-flexibility (x,y,z) = (z,y,x)", vec![n; 3], move |a: &[Vector]| {
        (alg.triple(&a[0], &a[1], &a[2]) - alg.triple(&a[2], &a[1], &a[0])).into_vec()
    })]
}

pub fn pre_anti_flexibility(palg: &PreAlgebra) -> Vec<Identity<'_>> {
    use PreTripleKind::*;
    let n = palg.dimension;
    let t = move |x: &Vector, y: &Vector, z: &Vector, k| pre_triple_unchecked(palg, x, y, z, k);
    vec![
        Identity::new("pre-anti-flexible (x,y,z)_m = (z,y,x)_m", vec![n; 3], move |a: &[Vector]| {
            (t(&a[0], &a[1], &a[2], M) - t(&a[2], &a[1], &a[0], M)).into_vec()
        }),
        Identity::new("pre-anti-flexible (x,y,z)_l = (z,y,x)_r", vec![n; 3], move |a: &[Vector]| {
            (t(&a[0], &a[1], &a[2], L) - t(&a[2], &a[1], &a[0], R)).into_vec()
        }),
    ]
}

pub fn dendriformity(palg: &PreAlgebra) -> Vec<Identity<'_>> {
    let n = palg.dimension;
    [("dendriform (x,y,z)_m = 0", PreTripleKind::M), ("dendriform (x,y,z)_l = 0", PreTripleKind::L), ("dendriform (x,y,z)_r = 0", PreTripleKind::R)]
        .into_iter()
        .map(|(label, k)| {
            Identity::new(label, vec![n; 3], move |a: &[Vector]| pre_triple_unchecked(palg, &a[0], &a[1], &a[2], k).into_vec())
        })
        .collect()
}

/// The identities of `kind` for `subject`; errors when the kind needs the
/// other arity (one product versus two).
pub fn identities_for<'a>(subject: Subject<'a>, kind: IdentityKind) -> Result<Vec<Identity<'a>>> {
    match (subject, kind) {
        (Subject::Algebra(a), IdentityKind::Associative) => Ok(associativity(a)),
        (Subject::Algebra(a), IdentityKind::AntiFlexible) => Ok(anti_flexibility(a)),
        (Subject::PreAlgebra(p), IdentityKind::PreAntiFlexible) => Ok(pre_anti_flexibility(p)),
        (Subject::PreAlgebra(p), IdentityKind::Dendriform) => Ok(dendriformity(p)),
        (Subject::Algebra(_), k) => Err(Error::Precondition(format!("{} needs a pre-algebra (two products)", k.name()))),
        (Subject::PreAlgebra(_), k) => Err(Error::Precondition(format!("{} needs an algebra (one product)", k.name()))),
    }
}

pub fn check_identities_with(subject: Subject<'_>, kind: IdentityKind, mode: WitnessMode) -> Result<CheckReport> {
    let ids = identities_for(subject, kind)?;
    Ok(run_identities(kind.name(), &ids, mode))
}

/// Scans all basis triples and reports the lexicographically first failure.
pub fn check_identities(subject: Subject<'_>, kind: IdentityKind) -> Result<CheckReport> {
    check_identities_with(subject, kind, WitnessMode::First)
}

pub fn is_associative(alg: &Algebra) -> bool {
    run_identities("associative", &associativity(alg), WitnessMode::First).passed
}

pub fn is_anti_flexible(alg: &Algebra) -> bool {
    run_identities("anti-flexible", &anti_flexibility(alg), WitnessMode::First).passed
}

pub fn is_pre_anti_flexible(palg: &PreAlgebra) -> bool {
    run_identities("pre-anti-flexible", &pre_anti_flexibility(palg), WitnessMode::First).passed
}

pub fn is_dendriform(palg: &PreAlgebra) -> bool {
    run_identities("dendriform", &dendriformity(palg), WitnessMode::First).passed
}

pub fn check_pre(palg: &PreAlgebra) -> CheckReport {
    run_identities("pre-anti-flexible", &pre_anti_flexibility(palg), WitnessMode::First)
}

pub fn check_anti_flexible(alg: &Algebra) -> CheckReport {
    run_identities("anti-flexible", &anti_flexibility(alg), WitnessMode::First)
}
