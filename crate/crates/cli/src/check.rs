//! The checks reachable from `antiflex check` and `antiflex oracle`.
//!
//! Each check feeds named identity groups to a [`Runner`]; preconditions
//! come first and later groups are skipped once one of them fails.

use antiflex_algebra::{
    cyclic_form_identity, identities_for, underlying_algebra, Algebra, IdentityKind, PreAlgebra, Subject,
};
use antiflex_bialgebra::{bialgebra_condition_identities, bialgebra_routes, comult_identities, Bialgebra};
use antiflex_coboundary::{
    coboundary_bialgebra, coboundary_condition_identities, pafybe_residual, ybe_identities, Families,
    FourthConditionForm, RPair, SecondConditionForm, SpecialCase,
};
use antiflex_linear::{Matrix, Vector};
use antiflex_matched_pair::{af_matched_identities, omega, pre_matched_identities, FirstIdentityAction, MixedTermSign};
use antiflex_representation::{af_bimodule_identities, pre_bimodule_identities};
use antiflex_solutions::{
    double_consistency_identities, double_products_from_r, form_from_r, generalized_rb_identity, induced_pre_from_map,
    o_operator_identity, operator_form_identity, rota_baxter_identity, two_cocycle_identity, OOperator,
};
use serde_json::json;

use crate::format::{Document, Object, RElement};
use crate::report::Runner;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum CheckKind {
    /// identities of an algebra or pre-algebra file (see --kind)
    Algebra,
    /// the pre-anti-flexible identities of a pre-algebra file
    PreAlgebra,
    /// a bimodule file, pre-anti-flexible or anti-flexible
    Bimodule,
    /// a matched pair of pre-anti-flexible algebras
    MatchedPair,
    /// a bialgebra file through all four characterizations
    Bialgebra,
    /// pre-algebra + r-element: the coboundary conditions and the bialgebra they give
    Coboundary,
    /// pre-algebra + r: the pre-anti-flexible Yang-Baxter equation
    Pafybe,
    /// algebra + linear map: the Rota-Baxter identity
    RotaBaxter,
    /// algebra + linear map: the generalized Rota-Baxter condition
    GeneralizedRb,
    /// (bimodule or pre-algebra) + linear map: the O-operator identity
    OOperator,
    /// pre-algebra + symmetric nondegenerate r: the 2-cocycle condition of r⁻¹
    CocycleForm,
    /// pre-algebra + symmetric r: the operator form of the equation
    OperatorForm,
    /// algebra on A ⊕ A*: anti-flexibility and closedness of the canonical form
    Omega,
    /// pre-algebra + symmetric r: consistency of the products r induces
    DoubleProducts,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Algebra => "algebra",
            CheckKind::PreAlgebra => "pre-algebra",
            CheckKind::Bimodule => "bimodule",
            CheckKind::MatchedPair => "matched-pair",
            CheckKind::Bialgebra => "bialgebra",
            CheckKind::Coboundary => "coboundary",
            CheckKind::Pafybe => "pafybe",
            CheckKind::RotaBaxter => "rota-baxter",
            CheckKind::GeneralizedRb => "generalized-rb",
            CheckKind::OOperator => "o-operator",
            CheckKind::CocycleForm => "cocycle-form",
            CheckKind::OperatorForm => "operator-form",
            CheckKind::Omega => "omega",
            CheckKind::DoubleProducts => "double-products",
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CheckOptions {
    /// Identity family for `algebra` checks; defaults by file kind.
    pub identity: Option<IdentityKind>,
    /// How a single `r` becomes a pair for `coboundary`.
    pub case: Option<SpecialCase>,
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn arity(kind: CheckKind, docs: &[Document], n: usize, what: &str) -> Result<(), CliError> {
    if docs.len() != n {
        return Err(input(format!("check {} takes {what}, got {} file(s)", kind.name(), docs.len())));
    }
    Ok(())
}

fn wrong(doc: &Document, want: &str) -> CliError {
    input(format!("expected {want}, found a {} file", doc.kind().name()))
}

pub fn as_algebra(doc: &Document) -> Result<&Algebra, CliError> {
    match &doc.object {
        Object::Algebra(a) => Ok(a),
        _ => Err(wrong(doc, "an algebra")),
    }
}

pub fn as_pre(doc: &Document) -> Result<&PreAlgebra, CliError> {
    match &doc.object {
        Object::PreAlgebra(p) => Ok(p),
        _ => Err(wrong(doc, "a pre-algebra")),
    }
}

pub fn as_map(doc: &Document) -> Result<&Matrix, CliError> {
    match &doc.object {
        Object::LinearMap(m) => Ok(m),
        _ => Err(wrong(doc, "a linear map")),
    }
}

/// A single `r`, of the given dimension.
pub fn as_r(doc: &Document, n: usize) -> Result<&Matrix, CliError> {
    match &doc.object {
        Object::RElement(RElement::Single(r)) if r.rows() == n => Ok(r),
        Object::RElement(RElement::Single(r)) => {
            Err(input(format!("r has dimension {}, the algebra has dimension {n}", r.rows())))
        }
        _ => Err(wrong(doc, "an r-element with a single r")),
    }
}

/// A pair `(r_≺, r_≻)`, either stored or obtained from `r` through a case.
pub fn as_rpair(doc: &Document, n: usize, case: Option<SpecialCase>) -> Result<RPair, CliError> {
    let rp = match (&doc.object, case) {
        (Object::RElement(RElement::Pair(rp)), None) => rp.clone(),
        (Object::RElement(RElement::Pair(_)), Some(_)) => return Err(input("--case applies to a single r, not a pair")),
        (Object::RElement(RElement::Single(r)), case) => case.unwrap_or(SpecialCase::Two).rpair(r)?,
        _ => return Err(wrong(doc, "an r-element")),
    };
    if rp.dimension() != n {
        return Err(input(format!("r has dimension {}, the algebra has dimension {n}", rp.dimension())));
    }
    Ok(rp)
}

/// The anti-flexible bimodule of an O-operator file: a bimodule file, or
/// a pre-algebra standing for `(L_≻, R_≺, A)`.
pub fn o_operator_from(space: &Document, map: &Document) -> Result<OOperator, CliError> {
    let t = as_map(map)?.clone();
    let bm = match &space.object {
        Object::AfBimodule(bm) => bm.clone(),
        Object::PreAlgebra(p) => OOperator::regular(p).bimodule,
        _ => return Err(wrong(space, "an anti-flexible bimodule or a pre-algebra")),
    };
    Ok(OOperator::new(bm, t)?)
}

fn square(m: &Matrix, n: usize, what: &str) -> Result<(), CliError> {
    if m.rows() != n || m.cols() != n {
        return Err(input(format!("{what} is {}x{}, expected {n}x{n}", m.rows(), m.cols())));
    }
    Ok(())
}

fn symmetric(r: &Matrix) -> Result<(), CliError> {
    if r != &r.transpose() {
        return Err(input("r is not symmetric"));
    }
    Ok(())
}

fn pre_section(runner: &mut Runner, name: &str, p: &PreAlgebra) -> Result<bool, CliError> {
    Ok(runner.identities(name, &identities_for(Subject::PreAlgebra(p), IdentityKind::PreAntiFlexible)?))
}

fn af_section(runner: &mut Runner, name: &str, a: &Algebra) -> Result<bool, CliError> {
    Ok(runner.identities(name, &identities_for(Subject::Algebra(a), IdentityKind::AntiFlexible)?))
}

/// Bialgebra sections once `A` is known to be pre-anti-flexible: the dual
/// structure, the compatibility conditions, and the three other routes,
/// whose verdicts must agree with the conditions.
fn bialgebra_sections(runner: &mut Runner, b: &Bialgebra) -> Result<(), CliError> {
    if !runner.identities("A* is pre-anti-flexible", &comult_identities(&b.delta_prec, &b.delta_succ)) {
        return Ok(());
    }
    let conditions = runner.identities(
        "compatibility conditions",
        &bialgebra_condition_identities(&b.palg, &b.delta_prec, &b.delta_succ),
    );
    let routes = bialgebra_routes(b)?;
    let v = routes.verdicts();
    if v.iter().any(|&p| p != conditions) {
        return Err(CliError::Internal(format!("bialgebra routes disagree: conditions {conditions}, routes {v:?}")));
    }
    runner.report(routes.pre_matched);
    runner.report(routes.af_matched);
    runner.report(routes.omega);
    Ok(())
}

/// Runs the check on already parsed inputs.
pub fn evaluate(kind: CheckKind, docs: &[Document], opts: CheckOptions, runner: &mut Runner) -> Result<(), CliError> {
    match kind {
        CheckKind::Algebra | CheckKind::PreAlgebra => {
            arity(kind, docs, 1, "one file")?;
            let (subject, default) = match &docs[0].object {
                Object::Algebra(a) if kind == CheckKind::Algebra => (Subject::Algebra(a), IdentityKind::AntiFlexible),
                Object::PreAlgebra(p) => (Subject::PreAlgebra(p), IdentityKind::PreAntiFlexible),
                _ => return Err(wrong(&docs[0], "an algebra or pre-algebra")),
            };
            let ik = opts.identity.unwrap_or(default);
            runner.identities(ik.name(), &identities_for(subject, ik)?);
        }
        CheckKind::Bimodule => {
            arity(kind, docs, 1, "one file")?;
            match &docs[0].object {
                Object::PreBimodule(bm) => {
                    pre_section(runner, "base", &bm.base)?;
                    runner.identities("pre-anti-flexible bimodule", &pre_bimodule_identities(bm));
                }
                Object::AfBimodule(bm) => {
                    af_section(runner, "base", &bm.base)?;
                    runner.identities("anti-flexible bimodule", &af_bimodule_identities(bm));
                }
                _ => return Err(wrong(&docs[0], "a bimodule")),
            }
        }
        CheckKind::MatchedPair => {
            arity(kind, docs, 1, "one file")?;
            let Object::MatchedPair(mp) = &docs[0].object else { return Err(wrong(&docs[0], "a matched pair")) };
            pre_section(runner, "A", &mp.palg_a)?;
            pre_section(runner, "B", &mp.palg_b)?;
            let (ab, ba) = (mp.bimodule_a_on_b()?, mp.bimodule_b_on_a()?);
            runner.identities("A acting on B", &pre_bimodule_identities(&ab));
            runner.identities("B acting on A", &pre_bimodule_identities(&ba));
            runner.identities("pre matched pair", &pre_matched_identities(mp, FirstIdentityAction::Prec));
            let summed = mp.summed();
            runner.identities("anti-flexible matched pair", &af_matched_identities(&summed, MixedTermSign::Mirrored));
        }
        CheckKind::Bialgebra => {
            arity(kind, docs, 1, "one file")?;
            let Object::Bialgebra(b) = &docs[0].object else { return Err(wrong(&docs[0], "a bialgebra")) };
            if pre_section(runner, "A is pre-anti-flexible", &b.palg)? {
                bialgebra_sections(runner, b)?;
            }
        }
        CheckKind::Coboundary => {
            arity(kind, docs, 2, "a pre-algebra and an r-element")?;
            let palg = as_pre(&docs[0])?;
            let rp = as_rpair(&docs[1], palg.dimension, opts.case)?;
            if !pre_section(runner, "A is pre-anti-flexible", palg)? {
                return Ok(());
            }
            let mut ids = coboundary_condition_identities(palg, &rp, FourthConditionForm::Paired);
            ids.extend(ybe_identities(palg, &rp, Families::compute(palg, &rp)?, SecondConditionForm::Corrected));
            let conditions = runner.identities("coboundary conditions", &ids);
            let b = coboundary_bialgebra(palg, &rp)?;
            let before = runner.sections.len();
            bialgebra_sections(runner, &b)?;
            let bialgebra = runner.sections[before..].iter().all(|s| s.report.passed);
            runner.note("conditions_agree_with_bialgebra", json!(conditions == bialgebra));
        }
        CheckKind::Pafybe => {
            arity(kind, docs, 2, "a pre-algebra and an r-element")?;
            let palg = as_pre(&docs[0])?;
            let r = as_r(&docs[1], palg.dimension)?;
            let res = pafybe_residual(palg, r)?;
            let n = palg.dimension;
            let id = antiflex_algebra::Identity::new("PAFYBE coefficient", vec![n; 3], move |v: &[Vector]| {
                vec![res.evaluate(&v[0], &v[1], &v[2])]
            });
            let passed = runner.identities("PAFYBE", &[id]);
            let sym = r == &r.transpose();
            runner.note("symmetric", json!(sym));
            runner.note("symmetric_solution", json!(sym && passed));
        }
        CheckKind::RotaBaxter | CheckKind::GeneralizedRb => {
            arity(kind, docs, 2, "an algebra and a linear map")?;
            let alg = as_algebra(&docs[0])?;
            let alpha = as_map(&docs[1])?;
            square(alpha, alg.dimension, "the map")?;
            if kind == CheckKind::RotaBaxter {
                runner.identities("Rota-Baxter", &[rota_baxter_identity(alg, alpha)]);
            } else {
                runner.identities("generalized Rota-Baxter", &[generalized_rb_identity(alg, alpha)]);
                let induced = induced_pre_from_map(alg, alpha)?;
                runner.note("induced_pre_anti_flexible", json!(antiflex_algebra::is_pre_anti_flexible(&induced)));
            }
        }
        CheckKind::OOperator => {
            arity(kind, docs, 2, "a bimodule (or pre-algebra) and a linear map")?;
            let oo = o_operator_from(&docs[0], &docs[1])?;
            if af_section(runner, "base", &oo.bimodule.base)?
                && runner.identities("anti-flexible bimodule", &af_bimodule_identities(&oo.bimodule))
            {
                runner.identities("O-operator", &[o_operator_identity(&oo)]);
            }
            runner.note("injective", json!(oo.is_injective()));
        }
        CheckKind::CocycleForm => {
            arity(kind, docs, 2, "a pre-algebra and an r-element")?;
            let palg = as_pre(&docs[0])?;
            let r = as_r(&docs[1], palg.dimension)?;
            let b = form_from_r(r)?;
            runner.identities("2-cocycle", &[two_cocycle_identity(palg, &b)]);
            let rows: Vec<Vec<String>> =
                b.to_rows().iter().map(|row| row.iter().map(antiflex_linear::format_scalar).collect()).collect();
            runner.note("form", json!(rows));
        }
        CheckKind::OperatorForm => {
            arity(kind, docs, 2, "a pre-algebra and an r-element")?;
            let palg = as_pre(&docs[0])?;
            let r = as_r(&docs[1], palg.dimension)?;
            symmetric(r)?;
            runner.identities("operator form", &[operator_form_identity(palg, r)]);
        }
        CheckKind::Omega => {
            arity(kind, docs, 1, "one file")?;
            let d = match &docs[0].object {
                Object::Algebra(a) => a.clone(),
                Object::PreAlgebra(p) => underlying_algebra(p),
                _ => return Err(wrong(&docs[0], "an algebra on A ⊕ A*")),
            };
            if d.dimension % 2 != 0 {
                return Err(input(format!("A ⊕ A* must have even dimension, got {}", d.dimension)));
            }
            let w = omega(d.dimension / 2);
            af_section(runner, "anti-flexible", &d)?;
            runner.identities("closed form", &[cyclic_form_identity(&d, &w)]);
        }
        CheckKind::DoubleProducts => {
            arity(kind, docs, 2, "a pre-algebra and an r-element")?;
            let palg = as_pre(&docs[0])?;
            let r = as_r(&docs[1], palg.dimension)?;
            let dp = double_products_from_r(palg, r)?;
            runner.identities("induced double", &double_consistency_identities(&dp)?);
        }
    }
    Ok(())
}
