//! The example files shipped under `corpus/`, generated from the library
//! so that they can be regenerated and compared byte for byte.

use std::path::Path;

use antiflex_algebra::corpus::{associative_corpus, pre_corpus, truncated_cubic};
use antiflex_algebra::samples::non_dendriform_selection;
use antiflex_coboundary::{coboundary_bialgebra, RPair};
use antiflex_linear::Matrix;
use antiflex_matched_pair::{dual_pair, DualPairOrder};
use antiflex_representation::PreBimodule;
use antiflex_solutions::canonical_solution;

use crate::format::{save, Document, Object, RElement};
use crate::CliError;

const SOURCE: &str = "antiflex corpus";

/// File name and contents of every corpus file.
pub fn corpus_documents() -> Vec<(String, Document)> {
    let mut out = Vec::new();
    let mut add = |file: String, obj: Object, name: &str| out.push((file, Document::named(obj, name, SOURCE)));
    for (name, alg) in associative_corpus() {
        add(format!("{name}.json"), Object::Algebra(alg), name);
    }
    for (name, p) in pre_corpus() {
        add(format!("{}.json", name.replace('/', "-")), Object::PreAlgebra(p), &name);
    }
    for (i, p) in non_dendriform_selection(4).into_iter().enumerate() {
        let name = format!("non-dendriform-{}", i + 1);
        add(format!("{name}.json"), Object::PreAlgebra(p), &name);
    }
    // the span{t, t²} pre-algebra with x≻y = x∗y and its canonical solution
    let t3 = antiflex_algebra::from_associative(&truncated_cubic(), antiflex_algebra::AssociativeVariant::SuccLeft)
        .expect("associative");
    let (double, r) = canonical_solution(&t3).expect("pre-anti-flexible");
    add("double4.json".into(), Object::PreAlgebra(double.clone()), "t3 ⋉ t3*");
    add("r.json".into(), Object::RElement(RElement::Single(r.clone())), "canonical r on double4");
    add("regular-bimodule-t3.json".into(), Object::PreBimodule(PreBimodule::regular(&t3)), "regular bimodule of t3");
    let zero = antiflex_algebra::PreAlgebra::zero(2);
    add(
        "dual-pair-t3.json".into(),
        Object::MatchedPair(dual_pair(&t3, &zero, DualPairOrder::Derived).expect("same dimension")),
        "t3 with the zero dual",
    );
    let b = coboundary_bialgebra(&double, &RPair::case_two(&r).expect("square")).expect("dimensions agree");
    add("bialgebra-double4.json".into(), Object::Bialgebra(b), "coboundary bialgebra of the canonical r");
    add("square-map.json".into(), Object::LinearMap(Matrix::from_i64(&[&[0, 0], &[1, 0]])), "t ↦ t²");
    add("identity-2.json".into(), Object::LinearMap(Matrix::identity(2)), "identity on a plane");
    out
}

pub fn write_corpus(dir: &Path) -> Result<Vec<String>, CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    let mut names = Vec::new();
    for (file, doc) in corpus_documents() {
        save(&dir.join(&file), &doc)?;
        names.push(file);
    }
    Ok(names)
}
