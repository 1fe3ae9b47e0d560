//! The constructions reachable from `antiflex construct`.

use antiflex_algebra::{from_associative, induce_pre_from_form, AssociativeVariant};
use antiflex_coboundary::{coboundary_bialgebra, SpecialCase};
use antiflex_matched_pair::{build_pre_double, dual_pair, DualPairOrder};
use antiflex_representation::{semidirect_af, semidirect_pre};
use antiflex_solutions::{canonical_solution, induced_pre_from_map, solution_from_o_operator};

use crate::check::{as_algebra, as_map, as_pre, as_rpair, o_operator_from};
use crate::format::{Document, Object, RElement};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ConstructWhat {
    /// bimodule → A ⋉ V
    Semidirect,
    /// matched pair, or pre-algebras A and A* → the double
    Double,
    /// pre-algebra + r-element → the coboundary bialgebra
    Coboundary,
    /// pre-algebra → the canonical solution in A ⋉ A*
    CanonicalR,
    /// (bimodule or pre-algebra) + injective O-operator → r = T + σT
    FromOOperator,
    /// algebra + closed nondegenerate skew form → pre-algebra
    FromForm,
    /// associative algebra → one-sided pre-algebra (see --variant)
    FromAssociative,
    /// algebra + linear map → the induced pre-structure
    FromRb,
}

impl ConstructWhat {
    pub fn name(self) -> &'static str {
        match self {
            ConstructWhat::Semidirect => "semidirect",
            ConstructWhat::Double => "double",
            ConstructWhat::Coboundary => "coboundary",
            ConstructWhat::CanonicalR => "canonical-r",
            ConstructWhat::FromOOperator => "from-o-operator",
            ConstructWhat::FromForm => "from-form",
            ConstructWhat::FromAssociative => "from-associative",
            ConstructWhat::FromRb => "from-rb",
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ConstructOptions {
    pub case: Option<SpecialCase>,
    pub variant: Option<AssociativeVariant>,
}

/// What a construction produced: the main object and, for solutions, the
/// algebra in which `r` lives.
pub struct Constructed {
    pub primary: Document,
    pub double: Option<Document>,
}

fn provenance(what: ConstructWhat, docs: &[Document]) -> String {
    let inputs: Vec<String> = docs
        .iter()
        .map(|d| d.metadata.as_ref().and_then(|m| m.name.clone()).unwrap_or_else(|| d.kind().name().to_string()))
        .collect();
    format!("construct {} from {}", what.name(), inputs.join(", "))
}

fn arity(what: ConstructWhat, docs: &[Document], n: usize, desc: &str) -> Result<(), CliError> {
    if docs.len() != n {
        return Err(CliError::Input(format!("construct {} takes {desc}, got {} file(s)", what.name(), docs.len())));
    }
    Ok(())
}

pub fn construct(what: ConstructWhat, docs: &[Document], opts: ConstructOptions) -> Result<Constructed, CliError> {
    let prov = provenance(what, docs);
    let named = |obj: Object, name: &str| Document::named(obj, name, prov.clone());
    let single = |obj: Object, name: &str| Ok(Constructed { primary: named(obj, name), double: None });
    match what {
        ConstructWhat::Semidirect => {
            arity(what, docs, 1, "a bimodule")?;
            match &docs[0].object {
                Object::PreBimodule(bm) => single(Object::PreAlgebra(semidirect_pre(bm)), "semidirect product"),
                Object::AfBimodule(bm) => single(Object::Algebra(semidirect_af(bm)), "semidirect product"),
                _ => Err(CliError::Input(format!("expected a bimodule, found a {} file", docs[0].kind().name()))),
            }
        }
        ConstructWhat::Double => {
            let mp = match docs {
                [d] => match &d.object {
                    Object::MatchedPair(mp) => mp.clone(),
                    _ => return Err(CliError::Input("expected a matched pair".into())),
                },
                [a, b] => dual_pair(as_pre(a)?, as_pre(b)?, DualPairOrder::Derived)?,
                _ => return Err(CliError::Input("construct double takes a matched pair, or A and A*".into())),
            };
            single(Object::PreAlgebra(build_pre_double(&mp)), "double")
        }
        ConstructWhat::Coboundary => {
            arity(what, docs, 2, "a pre-algebra and an r-element")?;
            let palg = as_pre(&docs[0])?;
            let rp = as_rpair(&docs[1], palg.dimension, opts.case)?;
            single(Object::Bialgebra(coboundary_bialgebra(palg, &rp)?), "coboundary bialgebra")
        }
        ConstructWhat::CanonicalR => {
            arity(what, docs, 1, "a pre-algebra")?;
            let (d, r) = canonical_solution(as_pre(&docs[0])?)?;
            Ok(Constructed {
                primary: named(Object::RElement(RElement::Single(r)), "canonical r"),
                double: Some(named(Object::PreAlgebra(d), "A ⋉ A*")),
            })
        }
        ConstructWhat::FromOOperator => {
            arity(what, docs, 2, "a bimodule (or pre-algebra) and a linear map")?;
            let (d, r) = solution_from_o_operator(&o_operator_from(&docs[0], &docs[1])?)?;
            Ok(Constructed {
                primary: named(Object::RElement(RElement::Single(r)), "T + σT"),
                double: Some(named(Object::PreAlgebra(d), "T(V) ⋉ V*")),
            })
        }
        ConstructWhat::FromForm => {
            arity(what, docs, 2, "an algebra and a form")?;
            let p = induce_pre_from_form(as_algebra(&docs[0])?, as_map(&docs[1])?)?;
            single(Object::PreAlgebra(p), "induced by a form")
        }
        ConstructWhat::FromAssociative => {
            arity(what, docs, 1, "an associative algebra")?;
            let v = opts.variant.unwrap_or(AssociativeVariant::SuccLeft);
            single(Object::PreAlgebra(from_associative(as_algebra(&docs[0])?, v)?), v.name())
        }
        ConstructWhat::FromRb => {
            arity(what, docs, 2, "an algebra and a linear map")?;
            let alg = as_algebra(&docs[0])?;
            let alpha = as_map(&docs[1])?;
            if alpha.rows() != alg.dimension || alpha.cols() != alg.dimension {
                return Err(CliError::Input(format!("the map must be {0}x{0}", alg.dimension)));
            }
            single(Object::PreAlgebra(induced_pre_from_map(alg, alpha)?), "induced by a linear map")
        }
    }
}
