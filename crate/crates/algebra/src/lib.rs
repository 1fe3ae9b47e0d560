//! Algebras and pre-algebras as structure constants, their defining
//! identities, and the basic constructions between them.

pub mod algebra;
pub mod check;
pub mod constructions;
pub mod corpus;
pub mod identities;
pub mod samples;

pub use algebra::{change_basis, left_mul, opposite, pre_triple, right_mul, triple, underlying_algebra, Algebra, PreAlgebra, PreTripleKind};
pub use check::{flat, run_identities, CheckReport, Identity, Witness, WitnessMode};
pub use constructions::{
    cyclic_form_identity, derived_products, form_compatibility_identities, from_associative, induce_pre_from_form,
    AssociativeVariant, DerivedKind,
};
pub use identities::{
    check_anti_flexible, check_identities, check_identities_with, check_pre, identities_for, is_anti_flexible,
    is_associative, is_dendriform, is_pre_anti_flexible, IdentityKind, Subject,
};
