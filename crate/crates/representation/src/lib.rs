//! Bimodules of anti-flexible and pre-anti-flexible algebras.

pub mod bimodule;
pub mod transforms;

pub use bimodule::{
    add_all, af_bimodule_identities, check_af_bimodule, check_pre_bimodule, eval, negate_all,
    pre_bimodule_identities, transpose_all, zero_family, AfBimodule, MapFamily, PreBimodule,
};
pub use transforms::{
    derive_bimodule, dual_reduced_double, semidirect_af, semidirect_pre, semidirect_tensor, semidirect_verdicts,
    transform_unchecked, DerivedBimodule, Transform,
};
