//! Matched pairs of anti-flexible and pre-anti-flexible algebras and their
//! doubles.

pub mod af;
pub mod dual;
pub mod pre;

pub use af::{
    af_matched_full_report, af_matched_identities, build_af_double, check_af_matched, check_af_matched_with,
    double_tensor, split_af, split_tensor, AfMatchedPair, MixedTermSign,
};
pub use dual::{omega, omega_double_check, standard_double, standard_dual_matched};
pub use pre::{
    build_pre_double, check_pre_matched, check_pre_matched_with, dual_pair, pre_matched_full_report,
    pre_matched_identities, split_pre, DualPairOrder, FirstIdentityAction, PreMatchedPair,
};
