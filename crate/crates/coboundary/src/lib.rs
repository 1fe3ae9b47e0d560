//! Coboundary comultiplications built from a pair `(r_≺, r_≻)`, the
//! three-slot calculus used to state their conditions, and the
//! pre-anti-flexible Yang-Baxter equation.

pub mod conditions;
pub mod families;
pub mod pafybe;
pub mod rpair;
pub mod slots;
pub mod special;

pub use conditions::{
    check_coboundary_conditions, check_coboundary_conditions_with, coboundary_condition_identities, ConditionForms,
    FourthConditionForm,
};
pub use families::{
    catalog, k_correction, mnpq, rprime, ybe1_residual, ybe2_residual, ybe_identities, Families, Family, SecondConditionForm,
};
pub use pafybe::{check_pafybe, pafybe_residual, PafybeReport};
pub use rpair::{coboundary_bialgebra, coboundary_delta, sigma_identities, RPair};
pub use slots::{pairwise_tensor_product, Catalog, ProductOp, Slots, Term};
pub use special::{
    case_catalog, case_identities, case_one_rprime, special_case_bialgebra, special_case_bialgebra_with, CaseFamily,
    SpecialCase, SpecialCaseBialgebra,
};
