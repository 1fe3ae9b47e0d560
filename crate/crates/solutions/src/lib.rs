//! Rota-Baxter operators, O-operators, and symmetric solutions of the
//! pre-anti-flexible Yang-Baxter equation with the structures they induce.

pub mod double;
pub mod o_operator;
pub mod rmap;
pub mod rota_baxter;

pub use double::{
    check_double_products, double_consistency_identities, double_products_from_r, double_products_from_r_with,
    DoubleProducts, MixedDotForm, MixedProduct,
};
pub use o_operator::{
    canonical_r, canonical_solution, check_o_operator, induced_pre_from_o_operator, o_operator_identity,
    solution_from_o_operator, OOperator,
};
pub use rmap::{
    check_compatible_structure, check_two_cocycle, compatible_form_identities, compatible_structure_on_a, form_from_r,
    o_operator_dual_structure, o_operator_of_r, operator_form_check, operator_form_identity, r_as_map,
    two_cocycle_identity, CompatibleForm,
};
pub use rota_baxter::{
    check_generalized_rb, check_rota_baxter, generalized_rb_identity, induced_pre_from_map, rota_baxter_identity,
};
