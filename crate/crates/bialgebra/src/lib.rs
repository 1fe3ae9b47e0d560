//! Pre-anti-flexible bialgebras `(A, A*)` given by a pre-anti-flexible
//! structure on `A` and two comultiplications.

pub mod bialgebra;
pub mod comult;
pub mod conditions;
pub mod pairing;

pub use bialgebra::{
    bialgebra_routes, check_bialgebra_hom, dual_bialgebra, dual_bialgebra_unchecked, hom_identities, verify_bialgebra,
    Bialgebra, RouteReports,
};
pub use comult::{check_dual_pre_via_rmatrix, comult_identities, dual_products_from_comult, Comultiplication};
pub use conditions::{bialgebra_condition_identities, check_bialgebra_conditions};
pub use pairing::{check_pairing_identities, pairing_identities};
