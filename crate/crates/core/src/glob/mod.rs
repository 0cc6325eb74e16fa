//! Partial tensor products, the globalization functor `Λ`, induction from subgroups, and
//! the projectivity certificate for `KG ⊗ B`.

mod global;
mod hom;
mod projective;
mod tensor;

pub use global::{
    check_exactness, globalize, globalize_action, induce_from_subgroup, verify_globalization, ExactnessReport,
    GlobalModule, Globalization, GlobalizationReport,
};
pub use hom::{hom_intertwiners, Intertwiner};
pub use projective::{build_n_delta, construct_phi, NDelta, PhiCertificate, TensorElt, MAX_CERTIFY_ORDER};
pub use tensor::{partial_tensor, TensorFactor, TensorPresentation};
