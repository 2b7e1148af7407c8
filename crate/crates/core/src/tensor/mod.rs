//! The representation of marked diagrams on real tensor powers of `V`, and
//! the checks built on top of it.

mod checks;
mod config;
mod lie;
mod rho;

pub use checks::{
    bounded_rho_element, centralizer_equals_diagram_span, certified_rank, commutant_dim,
    ep_image_rank, invariant_form_eval, invariant_form_vector, invariant_space_dim,
    rho_kernel_dim, verify_homomorphism, z_element, z_element_check, CentralizerReport,
    CheckOptions, CommutantReport, Counterexample, HomomorphismReport, IdempotentImageReport,
    InvariantReport, KernelReport, RankMethod, RankReport, ZCheck,
};
pub use config::{TensorSpaceConfig, DEFAULT_MAX_SIDE, MODULAR_COMMUTANT_THRESHOLD};
pub use lie::{derivation, unitary_action, unitary_lie_basis};
pub use rho::{rho_diagram, rho_element, OperatorJson, TensorOperator};

#[cfg(test)]
mod tests;
