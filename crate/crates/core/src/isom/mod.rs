//! Crystal isomorphisms between Fock space components: cyclage, reduction
//! by pseudoperiods, the cylindric reduction loop and the canonical
//! isomorphism onto FLOTW multipartitions together with its inverse.

pub mod canonical;
pub mod cyclage;
pub mod cylindric;
pub mod pseudoperiod;
pub mod reduction;
pub mod steplog;

pub use canonical::{
    canonical, canonical_for_rank, canonical_inverse, component_vertices, replay, CanonicalResult,
};
pub use cyclage::{xi, xi_charge, xi_inv, xi_inv_charge, xi_pow, xi_pow_charge};
pub use cylindric::{to_cylindric, to_cylindric_sized};
pub use pseudoperiod::{first_pseudoperiod, pseudoperiods, Pseudoperiod};
pub use reduction::{big_psi, psi, psi_inv, ReductionStats};
pub use steplog::{Step, StepLog};
