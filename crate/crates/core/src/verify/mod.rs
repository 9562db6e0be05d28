//! Membership certification for `Σ(z₁,…,zₙ)`: Gram identities, the
//! equivalent φ-conditions, sharp mass bounds and a kernel-identity
//! diagnostic of the quadrature path.

mod bounds;
mod gram;
mod kernel;
mod phi;

pub use bounds::{extremal_measures, mass_bounds, MassBounds, MassReport, ATTAINMENT_TOLERANCE};
pub use gram::{
    gram_compute, gram_target, verify_membership, GramMatrix, GramReport, ATOMIC_TOLERANCE,
    CONTINUOUS_TOLERANCE,
};
pub use kernel::kernel_identity_check;
pub use phi::{check_phi_conditions, phi_at_nodes};
