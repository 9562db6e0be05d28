//! Pointwise evaluation of the analytic objects behind the measure family:
//! the Blaschke product `B` of the nodes, the Schur parameter `ω`, the
//! product `s = Bω`, its Cayley transform `c = (1 + s)/(1 - s)` and the
//! harmonic function `h = Re c`.

mod blaschke;
mod boundary;
mod nodes;
mod schur;
mod special_system;
mod transform;

pub use blaschke::blaschke_eval;
pub use boundary::BoundaryPoint;
pub use nodes::{validate_nodes, NodeSet};
pub use schur::{schur_eval, SchurForm, SchurParameter, CERTIFICATION_GRID, CONTRACTION_LIMIT};
pub use special_system::{
    solve_special_system, solve_special_system_with_tolerance, SpecialSystem,
    SPECIAL_SYSTEM_TOLERANCE,
};
pub use transform::{
    caratheodory_eval, cayley_from_s, cayley_to_s, herglotz_eval, s_eval, SINGULARITY_THRESHOLD,
};

pub(crate) use blaschke::{blaschke_log_derivative_times_t, blaschke_product, phase_rate};

/// Slack allowed on `|z| <= 1` so that computed boundary points `e^{iθ}`
/// are accepted.
pub(crate) const CLOSED_DISC_SLACK: f64 = 1e-12;

pub(crate) fn check_closed_disc(z: num_complex::Complex64) -> crate::Result<()> {
    if z.norm() > 1.0 + CLOSED_DISC_SLACK || !z.is_finite() {
        return Err(crate::Error::PointOutsideClosedDisc { point: z });
    }
    Ok(())
}
