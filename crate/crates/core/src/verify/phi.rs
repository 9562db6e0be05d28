use num_complex::Complex64;

use crate::analytic::{solve_special_system_with_tolerance, SpecialSystem};
use crate::measure::{phi_sigma, GeneratedMeasure};

/// `φ_σ(z_k)` for every node, in node order.
pub fn phi_at_nodes(measure: &GeneratedMeasure) -> Vec<Complex64> {
    measure
        .nodes()
        .points()
        .iter()
        .map(|&z| phi_sigma(measure, z))
        .collect()
}

/// Solves `φ_σ(z_k) + conj(φ_σ(z_l)) = 2`; success is equivalent to
/// membership of `σ`, and then `φ_σ(z_k) = 1 - iβ` for all `k`.
pub fn check_phi_conditions(measure: &GeneratedMeasure, tolerance: f64) -> SpecialSystem {
    solve_special_system_with_tolerance(&phi_at_nodes(measure), tolerance)
}
