use num_complex::Complex64;

use crate::measure::{phi_sigma, GeneratedMeasure};

/// Residual of
/// `[φ_σ(ζ') + conj φ_σ(ζ'')] / [2(1 - ζ' conj ζ'')] = ∫ (t - ζ')⁻¹ conj((t - ζ'')⁻¹) dσ`.
///
/// The identity holds for every measure, so a large residual points at the
/// quadrature rather than at membership.
pub fn kernel_identity_check(measure: &GeneratedMeasure, zeta1: Complex64, zeta2: Complex64) -> f64 {
    let lhs = (phi_sigma(measure, zeta1) + phi_sigma(measure, zeta2).conj())
        / (2.0 * (1.0 - zeta1 * zeta2.conj()));
    let rhs = measure.integrate(|t| 1.0 / ((t - zeta1) * (t - zeta2).conj()));
    (lhs - rhs).norm()
}
