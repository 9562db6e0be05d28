use num_complex::Complex64;

use super::{check_closed_disc, NodeSet};
use crate::{Error, Result};

/// One normalized factor `(a - z)/(1 - ā z) · |a|/a`, or `z` itself when
/// `a = 0`. The normalization makes the factor positive at the origin.
#[inline]
fn factor(a: Complex64, z: Complex64) -> Complex64 {
    if a == Complex64::new(0.0, 0.0) {
        return z;
    }
    let unimodular = a.norm() / a;
    (a - z) / (1.0 - a.conj() * z) * unimodular
}

/// Finite Blaschke product over `zeros`, without domain checks.
pub(crate) fn blaschke_product(zeros: &[Complex64], z: Complex64) -> Complex64 {
    zeros
        .iter()
        .fold(Complex64::new(1.0, 0.0), |acc, &a| acc * factor(a, z))
}

/// `t · B'(t) / B(t)` for the product over `zeros`.
///
/// On the unit circle this is real and equals the rate of change of
/// `arg B(e^{iθ})` in θ.
pub(crate) fn blaschke_log_derivative_times_t(zeros: &[Complex64], t: Complex64) -> Complex64 {
    zeros
        .iter()
        .map(|&a| t / (t - a) + a.conj() * t / (1.0 - a.conj() * t))
        .sum()
}

/// `d/dθ arg B(e^{iθ}) = Σ (1 - |a|²)/|t - a|²`, strictly positive.
pub(crate) fn phase_rate(zeros: &[Complex64], t: Complex64) -> f64 {
    zeros
        .iter()
        .map(|&a| (1.0 - a.norm_sqr()) / (t - a).norm_sqr())
        .sum()
}

/// Evaluates the Blaschke product of `nodes` at a point of the closed disc.
pub fn blaschke_eval(nodes: &NodeSet, z: Complex64) -> Result<Complex64> {
    check_closed_disc(z)?;
    for (index, &a) in nodes.points().iter().enumerate() {
        if a != Complex64::new(0.0, 0.0) && 1.0 - a.conj() * z == Complex64::new(0.0, 0.0) {
            return Err(Error::PoleHit { index, point: z });
        }
    }
    Ok(blaschke_product(nodes.points(), z))
}
