use num_complex::Complex64;

use super::{blaschke_eval, check_closed_disc, NodeSet, SchurParameter};
use crate::{Error, Result};

/// `|1 - s|` below this marks a Cayley singularity (an atom location).
pub const SINGULARITY_THRESHOLD: f64 = 1e-9;

/// `s(z) = B(z) ω(z)`.
pub fn s_eval(nodes: &NodeSet, param: &SchurParameter, z: Complex64) -> Result<Complex64> {
    check_closed_disc(z)?;
    Ok(blaschke_eval(nodes, z)? * param.value(z))
}

/// `c = (1 + s)/(1 - s)`.
pub fn cayley_from_s(s: Complex64) -> Result<Complex64> {
    let denom = 1.0 - s;
    let distance = denom.norm();
    if distance < SINGULARITY_THRESHOLD {
        return Err(Error::CayleySingularity { distance });
    }
    Ok((1.0 + s) / denom)
}

/// Inverse Cayley map `s = (c - 1)/(c + 1)`.
pub fn cayley_to_s(c: Complex64) -> Result<Complex64> {
    let denom = c + 1.0;
    let distance = denom.norm();
    if distance == 0.0 {
        return Err(Error::CayleySingularity { distance });
    }
    Ok((c - 1.0) / denom)
}

/// `c(z) = (1 + s(z))/(1 - s(z))`, a Carathéodory function with `c(z_k) = 1`.
pub fn caratheodory_eval(
    nodes: &NodeSet,
    param: &SchurParameter,
    z: Complex64,
) -> Result<Complex64> {
    cayley_from_s(s_eval(nodes, param, z)?)
}

/// `h(z) = Re c(z) >= 0`.
pub fn herglotz_eval(nodes: &NodeSet, param: &SchurParameter, z: Complex64) -> Result<f64> {
    Ok(caratheodory_eval(nodes, param, z)?.re)
}
