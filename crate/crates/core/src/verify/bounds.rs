use num_complex::Complex64;

use crate::analytic::{NodeSet, SchurParameter};
use crate::measure::{build_measure, GeneratedMeasure};
use crate::Result;

/// Relative tolerance for declaring a bound attained.
pub const ATTAINMENT_TOLERANCE: f64 = 1e-10;

/// Sharp bounds on `σ(𝕋)` over the whole family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassBounds {
    pub blaschke_at_origin: f64,
    pub lower: f64,
    pub upper: f64,
}

/// `(1 - B(0))/(1 + B(0)) <= σ(𝕋) <= (1 + B(0))/(1 - B(0))`.
pub fn mass_bounds(nodes: &NodeSet) -> MassBounds {
    let b0 = nodes.blaschke_at_origin();
    MassBounds {
        blaschke_at_origin: b0,
        lower: (1.0 - b0) / (1.0 + b0),
        upper: (1.0 + b0) / (1.0 - b0),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassReport {
    pub mass: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub attains_max: bool,
    pub attains_min: bool,
}

impl MassReport {
    pub fn new(measure: &GeneratedMeasure) -> Self {
        let bounds = mass_bounds(measure.nodes());
        let mass = measure.quadrature_mass();
        let close = |bound: f64| (mass - bound).abs() <= ATTAINMENT_TOLERANCE * bound.max(1.0);
        MassReport {
            mass,
            lower_bound: bounds.lower,
            upper_bound: bounds.upper,
            attains_max: close(bounds.upper),
            attains_min: close(bounds.lower),
        }
    }

    /// Whether the mass lies in `[lower - slack, upper + slack]`.
    pub fn within_bounds(&self, slack: f64) -> bool {
        self.mass >= self.lower_bound - slack && self.mass <= self.upper_bound + slack
    }
}

/// The measures for `ω ≡ +1` (maximal mass) and `ω ≡ -1` (minimal mass).
pub fn extremal_measures(
    nodes: &NodeSet,
    grid_size: usize,
) -> Result<(GeneratedMeasure, GeneratedMeasure)> {
    let plus = SchurParameter::constant(Complex64::new(1.0, 0.0))?;
    let minus = SchurParameter::constant(Complex64::new(-1.0, 0.0))?;
    Ok((
        build_measure(nodes, &plus, grid_size)?,
        build_measure(nodes, &minus, grid_size)?,
    ))
}
