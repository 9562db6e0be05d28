use num_complex::Complex64;
use rayon::prelude::*;

use super::CircleGrid;
use crate::analytic::{blaschke_product, NodeSet, SchurParameter, SINGULARITY_THRESHOLD};

/// Boundary values of `h = Re (1 + s)/(1 - s)` on a grid.
///
/// Samples where `|1 - s| < SINGULARITY_THRESHOLD` are listed in `flagged`
/// and stored as zero so that they drop out of quadrature.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryDensity {
    pub values: Vec<f64>,
    pub flagged: Vec<usize>,
}

pub fn boundary_density(
    nodes: &NodeSet,
    param: &SchurParameter,
    grid: &CircleGrid,
) -> BoundaryDensity {
    let samples: Vec<Option<f64>> = grid
        .points()
        .par_iter()
        .map(|&t| {
            let s = blaschke_product(nodes.points(), t) * param.value(t);
            let denom = Complex64::new(1.0, 0.0) - s;
            if denom.norm() < SINGULARITY_THRESHOLD {
                None
            } else {
                Some(((1.0 + s) / denom).re)
            }
        })
        .collect();

    let flagged = samples
        .iter()
        .enumerate()
        .filter_map(|(j, v)| v.is_none().then_some(j))
        .collect();
    let values = samples.into_iter().map(|v| v.unwrap_or(0.0)).collect();
    BoundaryDensity { values, flagged }
}
