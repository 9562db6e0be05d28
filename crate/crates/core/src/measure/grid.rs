use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::analytic::BoundaryPoint;
use crate::{Error, Result};

/// Uniform grid `θ_j = 2πj/N`, `j = 0..N`, on the unit circle.
#[derive(Debug, Clone, PartialEq)]
pub struct CircleGrid {
    angles: Vec<f64>,
    points: Vec<Complex64>,
}

impl CircleGrid {
    /// `size` must be a power of two.
    pub fn new(size: usize) -> Result<Self> {
        if !size.is_power_of_two() {
            return Err(Error::InvalidGridSize { size, minimum: 1 });
        }
        let angles: Vec<f64> = (0..size).map(|j| TAU * j as f64 / size as f64).collect();
        let points = angles
            .iter()
            .map(|&theta| Complex64::from_polar(1.0, theta))
            .collect();
        Ok(CircleGrid { angles, points })
    }

    pub fn size(&self) -> usize {
        self.angles.len()
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn point(&self, j: usize) -> BoundaryPoint {
        BoundaryPoint::from_angle(self.angles[j])
    }
}
