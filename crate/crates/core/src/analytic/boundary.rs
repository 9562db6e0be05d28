use std::f64::consts::TAU;

use num_complex::Complex64;

/// A point `t = e^{iθ}` of the unit circle, carried with its angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPoint {
    angle: f64,
    value: Complex64,
}

impl BoundaryPoint {
    /// Builds the point at `angle`, reduced into `[0, 2π)`.
    pub fn from_angle(angle: f64) -> Self {
        let mut angle = angle.rem_euclid(TAU);
        if angle >= TAU {
            angle = 0.0;
        }
        BoundaryPoint {
            angle,
            value: Complex64::from_polar(1.0, angle),
        }
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }
}
