//! Recovery of the Riesz–Herglotz measure of `h = Re (1 + Bω)/(1 - Bω)`.
//!
//! A strictly contractive parameter yields an absolutely continuous measure
//! whose density against `dθ/2π` is sampled on a uniform [`CircleGrid`]. An
//! inner parameter yields a purely atomic measure supported where `Bω = 1`.
//! Integrals use the uniform trapezoid rule, which converges geometrically
//! for the analytic periodic integrands that arise here.

mod atoms;
mod density;
mod grid;
mod generated;

pub use atoms::{find_atoms, Atom};
pub use density::{boundary_density, BoundaryDensity};
pub use generated::{
    build_measure, integrate_against, phi_sigma, total_mass, GeneratedMeasure, MeasureKind,
    DEFAULT_GRID_SIZE, MASS_CHECK_TOLERANCE, MIN_GRID_SIZE,
};
pub use grid::CircleGrid;
