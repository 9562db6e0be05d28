use num_complex::Complex64;

use super::{boundary_density, find_atoms, Atom, CircleGrid};
use crate::analytic::{herglotz_eval, NodeSet, SchurParameter};
use crate::{Error, Result};

pub const DEFAULT_GRID_SIZE: usize = 4096;
pub const MIN_GRID_SIZE: usize = 256;

/// Relative tolerance between the quadrature mass and `h(0)`.
pub const MASS_CHECK_TOLERANCE: f64 = 1e-9;

/// Densities may dip below zero by roundoff, never by more than this.
const DENSITY_FLOOR: f64 = -1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureKind {
    AbsolutelyContinuous,
    PurelyAtomic,
    Mixed,
}

impl MeasureKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            MeasureKind::AbsolutelyContinuous => "absolutely_continuous",
            MeasureKind::PurelyAtomic => "purely_atomic",
            MeasureKind::Mixed => "mixed",
        }
    }
}

/// A non-negative measure on the circle: density against `dθ/2π` sampled on
/// a uniform grid, plus finitely many atoms.
///
/// `param` records the Schur parameter the measure was generated from; it is
/// `None` for measures assembled or modified by hand.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratedMeasure {
    nodes: NodeSet,
    param: Option<SchurParameter>,
    grid: CircleGrid,
    density: Vec<f64>,
    atoms: Vec<Atom>,
    kind: MeasureKind,
}

impl GeneratedMeasure {
    /// Assembles a measure from its parts, checking sample count and signs.
    /// The kind is inferred from which parts are non-zero.
    pub fn from_parts(
        nodes: NodeSet,
        param: Option<SchurParameter>,
        grid: CircleGrid,
        density: Vec<f64>,
        atoms: Vec<Atom>,
    ) -> Result<Self> {
        if density.len() != grid.size() {
            return Err(Error::InvalidMeasure(format!(
                "{} density samples for a grid of size {}",
                density.len(),
                grid.size()
            )));
        }
        if let Some((j, v)) = density
            .iter()
            .enumerate()
            .find(|(_, v)| !(**v >= DENSITY_FLOOR && v.is_finite()))
        {
            return Err(Error::InvalidMeasure(format!(
                "density sample {j} is {v}"
            )));
        }
        let has_density = density.iter().any(|&v| v != 0.0);
        let kind = match (has_density, atoms.is_empty()) {
            (_, true) => MeasureKind::AbsolutelyContinuous,
            (false, false) => MeasureKind::PurelyAtomic,
            (true, false) => MeasureKind::Mixed,
        };
        Ok(GeneratedMeasure {
            nodes,
            param,
            grid,
            density,
            atoms,
            kind,
        })
    }

    /// The measure `factor · σ`, detached from its parameter.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        let density = self.density.iter().map(|v| v * factor).collect();
        let atoms = self
            .atoms
            .iter()
            .map(|a| Atom::new(a.angle(), a.weight() * factor))
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(self.nodes.clone(), None, self.grid.clone(), density, atoms)
    }

    pub fn nodes(&self) -> &NodeSet {
        &self.nodes
    }

    pub fn param(&self) -> Option<&SchurParameter> {
        self.param.as_ref()
    }

    pub fn grid(&self) -> &CircleGrid {
        &self.grid
    }

    pub fn density(&self) -> &[f64] {
        &self.density
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn kind(&self) -> MeasureKind {
        self.kind
    }

    /// `∫ f dσ`: trapezoid rule on the density plus the atom sum, both in
    /// fixed index order.
    pub fn try_integrate<E>(
        &self,
        f: impl Fn(Complex64) -> std::result::Result<Complex64, E>,
    ) -> std::result::Result<Complex64, E> {
        let mut continuous = Complex64::new(0.0, 0.0);
        for (&t, &w) in self.grid.points().iter().zip(&self.density) {
            if w != 0.0 {
                continuous += f(t)? * w;
            }
        }
        let mut total = continuous / self.grid.size() as f64;
        for atom in &self.atoms {
            total += f(atom.location())? * atom.weight();
        }
        Ok(total)
    }

    pub fn integrate(&self, f: impl Fn(Complex64) -> Complex64) -> Complex64 {
        self.try_integrate(|t| Ok::<_, std::convert::Infallible>(f(t)))
            .unwrap_or_else(|never| match never {})
    }

    /// `σ(𝕋)` by quadrature, without cross-checks.
    pub fn quadrature_mass(&self) -> f64 {
        let continuous: f64 = self.density.iter().sum::<f64>() / self.grid.size() as f64;
        continuous + self.atoms.iter().map(Atom::weight).sum::<f64>()
    }
}

/// Builds the representing measure of `h = Re (1 + Bω)/(1 - Bω)`.
///
/// Inner parameters give a purely atomic measure with zero density; every
/// other parameter is strictly contractive and gives an absolutely
/// continuous one.
pub fn build_measure(
    nodes: &NodeSet,
    param: &SchurParameter,
    grid_size: usize,
) -> Result<GeneratedMeasure> {
    if grid_size < MIN_GRID_SIZE || !grid_size.is_power_of_two() {
        return Err(Error::InvalidGridSize {
            size: grid_size,
            minimum: MIN_GRID_SIZE,
        });
    }
    let grid = CircleGrid::new(grid_size)?;
    let (density, atoms) = if param.is_inner() {
        (vec![0.0; grid_size], find_atoms(nodes, param)?)
    } else {
        let density = boundary_density(nodes, param, &grid);
        if !density.flagged.is_empty() {
            return Err(Error::UnsupportedMixedCase {
                count: density.flagged.len(),
            });
        }
        (density.values, Vec::new())
    };
    GeneratedMeasure::from_parts(nodes.clone(), Some(param.clone()), grid, density, atoms)
}

pub fn integrate_against(
    measure: &GeneratedMeasure,
    f: impl Fn(Complex64) -> Complex64,
) -> Complex64 {
    measure.integrate(f)
}

/// Quadrature mass, cross-checked against `h(0)` when the generating
/// parameter is known.
pub fn total_mass(measure: &GeneratedMeasure) -> Result<f64> {
    let quadrature = measure.quadrature_mass();
    if let Some(param) = measure.param() {
        let expected = herglotz_eval(measure.nodes(), param, Complex64::new(0.0, 0.0))?;
        if !((quadrature - expected).abs() <= MASS_CHECK_TOLERANCE * expected.abs().max(1.0)) {
            return Err(Error::MassConsistencyFailure {
                quadrature,
                expected,
            });
        }
    }
    Ok(quadrature)
}

/// `φ_σ(z) = ∫ (t + z)/(t - z) dσ(t)`.
///
/// # Panics
///
/// If `|z| >= 1`.
pub fn phi_sigma(measure: &GeneratedMeasure, z: Complex64) -> Complex64 {
    assert!(z.norm() < 1.0, "φ_σ is defined on the open disc, got {z}");
    measure.integrate(|t| (t + z) / (t - z))
}
